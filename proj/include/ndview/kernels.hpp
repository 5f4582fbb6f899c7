#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <type_traits>

namespace ndview::kernels {

/// Per-element arithmetic semantics shared by every lane and by the strided
/// fallback loops. Integer ops wrap modulo 2^width (computed on the unsigned
/// representation); floats use native IEEE operations. Division assumes a
/// nonzero divisor; the signed minimum divided by -1 wraps instead of
/// trapping.
template <class T>
struct elem {
    static T add(T a, T b) {
        if constexpr (std::is_integral_v<T>) {
            using U = std::make_unsigned_t<T>;
            return static_cast<T>(static_cast<U>(static_cast<U>(a) + static_cast<U>(b)));
        } else {
            return a + b;
        }
    }
    static T sub(T a, T b) {
        if constexpr (std::is_integral_v<T>) {
            using U = std::make_unsigned_t<T>;
            return static_cast<T>(static_cast<U>(static_cast<U>(a) - static_cast<U>(b)));
        } else {
            return a - b;
        }
    }
    static T mul(T a, T b) {
        if constexpr (std::is_integral_v<T>) {
            using U = std::make_unsigned_t<T>;
            return static_cast<T>(static_cast<U>(static_cast<U>(a) * static_cast<U>(b)));
        } else {
            return a * b;
        }
    }
    static T div(T a, T b) {
        if constexpr (std::is_signed_v<T> && std::is_integral_v<T>) {
            if (b == T{-1}) return neg(a);
        }
        return a / b;
    }
    static T neg(T a) {
        if constexpr (std::is_integral_v<T>) {
            using U = std::make_unsigned_t<T>;
            return static_cast<T>(static_cast<U>(U{0} - static_cast<U>(a)));
        } else {
            return -a;
        }
    }
};

/// Elementwise kernels over contiguous runs of length n. Each output element
/// depends only on the same-index inputs, so the vector lanes are
/// bit-identical to the scalar reference, floats included. dst may equal a
/// (for in-place use); partial overlap between dst and an input is not
/// allowed. Integer division kernels assume the caller has already rejected
/// zero divisors.
template <class T>
struct KernelTable {
    void (*add)(T* dst, const T* a, const T* b, std::size_t n);
    void (*sub)(T* dst, const T* a, const T* b, std::size_t n);
    void (*mul)(T* dst, const T* a, const T* b, std::size_t n);
    void (*div)(T* dst, const T* a, const T* b, std::size_t n);
    void (*add_scalar)(T* dst, const T* a, T s, std::size_t n);  // a + s
    void (*sub_scalar)(T* dst, const T* a, T s, std::size_t n);  // a - s
    void (*rsub_scalar)(T* dst, const T* a, T s, std::size_t n); // s - a
    void (*mul_scalar)(T* dst, const T* a, T s, std::size_t n);  // a * s
    void (*div_scalar)(T* dst, const T* a, T s, std::size_t n);  // a / s
    void (*rdiv_scalar)(T* dst, const T* a, T s, std::size_t n); // s / a
    void (*negate)(T* dst, const T* a, std::size_t n);
};

enum class Lane { scalar, avx2, neon };

/// The lane the dispatcher selected for this process: the widest variant the
/// CPU supports, detected once on first use. Setting the environment
/// variable NDVIEW_KERNELS=scalar forces the reference lane.
Lane active_lane() noexcept;

std::string_view lane_name(Lane lane) noexcept;

/// Kernel table for the active lane. Entries without a vector variant fall
/// back to the scalar reference.
template <class T>
const KernelTable<T>& active_table() noexcept;

/// The scalar reference table; the semantic ground truth the vector lanes
/// are tested against.
template <class T>
const KernelTable<T>& scalar_table() noexcept;

/// The vector table compiled into this binary, if the running CPU supports
/// it; nullptr otherwise. Exposed so equivalence tests can compare lanes
/// directly.
template <class T>
const KernelTable<T>* vector_table() noexcept;

#define NDVIEW_DECLARE_KERNEL_TABLES(T)                                                          \
    template <> const KernelTable<T>& active_table<T>() noexcept;                                \
    template <> const KernelTable<T>& scalar_table<T>() noexcept;                                \
    template <> const KernelTable<T>* vector_table<T>() noexcept;

NDVIEW_DECLARE_KERNEL_TABLES(float)
NDVIEW_DECLARE_KERNEL_TABLES(double)
NDVIEW_DECLARE_KERNEL_TABLES(std::int32_t)
NDVIEW_DECLARE_KERNEL_TABLES(std::int64_t)
NDVIEW_DECLARE_KERNEL_TABLES(std::uint8_t)

#undef NDVIEW_DECLARE_KERNEL_TABLES

} // namespace ndview::kernels
