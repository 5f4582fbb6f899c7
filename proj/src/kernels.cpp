#include "ndview/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <type_traits>

#include "kernels_internal.hpp"

namespace ndview::kernels {

namespace {

template <class T> void k_add(T* dst, const T* a, const T* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = elem<T>::add(a[i], b[i]);
}
template <class T> void k_sub(T* dst, const T* a, const T* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = elem<T>::sub(a[i], b[i]);
}
template <class T> void k_mul(T* dst, const T* a, const T* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = elem<T>::mul(a[i], b[i]);
}
template <class T> void k_div(T* dst, const T* a, const T* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = elem<T>::div(a[i], b[i]);
}
template <class T> void k_add_s(T* dst, const T* a, T s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = elem<T>::add(a[i], s);
}
template <class T> void k_sub_s(T* dst, const T* a, T s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = elem<T>::sub(a[i], s);
}
template <class T> void k_rsub_s(T* dst, const T* a, T s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = elem<T>::sub(s, a[i]);
}
template <class T> void k_mul_s(T* dst, const T* a, T s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = elem<T>::mul(a[i], s);
}
template <class T> void k_div_s(T* dst, const T* a, T s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = elem<T>::div(a[i], s);
}
template <class T> void k_rdiv_s(T* dst, const T* a, T s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = elem<T>::div(s, a[i]);
}
template <class T> void k_neg(T* dst, const T* a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = elem<T>::neg(a[i]);
}

template <class T>
constexpr KernelTable<T> make_scalar_table() {
    return KernelTable<T>{
        k_add<T>,   k_sub<T>,   k_mul<T>,   k_div<T>,  k_add_s<T>, k_sub_s<T>,
        k_rsub_s<T>, k_mul_s<T>, k_div_s<T>, k_rdiv_s<T>, k_neg<T>,
    };
}

template <class T>
const KernelTable<T>* vector_lane_table() noexcept {
    if constexpr (std::is_same_v<T, float>) {
        if (detail::cpu_has_avx2()) return detail::avx2_table_f32();
        return detail::neon_table_f32();
    } else if constexpr (std::is_same_v<T, double>) {
        if (detail::cpu_has_avx2()) return detail::avx2_table_f64();
        return detail::neon_table_f64();
    } else if constexpr (std::is_same_v<T, std::int32_t>) {
        if (detail::cpu_has_avx2()) return detail::avx2_table_i32();
        return detail::neon_table_i32();
    } else if constexpr (std::is_same_v<T, std::int64_t>) {
        if (detail::cpu_has_avx2()) return detail::avx2_table_i64();
        return detail::neon_table_i64();
    } else {
        static_assert(std::is_same_v<T, std::uint8_t>);
        if (detail::cpu_has_avx2()) return detail::avx2_table_u8();
        return detail::neon_table_u8();
    }
}

bool scalar_forced() noexcept {
    const char* env = std::getenv("NDVIEW_KERNELS");
    return env != nullptr && std::strcmp(env, "scalar") == 0;
}

Lane detect_lane() noexcept {
    if (scalar_forced()) return Lane::scalar;
    if (detail::cpu_has_avx2() && detail::avx2_table_f32() != nullptr) return Lane::avx2;
    if (detail::neon_table_f32() != nullptr) return Lane::neon;
    return Lane::scalar;
}

} // namespace

Lane active_lane() noexcept {
    static const Lane lane = detect_lane();
    return lane;
}

std::string_view lane_name(Lane lane) noexcept {
    switch (lane) {
    case Lane::avx2: return "avx2";
    case Lane::neon: return "neon";
    case Lane::scalar: break;
    }
    return "scalar";
}

#define NDVIEW_DEFINE_KERNEL_TABLES(T)                                                           \
    template <> const KernelTable<T>& scalar_table<T>() noexcept {                               \
        static const KernelTable<T> table = make_scalar_table<T>();                              \
        return table;                                                                            \
    }                                                                                            \
    template <> const KernelTable<T>* vector_table<T>() noexcept {                               \
        return scalar_forced() ? nullptr : vector_lane_table<T>();                               \
    }                                                                                            \
    template <> const KernelTable<T>& active_table<T>() noexcept {                               \
        static const KernelTable<T>* table =                                                     \
            active_lane() == Lane::scalar ? &scalar_table<T>() : vector_lane_table<T>();         \
        return *table;                                                                           \
    }

NDVIEW_DEFINE_KERNEL_TABLES(float)
NDVIEW_DEFINE_KERNEL_TABLES(double)
NDVIEW_DEFINE_KERNEL_TABLES(std::int32_t)
NDVIEW_DEFINE_KERNEL_TABLES(std::int64_t)
NDVIEW_DEFINE_KERNEL_TABLES(std::uint8_t)

#undef NDVIEW_DEFINE_KERNEL_TABLES

} // namespace ndview::kernels
