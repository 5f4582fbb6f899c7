#include <cstdlib>
#include <cstring>
#include <limits>
#include <random>
#include <vector>

#include <doctest.h>

#include "ndview/kernels.hpp"
#include "support/oracles.hpp"

using namespace ndview::kernels;

namespace {

// Lengths straddling every vector width and its remainder handling.
const std::vector<std::size_t> kLengths = {0,  1,  2,  3,  5,  7,  8,  9,  15, 16,
                                           17, 31, 32, 33, 63, 64, 65, 100};

template <class T>
std::vector<T> random_values(std::mt19937& rng, std::size_t n, bool avoid_zero) {
    std::vector<T> out(n);
    if constexpr (std::is_floating_point_v<T>) {
        std::uniform_real_distribution<T> dist(T(-100), T(100));
        const T specials[] = {std::numeric_limits<T>::quiet_NaN(),
                              std::numeric_limits<T>::infinity(),
                              -std::numeric_limits<T>::infinity(),
                              T(-0.0),
                              std::numeric_limits<T>::denorm_min(),
                              std::numeric_limits<T>::max()};
        std::uniform_int_distribution<int> pick(0, 9);
        // floats divide by anything, specials included, so avoid_zero is
        // only meaningful for the integer kinds
        (void)avoid_zero;
        for (auto& v : out) {
            const int p = pick(rng);
            v = p < 6 ? dist(rng) : specials[p - 6];
        }
    } else {
        using Wide = std::conditional_t<std::is_signed_v<T>, std::int64_t, std::uint64_t>;
        std::uniform_int_distribution<Wide> dist(std::numeric_limits<T>::min(),
                                                 std::numeric_limits<T>::max());
        std::uniform_int_distribution<int> pick(0, 9);
        const T specials[] = {std::numeric_limits<T>::min(), std::numeric_limits<T>::max(),
                              static_cast<T>(-1)};
        for (auto& v : out) {
            const int p = pick(rng);
            v = p < 7 ? static_cast<T>(dist(rng)) : specials[p - 7];
            if (avoid_zero && v == T(0)) v = T(1);
        }
    }
    return out;
}

template <class T>
bool bit_equal(const std::vector<T>& a, const std::vector<T>& b) {
    return a.size() == b.size() &&
           (a.empty() || std::memcmp(a.data(), b.data(), a.size() * sizeof(T)) == 0);
}

/// Runs every table entry through both tables on identical inputs, out of
/// place and with dst aliasing a, and requires bit-identical results.
template <class T>
void check_lane_equivalence(const KernelTable<T>& reference, const KernelTable<T>& candidate) {
    std::mt19937 rng(0xabcd1234u + sizeof(T));
    for (std::size_t n : kLengths) {
        const auto a = random_values<T>(rng, n, false);
        const auto b = random_values<T>(rng, n, true); // divisor operand
        const T s = random_values<T>(rng, 1, true)[0];

        const auto binary = [&](auto fn_ref, auto fn_can) {
            std::vector<T> r(n), c(n);
            fn_ref(r.data(), a.data(), b.data(), n);
            fn_can(c.data(), a.data(), b.data(), n);
            CHECK(bit_equal(r, c));
            // in place: dst aliases a
            std::vector<T> ri = a, ci = a;
            fn_ref(ri.data(), ri.data(), b.data(), n);
            fn_can(ci.data(), ci.data(), b.data(), n);
            CHECK(bit_equal(ri, ci));
        };
        const auto with_scalar = [&](auto fn_ref, auto fn_can, T scalar) {
            std::vector<T> r(n), c(n);
            fn_ref(r.data(), a.data(), scalar, n);
            fn_can(c.data(), a.data(), scalar, n);
            CHECK(bit_equal(r, c));
            std::vector<T> ri = a, ci = a;
            fn_ref(ri.data(), ri.data(), scalar, n);
            fn_can(ci.data(), ci.data(), scalar, n);
            CHECK(bit_equal(ri, ci));
        };

        binary(reference.add, candidate.add);
        binary(reference.sub, candidate.sub);
        binary(reference.mul, candidate.mul);
        binary(reference.div, candidate.div);
        with_scalar(reference.add_scalar, candidate.add_scalar, s);
        with_scalar(reference.sub_scalar, candidate.sub_scalar, s);
        with_scalar(reference.mul_scalar, candidate.mul_scalar, s);
        with_scalar(reference.div_scalar, candidate.div_scalar, s);
        // reversed forms divide/subtract a scalar by the array: the array
        // becomes the divisor, so reuse b
        {
            std::vector<T> r(n), c(n);
            reference.rsub_scalar(r.data(), a.data(), s, n);
            candidate.rsub_scalar(c.data(), a.data(), s, n);
            CHECK(bit_equal(r, c));
            reference.rdiv_scalar(r.data(), b.data(), s, n);
            candidate.rdiv_scalar(c.data(), b.data(), s, n);
            CHECK(bit_equal(r, c));
        }
        {
            std::vector<T> r(n), c(n);
            reference.negate(r.data(), a.data(), n);
            candidate.negate(c.data(), a.data(), n);
            CHECK(bit_equal(r, c));
        }
    }
}

template <class T>
void check_type() {
    check_lane_equivalence(scalar_table<T>(), active_table<T>());
    if (const KernelTable<T>* vec = vector_table<T>()) {
        check_lane_equivalence(scalar_table<T>(), *vec);
    }
}

} // namespace

TEST_CASE("a vector lane is exercised when the host supports one") {
    MESSAGE("active kernel lane: ", lane_name(active_lane()));
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
    if (__builtin_cpu_supports("avx2") && std::getenv("NDVIEW_KERNELS") == nullptr) {
        CHECK(active_lane() == Lane::avx2);
        CHECK(vector_table<float>() != nullptr);
    }
#endif
}

TEST_CASE("float kernels match the scalar reference bit for bit") {
    check_type<float>();
}

TEST_CASE("double kernels match the scalar reference bit for bit") {
    check_type<double>();
}

TEST_CASE("int32 kernels match the scalar reference") {
    check_type<std::int32_t>();
}

TEST_CASE("int64 kernels match the scalar reference") {
    check_type<std::int64_t>();
}

TEST_CASE("uint8 kernels match the scalar reference") {
    check_type<std::uint8_t>();
}

TEST_CASE("integer arithmetic wraps at the type width") {
    using I = std::int32_t;
    const auto& t = scalar_table<I>();
    I out;
    const I big = std::numeric_limits<I>::max();
    t.add(&out, &big, &big, 1);
    CHECK(out == static_cast<I>(-2));
    const I lo = std::numeric_limits<I>::min();
    const I minus1 = -1;
    t.div(&out, &lo, &minus1, 1);
    CHECK(out == lo); // wraps instead of trapping
    t.negate(&out, &lo, 1);
    CHECK(out == lo);

    using U = std::uint8_t;
    const auto& tu8 = scalar_table<U>();
    U uout;
    const U a = 200, b = 100;
    tu8.add(&uout, &a, &b, 1);
    CHECK(uout == 44);
}
