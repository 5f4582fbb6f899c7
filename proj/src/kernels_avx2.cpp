// AVX2 lane. Compiled into every x86-64 binary; the dispatcher only hands
// these kernels out when the running CPU reports AVX2. Entries with no
// profitable 256-bit form (integer division, 64-bit and 8-bit integer
// multiplication) stay on the scalar reference.

#include "kernels_internal.hpp"

#if (defined(__x86_64__) || defined(__i386__)) && (defined(__GNUC__) || defined(__clang__))

#include <immintrin.h>

#define NDVIEW_AVX2 __attribute__((target("avx2")))

namespace ndview::kernels::detail {

namespace {


// ---- float, 8 lanes ----

NDVIEW_AVX2 void add_f32(float* dst, const float* a, const float* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        _mm256_storeu_ps(dst + i, _mm256_add_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i)));
    }
    for (; i < n; ++i) dst[i] = a[i] + b[i];
}

NDVIEW_AVX2 void sub_f32(float* dst, const float* a, const float* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        _mm256_storeu_ps(dst + i, _mm256_sub_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i)));
    }
    for (; i < n; ++i) dst[i] = a[i] - b[i];
}

NDVIEW_AVX2 void mul_f32(float* dst, const float* a, const float* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        _mm256_storeu_ps(dst + i, _mm256_mul_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i)));
    }
    for (; i < n; ++i) dst[i] = a[i] * b[i];
}

NDVIEW_AVX2 void div_f32(float* dst, const float* a, const float* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        _mm256_storeu_ps(dst + i, _mm256_div_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i)));
    }
    for (; i < n; ++i) dst[i] = a[i] / b[i];
}

NDVIEW_AVX2 void add_s_f32(float* dst, const float* a, float s, std::size_t n) {
    const __m256 vs = _mm256_set1_ps(s);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        _mm256_storeu_ps(dst + i, _mm256_add_ps(_mm256_loadu_ps(a + i), vs));
    }
    for (; i < n; ++i) dst[i] = a[i] + s;
}

NDVIEW_AVX2 void sub_s_f32(float* dst, const float* a, float s, std::size_t n) {
    const __m256 vs = _mm256_set1_ps(s);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        _mm256_storeu_ps(dst + i, _mm256_sub_ps(_mm256_loadu_ps(a + i), vs));
    }
    for (; i < n; ++i) dst[i] = a[i] - s;
}

NDVIEW_AVX2 void rsub_s_f32(float* dst, const float* a, float s, std::size_t n) {
    const __m256 vs = _mm256_set1_ps(s);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        _mm256_storeu_ps(dst + i, _mm256_sub_ps(vs, _mm256_loadu_ps(a + i)));
    }
    for (; i < n; ++i) dst[i] = s - a[i];
}

NDVIEW_AVX2 void mul_s_f32(float* dst, const float* a, float s, std::size_t n) {
    const __m256 vs = _mm256_set1_ps(s);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        _mm256_storeu_ps(dst + i, _mm256_mul_ps(_mm256_loadu_ps(a + i), vs));
    }
    for (; i < n; ++i) dst[i] = a[i] * s;
}

NDVIEW_AVX2 void div_s_f32(float* dst, const float* a, float s, std::size_t n) {
    const __m256 vs = _mm256_set1_ps(s);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        _mm256_storeu_ps(dst + i, _mm256_div_ps(_mm256_loadu_ps(a + i), vs));
    }
    for (; i < n; ++i) dst[i] = a[i] / s;
}

NDVIEW_AVX2 void rdiv_s_f32(float* dst, const float* a, float s, std::size_t n) {
    const __m256 vs = _mm256_set1_ps(s);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        _mm256_storeu_ps(dst + i, _mm256_div_ps(vs, _mm256_loadu_ps(a + i)));
    }
    for (; i < n; ++i) dst[i] = s / a[i];
}

NDVIEW_AVX2 void neg_f32(float* dst, const float* a, std::size_t n) {
    const __m256 sign = _mm256_set1_ps(-0.0f);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        _mm256_storeu_ps(dst + i, _mm256_xor_ps(_mm256_loadu_ps(a + i), sign));
    }
    for (; i < n; ++i) dst[i] = -a[i];
}

// ---- double, 4 lanes ----

NDVIEW_AVX2 void add_f64(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(dst + i, _mm256_add_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    }
    for (; i < n; ++i) dst[i] = a[i] + b[i];
}

NDVIEW_AVX2 void sub_f64(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(dst + i, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    }
    for (; i < n; ++i) dst[i] = a[i] - b[i];
}

NDVIEW_AVX2 void mul_f64(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(dst + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    }
    for (; i < n; ++i) dst[i] = a[i] * b[i];
}

NDVIEW_AVX2 void div_f64(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(dst + i, _mm256_div_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    }
    for (; i < n; ++i) dst[i] = a[i] / b[i];
}

NDVIEW_AVX2 void add_s_f64(double* dst, const double* a, double s, std::size_t n) {
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(dst + i, _mm256_add_pd(_mm256_loadu_pd(a + i), vs));
    }
    for (; i < n; ++i) dst[i] = a[i] + s;
}

NDVIEW_AVX2 void sub_s_f64(double* dst, const double* a, double s, std::size_t n) {
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(dst + i, _mm256_sub_pd(_mm256_loadu_pd(a + i), vs));
    }
    for (; i < n; ++i) dst[i] = a[i] - s;
}

NDVIEW_AVX2 void rsub_s_f64(double* dst, const double* a, double s, std::size_t n) {
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(dst + i, _mm256_sub_pd(vs, _mm256_loadu_pd(a + i)));
    }
    for (; i < n; ++i) dst[i] = s - a[i];
}

NDVIEW_AVX2 void mul_s_f64(double* dst, const double* a, double s, std::size_t n) {
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(dst + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), vs));
    }
    for (; i < n; ++i) dst[i] = a[i] * s;
}

NDVIEW_AVX2 void div_s_f64(double* dst, const double* a, double s, std::size_t n) {
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(dst + i, _mm256_div_pd(_mm256_loadu_pd(a + i), vs));
    }
    for (; i < n; ++i) dst[i] = a[i] / s;
}

NDVIEW_AVX2 void rdiv_s_f64(double* dst, const double* a, double s, std::size_t n) {
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(dst + i, _mm256_div_pd(vs, _mm256_loadu_pd(a + i)));
    }
    for (; i < n; ++i) dst[i] = s / a[i];
}

NDVIEW_AVX2 void neg_f64(double* dst, const double* a, std::size_t n) {
    const __m256d sign = _mm256_set1_pd(-0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(dst + i, _mm256_xor_pd(_mm256_loadu_pd(a + i), sign));
    }
    for (; i < n; ++i) dst[i] = -a[i];
}

// ---- int32, 8 lanes ----

NDVIEW_AVX2 __m256i load_i(const void* p) {
    return _mm256_loadu_si256(static_cast<const __m256i*>(p));
}
NDVIEW_AVX2 void store_i(void* p, __m256i v) {
    _mm256_storeu_si256(static_cast<__m256i*>(p), v);
}

NDVIEW_AVX2 void add_i32(std::int32_t* dst, const std::int32_t* a, const std::int32_t* b,
                         std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) store_i(dst + i, _mm256_add_epi32(load_i(a + i), load_i(b + i)));
    for (; i < n; ++i) dst[i] = elem<std::int32_t>::add(a[i], b[i]);
}

NDVIEW_AVX2 void sub_i32(std::int32_t* dst, const std::int32_t* a, const std::int32_t* b,
                         std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) store_i(dst + i, _mm256_sub_epi32(load_i(a + i), load_i(b + i)));
    for (; i < n; ++i) dst[i] = elem<std::int32_t>::sub(a[i], b[i]);
}

NDVIEW_AVX2 void mul_i32(std::int32_t* dst, const std::int32_t* a, const std::int32_t* b,
                         std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) store_i(dst + i, _mm256_mullo_epi32(load_i(a + i), load_i(b + i)));
    for (; i < n; ++i) dst[i] = elem<std::int32_t>::mul(a[i], b[i]);
}

NDVIEW_AVX2 void add_s_i32(std::int32_t* dst, const std::int32_t* a, std::int32_t s,
                           std::size_t n) {
    const __m256i vs = _mm256_set1_epi32(s);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) store_i(dst + i, _mm256_add_epi32(load_i(a + i), vs));
    for (; i < n; ++i) dst[i] = elem<std::int32_t>::add(a[i], s);
}

NDVIEW_AVX2 void sub_s_i32(std::int32_t* dst, const std::int32_t* a, std::int32_t s,
                           std::size_t n) {
    const __m256i vs = _mm256_set1_epi32(s);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) store_i(dst + i, _mm256_sub_epi32(load_i(a + i), vs));
    for (; i < n; ++i) dst[i] = elem<std::int32_t>::sub(a[i], s);
}

NDVIEW_AVX2 void rsub_s_i32(std::int32_t* dst, const std::int32_t* a, std::int32_t s,
                            std::size_t n) {
    const __m256i vs = _mm256_set1_epi32(s);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) store_i(dst + i, _mm256_sub_epi32(vs, load_i(a + i)));
    for (; i < n; ++i) dst[i] = elem<std::int32_t>::sub(s, a[i]);
}

NDVIEW_AVX2 void mul_s_i32(std::int32_t* dst, const std::int32_t* a, std::int32_t s,
                           std::size_t n) {
    const __m256i vs = _mm256_set1_epi32(s);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) store_i(dst + i, _mm256_mullo_epi32(load_i(a + i), vs));
    for (; i < n; ++i) dst[i] = elem<std::int32_t>::mul(a[i], s);
}

NDVIEW_AVX2 void neg_i32(std::int32_t* dst, const std::int32_t* a, std::size_t n) {
    const __m256i zero = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) store_i(dst + i, _mm256_sub_epi32(zero, load_i(a + i)));
    for (; i < n; ++i) dst[i] = elem<std::int32_t>::neg(a[i]);
}

// ---- int64, 4 lanes ----

NDVIEW_AVX2 void add_i64(std::int64_t* dst, const std::int64_t* a, const std::int64_t* b,
                         std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store_i(dst + i, _mm256_add_epi64(load_i(a + i), load_i(b + i)));
    for (; i < n; ++i) dst[i] = elem<std::int64_t>::add(a[i], b[i]);
}

NDVIEW_AVX2 void sub_i64(std::int64_t* dst, const std::int64_t* a, const std::int64_t* b,
                         std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store_i(dst + i, _mm256_sub_epi64(load_i(a + i), load_i(b + i)));
    for (; i < n; ++i) dst[i] = elem<std::int64_t>::sub(a[i], b[i]);
}

NDVIEW_AVX2 void add_s_i64(std::int64_t* dst, const std::int64_t* a, std::int64_t s,
                           std::size_t n) {
    const __m256i vs = _mm256_set1_epi64x(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store_i(dst + i, _mm256_add_epi64(load_i(a + i), vs));
    for (; i < n; ++i) dst[i] = elem<std::int64_t>::add(a[i], s);
}

NDVIEW_AVX2 void sub_s_i64(std::int64_t* dst, const std::int64_t* a, std::int64_t s,
                           std::size_t n) {
    const __m256i vs = _mm256_set1_epi64x(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store_i(dst + i, _mm256_sub_epi64(load_i(a + i), vs));
    for (; i < n; ++i) dst[i] = elem<std::int64_t>::sub(a[i], s);
}

NDVIEW_AVX2 void rsub_s_i64(std::int64_t* dst, const std::int64_t* a, std::int64_t s,
                            std::size_t n) {
    const __m256i vs = _mm256_set1_epi64x(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store_i(dst + i, _mm256_sub_epi64(vs, load_i(a + i)));
    for (; i < n; ++i) dst[i] = elem<std::int64_t>::sub(s, a[i]);
}

NDVIEW_AVX2 void neg_i64(std::int64_t* dst, const std::int64_t* a, std::size_t n) {
    const __m256i zero = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store_i(dst + i, _mm256_sub_epi64(zero, load_i(a + i)));
    for (; i < n; ++i) dst[i] = elem<std::int64_t>::neg(a[i]);
}

// ---- uint8, 32 lanes ----

NDVIEW_AVX2 void add_u8(std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b,
                        std::size_t n) {
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) store_i(dst + i, _mm256_add_epi8(load_i(a + i), load_i(b + i)));
    for (; i < n; ++i) dst[i] = elem<std::uint8_t>::add(a[i], b[i]);
}

NDVIEW_AVX2 void sub_u8(std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b,
                        std::size_t n) {
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) store_i(dst + i, _mm256_sub_epi8(load_i(a + i), load_i(b + i)));
    for (; i < n; ++i) dst[i] = elem<std::uint8_t>::sub(a[i], b[i]);
}

NDVIEW_AVX2 void add_s_u8(std::uint8_t* dst, const std::uint8_t* a, std::uint8_t s,
                          std::size_t n) {
    const __m256i vs = _mm256_set1_epi8(static_cast<char>(s));
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) store_i(dst + i, _mm256_add_epi8(load_i(a + i), vs));
    for (; i < n; ++i) dst[i] = elem<std::uint8_t>::add(a[i], s);
}

NDVIEW_AVX2 void sub_s_u8(std::uint8_t* dst, const std::uint8_t* a, std::uint8_t s,
                          std::size_t n) {
    const __m256i vs = _mm256_set1_epi8(static_cast<char>(s));
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) store_i(dst + i, _mm256_sub_epi8(load_i(a + i), vs));
    for (; i < n; ++i) dst[i] = elem<std::uint8_t>::sub(a[i], s);
}

NDVIEW_AVX2 void rsub_s_u8(std::uint8_t* dst, const std::uint8_t* a, std::uint8_t s,
                           std::size_t n) {
    const __m256i vs = _mm256_set1_epi8(static_cast<char>(s));
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) store_i(dst + i, _mm256_sub_epi8(vs, load_i(a + i)));
    for (; i < n; ++i) dst[i] = elem<std::uint8_t>::sub(s, a[i]);
}

NDVIEW_AVX2 void neg_u8(std::uint8_t* dst, const std::uint8_t* a, std::size_t n) {
    const __m256i zero = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) store_i(dst + i, _mm256_sub_epi8(zero, load_i(a + i)));
    for (; i < n; ++i) dst[i] = elem<std::uint8_t>::neg(a[i]);
}

} // namespace

const KernelTable<float>* avx2_table_f32() {
    static const KernelTable<float> table = [] {
        KernelTable<float> t = scalar_table<float>();
        t.add = add_f32;
        t.sub = sub_f32;
        t.mul = mul_f32;
        t.div = div_f32;
        t.add_scalar = add_s_f32;
        t.sub_scalar = sub_s_f32;
        t.rsub_scalar = rsub_s_f32;
        t.mul_scalar = mul_s_f32;
        t.div_scalar = div_s_f32;
        t.rdiv_scalar = rdiv_s_f32;
        t.negate = neg_f32;
        return t;
    }();
    return &table;
}

const KernelTable<double>* avx2_table_f64() {
    static const KernelTable<double> table = [] {
        KernelTable<double> t = scalar_table<double>();
        t.add = add_f64;
        t.sub = sub_f64;
        t.mul = mul_f64;
        t.div = div_f64;
        t.add_scalar = add_s_f64;
        t.sub_scalar = sub_s_f64;
        t.rsub_scalar = rsub_s_f64;
        t.mul_scalar = mul_s_f64;
        t.div_scalar = div_s_f64;
        t.rdiv_scalar = rdiv_s_f64;
        t.negate = neg_f64;
        return t;
    }();
    return &table;
}

const KernelTable<std::int32_t>* avx2_table_i32() {
    static const KernelTable<std::int32_t> table = [] {
        KernelTable<std::int32_t> t = scalar_table<std::int32_t>();
        t.add = add_i32;
        t.sub = sub_i32;
        t.mul = mul_i32;
        t.add_scalar = add_s_i32;
        t.sub_scalar = sub_s_i32;
        t.rsub_scalar = rsub_s_i32;
        t.mul_scalar = mul_s_i32;
        t.negate = neg_i32;
        return t;
    }();
    return &table;
}

const KernelTable<std::int64_t>* avx2_table_i64() {
    static const KernelTable<std::int64_t> table = [] {
        KernelTable<std::int64_t> t = scalar_table<std::int64_t>();
        t.add = add_i64;
        t.sub = sub_i64;
        t.add_scalar = add_s_i64;
        t.sub_scalar = sub_s_i64;
        t.rsub_scalar = rsub_s_i64;
        t.negate = neg_i64;
        return t;
    }();
    return &table;
}

const KernelTable<std::uint8_t>* avx2_table_u8() {
    static const KernelTable<std::uint8_t> table = [] {
        KernelTable<std::uint8_t> t = scalar_table<std::uint8_t>();
        t.add = add_u8;
        t.sub = sub_u8;
        t.add_scalar = add_s_u8;
        t.sub_scalar = sub_s_u8;
        t.rsub_scalar = rsub_s_u8;
        t.negate = neg_u8;
        return t;
    }();
    return &table;
}

bool cpu_has_avx2() noexcept {
    static const bool has = __builtin_cpu_supports("avx2");
    return has;
}

} // namespace ndview::kernels::detail

#else // not x86

namespace ndview::kernels::detail {

const KernelTable<float>* avx2_table_f32() { return nullptr; }
const KernelTable<double>* avx2_table_f64() { return nullptr; }
const KernelTable<std::int32_t>* avx2_table_i32() { return nullptr; }
const KernelTable<std::int64_t>* avx2_table_i64() { return nullptr; }
const KernelTable<std::uint8_t>* avx2_table_u8() { return nullptr; }
bool cpu_has_avx2() noexcept { return false; }

} // namespace ndview::kernels::detail

#endif
