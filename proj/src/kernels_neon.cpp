// NEON lane for aarch64, where NEON is baseline and needs no runtime probe.
// Ops without a vector form stay on the scalar reference.

#include "kernels_internal.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace ndview::kernels::detail {

namespace {


// ---- float, 4 lanes ----

void add_f32(float* dst, const float* a, const float* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) vst1q_f32(dst + i, vaddq_f32(vld1q_f32(a + i), vld1q_f32(b + i)));
    for (; i < n; ++i) dst[i] = a[i] + b[i];
}
void sub_f32(float* dst, const float* a, const float* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) vst1q_f32(dst + i, vsubq_f32(vld1q_f32(a + i), vld1q_f32(b + i)));
    for (; i < n; ++i) dst[i] = a[i] - b[i];
}
void mul_f32(float* dst, const float* a, const float* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) vst1q_f32(dst + i, vmulq_f32(vld1q_f32(a + i), vld1q_f32(b + i)));
    for (; i < n; ++i) dst[i] = a[i] * b[i];
}
void div_f32(float* dst, const float* a, const float* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) vst1q_f32(dst + i, vdivq_f32(vld1q_f32(a + i), vld1q_f32(b + i)));
    for (; i < n; ++i) dst[i] = a[i] / b[i];
}
void add_s_f32(float* dst, const float* a, float s, std::size_t n) {
    const float32x4_t vs = vdupq_n_f32(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) vst1q_f32(dst + i, vaddq_f32(vld1q_f32(a + i), vs));
    for (; i < n; ++i) dst[i] = a[i] + s;
}
void sub_s_f32(float* dst, const float* a, float s, std::size_t n) {
    const float32x4_t vs = vdupq_n_f32(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) vst1q_f32(dst + i, vsubq_f32(vld1q_f32(a + i), vs));
    for (; i < n; ++i) dst[i] = a[i] - s;
}
void rsub_s_f32(float* dst, const float* a, float s, std::size_t n) {
    const float32x4_t vs = vdupq_n_f32(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) vst1q_f32(dst + i, vsubq_f32(vs, vld1q_f32(a + i)));
    for (; i < n; ++i) dst[i] = s - a[i];
}
void mul_s_f32(float* dst, const float* a, float s, std::size_t n) {
    const float32x4_t vs = vdupq_n_f32(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) vst1q_f32(dst + i, vmulq_f32(vld1q_f32(a + i), vs));
    for (; i < n; ++i) dst[i] = a[i] * s;
}
void div_s_f32(float* dst, const float* a, float s, std::size_t n) {
    const float32x4_t vs = vdupq_n_f32(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) vst1q_f32(dst + i, vdivq_f32(vld1q_f32(a + i), vs));
    for (; i < n; ++i) dst[i] = a[i] / s;
}
void rdiv_s_f32(float* dst, const float* a, float s, std::size_t n) {
    const float32x4_t vs = vdupq_n_f32(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) vst1q_f32(dst + i, vdivq_f32(vs, vld1q_f32(a + i)));
    for (; i < n; ++i) dst[i] = s / a[i];
}
void neg_f32(float* dst, const float* a, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) vst1q_f32(dst + i, vnegq_f32(vld1q_f32(a + i)));
    for (; i < n; ++i) dst[i] = -a[i];
}

// ---- double, 2 lanes ----

void add_f64(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(dst + i, vaddq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    for (; i < n; ++i) dst[i] = a[i] + b[i];
}
void sub_f64(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(dst + i, vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    for (; i < n; ++i) dst[i] = a[i] - b[i];
}
void mul_f64(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(dst + i, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    for (; i < n; ++i) dst[i] = a[i] * b[i];
}
void div_f64(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(dst + i, vdivq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    for (; i < n; ++i) dst[i] = a[i] / b[i];
}
void neg_f64(double* dst, const double* a, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(dst + i, vnegq_f64(vld1q_f64(a + i)));
    for (; i < n; ++i) dst[i] = -a[i];
}

// ---- int32, 4 lanes ----

void add_i32(std::int32_t* dst, const std::int32_t* a, const std::int32_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) vst1q_s32(dst + i, vaddq_s32(vld1q_s32(a + i), vld1q_s32(b + i)));
    for (; i < n; ++i) dst[i] = elem<std::int32_t>::add(a[i], b[i]);
}
void sub_i32(std::int32_t* dst, const std::int32_t* a, const std::int32_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) vst1q_s32(dst + i, vsubq_s32(vld1q_s32(a + i), vld1q_s32(b + i)));
    for (; i < n; ++i) dst[i] = elem<std::int32_t>::sub(a[i], b[i]);
}
void mul_i32(std::int32_t* dst, const std::int32_t* a, const std::int32_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) vst1q_s32(dst + i, vmulq_s32(vld1q_s32(a + i), vld1q_s32(b + i)));
    for (; i < n; ++i) {
        using U = std::uint32_t;
        dst[i] = static_cast<std::int32_t>(static_cast<U>(a[i]) * static_cast<U>(b[i]));
    }
}
void neg_i32(std::int32_t* dst, const std::int32_t* a, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) vst1q_s32(dst + i, vnegq_s32(vld1q_s32(a + i)));
    for (; i < n; ++i) dst[i] = elem<std::int32_t>::neg(a[i]);
}

// ---- int64, 2 lanes ----

void add_i64(std::int64_t* dst, const std::int64_t* a, const std::int64_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_s64(dst + i, vaddq_s64(vld1q_s64(a + i), vld1q_s64(b + i)));
    for (; i < n; ++i) dst[i] = elem<std::int64_t>::add(a[i], b[i]);
}
void sub_i64(std::int64_t* dst, const std::int64_t* a, const std::int64_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_s64(dst + i, vsubq_s64(vld1q_s64(a + i), vld1q_s64(b + i)));
    for (; i < n; ++i) dst[i] = elem<std::int64_t>::sub(a[i], b[i]);
}

// ---- uint8, 16 lanes ----

void add_u8(std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) vst1q_u8(dst + i, vaddq_u8(vld1q_u8(a + i), vld1q_u8(b + i)));
    for (; i < n; ++i) dst[i] = elem<std::uint8_t>::add(a[i], b[i]);
}
void sub_u8(std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) vst1q_u8(dst + i, vsubq_u8(vld1q_u8(a + i), vld1q_u8(b + i)));
    for (; i < n; ++i) dst[i] = elem<std::uint8_t>::sub(a[i], b[i]);
}

} // namespace

const KernelTable<float>* neon_table_f32() {
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

const KernelTable<double>* neon_table_f64() {
    static const KernelTable<double> table = [] {
        KernelTable<double> t = scalar_table<double>();
        t.add = add_f64;
        t.sub = sub_f64;
        t.mul = mul_f64;
        t.div = div_f64;
        t.negate = neg_f64;
        return t;
    }();
    return &table;
}

const KernelTable<std::int32_t>* neon_table_i32() {
    static const KernelTable<std::int32_t> table = [] {
        KernelTable<std::int32_t> t = scalar_table<std::int32_t>();
        t.add = add_i32;
        t.sub = sub_i32;
        t.mul = mul_i32;
        t.negate = neg_i32;
        return t;
    }();
    return &table;
}

const KernelTable<std::int64_t>* neon_table_i64() {
    static const KernelTable<std::int64_t> table = [] {
        KernelTable<std::int64_t> t = scalar_table<std::int64_t>();
        t.add = add_i64;
        t.sub = sub_i64;
        return t;
    }();
    return &table;
}

const KernelTable<std::uint8_t>* neon_table_u8() {
    static const KernelTable<std::uint8_t> table = [] {
        KernelTable<std::uint8_t> t = scalar_table<std::uint8_t>();
        t.add = add_u8;
        t.sub = sub_u8;
        return t;
    }();
    return &table;
}

} // namespace ndview::kernels::detail

#else // not aarch64

namespace ndview::kernels::detail {

const KernelTable<float>* neon_table_f32() { return nullptr; }
const KernelTable<double>* neon_table_f64() { return nullptr; }
const KernelTable<std::int32_t>* neon_table_i32() { return nullptr; }
const KernelTable<std::int64_t>* neon_table_i64() { return nullptr; }
const KernelTable<std::uint8_t>* neon_table_u8() { return nullptr; }

} // namespace ndview::kernels::detail

#endif
