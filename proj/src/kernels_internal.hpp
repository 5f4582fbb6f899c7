#pragma once

#include "ndview/kernels.hpp"

// Lane tables provided by the per-architecture translation units. A null
// return means the lane was not compiled into this binary. Entries inside a
// returned table that have no vector variant already point at the scalar
// reference kernels.

namespace ndview::kernels::detail {

const KernelTable<float>* avx2_table_f32();
const KernelTable<double>* avx2_table_f64();
const KernelTable<std::int32_t>* avx2_table_i32();
const KernelTable<std::int64_t>* avx2_table_i64();
const KernelTable<std::uint8_t>* avx2_table_u8();

const KernelTable<float>* neon_table_f32();
const KernelTable<double>* neon_table_f64();
const KernelTable<std::int32_t>* neon_table_i32();
const KernelTable<std::int64_t>* neon_table_i64();
const KernelTable<std::uint8_t>* neon_table_u8();

bool cpu_has_avx2() noexcept;

} // namespace ndview::kernels::detail
