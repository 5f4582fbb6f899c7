#pragma once

// Umbrella header: runtime-rank strided views and arrays, view transforms,
// elementwise arithmetic, rendering, and the MTF1 tensor file format.

#include "ndview/access.hpp"
#include "ndview/arith.hpp"
#include "ndview/error.hpp"
#include "ndview/io.hpp"
#include "ndview/kernels.hpp"
#include "ndview/tensor.hpp"
#include "ndview/transform.hpp"
#include "ndview/types.hpp"
#include "ndview/view.hpp"
