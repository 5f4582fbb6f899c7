#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ndview {

/// Extents, strides, offsets, and scalar indices are unsigned 64-bit
/// throughout. Offsets and strides are element indices into a buffer, not
/// byte addresses.
using extent_t = std::uint64_t;

using Shape = std::vector<extent_t>;
using Strides = std::vector<extent_t>;
using Coordinate = std::vector<extent_t>;

/// Storage order: which coordinate is the strongest criterion when mapping
/// coordinate tuples to scalar indices. last_major is the library-wide
/// default. In 2-D, first_major is row-major and last_major is column-major.
/// The underlying values double as the MTF1 order codes.
enum class CoordinateOrder : std::uint8_t {
    last_major = 0,  // last coordinate most significant; coordinate 0 varies fastest
    first_major = 1, // first coordinate most significant; last coordinate varies fastest
};

inline const char* order_name(CoordinateOrder order) noexcept {
    return order == CoordinateOrder::first_major ? "fcmo" : "lcmo";
}

} // namespace ndview
