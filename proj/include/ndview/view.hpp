#pragma once

#include <span>
#include <string>
#include <vector>

#include "ndview/config.hpp"
#include "ndview/error.hpp"
#include "ndview/types.hpp"

namespace ndview {

/// Shape strides of (shape, order): the strides an unstrided view of that
/// shape would have. For first_major, u_j is the product of the extents after
/// axis j; for last_major, the product of the extents before it.
Strides shape_strides(std::span<const extent_t> shape, CoordinateOrder order);

/// Product of the extents. Throws zero_extent on a zero entry and
/// size_overflow if the product does not fit in 64 bits. The empty product
/// is 1.
extent_t checked_size(std::span<const extent_t> shape);

/// Runtime-rank strided view descriptor: dimension, shape, strides, and
/// offset, plus the internal coordinate order used for scalar indexing and
/// cursors. The size, the shape strides, and the simplicity flag are computed
/// once at construction and cached.
///
/// A descriptor is a value type and is immutable after construction; it can
/// be shared freely across threads for reading.
class ViewDescriptor {
public:
    /// Scalar (rank-0) descriptor addressing the single element at offset 0.
    ViewDescriptor();

    /// Descriptor with explicit strides. shape and strides must have equal
    /// length and every extent must be at least 1. Zero strides are accepted;
    /// such views alias one element along the axis and are readable but are
    /// rejected as bulk-assignment destinations.
    static ViewDescriptor strided(Shape shape, Strides strides, extent_t offset,
                                  CoordinateOrder order = CoordinateOrder::last_major);

    /// Descriptor whose strides are the shape strides of (shape, order).
    static ViewDescriptor unstrided(Shape shape, extent_t offset = 0,
                                    CoordinateOrder order = CoordinateOrder::last_major);

    /// Rank-0 descriptor addressing the single element at `offset`.
    static ViewDescriptor scalar(extent_t offset,
                                 CoordinateOrder order = CoordinateOrder::last_major);

    /// Assembles the fields verbatim with no validation and no cache
    /// computation. check_invariants() may reject the result. Intended for
    /// tests and for code that re-establishes invariants itself.
    static ViewDescriptor raw_parts(Shape shape, Strides strides, extent_t offset,
                                    CoordinateOrder order, extent_t cached_size,
                                    Strides cached_shape_strides, bool simple);

    std::size_t dimension() const noexcept { return shape_.size(); }
    std::span<const extent_t> shape() const noexcept { return shape_; }
    extent_t shape(std::size_t axis) const { return shape_.at(axis); }
    std::span<const extent_t> strides() const noexcept { return strides_; }
    extent_t stride(std::size_t axis) const { return strides_.at(axis); }
    extent_t offset() const noexcept { return offset_; }
    CoordinateOrder order() const noexcept { return order_; }

    /// Cached number of addressable elements; 1 for rank 0.
    extent_t size() const noexcept { return size_; }

    /// Cached shape strides for the stored order.
    std::span<const extent_t> shape_strides() const noexcept { return shape_strides_; }

    /// True iff strides equal the shape strides for the stored order.
    /// Rank-0 views are unstrided.
    bool is_unstrided() const noexcept;

    /// Cached flag: unstrided and zero offset. Simple views map scalar index
    /// x directly to buffer position x, which enables contiguous block
    /// copies.
    bool is_simple() const noexcept { return simple_; }

    /// True iff c has length d and every entry is below the extent.
    bool contains(std::span<const extent_t> c) const noexcept;

    /// Buffer position of coordinate c: offset + sum of stride_j * c_j.
    /// Requires rank >= 1; use address_scalar() for rank-0 views.
    extent_t address(std::span<const extent_t> c) const;

    /// Buffer position of the single element of a rank-0 view (its offset).
    extent_t address_scalar() const;

    /// Scalar index of c in the stored order: sum of shape_stride_j * c_j.
    /// Requires rank >= 1.
    extent_t index_of(std::span<const extent_t> c) const;

    /// Inverse of index_of: the unique coordinate with the given scalar
    /// index. The loop direction is selected by the stored order. Requires
    /// rank >= 1.
    Coordinate coordinate_of(extent_t index) const;

    /// As above, writing into out (length = dimension). Allocation-free.
    void coordinate_of(extent_t index, std::span<extent_t> out) const;

    /// Buffer position of the element with the given scalar index, for any
    /// rank. Unstrided views use offset + index directly; strided views go
    /// through coordinate_of.
    extent_t address_of_index(extent_t index) const;

    friend bool operator==(const ViewDescriptor& a, const ViewDescriptor& b) noexcept;

private:
    Shape shape_;
    Strides strides_;
    extent_t offset_ = 0;
    CoordinateOrder order_ = CoordinateOrder::last_major;
    extent_t size_ = 1;
    Strides shape_strides_;
    bool simple_ = true;
};

/// Result of check_invariants: empty means every invariant holds.
struct InvariantReport {
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
    std::string to_string() const;
};

/// Reports every violated descriptor invariant: vector lengths against the
/// dimension, positive extents, the cached size against the shape product,
/// the cached shape strides against the shape and order, and the simplicity
/// flag against its definition. A descriptor obtained from a validating
/// constructor always reports ok.
InvariantReport check_invariants(const ViewDescriptor& v);

namespace detail {

/// Raises invariant_violation if the report is not ok. Wrapped by the
/// NDVIEW_DEBUG_CHECKS switch at the call sites.
void assert_invariants(const ViewDescriptor& v);

inline void debug_check(const ViewDescriptor& v) {
    if constexpr (debug_checks_enabled) {
        assert_invariants(v);
    }
}

} // namespace detail

} // namespace ndview
