#pragma once

#include <cstdint>
#include <optional>

#include "ndview/view.hpp"

namespace ndview {

/// Same-rank window of v: shape new_shape, based at `base`, with
/// base_j + new_shape_j <= shape_j on every axis. Strides are unchanged and
/// the offset becomes the address of `base`. The result inherits v's
/// coordinate order unless `order` overrides it.
ViewDescriptor sub_view(const ViewDescriptor& v, std::span<const extent_t> base,
                        std::span<const extent_t> new_shape,
                        std::optional<CoordinateOrder> order = std::nullopt);

/// Fixes coordinate `axis` to `value`, dropping the axis; the rank decreases
/// by one. Binding the only axis of a 1-D view yields a rank-0 view.
ViewDescriptor bind(const ViewDescriptor& v, std::size_t axis, extent_t value);

/// Binds every axis of extent 1 to 0. The offset is unchanged; a view whose
/// axes are all singletons becomes rank-0.
ViewDescriptor squeeze(const ViewDescriptor& v);

/// Applies a bijection on the axes: shape'_j = shape_{sigma_j} and
/// strides'_j = strides_{sigma_j}. Offset and order are unchanged.
ViewDescriptor permute(const ViewDescriptor& v, std::span<const std::size_t> sigma);

/// Exchanges axes j and k.
ViewDescriptor transpose(const ViewDescriptor& v, std::size_t j, std::size_t k);

/// Reverses the axis sequence.
ViewDescriptor transpose_all(const ViewDescriptor& v);

/// Rotates the axis sequence by z positions: with z* = z reduced into [0, d),
/// shape'_j = shape_{(j - z*) mod d}, strides likewise. Any z is accepted,
/// including negative values and |z| >= d.
ViewDescriptor cyclic_shift(const ViewDescriptor& v, std::int64_t z);

/// New shape for an unstrided view; the product must match the current size.
/// The element at scalar index k is the same before and after. Reshaping a
/// strided view is an error, never a silent copy.
ViewDescriptor reshape_view(const ViewDescriptor& v, std::span<const extent_t> new_shape);

} // namespace ndview
