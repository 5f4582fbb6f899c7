#include "ndview/transform.hpp"

#include <numeric>
#include <vector>

namespace ndview {

ViewDescriptor sub_view(const ViewDescriptor& v, std::span<const extent_t> base,
                        std::span<const extent_t> new_shape,
                        std::optional<CoordinateOrder> order) {
    const std::size_t d = v.dimension();
    if (d == 0) {
        raise(errc::rank_mismatch, "sub_view of a rank-0 view");
    }
    if (base.size() != d || new_shape.size() != d) {
        raise(errc::rank_mismatch, "base and shape must have rank " + std::to_string(d));
    }
    for (std::size_t j = 0; j < d; ++j) {
        if (new_shape[j] == 0) {
            raise(errc::zero_extent, "extent 0 at axis " + std::to_string(j));
        }
        if (base[j] >= v.shape()[j] || new_shape[j] > v.shape()[j] - base[j]) {
            raise(errc::sub_view_out_of_bounds,
                  "axis " + std::to_string(j) + ": base " + std::to_string(base[j]) +
                      " + extent " + std::to_string(new_shape[j]) + " exceeds " +
                      std::to_string(v.shape()[j]));
        }
    }
    extent_t new_offset = v.offset();
    for (std::size_t j = 0; j < d; ++j) {
        new_offset += v.strides()[j] * base[j];
    }
    return ViewDescriptor::strided(Shape(new_shape.begin(), new_shape.end()),
                                   Strides(v.strides().begin(), v.strides().end()), new_offset,
                                   order.value_or(v.order()));
}

ViewDescriptor bind(const ViewDescriptor& v, std::size_t axis, extent_t value) {
    if (axis >= v.dimension()) {
        raise(errc::axis_out_of_range, "axis " + std::to_string(axis) + " on a rank-" +
                                           std::to_string(v.dimension()) + " view");
    }
    if (value >= v.shape()[axis]) {
        raise(errc::value_out_of_range, "value " + std::to_string(value) +
                                            " not below extent " +
                                            std::to_string(v.shape()[axis]));
    }
    Shape shape;
    Strides strides;
    shape.reserve(v.dimension() - 1);
    strides.reserve(v.dimension() - 1);
    for (std::size_t j = 0; j < v.dimension(); ++j) {
        if (j == axis) continue;
        shape.push_back(v.shape()[j]);
        strides.push_back(v.strides()[j]);
    }
    const extent_t new_offset = v.offset() + v.strides()[axis] * value;
    return ViewDescriptor::strided(std::move(shape), std::move(strides), new_offset, v.order());
}

ViewDescriptor squeeze(const ViewDescriptor& v) {
    Shape shape;
    Strides strides;
    for (std::size_t j = 0; j < v.dimension(); ++j) {
        if (v.shape()[j] == 1) continue;
        shape.push_back(v.shape()[j]);
        strides.push_back(v.strides()[j]);
    }
    return ViewDescriptor::strided(std::move(shape), std::move(strides), v.offset(), v.order());
}

ViewDescriptor permute(const ViewDescriptor& v, std::span<const std::size_t> sigma) {
    const std::size_t d = v.dimension();
    if (d == 0) {
        raise(errc::rank_mismatch, "permute of a rank-0 view");
    }
    if (sigma.size() != d) {
        raise(errc::rank_mismatch,
              "permutation has " + std::to_string(sigma.size()) + " entries, view has rank " +
                  std::to_string(d));
    }
    std::vector<bool> seen(d, false);
    for (std::size_t s : sigma) {
        if (s >= d || seen[s]) {
            raise(errc::not_a_permutation, "entries must be distinct values in [0, " +
                                               std::to_string(d) + ")");
        }
        seen[s] = true;
    }
    Shape shape(d);
    Strides strides(d);
    for (std::size_t j = 0; j < d; ++j) {
        shape[j] = v.shape()[sigma[j]];
        strides[j] = v.strides()[sigma[j]];
    }
    return ViewDescriptor::strided(std::move(shape), std::move(strides), v.offset(), v.order());
}

ViewDescriptor transpose(const ViewDescriptor& v, std::size_t j, std::size_t k) {
    const std::size_t d = v.dimension();
    if (j >= d || k >= d) {
        raise(errc::axis_out_of_range, "axes (" + std::to_string(j) + "," + std::to_string(k) +
                                           ") on a rank-" + std::to_string(d) + " view");
    }
    std::vector<std::size_t> sigma(d);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    std::swap(sigma[j], sigma[k]);
    return permute(v, sigma);
}

ViewDescriptor transpose_all(const ViewDescriptor& v) {
    const std::size_t d = v.dimension();
    if (d == 0) {
        raise(errc::rank_mismatch, "transpose of a rank-0 view");
    }
    std::vector<std::size_t> sigma(d);
    for (std::size_t j = 0; j < d; ++j) {
        sigma[j] = d - 1 - j;
    }
    return permute(v, sigma);
}

ViewDescriptor cyclic_shift(const ViewDescriptor& v, std::int64_t z) {
    const std::size_t d = v.dimension();
    if (d == 0) {
        raise(errc::rank_mismatch, "cyclic shift of a rank-0 view");
    }
    const auto di = static_cast<std::int64_t>(d);
    std::int64_t zn = z % di;
    if (zn < 0) zn += di;
    std::vector<std::size_t> sigma(d);
    for (std::size_t j = 0; j < d; ++j) {
        sigma[j] = (j + d - static_cast<std::size_t>(zn)) % d;
    }
    return permute(v, sigma);
}

ViewDescriptor reshape_view(const ViewDescriptor& v, std::span<const extent_t> new_shape) {
    if (!v.is_unstrided()) {
        raise(errc::not_unstrided, "reshape requires an unstrided view");
    }
    const extent_t new_size = checked_size(new_shape);
    if (new_size != v.size()) {
        raise(errc::size_mismatch, "new size " + std::to_string(new_size) +
                                       " != current size " + std::to_string(v.size()));
    }
    return ViewDescriptor::unstrided(Shape(new_shape.begin(), new_shape.end()), v.offset(),
                                     v.order());
}

} // namespace ndview
