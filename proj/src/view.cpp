#include "ndview/view.hpp"

#include <algorithm>
#include <sstream>

namespace ndview {

namespace {

std::string join(std::span<const extent_t> xs) {
    std::ostringstream ss;
    ss << "(";
    for (std::size_t j = 0; j < xs.size(); ++j) {
        if (j) ss << ",";
        ss << xs[j];
    }
    ss << ")";
    return ss.str();
}

bool mul_overflows(extent_t a, extent_t b, extent_t& out) {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_mul_overflow(a, b, &out);
#else
    out = a * b;
    return a != 0 && out / a != b;
#endif
}

} // namespace

Strides shape_strides(std::span<const extent_t> shape, CoordinateOrder order) {
    const std::size_t d = shape.size();
    Strides u(d);
    extent_t acc = 1;
    if (order == CoordinateOrder::last_major) {
        for (std::size_t j = 0; j < d; ++j) {
            u[j] = acc;
            acc *= shape[j];
        }
    } else {
        for (std::size_t j = d; j-- > 0;) {
            u[j] = acc;
            acc *= shape[j];
        }
    }
    return u;
}

extent_t checked_size(std::span<const extent_t> shape) {
    extent_t size = 1;
    for (std::size_t j = 0; j < shape.size(); ++j) {
        if (shape[j] == 0) {
            raise(errc::zero_extent, "extent 0 at axis " + std::to_string(j));
        }
        if (mul_overflows(size, shape[j], size)) {
            raise(errc::size_overflow, "shape product exceeds 64 bits");
        }
    }
    return size;
}

ViewDescriptor::ViewDescriptor() = default;

ViewDescriptor ViewDescriptor::strided(Shape shape, Strides strides, extent_t offset,
                                       CoordinateOrder order) {
    if (shape.size() != strides.size()) {
        raise(errc::length_mismatch,
              "shape has " + std::to_string(shape.size()) + " entries, strides has " +
                  std::to_string(strides.size()));
    }
    ViewDescriptor v;
    v.size_ = checked_size(shape);
    v.shape_ = std::move(shape);
    v.strides_ = std::move(strides);
    v.offset_ = offset;
    v.order_ = order;
    v.shape_strides_ = ndview::shape_strides(v.shape_, order);
    v.simple_ = v.offset_ == 0 && v.strides_ == v.shape_strides_;
    detail::debug_check(v);
    return v;
}

ViewDescriptor ViewDescriptor::unstrided(Shape shape, extent_t offset, CoordinateOrder order) {
    ViewDescriptor v;
    v.size_ = checked_size(shape);
    v.shape_ = std::move(shape);
    v.strides_ = ndview::shape_strides(v.shape_, order);
    v.offset_ = offset;
    v.order_ = order;
    v.shape_strides_ = v.strides_;
    v.simple_ = offset == 0;
    detail::debug_check(v);
    return v;
}

ViewDescriptor ViewDescriptor::scalar(extent_t offset, CoordinateOrder order) {
    return unstrided(Shape{}, offset, order);
}

ViewDescriptor ViewDescriptor::raw_parts(Shape shape, Strides strides, extent_t offset,
                                         CoordinateOrder order, extent_t cached_size,
                                         Strides cached_shape_strides, bool simple) {
    ViewDescriptor v;
    v.shape_ = std::move(shape);
    v.strides_ = std::move(strides);
    v.offset_ = offset;
    v.order_ = order;
    v.size_ = cached_size;
    v.shape_strides_ = std::move(cached_shape_strides);
    v.simple_ = simple;
    return v;
}

bool ViewDescriptor::is_unstrided() const noexcept {
    return strides_ == shape_strides_;
}

bool ViewDescriptor::contains(std::span<const extent_t> c) const noexcept {
    if (c.size() != shape_.size()) return false;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] >= shape_[j]) return false;
    }
    return true;
}

extent_t ViewDescriptor::address(std::span<const extent_t> c) const {
    if constexpr (arg_checks_enabled) {
        if (dimension() == 0) {
            raise(errc::rank_mismatch, "address() on a rank-0 view; use address_scalar()");
        }
        if (c.size() != dimension()) {
            raise(errc::rank_mismatch, "coordinate has " + std::to_string(c.size()) +
                                           " entries, view has rank " +
                                           std::to_string(dimension()));
        }
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j] >= shape_[j]) {
                raise(errc::coordinate_out_of_bounds,
                      "coordinate " + join(c) + " exceeds shape " + join(shape_));
            }
        }
    }
    extent_t p = offset_;
    for (std::size_t j = 0; j < c.size(); ++j) {
        p += strides_[j] * c[j];
    }
    return p;
}

extent_t ViewDescriptor::address_scalar() const {
    if constexpr (arg_checks_enabled) {
        if (dimension() != 0) {
            raise(errc::not_scalar,
                  "address_scalar() on a rank-" + std::to_string(dimension()) + " view");
        }
    }
    return offset_;
}

extent_t ViewDescriptor::index_of(std::span<const extent_t> c) const {
    if constexpr (arg_checks_enabled) {
        if (dimension() == 0) {
            raise(errc::rank_mismatch, "index_of() on a rank-0 view");
        }
        if (c.size() != dimension()) {
            raise(errc::rank_mismatch, "coordinate has " + std::to_string(c.size()) +
                                           " entries, view has rank " +
                                           std::to_string(dimension()));
        }
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j] >= shape_[j]) {
                raise(errc::coordinate_out_of_bounds,
                      "coordinate " + join(c) + " exceeds shape " + join(shape_));
            }
        }
    }
    extent_t x = 0;
    for (std::size_t j = 0; j < c.size(); ++j) {
        x += shape_strides_[j] * c[j];
    }
    return x;
}

void ViewDescriptor::coordinate_of(extent_t index, std::span<extent_t> out) const {
    if constexpr (arg_checks_enabled) {
        if (dimension() == 0) {
            raise(errc::rank_mismatch, "coordinate_of() on a rank-0 view");
        }
        if (out.size() != dimension()) {
            raise(errc::rank_mismatch, "output has " + std::to_string(out.size()) +
                                           " entries, view has rank " +
                                           std::to_string(dimension()));
        }
        if (index >= size_) {
            raise(errc::index_out_of_bounds, "index " + std::to_string(index) +
                                                 " not below size " + std::to_string(size_));
        }
    }
    const std::size_t d = dimension();
    extent_t x = index;
    // The division order follows the stored order, not an inspection of the
    // shape strides: the most significant axis is divided out first.
    if (order_ == CoordinateOrder::last_major) {
        for (std::size_t j = d; j-- > 0;) {
            out[j] = x / shape_strides_[j];
            x %= shape_strides_[j];
        }
    } else {
        for (std::size_t j = 0; j < d; ++j) {
            out[j] = x / shape_strides_[j];
            x %= shape_strides_[j];
        }
    }
}

Coordinate ViewDescriptor::coordinate_of(extent_t index) const {
    Coordinate c(dimension());
    coordinate_of(index, c);
    return c;
}

extent_t ViewDescriptor::address_of_index(extent_t index) const {
    if constexpr (arg_checks_enabled) {
        if (index >= size_) {
            raise(errc::index_out_of_bounds, "index " + std::to_string(index) +
                                                 " not below size " + std::to_string(size_));
        }
    }
    if (dimension() == 0) return offset_;
    if (is_unstrided()) return offset_ + index;
    extent_t c[64];
    const std::size_t d = dimension();
    if (d <= 64) {
        std::span<extent_t> cs(c, d);
        coordinate_of(index, cs);
        return address(cs);
    }
    Coordinate heap = coordinate_of(index);
    return address(heap);
}

bool operator==(const ViewDescriptor& a, const ViewDescriptor& b) noexcept {
    return a.shape_ == b.shape_ && a.strides_ == b.strides_ && a.offset_ == b.offset_ &&
           a.order_ == b.order_ && a.size_ == b.size_ &&
           a.shape_strides_ == b.shape_strides_ && a.simple_ == b.simple_;
}

std::string InvariantReport::to_string() const {
    std::string s;
    for (const auto& v : violations) {
        if (!s.empty()) s += "; ";
        s += v;
    }
    return s;
}

InvariantReport check_invariants(const ViewDescriptor& v) {
    InvariantReport report;
    const std::size_t d = v.dimension();
    if (v.strides().size() != d) {
        report.violations.push_back("strides length != dimension");
    }
    if (v.shape_strides().size() != d) {
        report.violations.push_back("shape strides length != dimension");
    }
    bool extents_ok = true;
    for (std::size_t j = 0; j < d; ++j) {
        if (v.shape()[j] == 0) {
            report.violations.push_back("extent 0 at axis " + std::to_string(j));
            extents_ok = false;
        }
    }
    if (extents_ok) {
        extent_t size = 1;
        bool overflow = false;
        for (extent_t s : v.shape()) {
            if (mul_overflows(size, s, size)) {
                overflow = true;
                break;
            }
        }
        if (overflow) {
            report.violations.push_back("shape product exceeds 64 bits");
        } else if (v.size() != size) {
            report.violations.push_back("size != product of shape");
        }
        if (!overflow && v.shape_strides().size() == d) {
            const Strides expect = shape_strides(v.shape(), v.order());
            if (!std::equal(expect.begin(), expect.end(), v.shape_strides().begin())) {
                report.violations.push_back("shape strides inconsistent with shape and order");
            }
        }
    }
    const bool unstrided = v.strides().size() == v.shape_strides().size() &&
                           std::equal(v.strides().begin(), v.strides().end(),
                                      v.shape_strides().begin());
    if (v.is_simple() != (unstrided && v.offset() == 0)) {
        report.violations.push_back("simplicity flag inconsistent");
    }
    return report;
}

namespace detail {

void assert_invariants(const ViewDescriptor& v) {
    InvariantReport report = check_invariants(v);
    if (!report.ok()) {
        raise(errc::invariant_violation, report.to_string());
    }
}

} // namespace detail

} // namespace ndview
