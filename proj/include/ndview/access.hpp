#pragma once

#include <array>
#include <compare>
#include <cstring>
#include <functional>
#include <iterator>
#include <optional>
#include <ranges>
#include <type_traits>

#include "ndview/tensor.hpp"
#include "ndview/transform.hpp"
#include "ndview/view.hpp"

namespace ndview {

template <class T>
class Cursor;

template <class A, class B>
concept same_elements = std::same_as<std::remove_const_t<A>, std::remove_const_t<B>>;

namespace detail {

/// Walks every coordinate of `shape` ascending by scalar index in `order`,
/// maintaining one buffer address per tracked descriptor. Every descriptor
/// must have exactly this shape. f(coordinate, addresses) runs once per
/// coordinate.
template <std::size_t N, class F>
void walk(std::span<const extent_t> shape, CoordinateOrder order,
          const std::array<const ViewDescriptor*, N>& descs, F&& f) {
    const std::size_t d = shape.size();
    std::array<extent_t, N> addrs{};
    for (std::size_t i = 0; i < N; ++i) addrs[i] = descs[i]->offset();
    if (d == 0) {
        f(std::span<const extent_t>{}, addrs);
        return;
    }
    Coordinate c(d, 0);
    const bool last_major = order == CoordinateOrder::last_major;
    for (;;) {
        f(std::span<const extent_t>(c), addrs);
        bool carried = true;
        for (std::size_t level = 0; level < d; ++level) {
            const std::size_t a = last_major ? level : d - 1 - level;
            ++c[a];
            for (std::size_t i = 0; i < N; ++i) addrs[i] += descs[i]->strides()[a];
            if (c[a] < shape[a]) {
                carried = false;
                break;
            }
            c[a] = 0;
            for (std::size_t i = 0; i < N; ++i) addrs[i] -= descs[i]->strides()[a] * shape[a];
        }
        if (carried) break;
    }
}

} // namespace detail

/// Non-owning typed view: a descriptor plus a pointer into someone else's
/// buffer. T may be const-qualified; views on constant data reject writes at
/// compile time. Copy construction aliases the same elements. Assignment
/// follows the data's mutability: assigning to a view on mutable data copies
/// the elements per coordinate (overlap-safe), assigning to a view on
/// constant data rebinds the handle and touches no element.
template <class T>
class View {
public:
    using element_type = T;
    using value_type = std::remove_const_t<T>;
    using iterator = Cursor<T>;

    static constexpr bool read_only = std::is_const_v<T>;

    /// Null view: rank 0, no buffer. Usable only as a rebind target.
    View() = default;

    /// View over raw memory. `data` indexes from the buffer start; the
    /// descriptor's offset is applied on every access.
    View(ViewDescriptor desc, T* data) : desc_(std::move(desc)), data_(data) {}

    /// Internal: view tied to an owning tensor's generation counter.
    View(ViewDescriptor desc, T* data, const std::uint64_t* generation)
        : desc_(std::move(desc)), data_(data), gen_(generation) {}

    View(const View&) = default;
    View(View&&) noexcept = default;

    /// Widening conversion: a view on mutable data is usable wherever a view
    /// on constant data is expected.
    template <class U>
        requires(read_only && std::same_as<U, value_type>)
    View(const View<U>& other)
        : desc_(other.descriptor()), data_(other.data()), gen_(other.generation_ptr()) {}

    View& operator=(const View& rhs) {
        assign_from(rhs);
        return *this;
    }

    template <class U>
        requires(same_elements<T, U> && !std::same_as<U, T>)
    View& operator=(const View<U>& rhs) {
        assign_from(rhs);
        return *this;
    }

    const ViewDescriptor& descriptor() const noexcept { return desc_; }
    std::size_t dimension() const noexcept { return desc_.dimension(); }
    std::span<const extent_t> shape() const noexcept { return desc_.shape(); }
    extent_t shape(std::size_t axis) const { return desc_.shape(axis); }
    std::span<const extent_t> strides() const noexcept { return desc_.strides(); }
    extent_t offset() const noexcept { return desc_.offset(); }
    extent_t size() const noexcept { return desc_.size(); }
    CoordinateOrder order() const noexcept { return desc_.order(); }
    T* data() const noexcept { return data_; }
    const std::uint64_t* generation_ptr() const noexcept { return gen_; }
    bool valid() const noexcept { return data_ != nullptr; }

    /// Element at a coordinate tuple; arity must equal the rank (zero for
    /// rank-0 views).
    template <std::convertible_to<extent_t>... Is>
    T& operator()(Is... is) const {
        const extent_t c[] = {static_cast<extent_t>(is)..., extent_t{0}};
        return at(std::span<const extent_t>(c, sizeof...(Is)));
    }

    /// Element at a coordinate sequence.
    T& at(std::span<const extent_t> c) const {
        if (desc_.dimension() == 0) {
            if constexpr (arg_checks_enabled) {
                if (!c.empty()) {
                    raise(errc::rank_mismatch, "coordinate on a rank-0 view must be empty");
                }
            }
            return data_[desc_.address_scalar()];
        }
        return data_[desc_.address(c)];
    }

    /// Element at a scalar index in the view's internal order.
    T& operator[](extent_t index) const { return data_[desc_.address_of_index(index)]; }

    /// Random-access cursor positioned at scalar index 0.
    Cursor<T> cursor() const { return Cursor<T>(*this, 0); }
    Cursor<T> begin() const { return Cursor<T>(*this, 0); }
    Cursor<T> end() const { return Cursor<T>(*this, desc_.size()); }

    // Producing transforms: a new handle over the same buffer.
    View sub(std::span<const extent_t> base, std::span<const extent_t> window_shape,
             std::optional<CoordinateOrder> order = std::nullopt) const {
        return with(sub_view(desc_, base, window_shape, order));
    }
    View bound(std::size_t axis, extent_t value) const {
        return with(ndview::bind(desc_, axis, value));
    }
    View squeezed() const { return with(ndview::squeeze(desc_)); }
    View permuted(std::span<const std::size_t> sigma) const {
        return with(ndview::permute(desc_, sigma));
    }
    View transposed(std::size_t j, std::size_t k) const {
        return with(ndview::transpose(desc_, j, k));
    }
    View transposed() const { return with(ndview::transpose_all(desc_)); }
    View shifted(std::int64_t z) const { return with(ndview::cyclic_shift(desc_, z)); }
    View reshaped(std::span<const extent_t> new_shape) const {
        return with(ndview::reshape_view(desc_, new_shape));
    }

    // In-place counterparts mutating this handle; sugar over the producing
    // forms.
    View& bind(std::size_t axis, extent_t value) { return replace(ndview::bind(desc_, axis, value)); }
    View& squeeze() { return replace(ndview::squeeze(desc_)); }
    View& permute(std::span<const std::size_t> sigma) {
        return replace(ndview::permute(desc_, sigma));
    }
    View& transpose(std::size_t j, std::size_t k) {
        return replace(ndview::transpose(desc_, j, k));
    }
    View& transpose() { return replace(ndview::transpose_all(desc_)); }
    View& shift(std::int64_t z) { return replace(ndview::cyclic_shift(desc_, z)); }
    View& reshape(std::span<const extent_t> new_shape) {
        return replace(ndview::reshape_view(desc_, new_shape));
    }

    /// Rebinds this handle to alias rhs; elements are untouched. Only views
    /// on constant data rebind.
    template <class U>
        requires(read_only && same_elements<T, U>)
    void rebind(const View<U>& rhs) noexcept {
        desc_ = rhs.descriptor();
        data_ = rhs.data();
        gen_ = rhs.generation_ptr();
    }

private:
    template <class U>
    void assign_from(const View<U>& rhs) {
        if constexpr (read_only) {
            rebind(rhs);
        } else {
            assign_data(*this, rhs);
        }
    }

    View with(ViewDescriptor d) const { return View(std::move(d), data_, gen_); }
    View& replace(ViewDescriptor d) {
        desc_ = std::move(d);
        return *this;
    }

    ViewDescriptor desc_;
    T* data_ = nullptr;
    const std::uint64_t* gen_ = nullptr;
};

template <class T>
using ConstView = View<const T>;

/// Random-access cursor over a view, ordered by ascending scalar index in
/// the view's internal order. Position size() is one past the end. Checked
/// builds flag dereferences past the end and cursors invalidated by a
/// reshape or resize of the underlying tensor.
template <class T>
class Cursor {
public:
    using iterator_category = std::random_access_iterator_tag;
    using value_type = std::remove_const_t<T>;
    using difference_type = std::ptrdiff_t;
    using pointer = T*;
    using reference = T&;

    Cursor() = default;

    Cursor(const View<T>& view, extent_t position)
        : desc_(view.descriptor()), data_(view.data()), gen_(view.generation_ptr()),
          gen_seen_(gen_ ? *gen_ : 0), pos_(position) {}

    reference operator*() const { return element_at(pos_); }
    reference operator[](difference_type k) const {
        return element_at(pos_ + static_cast<extent_t>(k));
    }

    /// Jumps to an absolute position in [0, size].
    Cursor& seek(extent_t position) {
        pos_ = position;
        return *this;
    }
    extent_t position() const noexcept { return pos_; }

    Cursor& operator++() { ++pos_; return *this; }
    Cursor operator++(int) { Cursor old = *this; ++pos_; return old; }
    Cursor& operator--() { --pos_; return *this; }
    Cursor operator--(int) { Cursor old = *this; --pos_; return old; }
    Cursor& operator+=(difference_type k) { pos_ += static_cast<extent_t>(k); return *this; }
    Cursor& operator-=(difference_type k) { pos_ -= static_cast<extent_t>(k); return *this; }

    friend Cursor operator+(Cursor c, difference_type k) { return c += k; }
    friend Cursor operator+(difference_type k, Cursor c) { return c += k; }
    friend Cursor operator-(Cursor c, difference_type k) { return c -= k; }
    friend difference_type operator-(const Cursor& a, const Cursor& b) {
        return static_cast<difference_type>(a.pos_) - static_cast<difference_type>(b.pos_);
    }

    friend bool operator==(const Cursor& a, const Cursor& b) {
        return a.data_ == b.data_ && a.pos_ == b.pos_;
    }
    friend std::strong_ordering operator<=>(const Cursor& a, const Cursor& b) {
        return a.pos_ <=> b.pos_;
    }

private:
    reference element_at(extent_t p) const {
        if constexpr (arg_checks_enabled) {
            if (gen_ && *gen_ != gen_seen_) {
                raise(errc::stale_cursor,
                      "the underlying tensor was reshaped or resized after this cursor was made");
            }
            if (p >= desc_.size()) {
                raise(errc::dereference_at_end, "position " + std::to_string(p) +
                                                    " not below size " +
                                                    std::to_string(desc_.size()));
            }
        }
        return data_[desc_.address_of_index(p)];
    }

    ViewDescriptor desc_;
    T* data_ = nullptr;
    const std::uint64_t* gen_ = nullptr;
    std::uint64_t gen_seen_ = 0;
    extent_t pos_ = 0;
};

/// Conservative aliasing test: true iff the closed element intervals
/// [data + min address, data + max address] of the two views intersect.
/// Views over different buffers never intersect. May report true for
/// interleaved but disjoint strided views; never false for views that share
/// an element.
template <class A, class B>
    requires same_elements<A, B>
bool overlaps(const View<A>& a, const View<B>& b) noexcept {
    if (!a.valid() || !b.valid()) return false;
    const auto span_of = [](const auto& v) {
        const auto& d = v.descriptor();
        extent_t lo = d.offset();
        extent_t hi = lo;
        for (std::size_t j = 0; j < d.dimension(); ++j) {
            hi += d.strides()[j] * (d.shape()[j] - 1);
        }
        return std::pair{v.data() + lo, v.data() + hi};
    };
    const auto [alo, ahi] = span_of(a);
    const auto [blo, bhi] = span_of(b);
    std::less<const void*> before;
    return !(before(ahi, blo) || before(bhi, alo));
}

template <class T, class U>
    requires(!std::is_const_v<T>) && same_elements<T, U>
void assign_data(const View<T>& dst, const View<U>& src);

/// Materializes a view into a fresh tensor of the same shape; the order
/// defaults to the view's own.
template <class U>
Tensor<std::remove_const_t<U>> to_tensor(const View<U>& src,
                                         std::optional<CoordinateOrder> order = std::nullopt) {
    using V = std::remove_const_t<U>;
    Tensor<V> t = Tensor<V>::uninitialized(Shape(src.shape().begin(), src.shape().end()),
                                           order.value_or(src.order()));
    assign_data(t.view(), src);
    return t;
}

namespace detail {

template <class T>
void require_writable_destination(const View<T>& dst) {
    const auto& d = dst.descriptor();
    for (std::size_t j = 0; j < d.dimension(); ++j) {
        if (d.strides()[j] == 0) {
            raise(errc::zero_stride_destination,
                  "axis " + std::to_string(j) + " aliases one element");
        }
    }
}

inline void require_same_shape(std::span<const extent_t> a, std::span<const extent_t> b) {
    if (!std::ranges::equal(a, b)) {
        raise(errc::shape_mismatch, "operand shapes differ");
    }
}

} // namespace detail

/// Copies the elements under src to the elements under dst, matched per
/// coordinate; the shapes must be equal. Views with different internal
/// orders copy correctly because coordinates, not scalar indices, are
/// matched. Overlapping operands behave as if src were first copied to a
/// temporary. Contiguous same-order operands use a single block copy.
template <class T, class U>
    requires(!std::is_const_v<T>) && same_elements<T, U>
void assign_data(const View<T>& dst, const View<U>& src) {
    detail::require_same_shape(dst.shape(), src.shape());
    detail::require_writable_destination(dst);
    if (overlaps(dst, src)) {
        Tensor<std::remove_const_t<U>> tmp = to_tensor(src);
        assign_data(dst, tmp.cview());
        return;
    }
    const auto& dd = dst.descriptor();
    const auto& sd = src.descriptor();
    if (dd.is_unstrided() && sd.is_unstrided() && dd.order() == sd.order()) {
        std::memcpy(dst.data() + dd.offset(), src.data() + sd.offset(),
                    dd.size() * sizeof(T));
        return;
    }
    detail::walk(dst.shape(), dst.order(), std::array{&dd, &sd},
                 [&](std::span<const extent_t>, const std::array<extent_t, 2>& addrs) {
                     dst.data()[addrs[0]] = src.data()[addrs[1]];
                 });
}

/// Rebinds a view on constant data to alias src; no element is touched.
template <class T, class U>
    requires(std::is_const_v<T> && same_elements<T, U>)
void rebind(View<T>& dst, const View<U>& src) noexcept {
    dst.rebind(src);
}

// Out-of-line Tensor members that hand out views.

template <class T>
View<T> Tensor<T>::view() {
    return View<T>(desc_, buffer_.data(), &generation_);
}

template <class T>
View<const T> Tensor<T>::view() const {
    return View<const T>(desc_, buffer_.data(), &generation_);
}

template <class T>
View<const T> Tensor<T>::cview() const {
    return view();
}

template <class T>
View<T> Tensor<T>::view(std::span<const extent_t> base, std::span<const extent_t> window_shape,
                        std::optional<CoordinateOrder> order) {
    return View<T>(sub_view(desc_, base, window_shape, order), buffer_.data(), &generation_);
}

template <class T>
View<const T> Tensor<T>::view(std::span<const extent_t> base,
                              std::span<const extent_t> window_shape,
                              std::optional<CoordinateOrder> order) const {
    return View<const T>(sub_view(desc_, base, window_shape, order), buffer_.data(),
                         &generation_);
}

} // namespace ndview
