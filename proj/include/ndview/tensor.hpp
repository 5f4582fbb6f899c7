#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <memory>
#include <new>
#include <optional>
#include <utility>
#include <vector>

#include "ndview/view.hpp"

namespace ndview {

template <class T>
class View;

namespace detail {

/// Allocator adaptor that default-initializes on unqualified construction,
/// so vector<T, ...>(n) leaves trivially-constructible elements
/// unwritten.
template <class T, class Alloc = std::allocator<T>>
class default_init_allocator : public Alloc {
public:
    using Alloc::Alloc;

    template <class U>
    struct rebind {
        using other = default_init_allocator<U, typename std::allocator_traits<Alloc>::template rebind_alloc<U>>;
    };

    template <class U>
    void construct(U* ptr) noexcept(std::is_nothrow_default_constructible_v<U>) {
        ::new (static_cast<void*>(ptr)) U;
    }

    template <class U, class... Args>
    void construct(U* ptr, Args&&... args) {
        std::allocator_traits<Alloc>::construct(static_cast<Alloc&>(*this), ptr,
                                                std::forward<Args>(args)...);
    }
};

/// Scalar index -> flat buffer position for an always-simple descriptor;
/// identity, but kept explicit where rank 0 is possible.
inline extent_t flat_index_of(const ViewDescriptor& d, std::span<const extent_t> c) {
    return d.dimension() == 0 ? 0 : d.index_of(c);
}

} // namespace detail

/// Owning multi-dimensional array: a contiguous element buffer plus a
/// descriptor that is unstrided with zero offset at all times. The entry at
/// coordinate c lives at buffer position index_of(c); the entry at scalar
/// index k lives at buffer position k.
///
/// Tensors have value semantics: copying copies the buffer. Reshape and
/// resize bump an internal generation counter that checked builds use to
/// flag stale cursors.
template <class T>
class Tensor {
    static_assert(std::is_arithmetic_v<T>, "Tensor elements must be numeric");

public:
    using value_type = T;

    /// Rank-0 tensor holding one zero-initialized element.
    Tensor() : buffer_(1, T{}) {}

    /// Tensor of the given shape with every entry equal to fill.
    static Tensor filled(Shape shape, T fill = T{},
                         CoordinateOrder order = CoordinateOrder::last_major) {
        Tensor t(ViewDescriptor::unstrided(std::move(shape), 0, order));
        t.buffer_.assign(t.desc_.size(), fill);
        return t;
    }

    /// Tensor of the given shape with unspecified entries. Reads before
    /// writes yield unspecified values; every bit pattern of the supported
    /// element kinds is a valid value.
    static Tensor uninitialized(Shape shape,
                                CoordinateOrder order = CoordinateOrder::last_major) {
        Tensor t(ViewDescriptor::unstrided(std::move(shape), 0, order));
        t.buffer_.resize(t.desc_.size());
        return t;
    }

    std::size_t dimension() const noexcept { return desc_.dimension(); }
    std::span<const extent_t> shape() const noexcept { return desc_.shape(); }
    extent_t shape(std::size_t axis) const { return desc_.shape(axis); }
    extent_t size() const noexcept { return desc_.size(); }
    CoordinateOrder order() const noexcept { return desc_.order(); }
    const ViewDescriptor& descriptor() const noexcept { return desc_; }

    T* data() noexcept { return buffer_.data(); }
    const T* data() const noexcept { return buffer_.data(); }

    /// Flat iteration; for a tensor this coincides with ascending scalar
    /// index in its own order.
    T* begin() noexcept { return buffer_.data(); }
    T* end() noexcept { return buffer_.data() + buffer_.size(); }
    const T* begin() const noexcept { return buffer_.data(); }
    const T* end() const noexcept { return buffer_.data() + buffer_.size(); }

    /// Element at a coordinate tuple; the pack arity must equal the rank.
    template <std::convertible_to<extent_t>... Is>
    T& operator()(Is... is) {
        const extent_t c[] = {static_cast<extent_t>(is)..., extent_t{0}};
        return buffer_[address_of(std::span<const extent_t>(c, sizeof...(Is)))];
    }

    template <std::convertible_to<extent_t>... Is>
    const T& operator()(Is... is) const {
        const extent_t c[] = {static_cast<extent_t>(is)..., extent_t{0}};
        return buffer_[address_of(std::span<const extent_t>(c, sizeof...(Is)))];
    }

    /// Element at a coordinate sequence.
    T& at(std::span<const extent_t> c) { return buffer_[address_of(c)]; }
    const T& at(std::span<const extent_t> c) const { return buffer_[address_of(c)]; }

    /// Element at a scalar index in the tensor's order.
    T& operator[](extent_t index) {
        check_index(index);
        return buffer_[index];
    }
    const T& operator[](extent_t index) const {
        check_index(index);
        return buffer_[index];
    }

    /// Replaces the shape; the product must equal the current size. The
    /// buffer and the element at each scalar index are untouched.
    void reshape(std::span<const extent_t> new_shape) {
        const extent_t new_size = checked_size(new_shape);
        if (new_size != desc_.size()) {
            raise(errc::size_mismatch, "new size " + std::to_string(new_size) +
                                           " != current size " + std::to_string(desc_.size()));
        }
        desc_ = ViewDescriptor::unstrided(Shape(new_shape.begin(), new_shape.end()), 0,
                                          desc_.order());
        ++generation_;
        check_self();
    }

    /// Reallocates to the new shape. Entries whose coordinates match on the
    /// first min(d, d') axes within both bounds, with zeros on all remaining
    /// axes of either side, are preserved; every other entry becomes fill.
    void resize(std::span<const extent_t> new_shape, T fill = T{}) {
        ViewDescriptor new_desc = ViewDescriptor::unstrided(
            Shape(new_shape.begin(), new_shape.end()), 0, desc_.order());
        std::vector<T, detail::default_init_allocator<T>> new_buffer(new_desc.size(), fill);

        const std::size_t m = std::min(desc_.dimension(), new_desc.dimension());
        Coordinate bounds(m);
        for (std::size_t j = 0; j < m; ++j) {
            bounds[j] = std::min(desc_.shape()[j], new_desc.shape()[j]);
        }
        Coordinate old_c(desc_.dimension(), 0);
        Coordinate new_c(new_desc.dimension(), 0);
        for (bool more = true; more;) {
            new_buffer[detail::flat_index_of(new_desc, new_c)] =
                buffer_[detail::flat_index_of(desc_, old_c)];
            more = false;
            for (std::size_t j = 0; j < m; ++j) {
                old_c[j] = new_c[j] = old_c[j] + 1;
                if (old_c[j] < bounds[j]) {
                    more = true;
                    break;
                }
                old_c[j] = new_c[j] = 0;
            }
        }

        buffer_ = std::move(new_buffer);
        desc_ = std::move(new_desc);
        ++generation_;
        check_self();
    }

    /// Whole-tensor views; see access.hpp for the View interface.
    View<T> view();
    View<const T> view() const;
    View<const T> cview() const;

    /// Sub-view windows, mirroring view construction from an array.
    View<T> view(std::span<const extent_t> base, std::span<const extent_t> window_shape,
                 std::optional<CoordinateOrder> order = std::nullopt);
    View<const T> view(std::span<const extent_t> base, std::span<const extent_t> window_shape,
                       std::optional<CoordinateOrder> order = std::nullopt) const;

    std::uint64_t generation() const noexcept { return generation_; }
    const std::uint64_t* generation_ptr() const noexcept { return &generation_; }

private:
    explicit Tensor(ViewDescriptor desc) : desc_(std::move(desc)) {}

    extent_t address_of(std::span<const extent_t> c) const {
        if (desc_.dimension() == 0) {
            if constexpr (arg_checks_enabled) {
                if (!c.empty()) {
                    raise(errc::rank_mismatch, "coordinate on a rank-0 tensor must be empty");
                }
            }
            return 0;
        }
        return desc_.address(c);
    }

    void check_index(extent_t index) const {
        if constexpr (arg_checks_enabled) {
            if (index >= desc_.size()) {
                raise(errc::index_out_of_bounds,
                      "index " + std::to_string(index) + " not below size " +
                          std::to_string(desc_.size()));
            }
        }
    }

    void check_self() const {
        if constexpr (debug_checks_enabled) {
            detail::assert_invariants(desc_);
            if (!desc_.is_simple() || buffer_.size() != desc_.size()) {
                raise(errc::invariant_violation, "tensor descriptor must stay simple");
            }
        }
    }

    std::vector<T, detail::default_init_allocator<T>> buffer_;
    ViewDescriptor desc_;
    std::uint64_t generation_ = 0;
};

/// Rank-2 convenience; rows are coordinate 0 and columns coordinate 1.
template <class T>
Tensor<T> make_matrix(extent_t rows, extent_t cols, T fill = T{},
                      CoordinateOrder order = CoordinateOrder::last_major) {
    return Tensor<T>::filled(Shape{rows, cols}, fill, order);
}

/// Rank-1 convenience.
template <class T>
Tensor<T> make_vector(extent_t n, T fill = T{}) {
    return Tensor<T>::filled(Shape{n}, fill);
}

} // namespace ndview
