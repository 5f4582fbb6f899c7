#pragma once

#include <type_traits>

#include "ndview/access.hpp"
#include "ndview/kernels.hpp"

namespace ndview {

enum class BinaryOp { add, sub, mul, div };

namespace detail {

template <class T>
T apply_binary(BinaryOp op, T a, T b) {
    switch (op) {
    case BinaryOp::add: return kernels::elem<T>::add(a, b);
    case BinaryOp::sub: return kernels::elem<T>::sub(a, b);
    case BinaryOp::mul: return kernels::elem<T>::mul(a, b);
    case BinaryOp::div: break;
    }
    return kernels::elem<T>::div(a, b);
}

/// True when the view enumerates the buffer contiguously in `order`, i.e.
/// scalar index k lives at data() + offset + k.
template <class V>
bool contiguous_in(const View<V>& v, CoordinateOrder order) {
    return v.descriptor().is_unstrided() && v.order() == order;
}

template <class V>
auto* flat_ptr(const View<V>& v) {
    return v.data() + v.offset();
}

/// Integer kinds reject zero divisors up front, before any output is
/// written; IEEE kinds divide by anything.
template <class U>
void require_nonzero_divisors(const View<U>& v) {
    if constexpr (std::is_integral_v<std::remove_const_t<U>>) {
        bool zero = false;
        walk(v.shape(), v.order(), std::array<const ViewDescriptor*, 1>{&v.descriptor()},
             [&](std::span<const extent_t>, const std::array<extent_t, 1>& addrs) {
                 zero = zero || v.data()[addrs[0]] == 0;
             });
        if (zero) {
            raise(errc::division_by_zero, "divisor view contains a zero element");
        }
    }
}

template <class T>
void require_nonzero_divisor(T s) {
    if constexpr (std::is_integral_v<T>) {
        if (s == T{0}) {
            raise(errc::division_by_zero, "scalar divisor is zero");
        }
    }
}

template <class T>
auto pick_kernel(const kernels::KernelTable<T>& tbl, BinaryOp op) {
    switch (op) {
    case BinaryOp::add: return tbl.add;
    case BinaryOp::sub: return tbl.sub;
    case BinaryOp::mul: return tbl.mul;
    case BinaryOp::div: break;
    }
    return tbl.div;
}

template <class T>
auto pick_scalar_kernel(const kernels::KernelTable<T>& tbl, BinaryOp op, bool scalar_left) {
    switch (op) {
    case BinaryOp::add: return tbl.add_scalar;
    case BinaryOp::sub: return scalar_left ? tbl.rsub_scalar : tbl.sub_scalar;
    case BinaryOp::mul: return tbl.mul_scalar;
    case BinaryOp::div: break;
    }
    return scalar_left ? tbl.rdiv_scalar : tbl.div_scalar;
}

} // namespace detail

/// result(c) = a(c) op b(c). The shapes must be equal; the result is a fresh
/// tensor with the common shape and the left operand's order. Contiguous
/// same-order operands run on the active kernel lane.
template <class A, class B>
    requires same_elements<A, B>
Tensor<std::remove_const_t<A>> ew_binary(BinaryOp op, const View<A>& a, const View<B>& b) {
    using V = std::remove_const_t<A>;
    detail::require_same_shape(a.shape(), b.shape());
    if (op == BinaryOp::div) detail::require_nonzero_divisors(b);
    Tensor<V> out =
        Tensor<V>::uninitialized(Shape(a.shape().begin(), a.shape().end()), a.order());
    if (detail::contiguous_in(a, out.order()) && detail::contiguous_in(b, out.order())) {
        detail::pick_kernel(kernels::active_table<V>(), op)(
            out.data(), detail::flat_ptr(a), detail::flat_ptr(b), out.size());
        return out;
    }
    extent_t k = 0;
    detail::walk(a.shape(), out.order(),
                 std::array<const ViewDescriptor*, 2>{&a.descriptor(), &b.descriptor()},
                 [&](std::span<const extent_t>, const std::array<extent_t, 2>& addrs) {
                     out.data()[k++] =
                         detail::apply_binary(op, a.data()[addrs[0]], b.data()[addrs[1]]);
                 });
    return out;
}

/// result(c) = a(c) op s: the scalar broadcasts to every coordinate.
template <class A>
Tensor<std::remove_const_t<A>> ew_binary(BinaryOp op, const View<A>& a,
                                         std::remove_const_t<A> s) {
    using V = std::remove_const_t<A>;
    if (op == BinaryOp::div) detail::require_nonzero_divisor(s);
    Tensor<V> out =
        Tensor<V>::uninitialized(Shape(a.shape().begin(), a.shape().end()), a.order());
    if (detail::contiguous_in(a, out.order())) {
        detail::pick_scalar_kernel(kernels::active_table<V>(), op, false)(
            out.data(), detail::flat_ptr(a), s, out.size());
        return out;
    }
    extent_t k = 0;
    detail::walk(a.shape(), out.order(),
                 std::array<const ViewDescriptor*, 1>{&a.descriptor()},
                 [&](std::span<const extent_t>, const std::array<extent_t, 1>& addrs) {
                     out.data()[k++] = detail::apply_binary(op, a.data()[addrs[0]], s);
                 });
    return out;
}

/// result(c) = s op b(c).
template <class B>
Tensor<std::remove_const_t<B>> ew_binary(BinaryOp op, std::remove_const_t<B> s,
                                         const View<B>& b) {
    using V = std::remove_const_t<B>;
    if (op == BinaryOp::div) detail::require_nonzero_divisors(b);
    Tensor<V> out =
        Tensor<V>::uninitialized(Shape(b.shape().begin(), b.shape().end()), b.order());
    if (detail::contiguous_in(b, out.order())) {
        detail::pick_scalar_kernel(kernels::active_table<V>(), op, true)(
            out.data(), detail::flat_ptr(b), s, out.size());
        return out;
    }
    extent_t k = 0;
    detail::walk(b.shape(), out.order(),
                 std::array<const ViewDescriptor*, 1>{&b.descriptor()},
                 [&](std::span<const extent_t>, const std::array<extent_t, 1>& addrs) {
                     out.data()[k++] = detail::apply_binary(op, s, b.data()[addrs[0]]);
                 });
    return out;
}

/// dst(c) = dst(c) op rhs(c). An rhs that overlaps dst behaves as if copied
/// to a temporary first; zero divisors and zero-stride destinations are
/// rejected before anything is written.
template <class D, class S>
    requires(!std::is_const_v<D>) && same_elements<D, S>
void ew_inplace(BinaryOp op, const View<D>& dst, const View<S>& rhs) {
    using V = std::remove_const_t<D>;
    detail::require_same_shape(dst.shape(), rhs.shape());
    detail::require_writable_destination(dst);
    if (op == BinaryOp::div) detail::require_nonzero_divisors(rhs);
    if (overlaps(dst, rhs)) {
        Tensor<V> tmp = to_tensor(rhs);
        ew_inplace(op, dst, tmp.cview());
        return;
    }
    if (detail::contiguous_in(dst, dst.order()) && detail::contiguous_in(rhs, dst.order())) {
        detail::pick_kernel(kernels::active_table<V>(), op)(
            detail::flat_ptr(dst), detail::flat_ptr(dst), detail::flat_ptr(rhs), dst.size());
        return;
    }
    detail::walk(dst.shape(), dst.order(),
                 std::array<const ViewDescriptor*, 2>{&dst.descriptor(), &rhs.descriptor()},
                 [&](std::span<const extent_t>, const std::array<extent_t, 2>& addrs) {
                     dst.data()[addrs[0]] =
                         detail::apply_binary(op, dst.data()[addrs[0]], rhs.data()[addrs[1]]);
                 });
}

/// dst(c) = dst(c) op s.
template <class D>
    requires(!std::is_const_v<D>)
void ew_inplace(BinaryOp op, const View<D>& dst, std::remove_const_t<D> s) {
    using V = std::remove_const_t<D>;
    detail::require_writable_destination(dst);
    if (op == BinaryOp::div) detail::require_nonzero_divisor(s);
    if (detail::contiguous_in(dst, dst.order())) {
        detail::pick_scalar_kernel(kernels::active_table<V>(), op, false)(
            detail::flat_ptr(dst), detail::flat_ptr(dst), s, dst.size());
        return;
    }
    detail::walk(dst.shape(), dst.order(),
                 std::array<const ViewDescriptor*, 1>{&dst.descriptor()},
                 [&](std::span<const extent_t>, const std::array<extent_t, 1>& addrs) {
                     dst.data()[addrs[0]] = detail::apply_binary(op, dst.data()[addrs[0]], s);
                 });
}

/// result(c) = -a(c); integer kinds wrap.
template <class A>
Tensor<std::remove_const_t<A>> negate(const View<A>& a) {
    using V = std::remove_const_t<A>;
    Tensor<V> out =
        Tensor<V>::uninitialized(Shape(a.shape().begin(), a.shape().end()), a.order());
    if (detail::contiguous_in(a, out.order())) {
        kernels::active_table<V>().negate(out.data(), detail::flat_ptr(a), out.size());
        return out;
    }
    extent_t k = 0;
    detail::walk(a.shape(), out.order(),
                 std::array<const ViewDescriptor*, 1>{&a.descriptor()},
                 [&](std::span<const extent_t>, const std::array<extent_t, 1>& addrs) {
                     out.data()[k++] = kernels::elem<V>::neg(a.data()[addrs[0]]);
                 });
    return out;
}

/// Every entry changed by one.
template <class D>
    requires(!std::is_const_v<D>)
void increment_all(const View<D>& dst) {
    ew_inplace(BinaryOp::add, dst, std::remove_const_t<D>{1});
}

template <class D>
    requires(!std::is_const_v<D>)
void decrement_all(const View<D>& dst) {
    ew_inplace(BinaryOp::sub, dst, std::remove_const_t<D>{1});
}

// ---- operator sugar over views and tensors ----

namespace detail {

template <class X>
struct operand_traits : std::false_type {};
template <class T>
struct operand_traits<View<T>> : std::true_type {
    using value_type = std::remove_const_t<T>;
    static constexpr bool writable = !std::is_const_v<T>;
};
template <class T>
struct operand_traits<Tensor<T>> : std::true_type {
    using value_type = T;
    static constexpr bool writable = true;
};

} // namespace detail

/// A View or Tensor of any element kind.
template <class X>
concept ElementwiseOperand = detail::operand_traits<std::remove_cvref_t<X>>::value;

template <ElementwiseOperand X>
using operand_value_t = typename detail::operand_traits<std::remove_cvref_t<X>>::value_type;

template <class X, class Y>
concept SameKindOperands =
    ElementwiseOperand<X> && ElementwiseOperand<Y> &&
    std::same_as<operand_value_t<X>, operand_value_t<Y>>;

namespace detail {

template <class T>
View<const T> as_cview(const Tensor<T>& t) {
    return t.cview();
}
template <class T>
View<const T> as_cview(const View<T>& v) {
    return v;
}
template <class T>
View<T> as_view(Tensor<T>& t) {
    return t.view();
}
template <class T>
    requires(!std::is_const_v<T>)
View<T> as_view(const View<T>& v) {
    return v;
}

} // namespace detail

template <class X, class Y>
    requires SameKindOperands<X, Y>
Tensor<operand_value_t<X>> operator+(const X& x, const Y& y) {
    return ew_binary(BinaryOp::add, detail::as_cview(x), detail::as_cview(y));
}
template <class X, class Y>
    requires SameKindOperands<X, Y>
Tensor<operand_value_t<X>> operator-(const X& x, const Y& y) {
    return ew_binary(BinaryOp::sub, detail::as_cview(x), detail::as_cview(y));
}
template <class X, class Y>
    requires SameKindOperands<X, Y>
Tensor<operand_value_t<X>> operator*(const X& x, const Y& y) {
    return ew_binary(BinaryOp::mul, detail::as_cview(x), detail::as_cview(y));
}
template <class X, class Y>
    requires SameKindOperands<X, Y>
Tensor<operand_value_t<X>> operator/(const X& x, const Y& y) {
    return ew_binary(BinaryOp::div, detail::as_cview(x), detail::as_cview(y));
}

// Scalars combine with an operand in either position. The scalar type must
// be exactly the element kind: kinds never mix and nothing promotes.
template <ElementwiseOperand X>
Tensor<operand_value_t<X>> operator+(const X& x, operand_value_t<X> s) {
    return ew_binary(BinaryOp::add, detail::as_cview(x), s);
}
template <ElementwiseOperand X>
Tensor<operand_value_t<X>> operator+(operand_value_t<X> s, const X& x) {
    return ew_binary(BinaryOp::add, s, detail::as_cview(x));
}
template <ElementwiseOperand X>
Tensor<operand_value_t<X>> operator-(const X& x, operand_value_t<X> s) {
    return ew_binary(BinaryOp::sub, detail::as_cview(x), s);
}
template <ElementwiseOperand X>
Tensor<operand_value_t<X>> operator-(operand_value_t<X> s, const X& x) {
    return ew_binary(BinaryOp::sub, s, detail::as_cview(x));
}
template <ElementwiseOperand X>
Tensor<operand_value_t<X>> operator*(const X& x, operand_value_t<X> s) {
    return ew_binary(BinaryOp::mul, detail::as_cview(x), s);
}
template <ElementwiseOperand X>
Tensor<operand_value_t<X>> operator*(operand_value_t<X> s, const X& x) {
    return ew_binary(BinaryOp::mul, s, detail::as_cview(x));
}
template <ElementwiseOperand X>
Tensor<operand_value_t<X>> operator/(const X& x, operand_value_t<X> s) {
    return ew_binary(BinaryOp::div, detail::as_cview(x), s);
}
template <ElementwiseOperand X>
Tensor<operand_value_t<X>> operator/(operand_value_t<X> s, const X& x) {
    return ew_binary(BinaryOp::div, s, detail::as_cview(x));
}

template <ElementwiseOperand X>
Tensor<operand_value_t<X>> operator-(const X& x) {
    return negate(detail::as_cview(x));
}

// Compound assignment and the whole-array increment/decrement mutate the
// elements under the left operand.

template <class T, class Y>
    requires SameKindOperands<Tensor<T>, Y>
Tensor<T>& operator+=(Tensor<T>& x, const Y& y) {
    ew_inplace(BinaryOp::add, x.view(), detail::as_cview(y));
    return x;
}
template <class T, class Y>
    requires SameKindOperands<Tensor<T>, Y>
Tensor<T>& operator-=(Tensor<T>& x, const Y& y) {
    ew_inplace(BinaryOp::sub, x.view(), detail::as_cview(y));
    return x;
}
template <class T, class Y>
    requires SameKindOperands<Tensor<T>, Y>
Tensor<T>& operator*=(Tensor<T>& x, const Y& y) {
    ew_inplace(BinaryOp::mul, x.view(), detail::as_cview(y));
    return x;
}
template <class T, class Y>
    requires SameKindOperands<Tensor<T>, Y>
Tensor<T>& operator/=(Tensor<T>& x, const Y& y) {
    ew_inplace(BinaryOp::div, x.view(), detail::as_cview(y));
    return x;
}

template <class T>
Tensor<T>& operator+=(Tensor<T>& x, std::type_identity_t<T> s) {
    ew_inplace(BinaryOp::add, x.view(), s);
    return x;
}
template <class T>
Tensor<T>& operator-=(Tensor<T>& x, std::type_identity_t<T> s) {
    ew_inplace(BinaryOp::sub, x.view(), s);
    return x;
}
template <class T>
Tensor<T>& operator*=(Tensor<T>& x, std::type_identity_t<T> s) {
    ew_inplace(BinaryOp::mul, x.view(), s);
    return x;
}
template <class T>
Tensor<T>& operator/=(Tensor<T>& x, std::type_identity_t<T> s) {
    ew_inplace(BinaryOp::div, x.view(), s);
    return x;
}

template <class T, class Y>
    requires(!std::is_const_v<T>) && SameKindOperands<View<T>, Y>
const View<T>& operator+=(const View<T>& x, const Y& y) {
    ew_inplace(BinaryOp::add, x, detail::as_cview(y));
    return x;
}
template <class T, class Y>
    requires(!std::is_const_v<T>) && SameKindOperands<View<T>, Y>
const View<T>& operator-=(const View<T>& x, const Y& y) {
    ew_inplace(BinaryOp::sub, x, detail::as_cview(y));
    return x;
}
template <class T, class Y>
    requires(!std::is_const_v<T>) && SameKindOperands<View<T>, Y>
const View<T>& operator*=(const View<T>& x, const Y& y) {
    ew_inplace(BinaryOp::mul, x, detail::as_cview(y));
    return x;
}
template <class T, class Y>
    requires(!std::is_const_v<T>) && SameKindOperands<View<T>, Y>
const View<T>& operator/=(const View<T>& x, const Y& y) {
    ew_inplace(BinaryOp::div, x, detail::as_cview(y));
    return x;
}

template <class T>
    requires(!std::is_const_v<T>)
const View<T>& operator+=(const View<T>& x, std::type_identity_t<T> s) {
    ew_inplace(BinaryOp::add, x, s);
    return x;
}
template <class T>
    requires(!std::is_const_v<T>)
const View<T>& operator-=(const View<T>& x, std::type_identity_t<T> s) {
    ew_inplace(BinaryOp::sub, x, s);
    return x;
}
template <class T>
    requires(!std::is_const_v<T>)
const View<T>& operator*=(const View<T>& x, std::type_identity_t<T> s) {
    ew_inplace(BinaryOp::mul, x, s);
    return x;
}
template <class T>
    requires(!std::is_const_v<T>)
const View<T>& operator/=(const View<T>& x, std::type_identity_t<T> s) {
    ew_inplace(BinaryOp::div, x, s);
    return x;
}

template <class T>
Tensor<T>& operator++(Tensor<T>& x) {
    increment_all(x.view());
    return x;
}
template <class T>
Tensor<T>& operator--(Tensor<T>& x) {
    decrement_all(x.view());
    return x;
}
template <class T>
    requires(!std::is_const_v<T>)
const View<T>& operator++(const View<T>& x) {
    increment_all(x);
    return x;
}
template <class T>
    requires(!std::is_const_v<T>)
const View<T>& operator--(const View<T>& x) {
    decrement_all(x);
    return x;
}

} // namespace ndview
