#pragma once

// Independent reference implementations the tests check the library against.
// Everything here is computed directly from first principles — literal
// products, literal summations, and full enumerations — and never calls the
// code paths under test.

#include <cstdint>
#include <span>
#include <vector>

#include "ndview/types.hpp"

namespace oracles {

using ndview::Coordinate;
using ndview::CoordinateOrder;
using ndview::extent_t;

/// Direct summation: offset + sum over axes of stride * coordinate.
inline extent_t address(extent_t offset, std::span<const extent_t> strides,
                        std::span<const extent_t> c) {
    extent_t p = offset;
    for (std::size_t j = 0; j < c.size(); ++j) {
        p += strides[j] * c[j];
    }
    return p;
}

/// Shape strides from literal extent products, one product per axis.
inline std::vector<extent_t> shape_strides(std::span<const extent_t> shape,
                                           CoordinateOrder order) {
    const std::size_t d = shape.size();
    std::vector<extent_t> u(d);
    for (std::size_t j = 0; j < d; ++j) {
        extent_t p = 1;
        if (order == CoordinateOrder::first_major) {
            for (std::size_t k = j + 1; k < d; ++k) p *= shape[k];
        } else {
            for (std::size_t k = 0; k < j; ++k) p *= shape[k];
        }
        u[j] = p;
    }
    return u;
}

/// Scalar index from freshly computed shape strides.
inline extent_t index_of(std::span<const extent_t> shape, CoordinateOrder order,
                         std::span<const extent_t> c) {
    const auto u = oracles::shape_strides(shape, order);
    extent_t x = 0;
    for (std::size_t j = 0; j < c.size(); ++j) {
        x += u[j] * c[j];
    }
    return x;
}

/// Every coordinate tuple of the shape, in a fixed enumeration order of its
/// own (last axis fastest); callers treat the result as a set.
inline std::vector<Coordinate> all_coordinates(std::span<const extent_t> shape) {
    std::vector<Coordinate> out;
    Coordinate c(shape.size(), 0);
    for (;;) {
        out.push_back(c);
        std::size_t j = shape.size();
        while (j > 0) {
            --j;
            if (++c[j] < shape[j]) break;
            c[j] = 0;
            if (j == 0) return out;
        }
        if (shape.empty()) return out;
    }
}

/// The coordinate pairs a resize preserves: both tuples agree on the first
/// min(d, d') axes and are zero on every remaining axis of either side.
/// Literal filter over the full product of both coordinate sets.
struct ResizePair {
    Coordinate from;
    Coordinate to;
};

inline std::vector<ResizePair> resize_pairs(std::span<const extent_t> old_shape,
                                            std::span<const extent_t> new_shape) {
    const std::size_t m = std::min(old_shape.size(), new_shape.size());
    std::vector<ResizePair> pairs;
    for (const Coordinate& c : all_coordinates(old_shape)) {
        for (const Coordinate& cp : all_coordinates(new_shape)) {
            bool in = true;
            for (std::size_t j = 0; j < m && in; ++j) in = c[j] == cp[j];
            for (std::size_t j = m; j < c.size() && in; ++j) in = c[j] == 0;
            for (std::size_t j = m; j < cp.size() && in; ++j) in = cp[j] == 0;
            if (in) pairs.push_back({c, cp});
        }
    }
    return pairs;
}

/// Wrap-around integer arithmetic, reimplemented so kernel tests do not
/// check the kernels against themselves. Floats are native IEEE.
template <class T>
struct arith {
    static T add(T a, T b) {
        if constexpr (std::is_integral_v<T>) {
            using U = std::make_unsigned_t<T>;
            return static_cast<T>(static_cast<U>(static_cast<U>(a) + static_cast<U>(b)));
        } else {
            return a + b;
        }
    }
    static T sub(T a, T b) {
        if constexpr (std::is_integral_v<T>) {
            using U = std::make_unsigned_t<T>;
            return static_cast<T>(static_cast<U>(static_cast<U>(a) - static_cast<U>(b)));
        } else {
            return a - b;
        }
    }
    static T mul(T a, T b) {
        if constexpr (std::is_integral_v<T>) {
            using U = std::make_unsigned_t<T>;
            return static_cast<T>(static_cast<U>(static_cast<U>(a) * static_cast<U>(b)));
        } else {
            return a * b;
        }
    }
    static T div(T a, T b) {
        if constexpr (std::is_integral_v<T> && std::is_signed_v<T>) {
            if (b == T{-1}) return neg(a);
        }
        return a / b;
    }
    static T neg(T a) {
        if constexpr (std::is_integral_v<T>) {
            using U = std::make_unsigned_t<T>;
            return static_cast<T>(static_cast<U>(U{0} - static_cast<U>(a)));
        } else {
            return -a;
        }
    }
};

/// Per-coordinate copy through an explicit temporary: the reference
/// behaviour for assignments between possibly overlapping views over one
/// buffer. Addressing is the direct summation above.
template <class T>
void temp_copy_assign(std::vector<T>& buffer, std::span<const extent_t> shape,
                      std::span<const extent_t> dst_strides, extent_t dst_offset,
                      std::span<const extent_t> src_strides, extent_t src_offset) {
    const auto coords = all_coordinates(shape);
    std::vector<T> temp;
    temp.reserve(coords.size());
    for (const Coordinate& c : coords) {
        temp.push_back(buffer[address(src_offset, src_strides, c)]);
    }
    for (std::size_t i = 0; i < coords.size(); ++i) {
        buffer[address(dst_offset, dst_strides, coords[i])] = temp[i];
    }
}

/// Same shape of reference for in-place elementwise ops: gather rhs first,
/// then combine per coordinate.
template <class T, class Op>
void temp_copy_inplace(std::vector<T>& buffer, std::span<const extent_t> shape,
                       std::span<const extent_t> dst_strides, extent_t dst_offset,
                       std::span<const extent_t> src_strides, extent_t src_offset, Op op) {
    const auto coords = all_coordinates(shape);
    std::vector<T> temp;
    temp.reserve(coords.size());
    for (const Coordinate& c : coords) {
        temp.push_back(buffer[address(src_offset, src_strides, c)]);
    }
    for (std::size_t i = 0; i < coords.size(); ++i) {
        T& dst = buffer[address(dst_offset, dst_strides, coords[i])];
        dst = op(dst, temp[i]);
    }
}

} // namespace oracles
