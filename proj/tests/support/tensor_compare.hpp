#pragma once

#include <cstring>

#include "ndview/io.hpp"

namespace tu {

template <class T>
bool tensors_identical(const ndview::Tensor<T>& a, const ndview::Tensor<T>& b) {
    return a.descriptor() == b.descriptor() &&
           std::memcmp(a.data(), b.data(), a.size() * sizeof(T)) == 0;
}

/// Bit-exact equality: same kind, same descriptor, same buffer bytes.
inline bool any_tensors_identical(const ndview::AnyTensor& a, const ndview::AnyTensor& b) {
    return std::visit(
        [&](const auto& ta) {
            using T = typename std::decay_t<decltype(ta)>::value_type;
            const auto* tb = std::get_if<ndview::Tensor<T>>(&b);
            return tb != nullptr && tensors_identical(ta, *tb);
        },
        a);
}

} // namespace tu
