#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "ndview/access.hpp"

namespace ndview {

/// Element kind codes as stored in MTF1 headers.
enum class ElementKind : std::uint8_t {
    f32 = 1,
    f64 = 2,
    i32 = 3,
    i64 = 4,
    u8 = 5,
};

template <class T>
struct element_kind_of;
template <> struct element_kind_of<float> { static constexpr ElementKind value = ElementKind::f32; };
template <> struct element_kind_of<double> { static constexpr ElementKind value = ElementKind::f64; };
template <> struct element_kind_of<std::int32_t> { static constexpr ElementKind value = ElementKind::i32; };
template <> struct element_kind_of<std::int64_t> { static constexpr ElementKind value = ElementKind::i64; };
template <> struct element_kind_of<std::uint8_t> { static constexpr ElementKind value = ElementKind::u8; };

const char* element_kind_name(ElementKind kind) noexcept;
std::optional<ElementKind> parse_element_kind(std::string_view name) noexcept;
std::size_t element_kind_size(ElementKind kind) noexcept;

/// A tensor of any supported element kind; what MTF1 streams decode to.
using AnyTensor = std::variant<Tensor<float>, Tensor<double>, Tensor<std::int32_t>,
                               Tensor<std::int64_t>, Tensor<std::uint8_t>>;

ElementKind kind_of(const AnyTensor& t);
const ViewDescriptor& descriptor_of(const AnyTensor& t);

enum class RenderStyle { table, matrix };

namespace detail {

/// Integers render exactly; floats render with the shortest representation
/// that round-trips.
template <class T>
std::string format_value(T v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, r.ptr);
}

std::string render_table_impl(const ViewDescriptor& desc, const void* data, ElementKind kind);
std::string render_matrix_impl(const ViewDescriptor& desc, const void* data, ElementKind kind);

} // namespace detail

/// One line per element in ascending scalar index of the view's internal
/// order: the coordinates joined by commas, two spaces, then the value.
/// Requires rank >= 1.
template <class T>
std::string render_table(const View<T>& v) {
    using V = std::remove_const_t<T>;
    return detail::render_table_impl(v.descriptor(), v.data(), element_kind_of<V>::value);
}

/// Rank 1: one space-separated row. Rank 2: entry (j, k) prints at row j,
/// column k. Rank >= 3: for each combination of the coordinates beyond the
/// first two, ascending in the view's internal order, a header line naming
/// the bound trailing coordinates followed by the 2-D slice. Requires
/// rank >= 1.
template <class T>
std::string render_matrix(const View<T>& v) {
    using V = std::remove_const_t<T>;
    return detail::render_matrix_impl(v.descriptor(), v.data(), element_kind_of<V>::value);
}

template <class T>
std::string render(const View<T>& v, RenderStyle style = RenderStyle::matrix) {
    return style == RenderStyle::table ? render_table(v) : render_matrix(v);
}

// ---- MTF1 stream format ----
//
// Little-endian byte layout:
//   magic      4 bytes  "MTF1"
//   version    1 byte   1
//   element    1 byte   (ElementKind code)
//   order      1 byte   0 = lcmo, 1 = fcmo
//   reserved   1 byte   0
//   dimension  4 bytes  unsigned
//   shape      dimension x 8 bytes unsigned, every entry >= 1
//   payload    size x element-size bytes, elements in stored (flat) order
//
// The stream ends with the payload; trailing bytes are an error.

inline constexpr char tensor_file_magic[4] = {'M', 'T', 'F', '1'};
inline constexpr std::uint8_t tensor_file_version = 1;

template <class T>
void write_tensor(std::ostream& os, const Tensor<T>& t);

void write_tensor(std::ostream& os, const AnyTensor& t);

/// Decodes one tensor and requires the stream to end there. Bit-exact
/// round trip with write_tensor.
AnyTensor read_tensor(std::istream& is);

AnyTensor read_tensor_file(const std::filesystem::path& path);

/// Writes to a temporary in the same directory and renames onto the target,
/// so a failed write never leaves a partial file behind.
void write_tensor_file(const std::filesystem::path& path, const AnyTensor& t);

} // namespace ndview
