#include "ndview/io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

namespace ndview {

const char* element_kind_name(ElementKind kind) noexcept {
    switch (kind) {
    case ElementKind::f32: return "f32";
    case ElementKind::f64: return "f64";
    case ElementKind::i32: return "i32";
    case ElementKind::i64: return "i64";
    case ElementKind::u8: return "u8";
    }
    return "unknown";
}

std::optional<ElementKind> parse_element_kind(std::string_view name) noexcept {
    if (name == "f32") return ElementKind::f32;
    if (name == "f64") return ElementKind::f64;
    if (name == "i32") return ElementKind::i32;
    if (name == "i64") return ElementKind::i64;
    if (name == "u8") return ElementKind::u8;
    return std::nullopt;
}

std::size_t element_kind_size(ElementKind kind) noexcept {
    switch (kind) {
    case ElementKind::f32: return 4;
    case ElementKind::f64: return 8;
    case ElementKind::i32: return 4;
    case ElementKind::i64: return 8;
    case ElementKind::u8: return 1;
    }
    return 0;
}

ElementKind kind_of(const AnyTensor& t) {
    return std::visit(
        [](const auto& tensor) {
            using T = typename std::decay_t<decltype(tensor)>::value_type;
            return element_kind_of<T>::value;
        },
        t);
}

const ViewDescriptor& descriptor_of(const AnyTensor& t) {
    return std::visit([](const auto& tensor) -> const ViewDescriptor& { return tensor.descriptor(); },
                      t);
}

namespace {

std::string format_at(const void* data, extent_t addr, ElementKind kind) {
    switch (kind) {
    case ElementKind::f32: return detail::format_value(static_cast<const float*>(data)[addr]);
    case ElementKind::f64: return detail::format_value(static_cast<const double*>(data)[addr]);
    case ElementKind::i32:
        return detail::format_value(static_cast<const std::int32_t*>(data)[addr]);
    case ElementKind::i64:
        return detail::format_value(static_cast<const std::int64_t*>(data)[addr]);
    case ElementKind::u8: break;
    }
    return detail::format_value(static_cast<const std::uint8_t*>(data)[addr]);
}

} // namespace

namespace detail {

std::string render_table_impl(const ViewDescriptor& desc, const void* data, ElementKind kind) {
    if (desc.dimension() == 0) {
        raise(errc::rank_mismatch, "table rendering requires rank >= 1");
    }
    std::string out;
    walk(desc.shape(), desc.order(), std::array<const ViewDescriptor*, 1>{&desc},
         [&](std::span<const extent_t> c, const std::array<extent_t, 1>& addrs) {
             for (std::size_t j = 0; j < c.size(); ++j) {
                 if (j) out += ',';
                 out += std::to_string(c[j]);
             }
             out += "  ";
             out += format_at(data, addrs[0], kind);
             out += '\n';
         });
    return out;
}

std::string render_matrix_impl(const ViewDescriptor& desc, const void* data, ElementKind kind) {
    const std::size_t d = desc.dimension();
    if (d == 0) {
        raise(errc::rank_mismatch, "matrix rendering requires rank >= 1");
    }
    std::string out;
    if (d == 1) {
        for (extent_t k = 0; k < desc.shape()[0]; ++k) {
            if (k) out += ' ';
            out += format_at(data, desc.offset() + desc.strides()[0] * k, kind);
        }
        out += '\n';
        return out;
    }
    const auto emit_slice = [&](extent_t base) {
        for (extent_t j = 0; j < desc.shape()[0]; ++j) {
            for (extent_t k = 0; k < desc.shape()[1]; ++k) {
                if (k) out += ' ';
                out += format_at(data, base + desc.strides()[0] * j + desc.strides()[1] * k,
                                 kind);
            }
            out += '\n';
        }
    };
    if (d == 2) {
        emit_slice(desc.offset());
        return out;
    }
    // One slice per combination of the trailing coordinates, enumerated in
    // the view's internal order restricted to those axes.
    const Shape trailing(desc.shape().begin() + 2, desc.shape().end());
    const ViewDescriptor combos = ViewDescriptor::unstrided(trailing, 0, desc.order());
    Coordinate tc(trailing.size());
    for (extent_t x = 0; x < combos.size(); ++x) {
        combos.coordinate_of(x, tc);
        out += "[:,:";
        extent_t base = desc.offset();
        for (std::size_t a = 0; a < tc.size(); ++a) {
            out += ',';
            out += std::to_string(tc[a]);
            base += desc.strides()[a + 2] * tc[a];
        }
        out += "]\n";
        emit_slice(base);
    }
    return out;
}

} // namespace detail

namespace {

void put_u32_le(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_u64_le(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint32_t get_u32_le(const unsigned char* p) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(p[i]) << (8 * i);
    return v;
}

std::uint64_t get_u64_le(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    return v;
}

template <class T>
void put_element(std::string& out, T v) {
    if constexpr (std::is_same_v<T, float>) {
        put_u32_le(out, std::bit_cast<std::uint32_t>(v));
    } else if constexpr (std::is_same_v<T, double>) {
        put_u64_le(out, std::bit_cast<std::uint64_t>(v));
    } else if constexpr (std::is_same_v<T, std::int32_t>) {
        put_u32_le(out, static_cast<std::uint32_t>(v));
    } else if constexpr (std::is_same_v<T, std::int64_t>) {
        put_u64_le(out, static_cast<std::uint64_t>(v));
    } else {
        static_assert(std::is_same_v<T, std::uint8_t>);
        out.push_back(static_cast<char>(v));
    }
}

template <class T>
T get_element(const unsigned char* p) {
    if constexpr (std::is_same_v<T, float>) {
        return std::bit_cast<float>(get_u32_le(p));
    } else if constexpr (std::is_same_v<T, double>) {
        return std::bit_cast<double>(get_u64_le(p));
    } else if constexpr (std::is_same_v<T, std::int32_t>) {
        return static_cast<std::int32_t>(get_u32_le(p));
    } else if constexpr (std::is_same_v<T, std::int64_t>) {
        return static_cast<std::int64_t>(get_u64_le(p));
    } else {
        static_assert(std::is_same_v<T, std::uint8_t>);
        return static_cast<std::uint8_t>(p[0]);
    }
}

bool read_exact(std::istream& is, void* dst, std::size_t n) {
    is.read(static_cast<char*>(dst), static_cast<std::streamsize>(n));
    return static_cast<std::size_t>(is.gcount()) == n;
}

} // namespace

template <class T>
void write_tensor(std::ostream& os, const Tensor<T>& t) {
    std::string bytes;
    bytes.reserve(20 + t.dimension() * 8 + t.size() * sizeof(T));
    bytes.append(tensor_file_magic, 4);
    bytes.push_back(static_cast<char>(tensor_file_version));
    bytes.push_back(static_cast<char>(element_kind_of<T>::value));
    bytes.push_back(static_cast<char>(t.order()));
    bytes.push_back('\0'); // reserved
    put_u32_le(bytes, static_cast<std::uint32_t>(t.dimension()));
    for (extent_t s : t.shape()) put_u64_le(bytes, s);
    for (extent_t k = 0; k < t.size(); ++k) put_element(bytes, t.data()[k]);
    os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

template void write_tensor<float>(std::ostream&, const Tensor<float>&);
template void write_tensor<double>(std::ostream&, const Tensor<double>&);
template void write_tensor<std::int32_t>(std::ostream&, const Tensor<std::int32_t>&);
template void write_tensor<std::int64_t>(std::ostream&, const Tensor<std::int64_t>&);
template void write_tensor<std::uint8_t>(std::ostream&, const Tensor<std::uint8_t>&);

void write_tensor(std::ostream& os, const AnyTensor& t) {
    std::visit([&](const auto& tensor) { write_tensor(os, tensor); }, t);
}

AnyTensor read_tensor(std::istream& is) {
    unsigned char head[12];
    if (!read_exact(is, head, sizeof(head))) {
        raise(errc::malformed_header, "stream shorter than a header");
    }
    if (std::memcmp(head, tensor_file_magic, 4) != 0) {
        raise(errc::bad_magic, "expected MTF1");
    }
    if (head[4] != tensor_file_version) {
        raise(errc::unsupported_version, "version " + std::to_string(head[4]));
    }
    const auto kind_code = head[5];
    if (kind_code < 1 || kind_code > 5) {
        raise(errc::unknown_element_code, "code " + std::to_string(kind_code));
    }
    const ElementKind kind = static_cast<ElementKind>(kind_code);
    if (head[6] > 1) {
        raise(errc::malformed_header, "order code " + std::to_string(head[6]));
    }
    const CoordinateOrder order = static_cast<CoordinateOrder>(head[6]);
    const std::uint32_t dimension = get_u32_le(head + 8);

    Shape shape(dimension);
    for (std::uint32_t j = 0; j < dimension; ++j) {
        unsigned char entry[8];
        if (!read_exact(is, entry, sizeof(entry))) {
            raise(errc::malformed_header, "shape entries truncated");
        }
        shape[j] = get_u64_le(entry);
        if (shape[j] == 0) {
            raise(errc::malformed_header, "extent 0 at axis " + std::to_string(j));
        }
    }
    extent_t size = 0;
    try {
        size = checked_size(shape);
    } catch (const Error&) {
        raise(errc::malformed_header, "shape product exceeds 64 bits");
    }

    const auto read_payload = [&]<class T>(T) -> AnyTensor {
        if (size > std::numeric_limits<std::size_t>::max() / sizeof(T)) {
            raise(errc::malformed_header, "payload size exceeds addressable memory");
        }
        Tensor<T> t = Tensor<T>::uninitialized(std::move(shape), order);
        std::vector<unsigned char> payload(size * sizeof(T));
        if (!read_exact(is, payload.data(), payload.size())) {
            raise(errc::truncated_payload, "payload shorter than shape product");
        }
        for (extent_t k = 0; k < size; ++k) {
            t.data()[k] = get_element<T>(payload.data() + k * sizeof(T));
        }
        return t;
    };

    AnyTensor result = [&]() -> AnyTensor {
        switch (kind) {
        case ElementKind::f32: return read_payload(float{});
        case ElementKind::f64: return read_payload(double{});
        case ElementKind::i32: return read_payload(std::int32_t{});
        case ElementKind::i64: return read_payload(std::int64_t{});
        case ElementKind::u8: break;
        }
        return read_payload(std::uint8_t{});
    }();

    if (is.peek() != std::istream::traits_type::eof()) {
        raise(errc::trailing_garbage, "bytes remain after the payload");
    }
    return result;
}

AnyTensor read_tensor_file(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) {
        raise(errc::file_open_failed, "cannot open " + path.string() + " for reading");
    }
    return read_tensor(is);
}

void write_tensor_file(const std::filesystem::path& path, const AnyTensor& t) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) {
            raise(errc::file_open_failed, "cannot open " + tmp.string() + " for writing");
        }
        write_tensor(os, t);
        os.flush();
        if (!os) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            raise(errc::file_open_failed, "write to " + tmp.string() + " failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        raise(errc::file_open_failed, "cannot move " + tmp.string() + " into place");
    }
}

} // namespace ndview
