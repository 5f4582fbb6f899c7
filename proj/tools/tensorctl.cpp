// tensorctl: inspect and transform MTF1 tensor files.
//
// Exit codes: 0 success, 2 usage error, 3 file or format error, 4 shape,
// bounds, or domain error. Diagnostics go to stderr; renders and metadata go
// to stdout. Output files are written to a temporary and renamed into place,
// so a failed command never leaves a partial file.

#include <charconv>
#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ndview/ndview.hpp"

namespace {

using namespace ndview;

CoordinateOrder parse_order(const std::string& text) {
    if (text == "lcmo") return CoordinateOrder::last_major;
    if (text == "fcmo") return CoordinateOrder::first_major;
    throw CLI::ValidationError("--order", "expected lcmo or fcmo");
}

template <class T>
T parse_value(const std::string& text) {
    T out{};
    const char* first = text.data();
    const char* last = text.data() + text.size();
    std::from_chars_result r{};
    if constexpr (std::is_same_v<T, std::uint8_t>) {
        unsigned wide = 0;
        r = std::from_chars(first, last, wide);
        if (wide > 255) r.ec = std::errc::result_out_of_range;
        out = static_cast<T>(wide);
    } else {
        r = std::from_chars(first, last, out);
    }
    if (r.ec != std::errc{} || r.ptr != last) {
        throw CLI::ValidationError("value", "cannot parse '" + text + "'");
    }
    return out;
}

AnyTensor make_filled(ElementKind kind, Shape shape, const std::string& fill,
                      CoordinateOrder order) {
    switch (kind) {
    case ElementKind::f32:
        return Tensor<float>::filled(std::move(shape), parse_value<float>(fill), order);
    case ElementKind::f64:
        return Tensor<double>::filled(std::move(shape), parse_value<double>(fill), order);
    case ElementKind::i32:
        return Tensor<std::int32_t>::filled(std::move(shape), parse_value<std::int32_t>(fill),
                                            order);
    case ElementKind::i64:
        return Tensor<std::int64_t>::filled(std::move(shape), parse_value<std::int64_t>(fill),
                                            order);
    case ElementKind::u8: break;
    }
    return Tensor<std::uint8_t>::filled(std::move(shape), parse_value<std::uint8_t>(fill),
                                        order);
}

/// Applies a descriptor transform to the decoded tensor and materializes the
/// resulting view into a fresh tensor (the file format stores only unstrided
/// layouts).
AnyTensor materialize_transform(const AnyTensor& in,
                                const std::function<ViewDescriptor(const ViewDescriptor&)>& f) {
    return std::visit(
        [&](const auto& t) -> AnyTensor {
            using T = typename std::decay_t<decltype(t)>::value_type;
            const View<const T> v(f(t.descriptor()), t.data());
            return to_tensor(v);
        },
        in);
}

std::string joined(std::span<const extent_t> xs) {
    std::string out;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(xs[j]);
    }
    return out;
}

void cmd_info(const std::string& file) {
    const AnyTensor t = read_tensor_file(file);
    const ViewDescriptor& d = descriptor_of(t);
    std::cout << "dimension: " << d.dimension() << "\n"
              << "shape: " << joined(d.shape()) << "\n"
              << "order: " << order_name(d.order()) << "\n"
              << "kind: " << element_kind_name(kind_of(t)) << "\n"
              << "size: " << d.size() << "\n";
}

void cmd_print(const std::string& file, const std::string& style) {
    if (style != "table" && style != "matrix") {
        throw CLI::ValidationError("--style", "expected table or matrix");
    }
    const AnyTensor t = read_tensor_file(file);
    std::visit(
        [&](const auto& tensor) {
            std::cout << render(tensor.cview(), style == "table" ? RenderStyle::table
                                                                 : RenderStyle::matrix);
        },
        t);
}

void cmd_binop(const std::string& op_name, const std::vector<std::string>& operands,
               const std::string& scalar_text, bool has_scalar) {
    BinaryOp op;
    if (op_name == "add") {
        op = BinaryOp::add;
    } else if (op_name == "sub") {
        op = BinaryOp::sub;
    } else if (op_name == "mul") {
        op = BinaryOp::mul;
    } else if (op_name == "div") {
        op = BinaryOp::div;
    } else {
        throw CLI::ValidationError("op", "expected add, sub, mul, or div");
    }
    if (operands.size() != (has_scalar ? 2u : 3u)) {
        throw CLI::ValidationError("operands", has_scalar ? "expected: A --scalar V OUT"
                                                          : "expected: A B OUT");
    }
    const AnyTensor a = read_tensor_file(operands[0]);
    const std::string& out_path = operands.back();

    AnyTensor result = [&]() -> AnyTensor {
        if (has_scalar) {
            return std::visit(
                [&](const auto& ta) -> AnyTensor {
                    using T = typename std::decay_t<decltype(ta)>::value_type;
                    return ew_binary(op, ta.cview(), parse_value<T>(scalar_text));
                },
                a);
        }
        const AnyTensor b = read_tensor_file(operands[1]);
        if (kind_of(a) != kind_of(b)) {
            raise(errc::kind_mismatch, std::string(element_kind_name(kind_of(a))) + " vs " +
                                           element_kind_name(kind_of(b)));
        }
        return std::visit(
            [&](const auto& ta) -> AnyTensor {
                using T = typename std::decay_t<decltype(ta)>::value_type;
                return ew_binary(op, ta.cview(), std::get<Tensor<T>>(b).cview());
            },
            a);
    }();
    write_tensor_file(out_path, result);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"inspect and transform MTF1 tensor files"};
    app.require_subcommand(1);

    // info
    std::string info_file;
    auto* info = app.add_subcommand("info", "print dimension, shape, order, kind, and size");
    info->add_option("file", info_file, "input tensor file")->required();
    info->callback([&] { cmd_info(info_file); });

    // print
    std::string print_file;
    std::string print_style = "matrix";
    auto* print = app.add_subcommand("print", "render the tensor to stdout");
    print->add_option("file", print_file, "input tensor file")->required();
    print->add_option("--style", print_style, "table or matrix (default matrix)");
    print->callback([&] { cmd_print(print_file, print_style); });

    // new
    Shape new_shape;
    std::string new_fill = "0";
    std::string new_order = "lcmo";
    std::string new_kind = "f64";
    std::string new_out;
    auto* make = app.add_subcommand("new", "create a filled tensor");
    make->add_option("--shape", new_shape, "extents, e.g. 3,2,4")->required()->delimiter(',');
    make->add_option("--fill", new_fill, "fill value (default 0)");
    make->add_option("--order", new_order, "lcmo or fcmo (default lcmo)");
    make->add_option("--kind", new_kind, "f64, f32, i32, i64, or u8 (default f64)");
    make->add_option("out", new_out, "output tensor file")->required();
    make->callback([&] {
        const auto kind = parse_element_kind(new_kind);
        if (!kind) throw CLI::ValidationError("--kind", "expected f64, f32, i32, i64, or u8");
        write_tensor_file(new_out,
                          make_filled(*kind, new_shape, new_fill, parse_order(new_order)));
    });

    // reshape
    std::string reshape_file, reshape_out;
    Shape reshape_shape;
    auto* reshape = app.add_subcommand("reshape", "change the shape, keeping flat order");
    reshape->add_option("file", reshape_file)->required();
    reshape->add_option("--shape", reshape_shape, "new extents")->required()->delimiter(',');
    reshape->add_option("out", reshape_out)->required();
    reshape->callback([&] {
        AnyTensor t = read_tensor_file(reshape_file);
        std::visit([&](auto& tensor) { tensor.reshape(reshape_shape); }, t);
        write_tensor_file(reshape_out, t);
    });

    // resize
    std::string resize_file, resize_out;
    std::string resize_fill = "0";
    Shape resize_shape;
    auto* resize = app.add_subcommand("resize", "grow or shrink, preserving matching entries");
    resize->add_option("file", resize_file)->required();
    resize->add_option("--shape", resize_shape, "new extents")->required()->delimiter(',');
    resize->add_option("--fill", resize_fill, "value for new entries (default 0)");
    resize->add_option("out", resize_out)->required();
    resize->callback([&] {
        AnyTensor t = read_tensor_file(resize_file);
        std::visit(
            [&](auto& tensor) {
                using T = typename std::decay_t<decltype(tensor)>::value_type;
                tensor.resize(resize_shape, parse_value<T>(resize_fill));
            },
            t);
        write_tensor_file(resize_out, t);
    });

    // permute
    std::string permute_file, permute_out;
    std::vector<std::size_t> permutation;
    auto* perm = app.add_subcommand("permute", "rearrange axes by a permutation");
    perm->add_option("file", permute_file)->required();
    perm->add_option("--perm", permutation, "axis sources, e.g. 1,0,2")->required()->delimiter(',');
    perm->add_option("out", permute_out)->required();
    perm->callback([&] {
        const AnyTensor t = read_tensor_file(permute_file);
        write_tensor_file(permute_out, materialize_transform(t, [&](const ViewDescriptor& d) {
                              return permute(d, permutation);
                          }));
    });

    // transpose
    std::string transpose_file, transpose_out;
    std::vector<std::size_t> axes;
    auto* trans = app.add_subcommand("transpose",
                                     "swap two axes, or reverse all axes when --axes is absent");
    trans->add_option("file", transpose_file)->required();
    trans->add_option("--axes", axes, "the two axes to swap, e.g. 0,2")->delimiter(',');
    trans->add_option("out", transpose_out)->required();
    trans->callback([&] {
        if (!axes.empty() && axes.size() != 2) {
            throw CLI::ValidationError("--axes", "expected exactly two axes");
        }
        const AnyTensor t = read_tensor_file(transpose_file);
        write_tensor_file(transpose_out, materialize_transform(t, [&](const ViewDescriptor& d) {
                              return axes.empty() ? transpose_all(d)
                                                  : transpose(d, axes[0], axes[1]);
                          }));
    });

    // shift
    std::string shift_file, shift_out;
    std::int64_t shift_by = 0;
    auto* shift = app.add_subcommand("shift", "rotate the axis sequence");
    shift->add_option("file", shift_file)->required();
    shift->add_option("--by", shift_by, "rotation amount, may be negative")->required();
    shift->add_option("out", shift_out)->required();
    shift->callback([&] {
        const AnyTensor t = read_tensor_file(shift_file);
        write_tensor_file(shift_out, materialize_transform(t, [&](const ViewDescriptor& d) {
                              return cyclic_shift(d, shift_by);
                          }));
    });

    // slice
    std::string slice_file, slice_out;
    Coordinate slice_base;
    Shape slice_shape;
    bool slice_squeeze = false;
    auto* slice = app.add_subcommand("slice", "materialize a sub-view window");
    slice->add_option("file", slice_file)->required();
    slice->add_option("--base", slice_base, "window base coordinate")->required()->delimiter(',');
    slice->add_option("--shape", slice_shape, "window extents")->required()->delimiter(',');
    slice->add_flag("--squeeze", slice_squeeze, "drop singleton axes of the window");
    slice->add_option("out", slice_out)->required();
    slice->callback([&] {
        const AnyTensor t = read_tensor_file(slice_file);
        write_tensor_file(slice_out, materialize_transform(t, [&](const ViewDescriptor& d) {
                              ViewDescriptor w = sub_view(d, slice_base, slice_shape);
                              return slice_squeeze ? squeeze(w) : w;
                          }));
    });

    // bind
    std::string bind_file, bind_out;
    std::size_t bind_axis = 0;
    extent_t bind_at = 0;
    auto* bnd = app.add_subcommand("bind", "fix one coordinate, dropping the axis");
    bnd->add_option("file", bind_file)->required();
    bnd->add_option("--axis", bind_axis, "axis to bind")->required();
    bnd->add_option("--at", bind_at, "coordinate value on that axis")->required();
    bnd->add_option("out", bind_out)->required();
    bnd->callback([&] {
        const AnyTensor t = read_tensor_file(bind_file);
        write_tensor_file(bind_out, materialize_transform(t, [&](const ViewDescriptor& d) {
                              return bind(d, bind_axis, bind_at);
                          }));
    });

    // binop
    std::string binop_op;
    std::vector<std::string> binop_operands;
    std::string binop_scalar;
    auto* binop = app.add_subcommand("binop", "elementwise add, sub, mul, or div");
    binop->add_option("op", binop_op, "add, sub, mul, or div")->required();
    binop->add_option("operands", binop_operands, "A B OUT, or A OUT with --scalar")
        ->expected(-2);
    auto* scalar_opt = binop->add_option("--scalar", binop_scalar, "scalar right operand");
    binop->callback(
        [&] { cmd_binop(binop_op, binop_operands, binop_scalar, scalar_opt->count() > 0); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ndview::Error& e) {
        std::cerr << "tensorctl: " << e.what() << "\n";
        return is_format_error(e.code()) ? 3 : 4;
    } catch (const std::exception& e) {
        std::cerr << "tensorctl: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
