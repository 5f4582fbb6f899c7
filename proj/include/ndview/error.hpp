#pragma once

#include <stdexcept>
#include <string>

namespace ndview {

/// Error conditions raised by the library. Grouped by family: construction
/// and addressing, transforms, storage, bulk operations, cursors, and the
/// MTF1 stream format.
enum class errc {
    // construction and addressing
    length_mismatch,
    zero_extent,
    size_overflow,
    rank_mismatch,
    coordinate_out_of_bounds,
    index_out_of_bounds,
    not_scalar,
    invariant_violation,
    // transforms
    sub_view_out_of_bounds,
    axis_out_of_range,
    value_out_of_range,
    not_a_permutation,
    not_unstrided,
    size_mismatch,
    // storage and bulk operations
    allocation_failure,
    shape_mismatch,
    zero_stride_destination,
    division_by_zero,
    kind_mismatch,
    // cursors
    dereference_at_end,
    stale_cursor,
    // MTF1 streams and files
    bad_magic,
    unsupported_version,
    unknown_element_code,
    malformed_header,
    truncated_payload,
    trailing_garbage,
    file_open_failed,
};

const char* errc_name(errc code) noexcept;

/// True for the stream/file format family (CLI exit code 3); false for the
/// shape/bounds/domain family (CLI exit code 4).
bool is_format_error(errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] void raise(errc code, const std::string& what);

} // namespace ndview
