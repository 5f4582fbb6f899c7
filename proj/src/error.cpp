#include "ndview/error.hpp"

namespace ndview {

const char* errc_name(errc code) noexcept {
    switch (code) {
    case errc::length_mismatch: return "length_mismatch";
    case errc::zero_extent: return "zero_extent";
    case errc::size_overflow: return "size_overflow";
    case errc::rank_mismatch: return "rank_mismatch";
    case errc::coordinate_out_of_bounds: return "coordinate_out_of_bounds";
    case errc::index_out_of_bounds: return "index_out_of_bounds";
    case errc::not_scalar: return "not_scalar";
    case errc::invariant_violation: return "invariant_violation";
    case errc::sub_view_out_of_bounds: return "sub_view_out_of_bounds";
    case errc::axis_out_of_range: return "axis_out_of_range";
    case errc::value_out_of_range: return "value_out_of_range";
    case errc::not_a_permutation: return "not_a_permutation";
    case errc::not_unstrided: return "not_unstrided";
    case errc::size_mismatch: return "size_mismatch";
    case errc::allocation_failure: return "allocation_failure";
    case errc::shape_mismatch: return "shape_mismatch";
    case errc::zero_stride_destination: return "zero_stride_destination";
    case errc::division_by_zero: return "division_by_zero";
    case errc::kind_mismatch: return "kind_mismatch";
    case errc::dereference_at_end: return "dereference_at_end";
    case errc::stale_cursor: return "stale_cursor";
    case errc::bad_magic: return "bad_magic";
    case errc::unsupported_version: return "unsupported_version";
    case errc::unknown_element_code: return "unknown_element_code";
    case errc::malformed_header: return "malformed_header";
    case errc::truncated_payload: return "truncated_payload";
    case errc::trailing_garbage: return "trailing_garbage";
    case errc::file_open_failed: return "file_open_failed";
    }
    return "unknown";
}

bool is_format_error(errc code) noexcept {
    switch (code) {
    case errc::bad_magic:
    case errc::unsupported_version:
    case errc::unknown_element_code:
    case errc::malformed_header:
    case errc::truncated_payload:
    case errc::trailing_garbage:
    case errc::file_open_failed:
        return true;
    default:
        return false;
    }
}

void raise(errc code, const std::string& what) {
    throw Error(code, std::string(errc_name(code)) + ": " + what);
}

} // namespace ndview
