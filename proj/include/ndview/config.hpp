#pragma once

// Check switches.
//
// NDVIEW_ARG_CHECKS guards per-element argument validation on the hot paths:
// coordinate bounds, rank matches, scalar-index bounds, and cursor
// dereference. NDVIEW_DEBUG_CHECKS guards descriptor invariant self-checks
// that run after construction and after every transform.
//
// Both default to on in debug builds and off when NDEBUG is defined, and can
// be forced either way with -DNDVIEW_ARG_CHECKS=0/1 -DNDVIEW_DEBUG_CHECKS=0/1.
// Define them identically across all translation units of a program.
//
// Structural validation is unconditional and not affected by these switches:
// construction errors (length mismatch, zero extents, size overflow),
// transform domain errors, reshape/resize size checks, assignment shape
// checks, and file format errors are always raised.

#ifndef NDVIEW_ARG_CHECKS
#ifdef NDEBUG
#define NDVIEW_ARG_CHECKS 0
#else
#define NDVIEW_ARG_CHECKS 1
#endif
#endif

#ifndef NDVIEW_DEBUG_CHECKS
#ifdef NDEBUG
#define NDVIEW_DEBUG_CHECKS 0
#else
#define NDVIEW_DEBUG_CHECKS 1
#endif
#endif

namespace ndview {

inline constexpr bool arg_checks_enabled = NDVIEW_ARG_CHECKS != 0;
inline constexpr bool debug_checks_enabled = NDVIEW_DEBUG_CHECKS != 0;

} // namespace ndview
