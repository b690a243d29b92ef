#pragma once

// Projection profiles of box sets and the zero-coverage valleys between them.
//
// A profile counts, for every coordinate t on one axis, how many boxes have a
// closed projection interval [a, b] containing t. It is computed exactly with an
// endpoint sweep, so fractional coordinates need no rasterization.

#include <cstddef>
#include <span>
#include <vector>

#include "xyorder/geometry.hpp"

namespace xyorder {

/// Horizontal projects boxes onto the Y axis (intervals [y1, y2]); divisions
/// along it separate rows. Vertical projects onto the X axis ([x1, x2]) and
/// separates columns.
enum class Axis { Horizontal, Vertical };

constexpr Axis other(Axis a) noexcept {
    return a == Axis::Horizontal ? Axis::Vertical : Axis::Horizontal;
}

const char* axis_name(Axis a) noexcept;  // "h" or "v"

/// Closed interval of `box` along the coordinate the axis projects onto.
inline double interval_start(const TokenBox& box, Axis a) noexcept {
    return a == Axis::Horizontal ? box.y1 : box.x1;
}
inline double interval_end(const TokenBox& box, Axis a) noexcept {
    return a == Axis::Horizontal ? box.y2 : box.x2;
}

/// One distinct interval endpoint of the profile. `count_at` is the coverage
/// exactly at `position`; `count_after` is the constant coverage on the open
/// stretch up to the next breakpoint (0 after the last one).
struct ProfileBreakpoint {
    double position = 0.0;
    std::size_t count_at = 0;
    std::size_t count_after = 0;

    friend bool operator==(const ProfileBreakpoint&, const ProfileBreakpoint&) = default;
};

struct ProjectionProfile {
    Axis axis = Axis::Horizontal;
    double lo = 0.0;
    double hi = 0.0;
    std::vector<ProfileBreakpoint> breakpoints;  // strictly increasing positions

    /// Number of boxes whose closed interval contains t; 0 outside [lo, hi].
    std::size_t coverage(double t) const;

    /// Integral of coverage over [lo, hi].
    double integral() const;

    std::size_t max_count() const;
};

/// An open interval (start, end) with zero coverage, bounded on both sides by
/// covered points.
struct Valley {
    double start = 0.0;
    double end = 0.0;

    double width() const noexcept { return end - start; }

    friend bool operator==(const Valley&, const Valley&) = default;
};

/// Throws InputError on an empty box sequence.
ProjectionProfile profile(std::span<const TokenBox> boxes, Axis axis);

/// All maximal zero-coverage gaps strictly inside the profile, ascending.
std::vector<Valley> valleys(const ProjectionProfile& p);

}  // namespace xyorder
