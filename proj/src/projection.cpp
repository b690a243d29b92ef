#include "xyorder/projection.hpp"

#include <algorithm>
#include <iterator>

namespace xyorder {

const char* axis_name(Axis a) noexcept { return a == Axis::Horizontal ? "h" : "v"; }

namespace {

struct Endpoint {
    double position;
    int opens;   // intervals starting here
    int closes;  // intervals ending here
};

}  // namespace

ProjectionProfile profile(std::span<const TokenBox> boxes, Axis axis) {
    if (boxes.empty()) {
        throw InputError("profile: empty box sequence");
    }

    std::vector<Endpoint> events;
    events.reserve(2 * boxes.size());
    for (const TokenBox& b : boxes) {
        events.push_back({interval_start(b, axis), 1, 0});
        events.push_back({interval_end(b, axis), 0, 1});
    }
    std::sort(events.begin(), events.end(),
              [](const Endpoint& a, const Endpoint& b) { return a.position < b.position; });

    ProjectionProfile p;
    p.axis = axis;
    p.lo = events.front().position;
    p.hi = events.back().position;

    // `active` counts intervals that cover the open stretch before the current
    // breakpoint. Closed intervals: anything opening or closing at a point
    // covers the point itself.
    std::size_t active = 0;
    for (auto it = events.begin(); it != events.end();) {
        const double pos = it->position;
        std::size_t opens = 0;
        std::size_t closes = 0;
        for (; it != events.end() && it->position == pos; ++it) {
            opens += static_cast<std::size_t>(it->opens);
            closes += static_cast<std::size_t>(it->closes);
        }
        ProfileBreakpoint bp;
        bp.position = pos;
        bp.count_at = active + opens;
        active = active + opens - closes;
        bp.count_after = active;
        p.breakpoints.push_back(bp);
    }
    return p;
}

std::size_t ProjectionProfile::coverage(double t) const {
    if (breakpoints.empty() || t < lo || t > hi) {
        return 0;
    }
    auto it = std::lower_bound(
        breakpoints.begin(), breakpoints.end(), t,
        [](const ProfileBreakpoint& bp, double value) { return bp.position < value; });
    if (it != breakpoints.end() && it->position == t) {
        return it->count_at;
    }
    // t lies strictly after the previous breakpoint.
    return std::prev(it)->count_after;
}

double ProjectionProfile::integral() const {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        total += static_cast<double>(breakpoints[i].count_after) *
                 (breakpoints[i + 1].position - breakpoints[i].position);
    }
    return total;
}

std::size_t ProjectionProfile::max_count() const {
    std::size_t m = 0;
    for (const ProfileBreakpoint& bp : breakpoints) {
        m = std::max({m, bp.count_at, bp.count_after});
    }
    return m;
}

std::vector<Valley> valleys(const ProjectionProfile& p) {
    std::vector<Valley> out;
    // Every breakpoint is an interval endpoint, so count_at >= 1 and the zero
    // stretches between breakpoints are exactly the valleys.
    for (std::size_t i = 0; i + 1 < p.breakpoints.size(); ++i) {
        if (p.breakpoints[i].count_after == 0) {
            out.push_back({p.breakpoints[i].position, p.breakpoints[i + 1].position});
        }
    }
    return out;
}

}  // namespace xyorder
