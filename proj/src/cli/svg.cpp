#include "xyorder/cli/svg.hpp"

#include <algorithm>
#include <cstdio>

#include "xyorder/cli/io.hpp"

namespace xyorder::cli {

namespace {

constexpr double kPlotWidth = 800.0;
constexpr double kPlotHeight = 240.0;
constexpr double kMargin = 20.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace

std::string render_profile_svg(const Document& doc, Axis axis) {
    const ProjectionProfile p = profile(doc.tokens, axis);
    const std::vector<Valley> gaps = valleys(p);

    const double span = p.hi > p.lo ? p.hi - p.lo : 1.0;
    const double peak = static_cast<double>(std::max<std::size_t>(p.max_count(), 1));
    auto sx = [&](double t) { return kMargin + (t - p.lo) / span * kPlotWidth; };
    auto sy = [&](double count) { return kMargin + kPlotHeight - count / peak * kPlotHeight; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kPlotWidth + 2 * kMargin) +
           "\" height=\"" + num(kPlotHeight + 2 * kMargin) + "\">\n";
    svg += "<title>" + std::string(axis == Axis::Horizontal ? "horizontal" : "vertical") +
           " projection profile, " + std::to_string(doc.size()) + " boxes</title>\n";

    for (const Valley& v : gaps) {
        svg += "<rect class=\"valley\" x=\"" + num(sx(v.start)) + "\" y=\"" + num(kMargin) +
               "\" width=\"" + num(sx(v.end) - sx(v.start)) + "\" height=\"" + num(kPlotHeight) +
               "\" fill=\"#cde\"/>\n";
    }

    // Coverage at a breakpoint itself is drawn as a zero-width spike so
    // touching intervals stay visible.
    std::string path = "M " + num(sx(p.lo)) + " " + num(sy(0.0));
    for (const ProfileBreakpoint& bp : p.breakpoints) {
        const double x = sx(bp.position);
        path += " L " + num(x) + " " + num(sy(static_cast<double>(bp.count_at)));
        path += " L " + num(x) + " " + num(sy(static_cast<double>(bp.count_after)));
    }
    svg += "<path class=\"profile\" d=\"" + path + "\" fill=\"none\" stroke=\"#235\"/>\n";
    svg += "<line class=\"axis\" x1=\"" + num(kMargin) + "\" y1=\"" + num(sy(0.0)) + "\" x2=\"" +
           num(kMargin + kPlotWidth) + "\" y2=\"" + num(sy(0.0)) + "\" stroke=\"#000\"/>\n";
    svg += "</svg>\n";
    return svg;
}

void render_profile(const Document& doc, Axis axis, const std::filesystem::path& out) {
    write_file(out, render_profile_svg(doc, axis));
}

}  // namespace xyorder::cli
