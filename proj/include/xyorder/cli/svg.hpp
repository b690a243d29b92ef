#pragma once

#include <filesystem>
#include <string>

#include "xyorder/geometry.hpp"
#include "xyorder/projection.hpp"

namespace xyorder::cli {

/// Step plot of the profile with each valley drawn as a shaded band
/// (<rect class="valley" .../>). Output depends only on the input.
std::string render_profile_svg(const Document& doc, Axis axis);

/// Writes render_profile_svg to `out`. Throws InputError if unwritable.
void render_profile(const Document& doc, Axis axis, const std::filesystem::path& out);

}  // namespace xyorder::cli
