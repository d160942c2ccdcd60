#pragma once

#include <array>
#include <string>

#include "gazebench/image_io.hpp"
#include "gazebench/types.hpp"

namespace gazebench {

/// Scanpath overlay style. Fixations are drawn as dots joined by a
/// polyline in temporal order; the color ramps from `color_first` (yellow,
/// the first fixation) to `color_last` (dark red) with linear interpolation
/// per RGB channel.
struct RenderStyle {
    int dot_radius_px = 6;
    int line_width_px = 2;
    std::array<std::uint8_t, 3> color_first{255, 255, 0};
    std::array<std::uint8_t, 3> color_last{139, 0, 0};
    std::array<std::uint8_t, 3> background{255, 255, 255};
    int canvas_width = 640;  // used without a stimulus image
    int canvas_height = 480;

    void validate() const;
};

/// Color of fixation i among n (the gradient parameter is i/(n-1); a
/// single fixation takes the first color).
std::array<std::uint8_t, 3> gradient_color(const RenderStyle& style, int index, int count);

/// Draws the overlay onto the stimulus (or a blank background when
/// stimulus is null). Pure: identical inputs give identical rasters. Dot
/// centers are clamped to the canvas.
ImageU8 render_scanpath(const Scanpath& path, const ImageU8* stimulus, const RenderStyle& style);

/// Same primitives as an SVG document: one <circle> per fixation, one
/// <line> per consecutive pair. Useful as a diffable drawing log.
std::string render_scanpath_svg(const Scanpath& path, const RenderStyle& style);

} // namespace gazebench
