#include "gazebench/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace gazebench {

void RenderStyle::validate() const {
    if (dot_radius_px <= 0 || line_width_px <= 0)
        throw RangeError("render: radii and widths must be positive");
    if (canvas_width <= 0 || canvas_height <= 0)
        throw RangeError("render: canvas dims must be positive");
}

std::array<std::uint8_t, 3> gradient_color(const RenderStyle& style, int index, int count) {
    const double t = count > 1 ? static_cast<double>(index) / (count - 1) : 0.0;
    std::array<std::uint8_t, 3> c;
    for (int ch = 0; ch < 3; ++ch) {
        const double v = style.color_first[ch] + t * (style.color_last[ch] - style.color_first[ch]);
        c[ch] = static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
    }
    return c;
}

namespace {

void put_pixel(ImageU8& img, int x, int y, const std::array<std::uint8_t, 3>& color) {
    if (x < 0 || y < 0 || x >= img.width || y >= img.height) return;
    std::uint8_t* p = img.row(y) + static_cast<std::size_t>(x) * 3;
    p[0] = color[0];
    p[1] = color[1];
    p[2] = color[2];
}

void fill_disk(ImageU8& img, double cx, double cy, double radius,
               const std::array<std::uint8_t, 3>& color) {
    const int x0 = static_cast<int>(std::floor(cx - radius));
    const int x1 = static_cast<int>(std::ceil(cx + radius));
    const int y0 = static_cast<int>(std::floor(cy - radius));
    const int y1 = static_cast<int>(std::ceil(cy + radius));
    const double r2 = radius * radius;
    for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x) {
            const double dx = x + 0.5 - cx;
            const double dy = y + 0.5 - cy;
            if (dx * dx + dy * dy <= r2) put_pixel(img, x, y, color);
        }
}

// Thick segment via disk stamping at sub-pixel steps (round caps).
void draw_segment(ImageU8& img, double x0, double y0, double x1, double y1, double width,
                  const std::array<std::uint8_t, 3>& color) {
    const double len = std::hypot(x1 - x0, y1 - y0);
    const double radius = std::max(0.5, width / 2.0);
    const int steps = std::max(1, static_cast<int>(std::ceil(len / 0.5)));
    for (int s = 0; s <= steps; ++s) {
        const double t = static_cast<double>(s) / steps;
        fill_disk(img, x0 + t * (x1 - x0), y0 + t * (y1 - y0), radius, color);
    }
}

} // namespace

ImageU8 render_scanpath(const Scanpath& path, const ImageU8* stimulus, const RenderStyle& style) {
    style.validate();
    if (path.empty()) throw EmptyInputError("render: scanpath must have length >= 1");

    ImageU8 img;
    if (stimulus) {
        img.width = stimulus->width;
        img.height = stimulus->height;
        img.channels = 3;
        img.pixels.resize(static_cast<std::size_t>(img.width) * img.height * 3);
        for (int y = 0; y < img.height; ++y) {
            const std::uint8_t* src = stimulus->row(y);
            std::uint8_t* dst = img.row(y);
            for (int x = 0; x < img.width; ++x) {
                if (stimulus->channels == 3) {
                    dst[3 * x] = src[3 * x];
                    dst[3 * x + 1] = src[3 * x + 1];
                    dst[3 * x + 2] = src[3 * x + 2];
                } else {
                    dst[3 * x] = dst[3 * x + 1] = dst[3 * x + 2] = src[x];
                }
            }
        }
    } else {
        img.width = style.canvas_width;
        img.height = style.canvas_height;
        img.channels = 3;
        img.pixels.resize(static_cast<std::size_t>(img.width) * img.height * 3);
        for (int y = 0; y < img.height; ++y) {
            std::uint8_t* dst = img.row(y);
            for (int x = 0; x < img.width; ++x) {
                dst[3 * x] = style.background[0];
                dst[3 * x + 1] = style.background[1];
                dst[3 * x + 2] = style.background[2];
            }
        }
    }

    const int n = static_cast<int>(path.size());
    auto center = [&](int i) {
        auto [px, py] = denormalize_point(path.fixations[i].x, path.fixations[i].y, img.width,
                                          img.height);
        return std::make_pair(std::clamp(px, 0.0, static_cast<double>(img.width)),
                              std::clamp(py, 0.0, static_cast<double>(img.height)));
    };

    // Lines below, then dots in temporal order on top.
    for (int i = 0; i + 1 < n; ++i) {
        auto [x0, y0] = center(i);
        auto [x1, y1] = center(i + 1);
        draw_segment(img, x0, y0, x1, y1, style.line_width_px, gradient_color(style, i, n));
    }
    for (int i = 0; i < n; ++i) {
        auto [cx, cy] = center(i);
        fill_disk(img, cx, cy, style.dot_radius_px, gradient_color(style, i, n));
    }
    return img;
}

namespace {

std::string hex_color(const std::array<std::uint8_t, 3>& c) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c[0], c[1], c[2]);
    return buf;
}

std::string fmt1(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

} // namespace

std::string render_scanpath_svg(const Scanpath& path, const RenderStyle& style) {
    style.validate();
    if (path.empty()) throw EmptyInputError("render: scanpath must have length >= 1");

    const int w = style.canvas_width;
    const int h = style.canvas_height;
    const int n = static_cast<int>(path.size());
    auto px = [&](int i) { return std::clamp(path.fixations[i].x, 0.0, 1.0) * w; };
    auto py = [&](int i) { return std::clamp(path.fixations[i].y, 0.0, 1.0) * h; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\">\n";
    svg << "  <rect width=\"" << w << "\" height=\"" << h << "\" fill=\""
        << hex_color(style.background) << "\"/>\n";
    for (int i = 0; i + 1 < n; ++i)
        svg << "  <line x1=\"" << fmt1(px(i)) << "\" y1=\"" << fmt1(py(i)) << "\" x2=\""
            << fmt1(px(i + 1)) << "\" y2=\"" << fmt1(py(i + 1)) << "\" stroke=\""
            << hex_color(gradient_color(style, i, n)) << "\" stroke-width=\"" << style.line_width_px
            << "\"/>\n";
    for (int i = 0; i < n; ++i)
        svg << "  <circle cx=\"" << fmt1(px(i)) << "\" cy=\"" << fmt1(py(i)) << "\" r=\""
            << style.dot_radius_px << "\" fill=\"" << hex_color(gradient_color(style, i, n))
            << "\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

} // namespace gazebench
