#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gazebench/types.hpp"

namespace gazebench {

/// Interleaved 8-bit raster, channels = 1 (gray) or 3 (RGB).
struct ImageU8 {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<std::uint8_t> pixels;

    std::uint8_t* row(int y) { return pixels.data() + static_cast<std::size_t>(y) * width * channels; }
    const std::uint8_t* row(int y) const {
        return pixels.data() + static_cast<std::size_t>(y) * width * channels;
    }
};

/// Reads an 8- or 16-bit grayscale image (PNG, or PGM P2/P5) and rescales
/// sample values to [0,1] by the format's max value. Format is detected
/// from magic bytes, not the extension.
SaliencyMap load_grayscale(const std::string& path);

void write_png_gray8(const std::string& path, int width, int height,
                     const std::vector<std::uint8_t>& pixels);
void write_png_gray16(const std::string& path, int width, int height,
                      const std::vector<std::uint16_t>& pixels);
void write_png_rgb8(const std::string& path, const ImageU8& image);

/// Reads a PNG into 8-bit gray or RGB (alpha stripped, 16-bit downshifted).
ImageU8 load_png_image(const std::string& path);

} // namespace gazebench
