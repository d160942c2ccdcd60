#include "gazebench/image_io.hpp"

#include <png.h>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>

#include "gazebench/errors.hpp"

namespace gazebench {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

[[noreturn]] void png_error_fn(png_structp png, png_const_charp msg) {
    throw IoError(std::string("libpng: ") + msg);
    (void)png;
}

void png_warn_fn(png_structp, png_const_charp) {}

SaliencyMap load_png_grayscale(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw IoError("cannot open " + path);

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, png_error_fn, png_warn_fn);
    png_infop info = png_create_info_struct(png);
    try {
        png_init_io(png, fp.get());
        png_read_info(png, info);

        const int color = png_get_color_type(png, info);
        int depth = png_get_bit_depth(png, info);
        if (color != PNG_COLOR_TYPE_GRAY)
            throw SchemaError(path + ": saliency map PNG must be grayscale");
        if (depth < 8) {
            png_set_expand_gray_1_2_4_to_8(png);
            depth = 8;
        }
        if (depth == 16) png_set_swap(png); // stream is big-endian

        png_read_update_info(png, info);
        const int w = static_cast<int>(png_get_image_width(png, info));
        const int h = static_cast<int>(png_get_image_height(png, info));

        SaliencyMap map;
        map.width = w;
        map.height = h;
        map.values.resize(static_cast<std::size_t>(w) * h);

        const std::size_t stride = png_get_rowbytes(png, info);
        std::vector<std::uint8_t> raster(stride * h);
        std::vector<png_bytep> rows(h);
        for (int y = 0; y < h; ++y) rows[y] = raster.data() + stride * y;
        png_read_image(png, rows.data());
        png_read_end(png, nullptr);

        const double denom = depth == 16 ? 65535.0 : 255.0;
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                double v;
                if (depth == 16) {
                    std::uint16_t raw;
                    std::memcpy(&raw, rows[y] + 2 * x, 2);
                    v = raw;
                } else {
                    v = rows[y][x];
                }
                map.values[static_cast<std::size_t>(y) * w + x] = v / denom;
            }
        }
        png_destroy_read_struct(&png, &info, nullptr);
        return map;
    } catch (...) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw;
    }
}

int pnm_next_int(std::istream& in) {
    // Skips whitespace and '#' comments between tokens.
    for (;;) {
        int c = in.peek();
        if (c == '#') {
            std::string line;
            std::getline(in, line);
        } else if (std::isspace(c)) {
            in.get();
        } else {
            break;
        }
    }
    int v;
    if (!(in >> v)) throw SchemaError("PGM: malformed header or sample");
    return v;
}

SaliencyMap load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);

    char m0 = 0, m1 = 0;
    in.get(m0);
    in.get(m1);
    const bool ascii = m1 == '2';
    if (m0 != 'P' || (m1 != '2' && m1 != '5'))
        throw SchemaError(path + ": not a P2/P5 PGM file");

    const int w = pnm_next_int(in);
    const int h = pnm_next_int(in);
    const int maxval = pnm_next_int(in);
    if (w <= 0 || h <= 0 || maxval <= 0 || maxval > 65535)
        throw SchemaError(path + ": bad PGM header");

    SaliencyMap map;
    map.width = w;
    map.height = h;
    map.values.resize(static_cast<std::size_t>(w) * h);

    const std::size_t count = map.values.size();
    if (ascii) {
        for (std::size_t i = 0; i < count; ++i)
            map.values[i] = static_cast<double>(pnm_next_int(in)) / maxval;
    } else {
        in.get(); // single whitespace after maxval
        const int bytes = maxval > 255 ? 2 : 1;
        std::vector<std::uint8_t> buf(count * bytes);
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
        if (static_cast<std::size_t>(in.gcount()) != buf.size())
            throw SchemaError(path + ": truncated PGM payload");
        for (std::size_t i = 0; i < count; ++i) {
            const int raw = bytes == 2 ? (buf[2 * i] << 8 | buf[2 * i + 1]) : buf[i];
            map.values[i] = static_cast<double>(raw) / maxval;
        }
    }
    return map;
}

void write_png(const std::string& path, int width, int height, int color_type, int depth,
               const std::vector<png_bytep>& rows) {
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) throw IoError("cannot write " + path);

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, png_error_fn, png_warn_fn);
    png_infop info = png_create_info_struct(png);
    try {
        png_init_io(png, fp.get());
        // Pinned encoder settings so identical input gives identical bytes.
        png_set_compression_level(png, 6);
        png_set_filter(png, 0, PNG_FILTER_NONE);
        png_set_IHDR(png, info, width, height, depth, color_type, PNG_INTERLACE_NONE,
                     PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
        png_write_info(png, info);
        if (depth == 16) png_set_swap(png);
        png_write_image(png, const_cast<png_bytep*>(rows.data()));
        png_write_end(png, nullptr);
        png_destroy_write_struct(&png, &info);
    } catch (...) {
        png_destroy_write_struct(&png, &info);
        throw;
    }
}

} // namespace

SaliencyMap load_grayscale(const std::string& path) {
    std::ifstream probe(path, std::ios::binary);
    if (!probe) throw IoError("cannot open " + path);
    unsigned char magic[2] = {0, 0};
    probe.read(reinterpret_cast<char*>(magic), 2);
    probe.close();

    SaliencyMap map;
    if (magic[0] == 0x89 && magic[1] == 'P')
        map = load_png_grayscale(path);
    else if (magic[0] == 'P' && (magic[1] == '2' || magic[1] == '5'))
        map = load_pgm(path);
    else
        throw SchemaError(path + ": unsupported map format (need grayscale PNG or P2/P5 PGM)");

    try {
        map.validate();
    } catch (const Error& e) {
        throw DegenerateMapError(path + ": " + e.what());
    }
    return map;
}

void write_png_gray8(const std::string& path, int width, int height,
                     const std::vector<std::uint8_t>& pixels) {
    if (width <= 0 || height <= 0 || pixels.size() != static_cast<std::size_t>(width) * height)
        throw RangeError("write_png_gray8: bad dims");
    std::vector<png_bytep> rows(height);
    for (int y = 0; y < height; ++y)
        rows[y] = const_cast<png_bytep>(pixels.data() + static_cast<std::size_t>(y) * width);
    write_png(path, width, height, PNG_COLOR_TYPE_GRAY, 8, rows);
}

void write_png_gray16(const std::string& path, int width, int height,
                      const std::vector<std::uint16_t>& pixels) {
    if (width <= 0 || height <= 0 || pixels.size() != static_cast<std::size_t>(width) * height)
        throw RangeError("write_png_gray16: bad dims");
    std::vector<png_bytep> rows(height);
    for (int y = 0; y < height; ++y)
        rows[y] = const_cast<png_bytep>(
            reinterpret_cast<const png_byte*>(pixels.data() + static_cast<std::size_t>(y) * width));
    write_png(path, width, height, PNG_COLOR_TYPE_GRAY, 16, rows);
}

void write_png_rgb8(const std::string& path, const ImageU8& image) {
    if (image.channels != 3)
        throw RangeError("write_png_rgb8: image must have 3 channels");
    std::vector<png_bytep> rows(image.height);
    for (int y = 0; y < image.height; ++y)
        rows[y] = const_cast<png_bytep>(image.row(y));
    write_png(path, image.width, image.height, PNG_COLOR_TYPE_RGB, 8, rows);
}

ImageU8 load_png_image(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw IoError("cannot open " + path);

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, png_error_fn, png_warn_fn);
    png_infop info = png_create_info_struct(png);
    try {
        png_init_io(png, fp.get());
        png_read_info(png, info);

        png_set_strip_16(png);
        png_set_strip_alpha(png);
        png_set_packing(png);
        png_set_expand(png);
        if (png_get_color_type(png, info) == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
        png_read_update_info(png, info);

        ImageU8 img;
        img.width = static_cast<int>(png_get_image_width(png, info));
        img.height = static_cast<int>(png_get_image_height(png, info));
        img.channels = png_get_channels(png, info);
        if (img.channels != 1 && img.channels != 3)
            throw SchemaError(path + ": expected gray or RGB PNG");

        img.pixels.resize(static_cast<std::size_t>(img.width) * img.height * img.channels);
        std::vector<png_bytep> rows(img.height);
        for (int y = 0; y < img.height; ++y) rows[y] = img.row(y);
        png_read_image(png, rows.data());
        png_read_end(png, nullptr);
        png_destroy_read_struct(&png, &info, nullptr);
        return img;
    } catch (...) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw;
    }
}

} // namespace gazebench
