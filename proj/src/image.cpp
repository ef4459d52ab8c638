#include "inrmark/image.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <memory>

namespace inrmark {

Image clamp01(const Image& img) {
    Image out = img;
    for (float& v : out.data) v = std::min(1.0f, std::max(0.0f, v));
    return out;
}

std::vector<std::uint8_t> quantize_u8(const Image& img) {
    const size_t plane = img.plane();
    std::vector<std::uint8_t> out(plane * 3);
    for (int c = 0; c < 3; ++c) {
        for (size_t p = 0; p < plane; ++p) {
            float v = img.data[c * plane + p];
            v = std::min(1.0f, std::max(0.0f, v));
            // round-half-up
            int q = static_cast<int>(std::floor(v * 255.0f + 0.5f));
            out[p * 3 + c] = static_cast<std::uint8_t>(std::min(255, std::max(0, q)));
        }
    }
    return out;
}

Image from_u8(const std::uint8_t* rgb, int height, int width) {
    Image img(height, width);
    const size_t plane = img.plane();
    for (size_t p = 0; p < plane; ++p)
        for (int c = 0; c < 3; ++c)
            img.data[c * plane + p] = rgb[p * 3 + c] / 255.0f;
    return img;
}

Image quantize_roundtrip(const Image& img) {
    auto u8 = quantize_u8(img);
    return from_u8(u8.data(), img.height, img.width);
}

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

}  // namespace

Image load_png(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw IoError("cannot open image file: " + path);

    png_byte header[8];
    if (std::fread(header, 1, 8, fp.get()) != 8 || png_sig_cmp(header, 0, 8))
        throw IoError("not a PNG file: " + path);

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png_create_info_struct(png);
    if (!png || !info) throw IoError("libpng init failed");
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("libpng read error: " + path);
    }
    png_init_io(png, fp.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    const int width = png_get_image_width(png, info);
    const int height = png_get_image_height(png, info);
    const png_byte color = png_get_color_type(png, info);
    const png_byte depth = png_get_bit_depth(png, info);

    // normalize everything to 8-bit RGB
    if (depth == 16) png_set_strip_16(png);
    if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    if (color == PNG_COLOR_TYPE_GRAY || color == PNG_COLOR_TYPE_GRAY_ALPHA)
        png_set_gray_to_rgb(png);
    if (color & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
    png_read_update_info(png, info);

    std::vector<std::uint8_t> rgb(static_cast<size_t>(height) * width * 3);
    std::vector<png_bytep> rows(height);
    for (int i = 0; i < height; ++i) rows[i] = rgb.data() + static_cast<size_t>(i) * width * 3;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    return from_u8(rgb.data(), height, width);
}

void save_png(const std::string& path, const Image& img) {
    auto rgb = quantize_u8(img);

    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) throw IoError("cannot open for writing: " + path);

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png_create_info_struct(png);
    if (!png || !info) throw IoError("libpng init failed");
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("libpng write error: " + path);
    }
    png_init_io(png, fp.get());
    png_set_IHDR(png, info, img.width, img.height, 8, PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    std::vector<png_bytep> rows(img.height);
    for (int i = 0; i < img.height; ++i)
        rows[i] = rgb.data() + static_cast<size_t>(i) * img.width * 3;
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

}  // namespace inrmark
