#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "inrmark/common.hpp"

namespace inrmark {

/// Dense 3xHxW real-valued raster, channel-major (CHW). Nominal value range
/// is [0,1]; training-internal images may drift outside and are clamped only
/// at export and metric boundaries.
struct Image {
    int height = 0;
    int width = 0;
    std::vector<float> data;  // size 3*height*width, data[c*H*W + i*W + j]

    Image() = default;
    Image(int h, int w, float fill = 0.0f)
        : height(h), width(w), data(static_cast<size_t>(3) * h * w, fill) {
        if (h < 1 || w < 1) throw DomainError("Image: dimensions must be >= 1");
    }

    size_t plane() const { return static_cast<size_t>(height) * width; }
    size_t size() const { return data.size(); }

    float& at(int c, int i, int j) { return data[c * plane() + static_cast<size_t>(i) * width + j]; }
    float at(int c, int i, int j) const { return data[c * plane() + static_cast<size_t>(i) * width + j]; }

    bool same_shape(const Image& o) const { return height == o.height && width == o.width; }
};

/// Clamp every value into [0,1].
Image clamp01(const Image& img);

/// Quantize to 8-bit with round-half-up after clamping. Interleaved RGB rows.
std::vector<std::uint8_t> quantize_u8(const Image& img);

/// Inverse of quantize_u8: u8 interleaved RGB -> float image (v/255).
Image from_u8(const std::uint8_t* rgb, int height, int width);

/// Round-trip through the 8-bit representation (the "published image" domain).
Image quantize_roundtrip(const Image& img);

/// 8-bit RGB PNG I/O.
Image load_png(const std::string& path);
void save_png(const std::string& path, const Image& img);

}  // namespace inrmark
