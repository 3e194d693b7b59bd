#ifndef DOCBIN_RASTER_HPP
#define DOCBIN_RASTER_HPP

#include <cstdint>
#include <vector>

#include "docbin/common.hpp"

namespace docbin {

// Single-channel 8-bit image plane, row-major.
struct Raster8 {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    Raster8() = default;
    Raster8(int w, int h, std::uint8_t fill = 0);

    std::uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    std::size_t size() const { return data.size(); }

    bool operator==(const Raster8&) const = default;
};

// Interleaved 8-bit RGB image, row-major R,G,B triples.
struct Rgb8 {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    Rgb8() = default;
    Rgb8(int w, int h);

    bool operator==(const Rgb8&) const = default;
};

// Two-valued image. Foreground (text) pixels are mask_fg, background mask_bg.
// The byte encoding maps foreground to 0 and background to 255.
inline constexpr std::uint8_t mask_fg = 0;
inline constexpr std::uint8_t mask_bg = 1;

struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data; // each element is mask_fg or mask_bg

    BinaryMask() = default;
    BinaryMask(int w, int h, std::uint8_t fill = mask_bg);

    std::uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    std::size_t size() const { return data.size(); }
    std::size_t foreground_count() const;

    bool operator==(const BinaryMask&) const = default;
};

// BT.601 luma: gray = round(0.299 R + 0.587 G + 0.114 B).
Raster8 to_gray(const Rgb8& img);

struct ChannelSplit {
    Raster8 red;
    Raster8 green;
    Raster8 blue;
    Raster8 gray;
};

ChannelSplit split_channels(const Rgb8& img);

// Per-pixel min(a + b, 255). Dimensions must match.
Raster8 saturating_add(const Raster8& a, const Raster8& b);

// {0,255} byte encoding of a mask: foreground -> 0, background -> 255.
Raster8 mask_to_raster(const BinaryMask& m);

// Inverse of the byte encoding, with tolerance for gray sources:
// pixel <= fg_max reads as foreground.
BinaryMask mask_from_raster(const Raster8& r, std::uint8_t fg_max = 127);

} // namespace docbin

#endif
