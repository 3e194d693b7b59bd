#include "docbin/raster.hpp"

#include <algorithm>

namespace docbin {

namespace {

void check_dims(int w, int h) {
    if (w < 1 || h < 1) {
        throw ShapeError("raster dimensions must be >= 1, got " + std::to_string(w) + "x" +
                         std::to_string(h));
    }
}

} // namespace

Raster8::Raster8(int w, int h, std::uint8_t fill) : width(w), height(h) {
    check_dims(w, h);
    data.assign(static_cast<std::size_t>(w) * h, fill);
}

Rgb8::Rgb8(int w, int h) : width(w), height(h) {
    check_dims(w, h);
    data.assign(static_cast<std::size_t>(w) * h * 3, 0);
}

BinaryMask::BinaryMask(int w, int h, std::uint8_t fill) : width(w), height(h) {
    check_dims(w, h);
    data.assign(static_cast<std::size_t>(w) * h, fill);
}

std::size_t BinaryMask::foreground_count() const {
    return static_cast<std::size_t>(std::count(data.begin(), data.end(), mask_fg));
}

Raster8 to_gray(const Rgb8& img) {
    Raster8 out(img.width, img.height);
    const std::uint8_t* p = img.data.data();
    for (std::size_t i = 0; i < out.data.size(); ++i, p += 3) {
        const double luma = 0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2];
        out.data[i] = round_clamp_u8(luma);
    }
    return out;
}

ChannelSplit split_channels(const Rgb8& img) {
    ChannelSplit s{Raster8(img.width, img.height), Raster8(img.width, img.height),
                   Raster8(img.width, img.height), to_gray(img)};
    const std::uint8_t* p = img.data.data();
    for (std::size_t i = 0; i < s.red.data.size(); ++i, p += 3) {
        s.red.data[i] = p[0];
        s.green.data[i] = p[1];
        s.blue.data[i] = p[2];
    }
    return s;
}

Raster8 saturating_add(const Raster8& a, const Raster8& b) {
    if (a.width != b.width || a.height != b.height) {
        throw ShapeError("saturating_add: dimension mismatch");
    }
    Raster8 out(a.width, a.height);
    for (std::size_t i = 0; i < out.data.size(); ++i) {
        out.data[i] = clamp_u8(static_cast<int>(a.data[i]) + static_cast<int>(b.data[i]));
    }
    return out;
}

Raster8 mask_to_raster(const BinaryMask& m) {
    Raster8 out(m.width, m.height);
    for (std::size_t i = 0; i < out.data.size(); ++i) {
        out.data[i] = (m.data[i] == mask_fg) ? 0 : 255;
    }
    return out;
}

BinaryMask mask_from_raster(const Raster8& r, std::uint8_t fg_max) {
    BinaryMask out(r.width, r.height);
    for (std::size_t i = 0; i < out.data.size(); ++i) {
        out.data[i] = (r.data[i] <= fg_max) ? mask_fg : mask_bg;
    }
    return out;
}

} // namespace docbin
