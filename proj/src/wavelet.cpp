#include "docbin/wavelet.hpp"

#include <algorithm>

namespace docbin {

namespace {

// Source pixel with bottom/right edge replication for odd dimensions.
inline int padded_px(const Raster8& img, int x, int y) {
    if (x >= img.width) x = img.width - 1;
    if (y >= img.height) y = img.height - 1;
    return img.at(x, y);
}

inline int half_up(int n) { return (n + 1) / 2; }

} // namespace

SubbandSet haar_forward(const Raster8& img) {
    const int ow = half_up(img.width);
    const int oh = half_up(img.height);
    SubbandSet s;
    s.ll = CoeffPlane(ow, oh);
    s.lh = CoeffPlane(ow, oh);
    s.hl = CoeffPlane(ow, oh);
    s.hh = CoeffPlane(ow, oh);
    s.source_width = img.width;
    s.source_height = img.height;

    for (int oy = 0; oy < oh; ++oy) {
        for (int ox = 0; ox < ow; ++ox) {
            const int a = padded_px(img, 2 * ox, 2 * oy);
            const int b = padded_px(img, 2 * ox + 1, 2 * oy);
            const int c = padded_px(img, 2 * ox, 2 * oy + 1);
            const int d = padded_px(img, 2 * ox + 1, 2 * oy + 1);
            s.ll.at(ox, oy) = (a + b + c + d) * 0.5;
            s.lh.at(ox, oy) = (a - b + c - d) * 0.5;
            s.hl.at(ox, oy) = (a + b - c - d) * 0.5;
            s.hh.at(ox, oy) = (a - b - c + d) * 0.5;
        }
    }
    return s;
}

Raster8 haar_inverse(const SubbandSet& s) {
    const int ow = s.ll.width;
    const int oh = s.ll.height;
    if (s.lh.width != ow || s.hl.width != ow || s.hh.width != ow || s.lh.height != oh ||
        s.hl.height != oh || s.hh.height != oh) {
        throw ShapeError("haar_inverse: subband planes have mismatched dimensions");
    }
    if (s.source_width < 1 || s.source_height < 1 || half_up(s.source_width) != ow ||
        half_up(s.source_height) != oh) {
        throw ShapeError("haar_inverse: source dimensions inconsistent with subband planes");
    }

    Raster8 out(s.source_width, s.source_height);
    for (int oy = 0; oy < oh; ++oy) {
        for (int ox = 0; ox < ow; ++ox) {
            const double ll = s.ll.at(ox, oy);
            const double lh = s.lh.at(ox, oy);
            const double hl = s.hl.at(ox, oy);
            const double hh = s.hh.at(ox, oy);
            const double a = (ll + lh + hl + hh) * 0.5;
            const double b = (ll - lh + hl - hh) * 0.5;
            const double c = (ll + lh - hl - hh) * 0.5;
            const double d = (ll - lh - hl + hh) * 0.5;

            const int x0 = 2 * ox;
            const int y0 = 2 * oy;
            out.at(x0, y0) = round_clamp_u8(a);
            if (x0 + 1 < out.width) out.at(x0 + 1, y0) = round_clamp_u8(b);
            if (y0 + 1 < out.height) out.at(x0, y0 + 1) = round_clamp_u8(c);
            if (x0 + 1 < out.width && y0 + 1 < out.height) out.at(x0 + 1, y0 + 1) = round_clamp_u8(d);
        }
    }
    return out;
}

Raster8 ll_downscale(const Raster8& img, LlMode mode) {
    const int ow = half_up(img.width);
    const int oh = half_up(img.height);

    // Only the LL plane is needed; skip the detail filters.
    CoeffPlane ll(ow, oh);
    for (int oy = 0; oy < oh; ++oy) {
        const int y0 = 2 * oy;
        const int y1 = std::min(y0 + 1, img.height - 1);
        const std::uint8_t* r0 = img.data.data() + static_cast<std::size_t>(y0) * img.width;
        const std::uint8_t* r1 = img.data.data() + static_cast<std::size_t>(y1) * img.width;
        double* dst = ll.data.data() + static_cast<std::size_t>(oy) * ow;
        for (int ox = 0; ox < ow; ++ox) {
            const int x0 = 2 * ox;
            const int x1 = std::min(x0 + 1, img.width - 1);
            dst[ox] = (r0[x0] + r0[x1] + r1[x0] + r1[x1]) * 0.5;
        }
    }

    Raster8 out(ow, oh);
    if (mode == LlMode::raw) {
        for (std::size_t i = 0; i < ll.data.size(); ++i) {
            out.data[i] = round_clamp_u8(ll.data[i]);
        }
        return out;
    }

    const auto [mn_it, mx_it] = std::minmax_element(ll.data.begin(), ll.data.end());
    const double mn = *mn_it;
    const double mx = *mx_it;
    if (mx == mn) {
        // Constant LL plane: keep the block-mean value.
        const std::uint8_t v = round_clamp_u8(mn * 0.5);
        std::fill(out.data.begin(), out.data.end(), v);
        return out;
    }
    const double scale = 255.0 / (mx - mn);
    for (std::size_t i = 0; i < ll.data.size(); ++i) {
        out.data[i] = round_clamp_u8((ll.data[i] - mn) * scale);
    }
    return out;
}

} // namespace docbin
