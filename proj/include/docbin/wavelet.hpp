#ifndef DOCBIN_WAVELET_HPP
#define DOCBIN_WAVELET_HPP

#include <vector>

#include "docbin/raster.hpp"

namespace docbin {

// Real-valued half-resolution plane used for wavelet coefficients.
struct CoeffPlane {
    int width = 0;
    int height = 0;
    std::vector<double> data;

    CoeffPlane() = default;
    CoeffPlane(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * h, 0.0) {}

    double at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    double& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
};

// One level of the 2-D Haar transform. Planes are ceil(H/2) x ceil(W/2);
// odd source dimensions are edge-replicated to even before filtering.
// For 8-bit input, ll lies in [0, 510] and the detail planes in [-255, 255].
struct SubbandSet {
    CoeffPlane ll;
    CoeffPlane lh; // horizontal detail: (a-b+c-d)/2
    CoeffPlane hl; // vertical detail:   (a+b-c-d)/2
    CoeffPlane hh; // diagonal detail:   (a-b-c+d)/2
    int source_width = 0;
    int source_height = 0;
};

// Per 2x2 block [a b; c d]: LL=(a+b+c+d)/2, LH=(a-b+c-d)/2,
// HL=(a+b-c-d)/2, HH=(a-b-c+d)/2 (orthonormal scaling).
SubbandSet haar_forward(const Raster8& img);

// Exact inverse of haar_forward on its own output; rounds and clamps to
// [0,255] and drops any padding row/column.
Raster8 haar_inverse(const SubbandSet& s);

enum class LlMode {
    normalized, // min-max rescale of the LL plane to [0,255]
    raw,        // clamp(round(LL)) -- values above 255 clip
};

// Half-size raster from the retained LL subband. In normalized mode a
// constant LL plane degenerates to the block-mean value clamp(round(LL/2)).
Raster8 ll_downscale(const Raster8& img, LlMode mode);

} // namespace docbin

#endif
