#ifndef DOCBIN_RESAMPLE_HPP
#define DOCBIN_RESAMPLE_HPP

#include <string>

#include "docbin/raster.hpp"

namespace docbin {

enum class KernelKind {
    nearest,
    bilinear,
    area,
    bicubic,
    lanczos,
};

struct ResizeKernel {
    KernelKind kind = KernelKind::bilinear;
    double bicubic_a = -0.75; // Keys sharpness parameter, must be < 0
    int lanczos_taps = 4;     // lobe count, must be >= 2

    static ResizeKernel named(KernelKind k) { return ResizeKernel{k, -0.75, 4}; }
};

// Parses nearest|bilinear|area|bicubic|lanczos; throws DomainError otherwise.
ResizeKernel kernel_by_name(const std::string& name);
std::string kernel_name(KernelKind kind);

// Separable resize with pixel-center alignment src = (dst + 0.5) * scale - 0.5
// and clamped edges. Area averages the exact source footprint of each
// destination pixel. Output is rounded half-up and clamped to [0,255].
Raster8 resize(const Raster8& img, int out_w, int out_h, const ResizeKernel& k);

} // namespace docbin

#endif
