#include "docbin/resample.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace docbin {

namespace {

struct Tap {
    int src;
    double weight;
};

// Per-output-index taps for one axis, flattened with a fixed stride.
struct AxisTable {
    int taps_per_out = 0;
    std::vector<Tap> taps; // out_size * taps_per_out, zero-weight padded
};

inline int clamp_index(int i, int n) { return i < 0 ? 0 : (i >= n ? n - 1 : i); }

double keys_cubic(double x, double a) {
    x = std::abs(x);
    if (x < 1.0) {
        return ((a + 2.0) * x - (a + 3.0)) * x * x + 1.0;
    }
    if (x < 2.0) {
        return (((x - 5.0) * x + 8.0) * x - 4.0) * a;
    }
    return 0.0;
}

double lanczos_window(double x, int a) {
    x = std::abs(x);
    if (x >= a) {
        return 0.0;
    }
    if (x < 1e-12) {
        return 1.0;
    }
    const double px = std::numbers::pi * x;
    return a * std::sin(px) * std::sin(px / a) / (px * px);
}

AxisTable build_table(int src_size, int out_size, const ResizeKernel& k) {
    const double scale = static_cast<double>(src_size) / out_size;
    AxisTable t;

    switch (k.kind) {
    case KernelKind::nearest:
        t.taps_per_out = 1;
        t.taps.resize(out_size);
        for (int d = 0; d < out_size; ++d) {
            // round_half_up((d + 0.5) * scale - 0.5) == floor((d + 0.5) * scale)
            t.taps[d] = {clamp_index(static_cast<int>(std::floor((d + 0.5) * scale)), src_size),
                         1.0};
        }
        return t;
    case KernelKind::bilinear:
        t.taps_per_out = 2;
        break;
    case KernelKind::bicubic:
        t.taps_per_out = 4;
        break;
    case KernelKind::lanczos:
        t.taps_per_out = 2 * k.lanczos_taps;
        break;
    case KernelKind::area:
        // Footprint [d*scale, (d+1)*scale] spans at most ceil(scale)+1 pixels.
        t.taps_per_out = static_cast<int>(std::ceil(scale)) + 1;
        break;
    }

    t.taps.assign(static_cast<std::size_t>(out_size) * t.taps_per_out, Tap{0, 0.0});
    for (int d = 0; d < out_size; ++d) {
        Tap* row = t.taps.data() + static_cast<std::size_t>(d) * t.taps_per_out;

        if (k.kind == KernelKind::area) {
            const double lo = d * scale;
            const double hi = (d + 1) * scale;
            const int first = static_cast<int>(std::floor(lo));
            double total = 0.0;
            int n = 0;
            for (int i = first; i < hi && n < t.taps_per_out; ++i) {
                const double cover =
                    std::min(hi, static_cast<double>(i + 1)) - std::max(lo, static_cast<double>(i));
                if (cover <= 0.0) {
                    continue;
                }
                row[n++] = {clamp_index(i, src_size), cover};
                total += cover;
            }
            for (int j = 0; j < n; ++j) {
                row[j].weight /= total;
            }
            continue;
        }

        const double src = (d + 0.5) * scale - 0.5;
        const int i0 = static_cast<int>(std::floor(src));
        const double frac = src - i0;
        double total = 0.0;
        for (int j = 0; j < t.taps_per_out; ++j) {
            int i = 0;
            double w = 0.0;
            switch (k.kind) {
            case KernelKind::bilinear:
                i = i0 + j;
                w = (j == 0) ? 1.0 - frac : frac;
                break;
            case KernelKind::bicubic:
                i = i0 - 1 + j;
                w = keys_cubic(src - i, k.bicubic_a);
                break;
            case KernelKind::lanczos:
                i = i0 - k.lanczos_taps + 1 + j;
                w = lanczos_window(src - i, k.lanczos_taps);
                break;
            default:
                break;
            }
            row[j] = {clamp_index(i, src_size), w};
            total += w;
        }
        // Normalizing makes every kernel a partition of unity, including at
        // clamped edges and for the windowed sinc.
        for (int j = 0; j < t.taps_per_out; ++j) {
            row[j].weight /= total;
        }
    }
    return t;
}

} // namespace

ResizeKernel kernel_by_name(const std::string& name) {
    if (name == "nearest") return ResizeKernel::named(KernelKind::nearest);
    if (name == "bilinear") return ResizeKernel::named(KernelKind::bilinear);
    if (name == "area") return ResizeKernel::named(KernelKind::area);
    if (name == "bicubic") return ResizeKernel::named(KernelKind::bicubic);
    if (name == "lanczos") return ResizeKernel::named(KernelKind::lanczos);
    throw DomainError("unknown resize kernel: " + name);
}

std::string kernel_name(KernelKind kind) {
    switch (kind) {
    case KernelKind::nearest: return "nearest";
    case KernelKind::bilinear: return "bilinear";
    case KernelKind::area: return "area";
    case KernelKind::bicubic: return "bicubic";
    case KernelKind::lanczos: return "lanczos";
    }
    return "?";
}

Raster8 resize(const Raster8& img, int out_w, int out_h, const ResizeKernel& k) {
    if (out_w < 1 || out_h < 1) {
        throw ShapeError("resize: output dimensions must be >= 1");
    }
    if (k.kind == KernelKind::bicubic && !(k.bicubic_a < 0.0)) {
        throw DomainError("resize: bicubic_a must be negative");
    }
    if (k.kind == KernelKind::lanczos && k.lanczos_taps < 2) {
        throw DomainError("resize: lanczos_taps must be >= 2");
    }

    if (k.kind == KernelKind::nearest) {
        const AxisTable tx = build_table(img.width, out_w, k);
        const AxisTable ty = build_table(img.height, out_h, k);
        Raster8 out(out_w, out_h);
        for (int y = 0; y < out_h; ++y) {
            const std::uint8_t* src_row =
                img.data.data() + static_cast<std::size_t>(ty.taps[y].src) * img.width;
            std::uint8_t* dst_row = out.data.data() + static_cast<std::size_t>(y) * out_w;
            for (int x = 0; x < out_w; ++x) {
                dst_row[x] = src_row[tx.taps[x].src];
            }
        }
        return out;
    }

    const AxisTable tx = build_table(img.width, out_w, k);
    const AxisTable ty = build_table(img.height, out_h, k);

    // Horizontal pass into a real-valued buffer, then vertical pass.
    std::vector<double> mid(static_cast<std::size_t>(img.height) * out_w);
    for (int y = 0; y < img.height; ++y) {
        const std::uint8_t* src_row = img.data.data() + static_cast<std::size_t>(y) * img.width;
        double* mid_row = mid.data() + static_cast<std::size_t>(y) * out_w;
        for (int x = 0; x < out_w; ++x) {
            const Tap* taps = tx.taps.data() + static_cast<std::size_t>(x) * tx.taps_per_out;
            double acc = 0.0;
            for (int j = 0; j < tx.taps_per_out; ++j) {
                acc += taps[j].weight * src_row[taps[j].src];
            }
            mid_row[x] = acc;
        }
    }

    Raster8 out(out_w, out_h);
    for (int y = 0; y < out_h; ++y) {
        const Tap* taps = ty.taps.data() + static_cast<std::size_t>(y) * ty.taps_per_out;
        std::uint8_t* dst_row = out.data.data() + static_cast<std::size_t>(y) * out_w;
        for (int x = 0; x < out_w; ++x) {
            double acc = 0.0;
            for (int j = 0; j < ty.taps_per_out; ++j) {
                acc += taps[j].weight * mid[static_cast<std::size_t>(taps[j].src) * out_w + x];
            }
            dst_row[x] = round_clamp_u8(acc);
        }
    }
    return out;
}

} // namespace docbin
