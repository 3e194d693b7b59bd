#include "docbin/patchwork.hpp"

#include <algorithm>
#include <cmath>

namespace docbin {

PatchGrid split_patches(const Raster8& img, int patch_size) {
    if (patch_size < 1) {
        throw DomainError("split_patches: patch_size must be >= 1");
    }
    PatchGrid g;
    g.patch_size = patch_size;
    g.cols = (img.width + patch_size - 1) / patch_size;
    g.rows = (img.height + patch_size - 1) / patch_size;
    g.source_width = img.width;
    g.source_height = img.height;
    g.patches.reserve(static_cast<std::size_t>(g.cols) * g.rows);

    for (int py = 0; py < g.rows; ++py) {
        for (int px = 0; px < g.cols; ++px) {
            Raster8 patch(patch_size, patch_size);
            for (int y = 0; y < patch_size; ++y) {
                const int sy = std::min(py * patch_size + y, img.height - 1);
                for (int x = 0; x < patch_size; ++x) {
                    const int sx = std::min(px * patch_size + x, img.width - 1);
                    patch.at(x, y) = img.at(sx, sy);
                }
            }
            g.patches.push_back(std::move(patch));
        }
    }
    return g;
}

Raster8 merge_patches(const PatchGrid& g) {
    const std::size_t expected = static_cast<std::size_t>(g.cols) * g.rows;
    if (g.patches.size() != expected) {
        throw ShapeError("merge_patches: expected " + std::to_string(expected) + " patches, got " +
                         std::to_string(g.patches.size()));
    }
    if (g.source_width < 1 || g.source_height < 1 ||
        g.cols != (g.source_width + g.patch_size - 1) / g.patch_size ||
        g.rows != (g.source_height + g.patch_size - 1) / g.patch_size) {
        throw ShapeError("merge_patches: grid inconsistent with source dimensions");
    }
    for (const auto& p : g.patches) {
        if (p.width != g.patch_size || p.height != g.patch_size) {
            throw ShapeError("merge_patches: patch dimensions differ from patch_size");
        }
    }

    Raster8 out(g.source_width, g.source_height);
    for (int py = 0; py < g.rows; ++py) {
        const int y0 = py * g.patch_size;
        const int ph = std::min(g.patch_size, g.source_height - y0);
        for (int px = 0; px < g.cols; ++px) {
            const Raster8& patch = g.patches[static_cast<std::size_t>(py) * g.cols + px];
            const int x0 = px * g.patch_size;
            const int pw = std::min(g.patch_size, g.source_width - x0);
            for (int y = 0; y < ph; ++y) {
                for (int x = 0; x < pw; ++x) {
                    out.at(x0 + x, y0 + y) = patch.at(x, y);
                }
            }
        }
    }
    return out;
}

Raster8 hflip(const Raster8& img) {
    Raster8 out(img.width, img.height);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            out.at(x, y) = img.at(img.width - 1 - x, y);
        }
    }
    return out;
}

Raster8 vflip(const Raster8& img) {
    Raster8 out(img.width, img.height);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            out.at(x, y) = img.at(x, img.height - 1 - y);
        }
    }
    return out;
}

Raster8 rotate90(const Raster8& img) {
    Raster8 out(img.height, img.width);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            out.at(y, img.width - 1 - x) = img.at(x, y);
        }
    }
    return out;
}

Raster8 rotate180(const Raster8& img) {
    Raster8 out(img.width, img.height);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            out.at(img.width - 1 - x, img.height - 1 - y) = img.at(x, y);
        }
    }
    return out;
}

Raster8 rotate270(const Raster8& img) {
    Raster8 out(img.height, img.width);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            out.at(img.height - 1 - y, x) = img.at(x, y);
        }
    }
    return out;
}

namespace {

Raster8 rotate_by_degrees(const Raster8& img, int degrees) {
    switch (((degrees % 360) + 360) % 360) {
    case 0: return img;
    case 90: return rotate90(img);
    case 180: return rotate180(img);
    case 270: return rotate270(img);
    default: throw DomainError("rotation must be a multiple of 90 degrees");
    }
}

} // namespace

std::vector<Raster8> augment_local(const Raster8& img, const AugmentSpec& spec) {
    std::vector<Raster8> out;
    out.reserve(spec.scales.size() * (1 + spec.patch_rotations.size()));
    const ResizeKernel bilinear = ResizeKernel::named(KernelKind::bilinear);
    for (const double s : spec.scales) {
        if (!(s > 0.0)) {
            throw DomainError("augment_local: scales must be > 0");
        }
        const int w = std::max(1, round_half_up(img.width * s));
        const int h = std::max(1, round_half_up(img.height * s));
        const Raster8 scaled = resize(img, w, h, bilinear);
        out.push_back(scaled);
        for (const int deg : spec.patch_rotations) {
            out.push_back(rotate_by_degrees(scaled, deg));
        }
    }
    return out;
}

std::vector<Raster8> augment_global(const Raster8& img, const AugmentSpec& spec) {
    if (spec.global_size < 1) {
        throw DomainError("augment_global: global_size must be >= 1");
    }
    const Raster8 base =
        resize(img, spec.global_size, spec.global_size, ResizeKernel::named(KernelKind::bilinear));
    std::vector<Raster8> out;
    out.reserve(6);
    out.push_back(base);
    out.push_back(hflip(base));
    out.push_back(vflip(base));
    out.push_back(rotate90(base));
    out.push_back(rotate180(base));
    out.push_back(rotate270(base));
    return out;
}

BinaryMask fuse(const BinaryMask& local, const BinaryMask& global, FuseRule rule) {
    if (local.width != global.width || local.height != global.height) {
        throw ShapeError("fuse: dimension mismatch");
    }
    if (rule == FuseRule::fg_and) {
        // Literal arithmetic of the stored images: 0+0 stays 0, anything
        // touching background saturates to 255.
        return mask_from_raster(saturating_add(mask_to_raster(local), mask_to_raster(global)));
    }
    BinaryMask out(local.width, local.height);
    for (std::size_t i = 0; i < out.data.size(); ++i) {
        out.data[i] = (local.data[i] == mask_fg || global.data[i] == mask_fg) ? mask_fg : mask_bg;
    }
    return out;
}

} // namespace docbin
