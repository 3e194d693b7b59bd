#ifndef DOCBIN_PATCHWORK_HPP
#define DOCBIN_PATCHWORK_HPP

#include <vector>

#include "docbin/raster.hpp"
#include "docbin/resample.hpp"

namespace docbin {

// Row-major tiling of a raster into patch_size x patch_size tiles.
// Edge patches come from bottom/right edge replication, not zero fill, so
// binarizers never see artificial black borders.
struct PatchGrid {
    int patch_size = 256;
    int cols = 0;
    int rows = 0;
    int source_width = 0;
    int source_height = 0;
    std::vector<Raster8> patches;
};

PatchGrid split_patches(const Raster8& img, int patch_size = 256);

// Inverse of split_patches: tiles placed row-major, padding cropped back to
// the recorded source dimensions. Throws ShapeError if the grid is
// inconsistent (missing patches, wrong patch dimensions).
Raster8 merge_patches(const PatchGrid& g);

Raster8 hflip(const Raster8& img);
Raster8 vflip(const Raster8& img);
// Counterclockwise quarter turns.
Raster8 rotate90(const Raster8& img);
Raster8 rotate180(const Raster8& img);
Raster8 rotate270(const Raster8& img);

struct AugmentSpec {
    std::vector<double> scales{0.75, 1.0, 1.25, 1.5};
    std::vector<int> patch_rotations{270}; // degrees, multiples of 90
    int global_size = 512;

    static AugmentSpec defaults() { return AugmentSpec{}; }
};

// Local-path augmentation: for each scale, the bilinear-rescaled image
// followed by each requested rotation of it (scale-major order, identity
// before rotations).
std::vector<Raster8> augment_local(const Raster8& img, const AugmentSpec& spec);

// Global-path augmentation: bilinear resize to global_size^2, then
// {original, hflip, vflip, rot90, rot180, rot270} in that order.
std::vector<Raster8> augment_global(const Raster8& img, const AugmentSpec& spec);

enum class FuseRule {
    fg_and, // pixel-wise saturating add of the {0,255} encodings
    fg_or,
};

// Combines local and global binarization outputs. The default rule is the
// saturating byte sum: a pixel stays foreground only when both inputs mark
// it foreground.
BinaryMask fuse(const BinaryMask& local, const BinaryMask& global, FuseRule rule = FuseRule::fg_and);

} // namespace docbin

#endif
