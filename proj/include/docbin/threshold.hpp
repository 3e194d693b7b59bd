#ifndef DOCBIN_THRESHOLD_HPP
#define DOCBIN_THRESHOLD_HPP

#include <array>
#include <cstdint>
#include <optional>

#include "docbin/raster.hpp"

namespace docbin {

struct Histogram256 {
    std::array<std::uint64_t, 256> counts{};
    std::uint64_t total = 0;

    void add(std::uint8_t v) {
        ++counts[v];
        ++total;
    }
};

Histogram256 histogram(const Raster8& img);

// Threshold maximizing between-class variance w0*w1*(mu0-mu1)^2, class 0
// being pixels <= t. Ties break toward the smallest t. A constant image
// (zero variance for every split) yields nullopt.
std::optional<int> otsu_threshold(const Histogram256& h);

// pixel <= t -> foreground, pixel > t -> background.
// Degenerate threshold (nullopt) -> all background: a blank page has no text.
BinaryMask apply_threshold(const Raster8& img, std::optional<int> t);

BinaryMask otsu_binarize(const Raster8& img);

enum class LocalMethod {
    niblack, // t = m + k*s
    sauvola, // t = m * (1 + k*(s/R - 1))
};

struct LocalParams {
    int window = 25;  // odd, >= 3; clamped at image borders
    double k = 0.2;   // niblack convention is negative k; defaults below
    double R = 128.0; // sauvola dynamic range

    static LocalParams niblack_defaults() { return {25, -0.2, 128.0}; }
    static LocalParams sauvola_defaults() { return {25, 0.2, 128.0}; }
};

// Windowed mean/stddev via integral images; statistics are taken over the
// window clamped to the image.
BinaryMask local_threshold(const Raster8& img, LocalMethod method, const LocalParams& p);

// Windowed mean and population stddev at one pixel, same clamped-window
// convention as local_threshold. Exposed for verification.
struct WindowStats {
    double mean;
    double stddev;
};
WindowStats local_window_stats(const Raster8& img, int x, int y, int window);

} // namespace docbin

#endif
