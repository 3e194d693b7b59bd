#include "docbin/threshold.hpp"

#include <cmath>
#include <vector>

namespace docbin {

Histogram256 histogram(const Raster8& img) {
    Histogram256 h;
    for (const std::uint8_t v : img.data) {
        ++h.counts[v];
    }
    h.total = img.data.size();
    return h;
}

std::optional<int> otsu_threshold(const Histogram256& h) {
    if (h.total == 0) {
        throw DomainError("otsu_threshold: empty histogram");
    }

    double weighted_total = 0.0;
    for (int v = 0; v < 256; ++v) {
        weighted_total += static_cast<double>(v) * h.counts[v];
    }

    const double n = static_cast<double>(h.total);
    double count0 = 0.0;
    double sum0 = 0.0;
    double best = 0.0;
    int best_t = -1;
    for (int t = 0; t < 256; ++t) {
        count0 += static_cast<double>(h.counts[t]);
        sum0 += static_cast<double>(t) * h.counts[t];
        const double count1 = n - count0;
        if (count0 == 0.0 || count1 == 0.0) {
            continue; // an empty class has zero between-class variance
        }
        const double mu0 = sum0 / count0;
        const double mu1 = (weighted_total - sum0) / count1;
        const double var = (count0 / n) * (count1 / n) * (mu0 - mu1) * (mu0 - mu1);
        if (var > best) {
            best = var;
            best_t = t;
        }
    }
    if (best_t < 0) {
        return std::nullopt; // constant image
    }
    return best_t;
}

BinaryMask apply_threshold(const Raster8& img, std::optional<int> t) {
    BinaryMask out(img.width, img.height);
    if (!t.has_value()) {
        return out; // all background
    }
    const int tv = *t;
    for (std::size_t i = 0; i < img.data.size(); ++i) {
        out.data[i] = (img.data[i] <= tv) ? mask_fg : mask_bg;
    }
    return out;
}

BinaryMask otsu_binarize(const Raster8& img) {
    return apply_threshold(img, otsu_threshold(histogram(img)));
}

namespace {

// Integral images over pixel values and their squares, (w+1) x (h+1).
struct Integrals {
    int width;
    int height;
    std::vector<std::uint64_t> sum;
    std::vector<std::uint64_t> sqsum;

    explicit Integrals(const Raster8& img)
        : width(img.width),
          height(img.height),
          sum(static_cast<std::size_t>(width + 1) * (height + 1), 0),
          sqsum(sum.size(), 0) {
        const std::size_t stride = width + 1;
        for (int y = 0; y < height; ++y) {
            std::uint64_t row = 0;
            std::uint64_t sqrow = 0;
            for (int x = 0; x < width; ++x) {
                const std::uint64_t v = img.at(x, y);
                row += v;
                sqrow += v * v;
                sum[(y + 1) * stride + (x + 1)] = sum[y * stride + (x + 1)] + row;
                sqsum[(y + 1) * stride + (x + 1)] = sqsum[y * stride + (x + 1)] + sqrow;
            }
        }
    }

    // Inclusive box [x0,x1] x [y0,y1].
    void box(int x0, int y0, int x1, int y1, std::uint64_t& s, std::uint64_t& sq) const {
        const std::size_t stride = width + 1;
        s = sum[(y1 + 1) * stride + (x1 + 1)] - sum[y0 * stride + (x1 + 1)] -
            sum[(y1 + 1) * stride + x0] + sum[y0 * stride + x0];
        sq = sqsum[(y1 + 1) * stride + (x1 + 1)] - sqsum[y0 * stride + (x1 + 1)] -
             sqsum[(y1 + 1) * stride + x0] + sqsum[y0 * stride + x0];
    }
};

inline void clamped_window(int x, int y, int w, int h, int r, int& x0, int& y0, int& x1, int& y1) {
    x0 = std::max(0, x - r);
    y0 = std::max(0, y - r);
    x1 = std::min(w - 1, x + r);
    y1 = std::min(h - 1, y + r);
}

} // namespace

WindowStats local_window_stats(const Raster8& img, int x, int y, int window) {
    if (window < 3 || window % 2 == 0) {
        throw DomainError("local_window_stats: window must be odd and >= 3");
    }
    const Integrals integ(img);
    int x0, y0, x1, y1;
    clamped_window(x, y, img.width, img.height, window / 2, x0, y0, x1, y1);
    std::uint64_t s, sq;
    integ.box(x0, y0, x1, y1, s, sq);
    const double count = static_cast<double>(x1 - x0 + 1) * (y1 - y0 + 1);
    const double mean = static_cast<double>(s) / count;
    const double var = std::max(0.0, static_cast<double>(sq) / count - mean * mean);
    return {mean, std::sqrt(var)};
}

BinaryMask local_threshold(const Raster8& img, LocalMethod method, const LocalParams& p) {
    if (p.window < 3 || p.window % 2 == 0) {
        throw DomainError("local_threshold: window must be odd and >= 3");
    }
    const Integrals integ(img);
    const int r = p.window / 2;
    BinaryMask out(img.width, img.height);

    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            int x0, y0, x1, y1;
            clamped_window(x, y, img.width, img.height, r, x0, y0, x1, y1);
            std::uint64_t s, sq;
            integ.box(x0, y0, x1, y1, s, sq);
            const double count = static_cast<double>(x1 - x0 + 1) * (y1 - y0 + 1);
            const double m = static_cast<double>(s) / count;
            const double var = std::max(0.0, static_cast<double>(sq) / count - m * m);
            const double stddev = std::sqrt(var);

            const double t = (method == LocalMethod::niblack)
                                 ? m + p.k * stddev
                                 : m * (1.0 + p.k * (stddev / p.R - 1.0));
            out.at(x, y) = (img.at(x, y) <= t) ? mask_fg : mask_bg;
        }
    }
    return out;
}

} // namespace docbin
