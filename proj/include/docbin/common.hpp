#ifndef DOCBIN_COMMON_HPP
#define DOCBIN_COMMON_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace docbin {

// Dimension or layout mismatch between rasters, grids, or batches.
class ShapeError : public std::runtime_error {
public:
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid argument value (empty batch, even window, empty histogram, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or truncated image file. `offset` is the byte position at which
// decoding failed, when known.
class DecodeError : public std::runtime_error {
public:
    DecodeError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (at byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Well-formed file in a format or bit depth the codec does not handle.
class UnsupportedFormatError : public std::runtime_error {
public:
    explicit UnsupportedFormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite value where a finite one is required.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Rounding convention used throughout: half rounds up (toward +inf).
inline int round_half_up(double x) {
    return static_cast<int>(std::floor(x + 0.5));
}

inline std::uint8_t clamp_u8(int v) {
    return static_cast<std::uint8_t>(v < 0 ? 0 : (v > 255 ? 255 : v));
}

inline std::uint8_t round_clamp_u8(double x) {
    return clamp_u8(round_half_up(x));
}

// Compensated (Kahan) accumulator. Reductions over batches and report rows
// use this so that sums do not depend on how work was chunked.
class KahanSum {
public:
    void add(double x) {
        const double y = x - c_;
        const double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

} // namespace docbin

#endif
