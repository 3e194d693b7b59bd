#ifndef DOCBIN_CODEC_HPP
#define DOCBIN_CODEC_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <variant>
#include <vector>

#include "docbin/raster.hpp"

namespace docbin {

using DecodedImage = std::variant<Raster8, Rgb8>;

enum class ImageFormat {
    png,
    pnm, // P5 for single-channel, P6 for RGB
};

// Decodes a PNG or binary PGM/PPM buffer. Grayscale sources produce Raster8,
// color sources Rgb8. 16-bit samples are reduced to 8-bit by integer
// division by 257 (65535 -> 255 exactly).
// Throws DecodeError (with byte offset) on malformed input and
// UnsupportedFormatError on formats outside PNG/PNM 8/16-bit gray/RGB.
DecodedImage decode_image(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encode_image(const Raster8& img, ImageFormat format);
std::vector<std::uint8_t> encode_image(const Rgb8& img, ImageFormat format);
// Masks encode as 8-bit grayscale, foreground -> 0, background -> 255.
std::vector<std::uint8_t> encode_image(const BinaryMask& mask, ImageFormat format);

// File helpers. load_image throws DomainError if the file cannot be read.
DecodedImage load_image(const std::filesystem::path& path);
void save_image(const std::filesystem::path& path, const Raster8& img);
void save_image(const std::filesystem::path& path, const Rgb8& img);
void save_image(const std::filesystem::path& path, const BinaryMask& mask);

// Format is chosen by file extension: .pgm/.ppm/.pnm -> PNM, anything else PNG.
ImageFormat format_for_path(const std::filesystem::path& path);

// Gray view of any decoded image: Raster8 passes through, Rgb8 goes
// through to_gray.
Raster8 decoded_to_gray(const DecodedImage& img);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

} // namespace docbin

#endif
