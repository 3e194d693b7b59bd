#include "docbin/codec.hpp"

#include <png.h>

#include <cctype>
#include <csetjmp>
#include <cstring>
#include <fstream>
#include <string>

namespace docbin {

namespace {

// ---------------------------------------------------------------------------
// PNG (libpng with in-memory I/O)
// ---------------------------------------------------------------------------

struct MemReader {
    const std::uint8_t* data = nullptr;
    std::size_t size = 0;
    std::size_t pos = 0;
    std::string error;
};

struct MemWriter {
    std::vector<std::uint8_t> out;
};

extern "C" {

void png_mem_read(png_structp png, png_bytep dst, png_size_t n) {
    auto* r = static_cast<MemReader*>(png_get_io_ptr(png));
    if (r->pos + n > r->size) {
        png_error(png, "unexpected end of PNG stream");
    }
    std::memcpy(dst, r->data + r->pos, n);
    r->pos += n;
}

void png_mem_write(png_structp png, png_bytep src, png_size_t n) {
    auto* w = static_cast<MemWriter*>(png_get_io_ptr(png));
    w->out.insert(w->out.end(), src, src + n);
}

void png_mem_flush(png_structp) {}

void png_capture_error(png_structp png, png_const_charp msg) {
    auto* r = static_cast<MemReader*>(png_get_error_ptr(png));
    if (r != nullptr && r->error.empty()) {
        r->error = msg;
    }
    longjmp(png_jmpbuf(png), 1);
}

void png_ignore_warning(png_structp, png_const_charp) {}

} // extern "C"

struct PngReadGuard {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngReadGuard() { png_destroy_read_struct(&png, &info, nullptr); }
};

struct PngWriteGuard {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngWriteGuard() { png_destroy_write_struct(&png, &info); }
};

DecodedImage decode_png(std::span<const std::uint8_t> bytes) {
    MemReader reader{bytes.data(), bytes.size(), 0, {}};

    PngReadGuard g;
    g.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &reader, png_capture_error,
                                   png_ignore_warning);
    if (g.png == nullptr) {
        throw DecodeError("png: failed to create read struct", 0);
    }
    g.info = png_create_info_struct(g.png);
    if (g.info == nullptr) {
        throw DecodeError("png: failed to create info struct", 0);
    }

    // libpng reports errors by longjmp'ing back here.
    std::vector<std::uint8_t> raw;
    std::vector<png_bytep> rows;
    if (setjmp(png_jmpbuf(g.png))) {
        throw DecodeError("png: " + (reader.error.empty() ? "decode failed" : reader.error),
                          reader.pos);
    }

    png_set_read_fn(g.png, &reader, png_mem_read);
    png_read_info(g.png, g.info);

    const png_uint_32 width = png_get_image_width(g.png, g.info);
    const png_uint_32 height = png_get_image_height(g.png, g.info);
    const int bit_depth = png_get_bit_depth(g.png, g.info);
    const int color_type = png_get_color_type(g.png, g.info);

    if (bit_depth != 8 && bit_depth != 16) {
        throw UnsupportedFormatError("png: unsupported bit depth " + std::to_string(bit_depth));
    }
    if (color_type != PNG_COLOR_TYPE_GRAY && color_type != PNG_COLOR_TYPE_RGB) {
        throw UnsupportedFormatError("png: unsupported color type " + std::to_string(color_type) +
                                     " (only 8/16-bit gray and RGB are handled)");
    }
    if (width == 0 || height == 0) {
        throw DecodeError("png: zero image dimension", reader.pos);
    }

    png_set_interlace_handling(g.png);
    png_read_update_info(g.png, g.info);

    const int channels = (color_type == PNG_COLOR_TYPE_RGB) ? 3 : 1;
    const std::size_t bytes_per_sample = bit_depth / 8;
    const std::size_t stride =
        static_cast<std::size_t>(width) * channels * bytes_per_sample;

    raw.assign(stride * height, 0);
    rows.resize(height);
    for (png_uint_32 y = 0; y < height; ++y) {
        rows[y] = raw.data() + y * stride;
    }
    png_read_image(g.png, rows.data());
    png_read_end(g.png, nullptr);

    const std::size_t samples = static_cast<std::size_t>(width) * height * channels;
    std::vector<std::uint8_t> pixels(samples);
    if (bit_depth == 8) {
        std::memcpy(pixels.data(), raw.data(), samples);
    } else {
        for (std::size_t i = 0; i < samples; ++i) {
            const unsigned v = (static_cast<unsigned>(raw[2 * i]) << 8) | raw[2 * i + 1];
            pixels[i] = static_cast<std::uint8_t>(v / 257);
        }
    }

    if (channels == 1) {
        Raster8 img(static_cast<int>(width), static_cast<int>(height));
        img.data = std::move(pixels);
        return img;
    }
    Rgb8 img(static_cast<int>(width), static_cast<int>(height));
    img.data = std::move(pixels);
    return img;
}

std::vector<std::uint8_t> encode_png(const std::uint8_t* pixels, int width, int height,
                                     int channels) {
    MemWriter writer;
    MemReader err_sink; // reuse the error-capture slot

    PngWriteGuard g;
    g.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &err_sink, png_capture_error,
                                    png_ignore_warning);
    if (g.png == nullptr) {
        throw DecodeError("png: failed to create write struct", 0);
    }
    g.info = png_create_info_struct(g.png);
    if (g.info == nullptr) {
        throw DecodeError("png: failed to create info struct", 0);
    }

    std::vector<png_bytep> rows(height);
    if (setjmp(png_jmpbuf(g.png))) {
        throw DecodeError("png: encode failed: " + err_sink.error, writer.out.size());
    }

    png_set_write_fn(g.png, &writer, png_mem_write, png_mem_flush);
    png_set_IHDR(g.png, g.info, width, height, 8,
                 channels == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(g.png, g.info);

    const std::size_t stride = static_cast<std::size_t>(width) * channels;
    for (int y = 0; y < height; ++y) {
        rows[y] = const_cast<png_bytep>(pixels + y * stride);
    }
    png_write_image(g.png, rows.data());
    png_write_end(g.png, nullptr);
    return std::move(writer.out);
}

// ---------------------------------------------------------------------------
// Binary PGM/PPM (P5/P6)
// ---------------------------------------------------------------------------

struct PnmCursor {
    std::span<const std::uint8_t> bytes;
    std::size_t pos = 0;

    bool eof() const { return pos >= bytes.size(); }
    std::uint8_t peek() const { return bytes[pos]; }
    std::uint8_t take() { return bytes[pos++]; }
};

void skip_pnm_space(PnmCursor& c) {
    while (!c.eof()) {
        const std::uint8_t b = c.peek();
        if (b == '#') {
            while (!c.eof() && c.take() != '\n') {
            }
        } else if (std::isspace(b)) {
            c.take();
        } else {
            return;
        }
    }
}

unsigned long parse_pnm_number(PnmCursor& c, const char* what) {
    skip_pnm_space(c);
    if (c.eof() || !std::isdigit(c.peek())) {
        throw DecodeError(std::string("pnm: expected ") + what, c.pos);
    }
    unsigned long v = 0;
    while (!c.eof() && std::isdigit(c.peek())) {
        v = v * 10 + (c.take() - '0');
        if (v > 1000000000UL) {
            throw DecodeError(std::string("pnm: ") + what + " out of range", c.pos);
        }
    }
    return v;
}

DecodedImage decode_pnm(std::span<const std::uint8_t> bytes) {
    PnmCursor c{bytes, 0};
    if (bytes.size() < 2) {
        throw DecodeError("pnm: truncated header", 0);
    }
    const char magic0 = static_cast<char>(c.take());
    const char magic1 = static_cast<char>(c.take());
    if (magic0 != 'P' || (magic1 != '5' && magic1 != '6')) {
        throw UnsupportedFormatError("pnm: only binary P5/P6 are handled");
    }
    const int channels = (magic1 == '6') ? 3 : 1;

    const unsigned long width = parse_pnm_number(c, "width");
    const unsigned long height = parse_pnm_number(c, "height");
    const unsigned long maxval = parse_pnm_number(c, "maxval");
    if (width == 0 || height == 0) {
        throw DecodeError("pnm: zero image dimension", c.pos);
    }
    if (maxval != 255 && maxval != 65535) {
        throw UnsupportedFormatError("pnm: unsupported maxval " + std::to_string(maxval) +
                                     " (only 255 and 65535 are handled)");
    }
    if (c.eof() || !std::isspace(c.peek())) {
        throw DecodeError("pnm: expected whitespace after maxval", c.pos);
    }
    c.take(); // single whitespace byte separates header from raster

    const std::size_t samples = static_cast<std::size_t>(width) * height * channels;
    const std::size_t bytes_per_sample = (maxval == 65535) ? 2 : 1;
    if (bytes.size() - c.pos < samples * bytes_per_sample) {
        throw DecodeError("pnm: truncated pixel data", bytes.size());
    }

    std::vector<std::uint8_t> pixels(samples);
    const std::uint8_t* src = bytes.data() + c.pos;
    if (bytes_per_sample == 1) {
        std::memcpy(pixels.data(), src, samples);
    } else {
        for (std::size_t i = 0; i < samples; ++i) {
            const unsigned v = (static_cast<unsigned>(src[2 * i]) << 8) | src[2 * i + 1];
            pixels[i] = static_cast<std::uint8_t>(v / 257);
        }
    }

    if (channels == 1) {
        Raster8 img(static_cast<int>(width), static_cast<int>(height));
        img.data = std::move(pixels);
        return img;
    }
    Rgb8 img(static_cast<int>(width), static_cast<int>(height));
    img.data = std::move(pixels);
    return img;
}

std::vector<std::uint8_t> encode_pnm(const std::uint8_t* pixels, int width, int height,
                                     int channels) {
    std::string header = (channels == 3 ? "P6\n" : "P5\n") + std::to_string(width) + " " +
                         std::to_string(height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    const std::size_t n = static_cast<std::size_t>(width) * height * channels;
    out.insert(out.end(), pixels, pixels + n);
    return out;
}

std::vector<std::uint8_t> encode_any(const std::uint8_t* pixels, int width, int height,
                                     int channels, ImageFormat format) {
    return format == ImageFormat::png ? encode_png(pixels, width, height, channels)
                                      : encode_pnm(pixels, width, height, channels);
}

} // namespace

DecodedImage decode_image(std::span<const std::uint8_t> bytes) {
    if (bytes.size() >= 8 && png_sig_cmp(bytes.data(), 0, 8) == 0) {
        return decode_png(bytes);
    }
    if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '5' || bytes[1] == '6')) {
        return decode_pnm(bytes);
    }
    throw UnsupportedFormatError("unrecognized image format (expected PNG or binary PGM/PPM)");
}

std::vector<std::uint8_t> encode_image(const Raster8& img, ImageFormat format) {
    return encode_any(img.data.data(), img.width, img.height, 1, format);
}

std::vector<std::uint8_t> encode_image(const Rgb8& img, ImageFormat format) {
    return encode_any(img.data.data(), img.width, img.height, 3, format);
}

std::vector<std::uint8_t> encode_image(const BinaryMask& mask, ImageFormat format) {
    return encode_image(mask_to_raster(mask), format);
}

DecodedImage load_image(const std::filesystem::path& path) {
    const auto bytes = read_file(path);
    return decode_image(bytes);
}

ImageFormat format_for_path(const std::filesystem::path& path) {
    const auto ext = path.extension().string();
    if (ext == ".pgm" || ext == ".ppm" || ext == ".pnm") {
        return ImageFormat::pnm;
    }
    return ImageFormat::png;
}

void save_image(const std::filesystem::path& path, const Raster8& img) {
    const auto bytes = encode_image(img, format_for_path(path));
    write_file(path, bytes);
}

void save_image(const std::filesystem::path& path, const Rgb8& img) {
    const auto bytes = encode_image(img, format_for_path(path));
    write_file(path, bytes);
}

void save_image(const std::filesystem::path& path, const BinaryMask& mask) {
    const auto bytes = encode_image(mask, format_for_path(path));
    write_file(path, bytes);
}

Raster8 decoded_to_gray(const DecodedImage& img) {
    if (const auto* gray = std::get_if<Raster8>(&img)) {
        return *gray;
    }
    return to_gray(std::get<Rgb8>(img));
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw DomainError("cannot open file: " + path.string());
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                    std::istreambuf_iterator<char>());
    return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw DomainError("cannot write file: " + path.string());
    }
    f.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
    if (!f) {
        throw DomainError("short write: " + path.string());
    }
}

} // namespace docbin
