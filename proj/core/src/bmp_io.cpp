#include "pgsteg/bmp_io.hpp"

#include <cstring>
#include <limits>
#include <utility>
#include <string>
#include <string_view>

#include "pgsteg/error.hpp"
#include "pgsteg/text.hpp"

namespace pgsteg {
namespace {

constexpr std::uint16_t kSignature = 0x4D42;  // "BM"
constexpr std::uint32_t kBiRgb = 0;

std::uint16_t get_u16(std::span<const std::uint8_t> b, std::size_t at) {
    return static_cast<std::uint16_t>(b[at] | (b[at + 1] << 8));
}

std::uint32_t get_u32(std::span<const std::uint8_t> b, std::size_t at) {
    return static_cast<std::uint32_t>(b[at]) | (static_cast<std::uint32_t>(b[at + 1]) << 8) |
           (static_cast<std::uint32_t>(b[at + 2]) << 16) | (static_cast<std::uint32_t>(b[at + 3]) << 24);
}

std::int32_t get_i32(std::span<const std::uint8_t> b, std::size_t at) {
    return static_cast<std::int32_t>(get_u32(b, at));
}

void put_u16(std::uint8_t* p, std::uint16_t v) {
    p[0] = static_cast<std::uint8_t>(v);
    p[1] = static_cast<std::uint8_t>(v >> 8);
}

void put_u32(std::uint8_t* p, std::uint32_t v) {
    for (int k = 0; k < 4; ++k) p[k] = static_cast<std::uint8_t>(v >> (8 * k));
}

void check_dimensions(std::size_t width, std::size_t height) {
    if (width == 0 || height == 0) {
        throw Error(ErrorCode::ZeroDimension,
                    "image is " + std::to_string(width) + "x" + std::to_string(height));
    }
}

}  // namespace

Rgb24Image::Rgb24Image(std::size_t width, std::size_t height, Rgb fill)
    : width_(width), height_(height) {
    check_dimensions(width, height);
    pixels_.assign(width * height, fill);
}

Rgb24Image::Rgb24Image(std::size_t width, std::size_t height, std::vector<Rgb> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    check_dimensions(width, height);
    if (pixels_.size() != width * height) {
        throw Error(ErrorCode::LengthMismatch, std::to_string(pixels_.size()) + " pixels for a " +
                                                   std::to_string(width) + "x" + std::to_string(height) +
                                                   " image");
    }
}

Rgb24Image parse_bmp(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || get_u16(bytes, 0) != kSignature) {
        throw Error(ErrorCode::BadSignature, "missing 'BM' signature");
    }
    if (bytes.size() < kBmpFileHeaderSize + 4) {
        throw Error(ErrorCode::TruncatedHeader, "file ends inside the headers");
    }
    const std::uint32_t pixel_offset = get_u32(bytes, 10);
    const std::uint32_t info_size = get_u32(bytes, 14);
    if (info_size != kBmpInfoHeaderSize) {
        throw Error(ErrorCode::UnsupportedHeader,
                    "info header of " + std::to_string(info_size) + " bytes, only 40 is supported");
    }
    if (bytes.size() < kBmpPixelOffset) {
        throw Error(ErrorCode::TruncatedHeader, "file ends inside the headers");
    }
    const std::int32_t raw_width = get_i32(bytes, 18);
    const std::int32_t raw_height = get_i32(bytes, 22);
    const std::uint16_t bit_count = get_u16(bytes, 28);
    const std::uint32_t compression = get_u32(bytes, 30);

    if (bit_count != 24) {
        throw Error(ErrorCode::UnsupportedBitDepth, std::to_string(bit_count) + " bits per pixel");
    }
    if (compression != kBiRgb) {
        throw Error(ErrorCode::UnsupportedCompression, "compression method " + std::to_string(compression));
    }
    if (raw_width <= 0 || raw_height == 0 || raw_height == std::numeric_limits<std::int32_t>::min()) {
        throw Error(ErrorCode::ZeroDimension, "image is " + std::to_string(raw_width) + "x" +
                                                  std::to_string(raw_height));
    }

    const bool top_down = raw_height < 0;
    const auto width = static_cast<std::size_t>(raw_width);
    const auto height = static_cast<std::size_t>(top_down ? -static_cast<std::int64_t>(raw_height) : raw_height);
    const std::size_t stride = bmp_row_stride(width);
    // A final row without its padding is still complete pixel data.
    const std::uint64_t needed = static_cast<std::uint64_t>(stride) * (height - 1) + 3 * width;
    if (pixel_offset < kBmpPixelOffset || pixel_offset > bytes.size() ||
        bytes.size() - pixel_offset < needed) {
        throw Error(ErrorCode::TruncatedPixelArray, "pixel array needs " + std::to_string(needed) +
                                                        " bytes at offset " + std::to_string(pixel_offset) +
                                                        ", file is " + std::to_string(bytes.size()));
    }

    Rgb24Image image(width, height);
    for (std::size_t y = 0; y < height; ++y) {
        const std::size_t stored_row = top_down ? y : height - 1 - y;
        const std::uint8_t* src = bytes.data() + pixel_offset + stored_row * stride;
        for (std::size_t x = 0; x < width; ++x, src += 3) {
            image.at(x, y) = Rgb{src[2], src[1], src[0]};
        }
    }
    return image;
}

std::vector<std::uint8_t> serialize_bmp(const Rgb24Image& image) {
    const std::size_t stride = bmp_row_stride(image.width());
    const std::size_t pixel_bytes = stride * image.height();
    const std::size_t total = kBmpPixelOffset + pixel_bytes;
    if (total > std::numeric_limits<std::uint32_t>::max() ||
        image.width() > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max()) ||
        image.height() > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max())) {
        throw Error(ErrorCode::ValueOutOfRange, "image too large for a BMP file");
    }

    std::vector<std::uint8_t> out(total, 0);
    std::uint8_t* h = out.data();
    put_u16(h + 0, kSignature);
    put_u32(h + 2, static_cast<std::uint32_t>(total));
    put_u32(h + 10, static_cast<std::uint32_t>(kBmpPixelOffset));
    put_u32(h + 14, static_cast<std::uint32_t>(kBmpInfoHeaderSize));
    put_u32(h + 18, static_cast<std::uint32_t>(image.width()));
    put_u32(h + 22, static_cast<std::uint32_t>(image.height()));
    put_u16(h + 26, 1);   // planes
    put_u16(h + 28, 24);  // bits per pixel
    put_u32(h + 30, kBiRgb);
    put_u32(h + 34, static_cast<std::uint32_t>(pixel_bytes));
    // Resolution and palette fields stay zero.

    for (std::size_t y = 0; y < image.height(); ++y) {
        std::uint8_t* dst = out.data() + kBmpPixelOffset + (image.height() - 1 - y) * stride;
        for (std::size_t x = 0; x < image.width(); ++x) {
            const Rgb& px = image.at(x, y);
            *dst++ = px.b;
            *dst++ = px.g;
            *dst++ = px.r;
        }
    }
    return out;
}

Rgb24Image read_bmp_file(const std::filesystem::path& path) {
    const std::string data = read_file(path);
    return parse_bmp(std::span(reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
}

void write_bmp_file(const std::filesystem::path& path, const Rgb24Image& image) {
    const auto bytes = serialize_bmp(image);
    write_file(path, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

}  // namespace pgsteg
