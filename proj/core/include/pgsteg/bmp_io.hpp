#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace pgsteg {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Decoded 24-bit image. Pixels are row-major with row 0 at the top, so
/// pixel index i is the i-th pixel in raster order.
class Rgb24Image {
  public:
    /// Throws ErrorCode::ZeroDimension for a zero width or height.
    Rgb24Image(std::size_t width, std::size_t height, Rgb fill = {});
    /// Throws ErrorCode::ZeroDimension, or ErrorCode::LengthMismatch when
    /// pixels.size() != width * height.
    Rgb24Image(std::size_t width, std::size_t height, std::vector<Rgb> pixels);

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    std::size_t pixel_count() const noexcept { return pixels_.size(); }

    Rgb& at(std::size_t x, std::size_t y) { return pixels_[y * width_ + x]; }
    const Rgb& at(std::size_t x, std::size_t y) const { return pixels_[y * width_ + x]; }

    std::span<Rgb> pixels() noexcept { return pixels_; }
    std::span<const Rgb> pixels() const noexcept { return pixels_; }

    friend bool operator==(const Rgb24Image&, const Rgb24Image&) = default;

  private:
    std::size_t width_;
    std::size_t height_;
    std::vector<Rgb> pixels_;
};

inline constexpr std::size_t kBmpFileHeaderSize = 14;
inline constexpr std::size_t kBmpInfoHeaderSize = 40;
inline constexpr std::size_t kBmpPixelOffset = kBmpFileHeaderSize + kBmpInfoHeaderSize;

/// Bytes per stored row, padded to a multiple of four.
constexpr std::size_t bmp_row_stride(std::size_t width) noexcept { return (3 * width + 3) / 4 * 4; }

/// Accepts BITMAPINFOHEADER files, 24 bpp, BI_RGB, bottom-up or top-down.
Rgb24Image parse_bmp(std::span<const std::uint8_t> bytes);

/// Canonical form: 54-byte header, bottom-up rows, zero padding.
std::vector<std::uint8_t> serialize_bmp(const Rgb24Image& image);

Rgb24Image read_bmp_file(const std::filesystem::path& path);
void write_bmp_file(const std::filesystem::path& path, const Rgb24Image& image);

}  // namespace pgsteg
