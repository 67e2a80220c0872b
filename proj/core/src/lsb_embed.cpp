#include "pgsteg/lsb_embed.hpp"

namespace pgsteg {
namespace {

constexpr std::uint8_t replace_low(std::uint8_t channel, unsigned bits) noexcept {
    return static_cast<std::uint8_t>((channel & ~kLowBitsMask) | (bits & kLowBitsMask));
}

}  // namespace

Rgb embed_nine(Rgb pixel, NineBits group) noexcept {
    const unsigned v = group.value();
    return Rgb{replace_low(pixel.r, v >> 6), replace_low(pixel.g, v >> 3), replace_low(pixel.b, v)};
}

NineBits extract_nine(Rgb pixel) noexcept {
    const unsigned v = ((pixel.r & kLowBitsMask) << 6) | ((pixel.g & kLowBitsMask) << 3) |
                       (pixel.b & kLowBitsMask);
    // v < 512 by construction.
    return to_nine_bits(v);
}

}  // namespace pgsteg
