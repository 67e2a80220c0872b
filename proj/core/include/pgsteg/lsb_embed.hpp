#pragma once

#include <cstdint>

#include "pgsteg/bmp_io.hpp"
#include "pgsteg/index_codec.hpp"

namespace pgsteg {

inline constexpr std::uint8_t kLowBitsMask = 0x07;

/// Writes bits 0-2 of the group into the low three bits of R, bits 3-5 into
/// G and bits 6-8 into B. The five high bits of every channel are kept.
Rgb embed_nine(Rgb pixel, NineBits group) noexcept;

/// Reads the low three bits of R, G, then B back into a group.
NineBits extract_nine(Rgb pixel) noexcept;

}  // namespace pgsteg
