#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pgsteg {

/// One bit per element, each 0 or 1, in stream order.
using BitStream = std::vector<std::uint8_t>;

/// A 9-bit index, bit 0 being the most significant (weight 256).
class NineBits {
  public:
    static constexpr std::size_t kWidth = 9;
    static constexpr std::uint16_t kMax = 511;

    constexpr NineBits() noexcept = default;

    std::uint16_t value() const noexcept { return value_; }
    bool bit(std::size_t j) const noexcept { return (value_ >> (kWidth - 1 - j)) & 1U; }

    /// "000001100" style rendering, MSB first.
    std::string to_string() const;

    friend bool operator==(NineBits, NineBits) = default;

  private:
    friend NineBits to_nine_bits(std::uint32_t value);
    explicit constexpr NineBits(std::uint16_t v) noexcept : value_(v) {}

    std::uint16_t value_ = 0;
};

/// Throws ErrorCode::ValueOutOfRange above 511.
NineBits to_nine_bits(std::uint32_t value);

/// Throws ErrorCode::WrongWidth unless exactly nine bits are given.
std::uint16_t from_nine_bits(std::span<const std::uint8_t> bits);

/// Parses a string of nine '0'/'1' characters.
NineBits parse_nine_bits(std::string_view text);

struct IndexPair {
    std::uint16_t seed = 0;
    std::uint16_t offset = 0;

    friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

struct StegoHeader {
    static constexpr std::uint8_t kVersion = 1;
    static constexpr std::size_t kBits = 36;

    std::uint8_t version = kVersion;
    std::uint32_t message_len = 0;

    friend bool operator==(const StegoHeader&, const StegoHeader&) = default;
};

/// Bits per encoded character: a seed group and an offset group.
inline constexpr std::size_t kBitsPerPair = 2 * NineBits::kWidth;

constexpr std::size_t payload_bit_length(std::uint64_t message_len) noexcept {
    return StegoHeader::kBits + kBitsPerPair * static_cast<std::size_t>(message_len);
}

/// Header bits then seed/offset groups in message order.
/// Throws ErrorCode::LengthMismatch or ErrorCode::ValueOutOfRange.
BitStream build_payload(const StegoHeader& header, std::span<const IndexPair> pairs);

/// Reads just the 36-bit preamble. Version is not validated here.
StegoHeader parse_header(std::span<const std::uint8_t> bits);

struct Payload {
    StegoHeader header;
    std::vector<IndexPair> pairs;
};

/// Inverse of build_payload. `limit` is the most characters the carrier can
/// hold; a header claiming more is rejected before any pair is read.
Payload parse_payload(std::span<const std::uint8_t> bits, std::uint64_t limit);

/// Splits a stream whose length is a multiple of nine into groups.
std::vector<NineBits> to_groups(std::span<const std::uint8_t> bits);

}  // namespace pgsteg
