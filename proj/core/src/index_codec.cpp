#include "pgsteg/index_codec.hpp"

#include "pgsteg/error.hpp"

namespace pgsteg {
namespace {

void append_bits(BitStream& out, std::uint64_t value, std::size_t width) {
    for (std::size_t j = width; j-- > 0;) out.push_back(static_cast<std::uint8_t>((value >> j) & 1U));
}

std::uint64_t read_bits(std::span<const std::uint8_t> bits, std::size_t pos, std::size_t width) {
    std::uint64_t value = 0;
    for (std::size_t j = 0; j < width; ++j) value = (value << 1) | (bits[pos + j] & 1U);
    return value;
}

void check_bit_values(std::span<const std::uint8_t> bits) {
    for (const auto b : bits) {
        if (b > 1) throw Error(ErrorCode::ValueOutOfRange, "bit stream element is not 0 or 1");
    }
}

}  // namespace

std::string NineBits::to_string() const {
    std::string s(kWidth, '0');
    for (std::size_t j = 0; j < kWidth; ++j) {
        if (bit(j)) s[j] = '1';
    }
    return s;
}

NineBits to_nine_bits(std::uint32_t value) {
    if (value > NineBits::kMax) {
        throw Error(ErrorCode::ValueOutOfRange, std::to_string(value) + " does not fit in 9 bits");
    }
    return NineBits(static_cast<std::uint16_t>(value));
}

std::uint16_t from_nine_bits(std::span<const std::uint8_t> bits) {
    if (bits.size() != NineBits::kWidth) {
        throw Error(ErrorCode::WrongWidth, "expected 9 bits, got " + std::to_string(bits.size()));
    }
    check_bit_values(bits);
    return static_cast<std::uint16_t>(read_bits(bits, 0, NineBits::kWidth));
}

NineBits parse_nine_bits(std::string_view text) {
    if (text.size() != NineBits::kWidth) {
        throw Error(ErrorCode::WrongWidth, "expected 9 binary digits, got " + std::to_string(text.size()));
    }
    std::uint32_t value = 0;
    for (const char c : text) {
        if (c != '0' && c != '1') throw Error(ErrorCode::ValueOutOfRange, "not a binary digit");
        value = (value << 1) | static_cast<std::uint32_t>(c - '0');
    }
    return to_nine_bits(value);
}

BitStream build_payload(const StegoHeader& header, std::span<const IndexPair> pairs) {
    if (header.message_len != pairs.size()) {
        throw Error(ErrorCode::LengthMismatch, "header declares " + std::to_string(header.message_len) +
                                                   " characters but " + std::to_string(pairs.size()) +
                                                   " pairs were given");
    }
    if (header.version > 0x0F) {
        throw Error(ErrorCode::ValueOutOfRange, "version does not fit in 4 bits");
    }
    BitStream bits;
    bits.reserve(payload_bit_length(pairs.size()));
    append_bits(bits, header.version, 4);
    append_bits(bits, header.message_len, 32);
    for (const IndexPair& pair : pairs) {
        append_bits(bits, to_nine_bits(pair.seed).value(), NineBits::kWidth);
        append_bits(bits, to_nine_bits(pair.offset).value(), NineBits::kWidth);
    }
    return bits;
}

StegoHeader parse_header(std::span<const std::uint8_t> bits) {
    if (bits.size() < StegoHeader::kBits) {
        throw Error(ErrorCode::Truncated, "stream shorter than the 36-bit header");
    }
    check_bit_values(bits.first(StegoHeader::kBits));
    StegoHeader header;
    header.version = static_cast<std::uint8_t>(read_bits(bits, 0, 4));
    header.message_len = static_cast<std::uint32_t>(read_bits(bits, 4, 32));
    return header;
}

Payload parse_payload(std::span<const std::uint8_t> bits, std::uint64_t limit) {
    Payload payload;
    payload.header = parse_header(bits);
    if (payload.header.version != StegoHeader::kVersion) {
        throw Error(ErrorCode::BadVersion,
                    "header version " + std::to_string(payload.header.version) + ", no payload detected");
    }
    const std::uint64_t len = payload.header.message_len;
    if (len > limit) {
        throw Error(ErrorCode::LengthExceedsCapacity, "header claims " + std::to_string(len) +
                                                          " characters, carrier holds at most " +
                                                          std::to_string(limit));
    }
    const std::size_t needed = payload_bit_length(len);
    if (bits.size() < needed) {
        throw Error(ErrorCode::Truncated, "stream has " + std::to_string(bits.size()) + " bits, payload needs " +
                                              std::to_string(needed));
    }
    check_bit_values(bits.first(needed));
    payload.pairs.reserve(len);
    std::size_t pos = StegoHeader::kBits;
    for (std::uint64_t i = 0; i < len; ++i) {
        IndexPair pair;
        pair.seed = static_cast<std::uint16_t>(read_bits(bits, pos, NineBits::kWidth));
        pair.offset = static_cast<std::uint16_t>(read_bits(bits, pos + NineBits::kWidth, NineBits::kWidth));
        payload.pairs.push_back(pair);
        pos += kBitsPerPair;
    }
    return payload;
}

std::vector<NineBits> to_groups(std::span<const std::uint8_t> bits) {
    if (bits.size() % NineBits::kWidth != 0) {
        throw Error(ErrorCode::WrongWidth, "stream length " + std::to_string(bits.size()) +
                                               " is not a multiple of 9");
    }
    std::vector<NineBits> groups;
    groups.reserve(bits.size() / NineBits::kWidth);
    for (std::size_t pos = 0; pos < bits.size(); pos += NineBits::kWidth) {
        groups.push_back(to_nine_bits(from_nine_bits(bits.subspan(pos, NineBits::kWidth))));
    }
    return groups;
}

}  // namespace pgsteg
