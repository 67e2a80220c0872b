#pragma once

// Shared fixtures and independent oracles for the test suites. Nothing here
// calls into the code paths it is used to check.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pgsteg/bmp_io.hpp"
#include "pgsteg/pangram.hpp"

namespace pgsteg::testing {

// The 504-character apple pangram from the worked "KILL JOE" example.
inline constexpr std::u32string_view kApplePangram =
    U"The apple is the pomaceous fruit which requires special care and there are more than "
    U"7,500 known cultivars of apples. Alexander the Great is credited with finding dwarfed "
    U"apples in Kazakhstan. The United States is just the second producer, with more than 6% of "
    U"world production; around $6 billion. The apple forms a tree, reaching 3 to 12 meters (9.8 "
    U"to 39 ft) tall, with a broad, often densely twiggy crown. The leaves are arranged 1.2 to "
    U"2.4 in broad on a 0.79 to 2.0 in petiole with just an acute tip.";

inline constexpr std::u32string_view kKillJoe = U"KILL JOE";
inline const std::vector<std::uint32_t> kKillJoeSeeds{12, 1, 130, 340, 50, 2, 62, 500};
inline const std::vector<std::uint32_t> kKillJoeOffsets{79, 9, 44, 23, 5, 212, 14, 6};
inline const std::vector<std::uint32_t> kKillJoeIndexOf{91, 10, 174, 363, 55, 214, 76, 2};

// Low-3-bit patterns of R, G, B for the sixteen data pixels, as printed in
// the worked example's pixel table.
inline const std::vector<std::string> kKillJoePixelTable{
    "000001100", "001001111", "000000001", "000001001", "010000010", "000101100",
    "101010100", "000010111", "000110010", "000000101", "000000010", "011010100",
    "000111110", "000001110", "111110100", "000000110"};

inline char32_t fold(char32_t c) { return (c >= U'A' && c <= U'Z') ? c + 32 : c; }

// Brute-force circular scan: walk every distance from the seed.
inline std::optional<std::size_t> oracle_offset(std::u32string_view pan, std::size_t seed,
                                                char32_t m, bool fold_case) {
    for (std::size_t d = 0; d < pan.size(); ++d) {
        const char32_t c = pan[(seed + d) % pan.size()];
        if (fold_case ? fold(c) == fold(m) : c == m) return d;
    }
    return std::nullopt;
}

// Absolute position of the first match at or after seed, expressed as
// index_of - seed, plus the length when negative.
inline std::optional<std::size_t> oracle_offset_by_formula(std::u32string_view pan, std::size_t seed,
                                                           char32_t m) {
    for (std::size_t i = seed; i < pan.size(); ++i) {
        if (pan[i] == m) return i - seed;
    }
    for (std::size_t i = 0; i < seed; ++i) {
        if (pan[i] == m) return static_cast<std::size_t>(static_cast<long>(i) - static_cast<long>(seed) +
                                                         static_cast<long>(pan.size()));
    }
    return std::nullopt;
}

// Bit-by-bit channel surgery written against the r5..r7 bit naming rather
// than shifts of the packed value.
struct OraclePixel {
    std::uint8_t r, g, b;
};
inline OraclePixel oracle_embed(OraclePixel px, std::string_view nine) {
    auto set_low = [](std::uint8_t ch, std::string_view three) {
        for (int j = 0; j < 3; ++j) {
            const int weight = 1 << (2 - j);
            if (three[j] == '1') {
                ch = static_cast<std::uint8_t>(ch | weight);
            } else {
                ch = static_cast<std::uint8_t>(ch & ~weight);
            }
        }
        return ch;
    };
    return {set_low(px.r, nine.substr(0, 3)), set_low(px.g, nine.substr(3, 3)), set_low(px.b, nine.substr(6, 3))};
}

inline std::string low_bits(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    std::string s;
    for (const std::uint8_t ch : {r, g, b}) {
        for (int j = 2; j >= 0; --j) s.push_back(((ch >> j) & 1) ? '1' : '0');
    }
    return s;
}

inline Rgb24Image random_image(std::mt19937_64& rng, std::size_t width, std::size_t height) {
    std::uniform_int_distribution<int> byte(0, 255);
    std::vector<Rgb> pixels(width * height);
    for (auto& px : pixels) {
        px = Rgb{static_cast<std::uint8_t>(byte(rng)), static_cast<std::uint8_t>(byte(rng)),
                 static_cast<std::uint8_t>(byte(rng))};
    }
    return Rgb24Image(width, height, std::move(pixels));
}

inline std::vector<std::uint8_t> as_bytes(std::string_view s) {
    return {s.begin(), s.end()};
}

}  // namespace pgsteg::testing
