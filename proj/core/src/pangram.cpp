#include "pgsteg/pangram.hpp"

#include <cstdio>
#include <string>
#include <utility>

#include "pgsteg/error.hpp"
#include "pgsteg/text.hpp"

namespace pgsteg {
namespace {

constexpr char32_t fold_ascii(char32_t c) noexcept {
    return (c >= U'A' && c <= U'Z') ? c + (U'a' - U'A') : c;
}

void check_index(const Pangram& pangram, std::size_t index, ErrorCode code, const char* what) {
    if (index >= pangram.size()) {
        throw Error(code, std::string(what) + " " + std::to_string(index) +
                              " is outside pangram of length " + std::to_string(pangram.size()));
    }
}

}  // namespace

bool chars_match(char32_t a, char32_t b, MatchMode mode) noexcept {
    if (mode == MatchMode::CaseInsensitive) return fold_ascii(a) == fold_ascii(b);
    return a == b;
}

Pangram::Pangram(std::u32string chars) : chars_(std::move(chars)) {
    if (chars_.empty()) throw Error(ErrorCode::Empty, "pangram has no characters");
    if (chars_.size() > kMaxLength) {
        throw Error(ErrorCode::TooLong, "pangram has " + std::to_string(chars_.size()) +
                                            " characters, limit is " + std::to_string(kMaxLength));
    }
}

Pangram Pangram::from_utf8(std::string_view text) {
    return Pangram(decode_utf8(strip_line_terminator(text)));
}

Pangram make_pangram(std::u32string_view text) { return Pangram(std::u32string(text)); }

std::set<char32_t> coverage_gaps(const Pangram& pangram, std::u32string_view message,
                                 MatchMode mode) {
    std::set<char32_t> gaps;
    std::set<char32_t> seen;
    for (const char32_t m : message) {
        if (!seen.insert(m).second) continue;
        bool found = false;
        for (const char32_t c : pangram.chars()) {
            if (chars_match(c, m, mode)) {
                found = true;
                break;
            }
        }
        if (!found) gaps.insert(m);
    }
    return gaps;
}

std::size_t find_offset(const Pangram& pangram, std::size_t seed, char32_t target,
                        MatchMode mode) {
    check_index(pangram, seed, ErrorCode::SeedOutOfRange, "seed");
    const std::size_t len = pangram.size();
    std::size_t index = seed;
    for (std::size_t distance = 0; distance < len; ++distance) {
        if (chars_match(pangram[index], target, mode)) return distance;
        if (++index == len) index = 0;
    }
    char name[16];
    std::snprintf(name, sizeof name, "U+%04X", static_cast<unsigned>(target));
    throw Error(ErrorCode::CharacterNotInPangram, std::string(name) + " does not occur");
}

char32_t char_at(const Pangram& pangram, std::size_t seed, std::size_t offset) {
    check_index(pangram, seed, ErrorCode::SeedOutOfRange, "seed");
    check_index(pangram, offset, ErrorCode::OffsetOutOfRange, "offset");
    return pangram[(seed + offset) % pangram.size()];
}

}  // namespace pgsteg
