#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>

namespace pgsteg {

enum class MatchMode {
    Exact,
    /// Folds ASCII A-Z onto a-z only; every other scalar compares exactly.
    CaseInsensitive,
};

bool chars_match(char32_t a, char32_t b, MatchMode mode) noexcept;

/// The first medium: a circular index space of 1..512 Unicode scalar values.
class Pangram {
  public:
    static constexpr std::size_t kMaxLength = 512;

    /// Throws ErrorCode::Empty or ErrorCode::TooLong.
    explicit Pangram(std::u32string chars);

    /// UTF-8 text as read from a pangram file; one trailing LF/CRLF is dropped.
    static Pangram from_utf8(std::string_view text);

    std::size_t size() const noexcept { return chars_.size(); }
    char32_t operator[](std::size_t index) const noexcept { return chars_[index]; }
    const std::u32string& chars() const noexcept { return chars_; }

    friend bool operator==(const Pangram&, const Pangram&) = default;

  private:
    std::u32string chars_;
};

Pangram make_pangram(std::u32string_view text);

/// Message characters with no match anywhere in the pangram.
std::set<char32_t> coverage_gaps(const Pangram& pangram, std::u32string_view message,
                                 MatchMode mode);

/// Circular distance from `seed` to the first character matching `target`,
/// counting the seed position itself as distance 0.
std::size_t find_offset(const Pangram& pangram, std::size_t seed, char32_t target,
                        MatchMode mode);

/// The character at (seed + offset) mod size.
char32_t char_at(const Pangram& pangram, std::size_t seed, std::size_t offset);

}  // namespace pgsteg
