#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace pgsteg {

// Strict UTF-8 <-> scalar value conversion. Overlong forms, surrogates and
// values above U+10FFFF are rejected with ErrorCode::InvalidUtf8.
std::u32string decode_utf8(std::string_view bytes);
std::string encode_utf8(std::u32string_view text);

// Removes one trailing "\n" or "\r\n", nothing else.
std::string_view strip_line_terminator(std::string_view text) noexcept;

// Whole file as bytes; throws ErrorCode::Io.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace pgsteg
