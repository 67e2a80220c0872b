#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pgsteg {

enum class ErrorCode {
    // pangram
    Empty,
    TooLong,
    CharacterNotInPangram,
    SeedOutOfRange,
    OffsetOutOfRange,
    // index_codec
    ValueOutOfRange,
    WrongWidth,
    LengthMismatch,
    BadVersion,
    Truncated,
    LengthExceedsCapacity,
    // bmp_io
    BadSignature,
    UnsupportedHeader,
    UnsupportedBitDepth,
    UnsupportedCompression,
    TruncatedHeader,
    TruncatedPixelArray,
    ZeroDimension,
    // engine
    MessageTooLong,
    UncoveredCharacters,
    ExplicitSeedsExhausted,
    CarrierTooSmall,
    DimensionMismatch,
    // text / files
    InvalidUtf8,
    Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& detail);

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace pgsteg
