#include "pgsteg/error.hpp"

namespace pgsteg {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::Empty: return "Empty";
        case ErrorCode::TooLong: return "TooLong";
        case ErrorCode::CharacterNotInPangram: return "CharacterNotInPangram";
        case ErrorCode::SeedOutOfRange: return "SeedOutOfRange";
        case ErrorCode::OffsetOutOfRange: return "OffsetOutOfRange";
        case ErrorCode::ValueOutOfRange: return "ValueOutOfRange";
        case ErrorCode::WrongWidth: return "WrongWidth";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::BadVersion: return "BadVersion";
        case ErrorCode::Truncated: return "Truncated";
        case ErrorCode::LengthExceedsCapacity: return "LengthExceedsCapacity";
        case ErrorCode::BadSignature: return "BadSignature";
        case ErrorCode::UnsupportedHeader: return "UnsupportedHeader";
        case ErrorCode::UnsupportedBitDepth: return "UnsupportedBitDepth";
        case ErrorCode::UnsupportedCompression: return "UnsupportedCompression";
        case ErrorCode::TruncatedHeader: return "TruncatedHeader";
        case ErrorCode::TruncatedPixelArray: return "TruncatedPixelArray";
        case ErrorCode::ZeroDimension: return "ZeroDimension";
        case ErrorCode::MessageTooLong: return "MessageTooLong";
        case ErrorCode::UncoveredCharacters: return "UncoveredCharacters";
        case ErrorCode::ExplicitSeedsExhausted: return "ExplicitSeedsExhausted";
        case ErrorCode::CarrierTooSmall: return "CarrierTooSmall";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::InvalidUtf8: return "InvalidUtf8";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace pgsteg
