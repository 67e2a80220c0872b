#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pgsteg/bmp_io.hpp"
#include "pgsteg/error.hpp"
#include "pgsteg/index_codec.hpp"
#include "pgsteg/pangram.hpp"

namespace pgsteg {

/// Pixels 0-3 carry the 36-bit header.
inline constexpr std::size_t kHeaderPixels = StegoHeader::kBits / NineBits::kWidth;

class SplitMix64 {
  public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t operator()() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

  private:
    std::uint64_t state_;
};

/// Where seed indexes come from. Stateful: each draw advances it, so one
/// instance must not be shared between concurrent encodes.
class SeedSource {
  public:
    /// SplitMix64 stream, each seed = output mod pangram length.
    static SeedSource deterministic(std::uint64_t seed64);
    /// Consumed in order; validated against the pangram length on use.
    static SeedSource explicit_seeds(std::vector<std::uint32_t> seeds);
    /// std::random_device backed.
    static SeedSource system();

    /// Next seed in [0, pangram_len). Throws ErrorCode::SeedOutOfRange or
    /// ErrorCode::ExplicitSeedsExhausted for explicit sources.
    std::size_t next(std::size_t pangram_len);

  private:
    struct Explicit {
        std::vector<std::uint32_t> seeds;
        std::size_t cursor = 0;
    };
    struct System {
        std::random_device device;
    };
    using State = std::variant<SplitMix64, Explicit, std::unique_ptr<System>>;

    explicit SeedSource(State state) : state_(std::move(state)) {}

    State state_;
};

struct EncodeOptions {
    MatchMode mode = MatchMode::Exact;
    SeedSource seeds = SeedSource::system();
};

struct EncodeResult {
    Rgb24Image stego;
    std::vector<IndexPair> pairs;
};

/// Thrown by encode when the message uses characters the pangram lacks.
class UncoveredCharactersError : public Error {
  public:
    explicit UncoveredCharactersError(std::set<char32_t> gaps);
    const std::set<char32_t>& gaps() const noexcept { return gaps_; }

  private:
    std::set<char32_t> gaps_;
};

struct DistortionReport {
    std::size_t bytes_changed = 0;
    std::uint8_t max_channel_delta = 0;
    double mean_squared_error = 0.0;
    double psnr_db = 0.0;  ///< +infinity when the images are identical.
};

/// Characters the carrier can hold: two pixels each after the header.
std::size_t capacity(const Rgb24Image& image) noexcept;

/// Character capacity for a raw carrier of `bytes`, one character per 48
/// bits and no header. 1 MiB gives 174762.
constexpr std::uint64_t headerless_capacity(std::uint64_t bytes) noexcept { return bytes * 8 / 48; }

EncodeResult encode(std::u32string_view message, const Pangram& pangram, const Rgb24Image& cover,
                    EncodeOptions& options);

std::u32string decode(const Rgb24Image& stego, const Pangram& pangram);

DistortionReport compare(const Rgb24Image& cover, const Rgb24Image& stego);

}  // namespace pgsteg
