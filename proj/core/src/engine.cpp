#include "pgsteg/engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <memory>

#include "pgsteg/lsb_embed.hpp"

namespace pgsteg {
namespace {

std::string describe_gaps(const std::set<char32_t>& gaps) {
    std::string out = "message characters missing from pangram:";
    for (const char32_t c : gaps) {
        char buf[16];
        std::snprintf(buf, sizeof buf, " U+%04X", static_cast<unsigned>(c));
        out += buf;
    }
    return out;
}

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

SeedSource SeedSource::deterministic(std::uint64_t seed64) { return SeedSource(SplitMix64(seed64)); }

SeedSource SeedSource::explicit_seeds(std::vector<std::uint32_t> seeds) {
    return SeedSource(Explicit{std::move(seeds), 0});
}

SeedSource SeedSource::system() { return SeedSource(std::make_unique<System>()); }

std::size_t SeedSource::next(std::size_t pangram_len) {
    return std::visit(
        Overloaded{
            [&](SplitMix64& rng) -> std::size_t { return static_cast<std::size_t>(rng() % pangram_len); },
            [&](Explicit& src) -> std::size_t {
                if (src.cursor >= src.seeds.size()) {
                    throw Error(ErrorCode::ExplicitSeedsExhausted,
                                "only " + std::to_string(src.seeds.size()) + " seeds supplied");
                }
                const std::uint32_t seed = src.seeds[src.cursor++];
                if (seed >= pangram_len) {
                    throw Error(ErrorCode::SeedOutOfRange, "seed " + std::to_string(seed) +
                                                               " is outside pangram of length " +
                                                               std::to_string(pangram_len));
                }
                return seed;
            },
            [&](std::unique_ptr<System>& src) -> std::size_t {
                std::uniform_int_distribution<std::size_t> dist(0, pangram_len - 1);
                return dist(src->device);
            },
        },
        state_);
}

UncoveredCharactersError::UncoveredCharactersError(std::set<char32_t> gaps)
    : Error(ErrorCode::UncoveredCharacters, describe_gaps(gaps)), gaps_(std::move(gaps)) {}

std::size_t capacity(const Rgb24Image& image) noexcept {
    const std::size_t n = image.pixel_count();
    return n < kHeaderPixels ? 0 : (n - kHeaderPixels) / 2;
}

EncodeResult encode(std::u32string_view message, const Pangram& pangram, const Rgb24Image& cover,
                    EncodeOptions& options) {
    if (cover.pixel_count() < kHeaderPixels) {
        throw Error(ErrorCode::CarrierTooSmall, "carrier has " + std::to_string(cover.pixel_count()) +
                                                    " pixels, the header alone needs 4");
    }
    const std::size_t cap = capacity(cover);
    if (message.size() > cap || message.size() > std::numeric_limits<std::uint32_t>::max()) {
        throw Error(ErrorCode::MessageTooLong, std::to_string(message.size()) +
                                                   " characters, carrier holds " + std::to_string(cap));
    }
    if (auto gaps = coverage_gaps(pangram, message, options.mode); !gaps.empty()) {
        throw UncoveredCharactersError(std::move(gaps));
    }

    EncodeResult result{cover, {}};
    result.pairs.reserve(message.size());
    for (const char32_t m : message) {
        const std::size_t seed = options.seeds.next(pangram.size());
        const std::size_t offset = find_offset(pangram, seed, m, options.mode);
        result.pairs.push_back(
            IndexPair{static_cast<std::uint16_t>(seed), static_cast<std::uint16_t>(offset)});
    }

    const StegoHeader header{StegoHeader::kVersion, static_cast<std::uint32_t>(message.size())};
    const BitStream bits = build_payload(header, result.pairs);
    const auto groups = to_groups(bits);
    auto pixels = result.stego.pixels();
    for (std::size_t i = 0; i < groups.size(); ++i) pixels[i] = embed_nine(pixels[i], groups[i]);
    return result;
}

std::u32string decode(const Rgb24Image& stego, const Pangram& pangram) {
    const auto pixels = stego.pixels();
    if (pixels.size() < kHeaderPixels) {
        throw Error(ErrorCode::Truncated, "image has fewer pixels than the header");
    }

    auto extract = [&](std::size_t count) {
        BitStream bits;
        bits.reserve(count * NineBits::kWidth);
        for (std::size_t i = 0; i < count; ++i) {
            const NineBits group = extract_nine(pixels[i]);
            for (std::size_t j = 0; j < NineBits::kWidth; ++j) bits.push_back(group.bit(j));
        }
        return bits;
    };

    // Header first so a garbage length never drives a full-image extraction.
    const StegoHeader header = parse_header(extract(kHeaderPixels));
    const std::size_t cap = capacity(stego);
    const std::size_t wanted = header.version == StegoHeader::kVersion && header.message_len <= cap
                                   ? kHeaderPixels + 2 * static_cast<std::size_t>(header.message_len)
                                   : kHeaderPixels;
    const Payload payload = parse_payload(extract(wanted), cap);

    std::u32string message;
    message.reserve(payload.pairs.size());
    const std::size_t len = pangram.size();
    for (std::size_t i = 0; i < payload.pairs.size(); ++i) {
        const IndexPair& pair = payload.pairs[i];
        if (pair.seed >= len || pair.offset >= len) {
            throw Error(ErrorCode::OffsetOutOfRange,
                        "character " + std::to_string(i) + " has seed " + std::to_string(pair.seed) +
                            " and offset " + std::to_string(pair.offset) + " but the pangram has " +
                            std::to_string(len) + " characters (wrong pangram or corrupted image)");
        }
        message.push_back(char_at(pangram, pair.seed, pair.offset));
    }
    return message;
}

DistortionReport compare(const Rgb24Image& cover, const Rgb24Image& stego) {
    if (cover.width() != stego.width() || cover.height() != stego.height()) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::to_string(cover.width()) + "x" + std::to_string(cover.height()) + " vs " +
                        std::to_string(stego.width()) + "x" + std::to_string(stego.height()));
    }
    DistortionReport report;
    double squared_sum = 0.0;
    auto account = [&](std::uint8_t a, std::uint8_t b) {
        const int delta = std::abs(static_cast<int>(a) - static_cast<int>(b));
        if (delta == 0) return;
        ++report.bytes_changed;
        report.max_channel_delta = std::max(report.max_channel_delta, static_cast<std::uint8_t>(delta));
        squared_sum += static_cast<double>(delta) * delta;
    };
    const auto a = cover.pixels();
    const auto b = stego.pixels();
    for (std::size_t i = 0; i < a.size(); ++i) {
        account(a[i].r, b[i].r);
        account(a[i].g, b[i].g);
        account(a[i].b, b[i].b);
    }
    report.mean_squared_error = squared_sum / (3.0 * static_cast<double>(a.size()));
    report.psnr_db = report.mean_squared_error == 0.0
                         ? std::numeric_limits<double>::infinity()
                         : 10.0 * std::log10(255.0 * 255.0 / report.mean_squared_error);
    return report;
}

}  // namespace pgsteg
