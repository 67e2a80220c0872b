// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "pgsteg/bmp_io.hpp"
#include "pgsteg/engine.hpp"
#include "pgsteg/error.hpp"
#include "pgsteg/index_codec.hpp"
#include "pgsteg/lsb_embed.hpp"
#include "pgsteg/pangram.hpp"
#include "pgsteg/text.hpp"

using namespace pgsteg;
using namespace pgsteg::testing;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        if (pass) detail.str("");
        pass = false;
        detail << why << "; ";
    }
};

EncodeResult encode_kill_joe(const Rgb24Image& cover) {
    const Pangram apple = make_pangram(kApplePangram);
    EncodeOptions opts{MatchMode::CaseInsensitive, SeedSource::explicit_seeds(kKillJoeSeeds)};
    return encode(kKillJoe, apple, cover, opts);
}

Rgb24Image paper_cover() {
    std::mt19937_64 rng(800600);
    return random_image(rng, 800, 600);
}

// 1. Offsets 79,9,44,23,5,212,14,6 for the worked example.
void pair_table(Outcome& o) {
    const Pangram apple = make_pangram(kApplePangram);
    if (apple.size() != 504) o.fail("pangram length " + std::to_string(apple.size()) + " != 504");
    for (std::size_t i = 0; i < kKillJoe.size(); ++i) {
        const std::size_t expected_index = kKillJoeIndexOf[i];
        const char32_t m = kKillJoe[i];
        std::size_t actual_index = apple.size();
        for (std::size_t k = 0; k < apple.size(); ++k) {
            if (chars_match(apple[k], m, MatchMode::CaseInsensitive) && k >= kKillJoeSeeds[i]) {
                actual_index = k;
                break;
            }
        }
        if (actual_index == apple.size()) {
            for (std::size_t k = 0; k < kKillJoeSeeds[i]; ++k) {
                if (chars_match(apple[k], m, MatchMode::CaseInsensitive)) {
                    actual_index = k;
                    break;
                }
            }
        }
        if (actual_index != expected_index) {
            o.fail("index_of for character " + std::to_string(i) + " is " + std::to_string(actual_index) +
                   ", expected " + std::to_string(expected_index) + " (check pangram transcription)");
        }
    }
    const EncodeResult r = encode_kill_joe(paper_cover());
    std::string got;
    for (std::size_t i = 0; i < r.pairs.size(); ++i) {
        got += (i ? "," : "") + std::to_string(r.pairs[i].offset);
        if (r.pairs[i].seed != kKillJoeSeeds[i]) o.fail("seed " + std::to_string(i) + " differs");
        if (r.pairs[i].offset != kKillJoeOffsets[i]) o.fail("offset " + std::to_string(i) + " differs");
    }
    if (o.pass) o.detail << "offsets " << got;
}

// 2. Data pixels carry the printed low-bit patterns; p14 is 500.
void pixel_table(Outcome& o) {
    const Rgb24Image cover = paper_cover();
    const EncodeResult r = encode_kill_joe(cover);
    const auto px = r.stego.pixels();
    for (std::size_t i = 0; i < kKillJoePixelTable.size(); ++i) {
        const Rgb p = px[kHeaderPixels + i];
        const std::string bits = low_bits(p.r, p.g, p.b);
        if (bits != kKillJoePixelTable[i]) {
            o.fail("p_" + std::to_string(i) + " = " + bits + ", table says " + kKillJoePixelTable[i]);
        }
    }
    const Rgb p14 = px[kHeaderPixels + 14];
    if (extract_nine(p14).value() != 500) o.fail("p_14 does not decode to 500");
    if (extract_nine(p14).to_string() == "111101000") o.fail("p_14 reproduces the misprint");
    if (o.pass) o.detail << "16/16 pixels match, p_14=" << extract_nine(p14).to_string();
}

// 3. Capacity arithmetic.
void capacity_formula(Outcome& o) {
    const auto mb = headerless_capacity(1024ULL * 1024ULL);
    const auto c = capacity(Rgb24Image(800, 600));
    if (mb != 174762) o.fail("1 MB headerless capacity " + std::to_string(mb));
    if (c != 239998) o.fail("800x600 capacity " + std::to_string(c));
    if (o.pass) o.detail << "1MB -> " << mb << ", 800x600 -> " << c;
}

// 4 and 5 share the same randomized sample.
struct RoundTripStats {
    int trials = 0;
    int decode_failures = 0;
    int carrier_violations = 0;
    double seconds = 0.0;
    std::string first_error;
};

RoundTripStats run_round_trips() {
    RoundTripStats s;
    std::mt19937_64 rng(20260101);
    const std::u32string alphabet =
        U"ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789 .,;:!?'\"()-$%\n\téèüßñ€漢字😀";
    const auto start = std::chrono::steady_clock::now();
    for (int t = 0; t < 1000; ++t, ++s.trials) {
        const std::size_t pan_len = std::uniform_int_distribution<std::size_t>(1, 512)(rng);
        std::u32string pan;
        for (std::size_t i = 0; i < pan_len; ++i) pan.push_back(alphabet[rng() % alphabet.size()]);
        const Pangram p = make_pangram(pan);

        const std::size_t msg_len = std::uniform_int_distribution<std::size_t>(0, 300)(rng);
        std::u32string msg;
        for (std::size_t i = 0; i < msg_len; ++i) msg.push_back(pan[rng() % pan.size()]);

        const std::size_t width = std::uniform_int_distribution<std::size_t>(1, 64)(rng);
        const std::size_t min_pixels = kHeaderPixels + 2 * msg_len;
        const std::size_t height = (min_pixels + width - 1) / width + rng() % 4;
        const Rgb24Image cover = random_image(rng, width, height);

        SeedSource seeds = SeedSource::system();
        switch (t % 3) {
            case 0: seeds = SeedSource::deterministic(rng()); break;
            case 1: {
                std::vector<std::uint32_t> list(msg_len);
                for (auto& v : list) v = static_cast<std::uint32_t>(rng() % pan_len);
                seeds = SeedSource::explicit_seeds(std::move(list));
                break;
            }
            default: break;
        }
        EncodeOptions opts{MatchMode::Exact, std::move(seeds)};
        try {
            const EncodeResult r = encode(msg, p, cover, opts);
            const Rgb24Image received = parse_bmp(serialize_bmp(r.stego));
            if (decode(received, p) != msg) {
                ++s.decode_failures;
                if (s.first_error.empty()) s.first_error = "mismatch at trial " + std::to_string(t);
            }
            const auto a = cover.pixels();
            const auto b = r.stego.pixels();
            const std::size_t used = kHeaderPixels + 2 * msg_len;
            for (std::size_t i = 0; i < a.size(); ++i) {
                const bool high_ok = ((a[i].r ^ b[i].r) & 0xF8) == 0 && ((a[i].g ^ b[i].g) & 0xF8) == 0 &&
                                     ((a[i].b ^ b[i].b) & 0xF8) == 0;
                if (!high_ok || (i >= used && !(a[i] == b[i]))) ++s.carrier_violations;
            }
        } catch (const std::exception& e) {
            ++s.decode_failures;
            if (s.first_error.empty()) s.first_error = e.what();
        }
    }
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return s;
}

void round_trip(Outcome& o, const RoundTripStats& s) {
    if (s.trials != 1000) o.fail("ran " + std::to_string(s.trials) + " trials");
    if (s.decode_failures) o.fail(std::to_string(s.decode_failures) + " failures, first: " + s.first_error);
    if (s.seconds >= 10.0) o.fail("took " + std::to_string(s.seconds) + " s");
    if (o.pass) o.detail << s.trials << " triples decoded exactly in " << s.seconds << " s";
}

void carrier_preservation(Outcome& o, const RoundTripStats& s) {
    if (s.carrier_violations) o.fail(std::to_string(s.carrier_violations) + " pixel violations");
    if (o.pass) o.detail << "0 violations across " << s.trials << " encodes";
}

// 6. Exhaustive small pangrams against the brute-force scan.
void oracle_equivalence(Outcome& o) {
    const std::u32string alphabet = U"abCc";
    const std::u32string probes = U"abCcAz";
    std::size_t checked = 0;
    std::size_t mismatches = 0;
    for (std::size_t len = 1; len <= 8; ++len) {
        std::size_t combos = 1;
        for (std::size_t k = 0; k < len; ++k) combos *= alphabet.size();
        std::u32string text(len, U'a');
        for (std::size_t code = 0; code < combos; ++code) {
            std::size_t rest = code;
            for (std::size_t k = 0; k < len; ++k, rest /= alphabet.size()) text[k] = alphabet[rest % alphabet.size()];
            const Pangram p = make_pangram(text);
            for (std::size_t seed = 0; seed < len; ++seed) {
                for (const char32_t m : probes) {
                    for (const MatchMode mode : {MatchMode::Exact, MatchMode::CaseInsensitive}) {
                        const auto expected = oracle_offset(text, seed, m, mode == MatchMode::CaseInsensitive);
                        // An absent character fails the same way from every seed.
                        if (!expected && seed != 0) continue;
                        ++checked;
                        try {
                            const std::size_t got = find_offset(p, seed, m, mode);
                            if (!expected || got != *expected) ++mismatches;
                        } catch (const Error& e) {
                            if (expected || e.code() != ErrorCode::CharacterNotInPangram) ++mismatches;
                        }
                    }
                }
            }
        }
    }
    if (mismatches) o.fail(std::to_string(mismatches) + " mismatches of " + std::to_string(checked));
    if (o.pass) o.detail << checked << " cases, 0 mismatches";
}

// 7. BMP round trips.
void bmp_round_trip(Outcome& o) {
    std::mt19937_64 rng(17);
    std::size_t images = 0;
    for (std::size_t w = 1; w <= 17; ++w) {
        for (int rep = 0; rep < 4; ++rep, ++images) {
            const std::size_t h = 1 + rng() % 9;
            const Rgb24Image img = random_image(rng, w, h);
            const auto bytes = serialize_bmp(img);
            if (!(parse_bmp(bytes) == img)) o.fail("parse(serialize) differs at width " + std::to_string(w));
            if (serialize_bmp(parse_bmp(bytes)) != bytes) o.fail("serialize(parse) differs at width " + std::to_string(w));
        }
    }
    // Hand-assembled canonical fixtures.
    const std::vector<std::uint8_t> white{
        'B', 'M', 58, 0, 0, 0, 0, 0, 0, 0, 54, 0, 0, 0, 40, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 24,
        0,   0,   0,  0, 0, 4, 0, 0, 0, 0, 0, 0,  0, 0, 0, 0, 0, 0, 0, 0,  0, 0, 0, 0, 0, 0xFF, 0xFF, 0xFF, 0};
    const std::vector<std::uint8_t> black2x1{
        'B', 'M', 62, 0, 0, 0, 0, 0, 0, 0, 54, 0, 0, 0, 40, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 1, 0, 24, 0, 0,
        0,   0,   0,  8, 0, 0, 0, 0, 0, 0, 0,  0, 0, 0, 0, 0,  0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
    for (const auto* fixture : {&white, &black2x1}) {
        if (serialize_bmp(parse_bmp(*fixture)) != *fixture) o.fail("canonical fixture not byte-identical");
    }
    if (!(parse_bmp(white) == Rgb24Image(1, 1, Rgb{255, 255, 255}))) o.fail("1x1 white fixture parse");
    if (o.pass) o.detail << images << " random images, 2 canonical fixtures";
}

// 8. Nine-bit codec bijection.
void nine_bit_codec(Outcome& o) {
    std::vector<bool> seen(512, false);
    for (std::uint32_t v = 0; v < 512; ++v) {
        const NineBits nb = to_nine_bits(v);
        BitStream bits;
        for (std::size_t j = 0; j < NineBits::kWidth; ++j) bits.push_back(nb.bit(j));
        const auto back = from_nine_bits(bits);
        if (back != v) o.fail("value " + std::to_string(v) + " round-trips to " + std::to_string(back));
        if (seen[nb.value()]) o.fail("collision at " + nb.to_string());
        seen[nb.value()] = true;
    }
    if (to_nine_bits(12).to_string() != "000001100") o.fail("12 renders wrong");
    if (parse_nine_bits("000001100").value() != 12) o.fail("000001100 parses wrong");
    if (to_nine_bits(212).to_string() != "011010100") o.fail("212 renders wrong");
    if (parse_nine_bits("011010100").value() != 212) o.fail("011010100 parses wrong");
    if (o.pass) o.detail << "512/512 values, 12<->000001100, 212<->011010100";
}

}  // namespace

int main() {
    const RoundTripStats stats = run_round_trips();
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"AC1 paper pair table", pair_table},
        {"AC2 paper pixel table", pixel_table},
        {"AC3 capacity formula", capacity_formula},
        {"AC4 round-trip property (1000 triples)", [&](Outcome& o) { round_trip(o, stats); }},
        {"AC5 carrier preservation", [&](Outcome& o) { carrier_preservation(o, stats); }},
        {"AC6 find_offset oracle equivalence", oracle_equivalence},
        {"AC7 BMP round-trip", bmp_round_trip},
        {"AC8 nine-bit codec bijection", nine_bit_codec},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            check(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail.str() << '\n';
        failed += o.pass ? 0 : 1;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
