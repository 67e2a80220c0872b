#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "pgsteg/bmp_io.hpp"
#include "pgsteg/engine.hpp"
#include "pgsteg/pangram.hpp"

namespace {

using namespace pgsteg;

const std::u32string kPangram =
    U"The quick brown fox jumps over the lazy dog. Pack my box with five dozen liquor jugs! "
    U"Sphinx of black quartz, judge my vow? 0123456789";

Rgb24Image noise_image(std::size_t w, std::size_t h) {
    std::mt19937_64 rng(1);
    Rgb24Image img(w, h);
    for (auto& px : img.pixels()) {
        const auto v = rng();
        px = Rgb{static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(v >> 8), static_cast<std::uint8_t>(v >> 16)};
    }
    return img;
}

std::u32string message_of(std::size_t n) {
    std::u32string msg;
    for (std::size_t i = 0; i < n; ++i) msg.push_back(kPangram[(i * 7) % kPangram.size()]);
    return msg;
}

void BM_Encode(benchmark::State& state) {
    const Pangram p = make_pangram(kPangram);
    const Rgb24Image cover = noise_image(800, 600);
    const std::u32string msg = message_of(static_cast<std::size_t>(state.range(0)));
    EncodeOptions opts{MatchMode::Exact, SeedSource::deterministic(7)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(encode(msg, p, cover, opts));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Encode)->Arg(64)->Arg(4096)->Arg(65536);

void BM_Decode(benchmark::State& state) {
    const Pangram p = make_pangram(kPangram);
    const std::u32string msg = message_of(static_cast<std::size_t>(state.range(0)));
    EncodeOptions opts{MatchMode::Exact, SeedSource::deterministic(7)};
    const Rgb24Image stego = encode(msg, p, noise_image(800, 600), opts).stego;
    for (auto _ : state) {
        benchmark::DoNotOptimize(decode(stego, p));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Decode)->Arg(64)->Arg(4096)->Arg(65536);

void BM_BmpRoundTrip(benchmark::State& state) {
    const Rgb24Image img = noise_image(800, 600);
    for (auto _ : state) {
        const auto bytes = serialize_bmp(img);
        benchmark::DoNotOptimize(parse_bmp(bytes));
    }
    state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(serialize_bmp(img).size()));
}
BENCHMARK(BM_BmpRoundTrip);

}  // namespace

BENCHMARK_MAIN();
