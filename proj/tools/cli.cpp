#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "pgsteg/bmp_io.hpp"
#include "pgsteg/engine.hpp"
#include "pgsteg/error.hpp"
#include "pgsteg/pangram.hpp"
#include "pgsteg/text.hpp"

namespace pgsteg::cli {
namespace {

struct EncodeArgs {
    std::string pangram;
    std::string cover;
    std::string out;
    std::optional<std::string> message;
    std::optional<std::string> message_file;
    MatchMode mode = MatchMode::Exact;
    std::optional<std::uint64_t> rng_seed;
    std::optional<std::string> seeds;
};

struct DecodeArgs {
    std::string pangram;
    std::string stego;
    std::optional<std::string> out;
};

struct InspectArgs {
    std::string cover;
    std::string stego;
};

std::vector<std::uint32_t> parse_seed_list(const std::string& list) {
    std::vector<std::uint32_t> seeds;
    std::size_t start = 0;
    while (start <= list.size()) {
        const std::size_t comma = std::min(list.find(',', start), list.size());
        const std::string_view item(list.data() + start, comma - start);
        std::uint32_t value = 0;
        const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || end != item.data() + item.size()) {
            throw Error(ErrorCode::ValueOutOfRange, "bad seed '" + std::string(item) + "' in --seeds");
        }
        seeds.push_back(value);
        start = comma + 1;
    }
    return seeds;
}

Pangram load_pangram(const std::string& path) { return Pangram::from_utf8(read_file(path)); }

int do_encode(const EncodeArgs& a, std::ostream& out) {
    const Pangram pangram = load_pangram(a.pangram);
    const Rgb24Image cover = read_bmp_file(a.cover);
    const std::u32string message =
        a.message ? decode_utf8(*a.message)
                  : decode_utf8(strip_line_terminator(read_file(*a.message_file)));

    EncodeOptions options{a.mode, a.seeds      ? SeedSource::explicit_seeds(parse_seed_list(*a.seeds))
                                  : a.rng_seed ? SeedSource::deterministic(*a.rng_seed)
                                               : SeedSource::system()};
    const EncodeResult result = encode(message, pangram, cover, options);
    write_bmp_file(a.out, result.stego);

    out << "characters=" << message.size() << '\n'
        << "capacity=" << capacity(cover) << '\n'
        << "pairs=" << result.pairs.size() << '\n'
        << "pixels_used=" << kHeaderPixels + 2 * result.pairs.size() << '\n';
    return kExitOk;
}

int do_decode(const DecodeArgs& a, std::ostream& out) {
    const Pangram pangram = load_pangram(a.pangram);
    const Rgb24Image stego = read_bmp_file(a.stego);
    const std::string message = encode_utf8(decode(stego, pangram));
    if (a.out) {
        write_file(*a.out, message);
    } else {
        out << message;
    }
    return kExitOk;
}

int do_capacity(const std::string& cover, std::ostream& out) {
    out << capacity(read_bmp_file(cover)) << '\n';
    return kExitOk;
}

int do_inspect(const InspectArgs& a, std::ostream& out) {
    const DistortionReport r = compare(read_bmp_file(a.cover), read_bmp_file(a.stego));
    out << "bytes_changed=" << r.bytes_changed << '\n'
        << "max_channel_delta=" << static_cast<unsigned>(r.max_channel_delta) << '\n'
        << std::setprecision(6) << std::fixed << "mean_squared_error=" << r.mean_squared_error << '\n';
    if (std::isinf(r.psnr_db)) {
        out << "psnr_db=inf\n";
    } else {
        out << "psnr_db=" << r.psnr_db << '\n';
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hide text in a 24-bit BMP by indexing into a pangram"};
    app.name("pgsteg");
    app.require_subcommand(1);

    EncodeArgs enc;
    auto* encode_cmd = app.add_subcommand("encode", "Embed a message into a cover image");
    encode_cmd->add_option("--pangram", enc.pangram, "UTF-8 pangram file")->required();
    encode_cmd->add_option("--cover", enc.cover, "Cover BMP (24-bit, uncompressed)")->required();
    encode_cmd->add_option("--out", enc.out, "Stego BMP to write")->required();
    auto* msg_opt = encode_cmd->add_option("--message", enc.message, "Secret message (UTF-8)");
    auto* msg_file_opt = encode_cmd->add_option("--message-file", enc.message_file, "File holding the message");
    msg_opt->excludes(msg_file_opt);
    encode_cmd->add_option("--match-mode", enc.mode, "exact or fold")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, MatchMode>{{"exact", MatchMode::Exact}, {"fold", MatchMode::CaseInsensitive}}));
    auto* rng_opt = encode_cmd->add_option("--rng-seed", enc.rng_seed, "Deterministic SplitMix64 seed");
    auto* seeds_opt = encode_cmd->add_option("--seeds", enc.seeds, "Comma-separated explicit seed indexes");
    seeds_opt->excludes(rng_opt);

    DecodeArgs dec;
    auto* decode_cmd = app.add_subcommand("decode", "Recover a message from a stego image");
    decode_cmd->add_option("--pangram", dec.pangram, "UTF-8 pangram file")->required();
    decode_cmd->add_option("--stego", dec.stego, "Stego BMP")->required();
    decode_cmd->add_option("--out", dec.out, "Write the message here instead of stdout");

    std::string capacity_cover;
    auto* capacity_cmd = app.add_subcommand("capacity", "Print how many characters a cover can hold");
    capacity_cmd->add_option("--cover", capacity_cover, "Cover BMP")->required();

    InspectArgs insp;
    auto* inspect_cmd = app.add_subcommand("inspect", "Report distortion between cover and stego");
    inspect_cmd->add_option("--cover", insp.cover, "Cover BMP")->required();
    inspect_cmd->add_option("--stego", insp.stego, "Stego BMP")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (*encode_cmd && !*msg_opt && !*msg_file_opt) {
            throw CLI::RequiredError("one of --message or --message-file");
        }
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }

    try {
        if (*encode_cmd) return do_encode(enc, out);
        if (*decode_cmd) return do_decode(dec, out);
        if (*capacity_cmd) return do_capacity(capacity_cover, out);
        return do_inspect(insp, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        if (e.code() == ErrorCode::BadVersion) {
            err << "no payload detected\n";
            return kExitNoPayload;
        }
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace pgsteg::cli
