// Command-line front end: embed / check / mode gen / mode analyze / uniformity.
//
// Exit codes: 0 success (check: marked, uniformity: pass), 1 negative verdict,
// 2 usage error, 3 I/O or file-format error, 4 contract violation.

#include <cinttypes>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dhci/analysis.hpp"
#include "dhci/dhci.hpp"
#include "dhci/errors.hpp"
#include "dhci/media_io.hpp"
#include "dhci/modes.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitContract = 4;

struct Options {
    std::string cover, candidate, message, out;
    std::string key_hex = "00";
    std::string mode_source = "negation";
    double m = 2.0;
    double big_m = 6.0;
    std::uint64_t q = 17;
    double tau = 0.95;
    int n = 0;
    int l = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 1;
    double epsilon = 0.01;
    std::uint64_t t_max = 0;
};

dhci::Mode resolve_mode(const std::string& source) {
    if (source == "negation") return dhci::Mode::negation();
    if (source == "identity") return dhci::Mode::identity();
    if (source == "zero") return dhci::Mode::zero();
    return dhci::Mode::table(dhci::load_mode(source));
}

dhci::BitStream load_message(const std::string& path) {
    if (path.empty()) return dhci::BitStream{};
    return dhci::BitStream::from_bytes(dhci::read_file(path));
}

std::string watermark_digest(const std::vector<std::uint8_t>& bits) {
    const auto packed = dhci::BitStream(bits).to_bytes();
    const std::uint64_t digest =
        dhci::fnv1a(dhci::kFnvOffsetBasis, packed.data(), packed.size());
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, digest);
    return buf;
}

dhci::EmbeddingParams build_params(const Options& o) {
    dhci::EmbeddingParams p;
    p.mode = resolve_mode(o.mode_source);
    p.lsc_threshold = o.m;
    p.msc_threshold = o.big_m;
    p.iterations = o.q;
    p.key = dhci::key_from_hex(o.key_hex);
    p.similarity_threshold = o.tau;
    return p;
}

int run_embed(const Options& o) {
    const dhci::GrayImage cover = dhci::read_pgm(o.cover);
    const dhci::BitStream host = dhci::image_to_bits(cover);
    const dhci::BitStream message = load_message(o.message);
    const dhci::EmbeddingParams params = build_params(o);

    const std::vector<std::uint8_t> watermark = dhci::compute_watermark(host, message, params);
    const dhci::BitStream stego = dhci::dhci_embed(host, message, params);
    dhci::write_pgm(dhci::bits_to_image(stego, cover.width, cover.height), o.out);

    nlohmann::ordered_json doc;
    doc["l"] = watermark.size();
    doc["watermark_digest"] = watermark_digest(watermark);
    std::printf("%s\n", doc.dump().c_str());
    std::fprintf(stderr, "embedded over %zu LSC positions (q=%" PRIu64 ") into %s\n",
                 watermark.size(), o.q, o.out.c_str());
    return kExitOk;
}

int run_check(const Options& o) {
    const dhci::GrayImage cover = dhci::read_pgm(o.cover);
    const dhci::GrayImage candidate = dhci::read_pgm(o.candidate);
    if (candidate.width != cover.width || candidate.height != cover.height)
        throw dhci::ContractError("candidate dimensions differ from the cover");
    const dhci::BitStream host = dhci::image_to_bits(cover);
    const dhci::BitStream z = dhci::image_to_bits(candidate);
    const dhci::BitStream message = load_message(o.message);

    const dhci::CheckResult result = dhci::dhci_check(host, z, message, build_params(o));
    std::printf("%.6f %s\n", result.similarity, result.marked ? "MARKED" : "NOT-MARKED");
    return result.marked ? kExitOk : kExitNegative;
}

int run_mode_gen(const Options& o) {
    const dhci::GeneratedMode generated = dhci::generate_valid_mode(o.n, o.seed, 1000);
    dhci::save_mode(generated.instance, o.out);

    nlohmann::ordered_json doc;
    doc["n"] = o.n;
    doc["seed"] = o.seed;
    doc["tries"] = generated.tries;
    doc["path"] = o.out;
    std::printf("%s\n", doc.dump().c_str());
    std::fprintf(stderr, "mode accepted after %d tries, written to %s\n", generated.tries,
                 o.out.c_str());
    return kExitOk;
}

int run_mode_analyze(const Options& o) {
    const dhci::Mode mode = resolve_mode(o.mode_source);
    int n = o.n;
    if (!mode.size_parametric()) {
        if (n == 0) n = mode.native_size();
        if (n != mode.native_size())
            throw dhci::ContractError("--n disagrees with the mode file's size");
    } else if (n == 0) {
        std::fprintf(stderr, "error: --n is required for builtin mode '%s'\n",
                     o.mode_source.c_str());
        return kExitUsage;
    }

    dhci::ExperimentParams params;
    params.key = dhci::key_from_hex(o.key_hex);
    params.message = load_message(o.message);
    params.q = o.q;
    params.samples = o.samples;
    params.sampler_seed = o.seed;
    params.epsilon = o.epsilon;
    params.t_max = o.t_max;

    const dhci::SecurityReport report = dhci::full_report(mode, n, params);
    std::printf("%s\n", dhci::report_to_json(report).c_str());
    std::fprintf(stderr, "%s n=%d: chaos_secure=%s stego_secure_hypotheses=%s\n",
                 report.mode_name.c_str(), n, report.chaos_secure ? "true" : "false",
                 report.stego_secure_hypotheses ? "true" : "false");
    return kExitOk;
}

int run_uniformity(const Options& o) {
    const dhci::Mode mode = resolve_mode(o.mode_source);
    int l = o.l;
    if (l == 0 && !mode.size_parametric()) l = mode.native_size();
    if (l == 0) {
        std::fprintf(stderr, "error: --l is required for builtin mode '%s'\n",
                     o.mode_source.c_str());
        return kExitUsage;
    }
    const std::uint64_t samples =
        o.samples ? o.samples : 100 * (std::uint64_t{1} << l);
    const dhci::ChiSquareResult r = dhci::uniformity_experiment(
        mode, l, dhci::key_from_hex(o.key_hex), load_message(o.message), o.q, samples, o.seed);

    nlohmann::ordered_json doc;
    doc["chi_square"] = r.statistic;
    doc["dof"] = r.dof;
    doc["critical"] = r.critical;
    doc["pass"] = r.pass;
    std::printf("%s\n", doc.dump().c_str());
    std::fprintf(stderr, "%s\n", r.pass ? "PASS" : "FAIL");
    return r.pass ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"dhCI information hiding: chaotic asynchronous iterations on LSC bit planes"};
    app.require_subcommand(1);

    const auto hex_key = CLI::Validator(
        [](std::string& s) -> std::string {
            try {
                dhci::key_from_hex(s);
            } catch (const std::exception& e) {
                return std::string(e.what());
            }
            return {};
        },
        "HEXKEY");

    auto* embed = app.add_subcommand("embed", "Embed a message's watermark into a PGM cover");
    embed->add_option("--cover", o.cover, "cover image (binary PGM)")->required();
    embed->add_option("--message", o.message, "message file (raw bytes)")->required();
    embed->add_option("--key", o.key_hex, "embedding key, lowercase hex")
        ->required()
        ->check(hex_key);
    embed->add_option("--mode", o.mode_source, "negation|identity|zero|<mode file>");
    embed->add_option("--m", o.m, "LSC threshold (default 2)");
    embed->add_option("--M", o.big_m, "MSC threshold (default 6)");
    embed->add_option("--q", o.q, "iteration count (default 17)");
    embed->add_option("--out", o.out, "stego image path")->required();

    auto* check = app.add_subcommand("check", "Verify whether a candidate image is marked");
    check->add_option("--cover", o.cover, "original cover image")->required();
    check->add_option("--candidate", o.candidate, "image under test")->required();
    check->add_option("--message", o.message, "message file (raw bytes)")->required();
    check->add_option("--key", o.key_hex, "embedding key, lowercase hex")
        ->required()
        ->check(hex_key);
    check->add_option("--mode", o.mode_source, "negation|identity|zero|<mode file>");
    check->add_option("--m", o.m, "LSC threshold (default 2)");
    check->add_option("--M", o.big_m, "MSC threshold (default 6)");
    check->add_option("--q", o.q, "iteration count (default 17)");
    check->add_option("--tau", o.tau, "similarity threshold (default 0.95)");

    auto* mode_cmd = app.add_subcommand("mode", "Generate or analyze modes");
    mode_cmd->require_subcommand(1);
    auto* gen = mode_cmd->add_subcommand("gen", "Generate a strongly connected, doubly "
                                                "stochastic, primitive mode");
    gen->add_option("--n", o.n, "state size")->required();
    gen->add_option("--seed", o.seed, "generator seed (default 1)");
    gen->add_option("--out", o.out, "mode file path")->required();
    auto* analyze = mode_cmd->add_subcommand("analyze", "Emit the security report for a mode");
    analyze->add_option("--mode", o.mode_source, "negation|identity|zero|<mode file>")
        ->required();
    analyze->add_option("--n", o.n, "state size (required for builtin modes)");
    analyze->add_option("--key", o.key_hex, "key for the chi-square strategy")->check(hex_key);
    analyze->add_option("--message", o.message, "message file for the chi-square strategy");
    analyze->add_option("--q", o.q, "iterations per sample (default 17)");
    analyze->add_option("--samples", o.samples, "chi-square sample count (default 100*2^n)");
    analyze->add_option("--seed", o.seed, "sampler seed (default 1)");
    analyze->add_option("--epsilon", o.epsilon, "mixing tolerance (default 0.01)");
    analyze->add_option("--t-max", o.t_max, "mixing step bound (default 4^n)");

    auto* uniformity =
        app.add_subcommand("uniformity", "Chi-square uniformity test of the iterated dynamics");
    uniformity->add_option("--mode", o.mode_source, "negation|identity|zero|<mode file>")
        ->required();
    uniformity->add_option("--l", o.l, "state size (required for builtin modes)");
    uniformity->add_option("--key", o.key_hex, "strategy key")->check(hex_key);
    uniformity->add_option("--message", o.message, "message file for the strategy");
    uniformity->add_option("--q", o.q, "iterations per sample (default 17)");
    uniformity->add_option("--samples", o.samples, "sample count (default 100*2^l)");
    uniformity->add_option("--seed", o.seed, "sampler seed (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(embed)) return run_embed(o);
        if (app.got_subcommand(check)) return run_check(o);
        if (mode_cmd->got_subcommand(gen)) return run_mode_gen(o);
        if (mode_cmd->got_subcommand(analyze)) return run_mode_analyze(o);
        if (app.got_subcommand(uniformity)) return run_uniformity(o);
    } catch (const dhci::IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    } catch (const dhci::FormatError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitContract;
    }
    return kExitUsage;
}
