#include "cli.hpp"

#include "narayana/analysis.hpp"
#include "narayana/codec.hpp"
#include "narayana/error.hpp"
#include "narayana/sequences.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace narayana::cli {

namespace {

using nlohmann::json;

// Bad input text, reported with exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string real(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Keeps trailing zeros, so the output always shows 17 significant digits.
std::string real17(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%#.17g", v);
    return buf;
}

// Writes to --output when given, else to the injected stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback, bool binary)
    {
        if (path.empty()) {
            stream_ = &fallback;
            return;
        }
        file_.open(path, binary ? std::ios::binary | std::ios::out : std::ios::out);
        if (!file_) throw InputError("cannot open output file " + path);
        stream_ = &file_;
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_ = nullptr;
};

std::string read_all(const std::string& path, std::istream& fallback, bool binary)
{
    if (path.empty()) return {std::istreambuf_iterator<char>(fallback), std::istreambuf_iterator<char>()};
    std::ifstream file(path, binary ? std::ios::binary | std::ios::in : std::ios::in);
    if (!file) throw InputError("cannot open input file " + path);
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

std::vector<Integer> parse_integer_lines(const std::string& text)
{
    std::vector<Integer> values;
    std::istringstream lines(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        const std::string_view token(line.data() + first, last - first + 1);

        Integer v = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec == std::errc::result_out_of_range && token.front() != '-') {
            throw CapacityExceeded("line " + std::to_string(line_no) + ": " + std::string(token) +
                                   " exceeds 2^63 - 1");
        }
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw InputError("line " + std::to_string(line_no) + ": '" + std::string(token) + "' is not an integer");
        }
        if (v < 1) {
            throw InputError("line " + std::to_string(line_no) + ": " + std::to_string(v) +
                             " is not a positive integer");
        }
        values.push_back(v);
    }
    return values;
}

template <typename T>
json to_json_array(const std::vector<T>& v)
{
    json a = json::array();
    for (const auto& x : v) a.push_back(x);
    return a;
}

// encode ---------------------------------------------------------------------

struct EncodeOptions {
    std::string input;
    std::string output;
};

int cmd_encode(const EncodeOptions& o, std::istream& in, std::ostream& out, std::ostream& err)
{
    const auto values = parse_integer_lines(read_all(o.input, in, false));
    const auto buffer = encode_stream(values);
    Sink sink(o.output, out, true);
    const auto bytes = buffer.bytes();
    sink.get().write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    sink.get().flush();
    const double mean =
        values.empty() ? 0.0 : static_cast<double>(buffer.bit_length()) / static_cast<double>(values.size());
    err << "count=" << values.size() << " total_bits=" << buffer.bit_length() << " mean_bits=" << real(mean)
        << '\n';
    return kSuccess;
}

// decode ---------------------------------------------------------------------

struct DecodeOptions {
    std::string input;
    std::string output;
    bool lenient = false;
};

int cmd_decode(const DecodeOptions& o, std::istream& in, std::ostream& out, std::ostream& err)
{
    const auto raw = read_all(o.input, in, true);
    const auto buffer = BitBuffer::from_bytes(std::vector<std::uint8_t>(raw.begin(), raw.end()));

    std::vector<Integer> values;
    if (o.lenient) {
        const auto result = decode_stream_lenient(buffer);
        for (const auto& s : result.segments) {
            if (!s.value) err << "skipped bits [" << s.begin << ", " << s.end << ")\n";
        }
        if (result.residue_has_ones) {
            err << "skipped trailing bits [" << result.residue_begin << ", " << buffer.padded_bit_length() << ")\n";
        }
        values = result.values();
    } else {
        values = decode_stream(buffer, StreamMode::Strict);
    }

    Sink sink(o.output, out, false);
    for (auto v : values) sink.get() << v << '\n';
    return kSuccess;
}

// stats ----------------------------------------------------------------------

struct StatsOptions {
    Integer max_n = 1000;
    std::string format = "csv";
    std::string emit = "both";
    std::string output;
};

int cmd_stats(const StatsOptions& o, std::ostream& out)
{
    if (o.max_n < 1) throw InputError("--max must be at least 1");
    const bool want_curve = o.emit != "histogram";
    const bool want_histogram = o.emit != "curve";
    std::vector<analysis::CurvePoint> curve;
    analysis::LengthHistogram histogram;
    if (want_curve) curve = analysis::length_curve(o.max_n);
    if (want_histogram) histogram = analysis::length_histogram(o.max_n);

    Sink sink(o.output, out, false);
    auto& s = sink.get();
    if (o.format == "json") {
        json curve_json = json::array();
        for (const auto& p : curve) curve_json.push_back({{"n", p.n}, {"bits", p.bits}});
        json hist_json = json::array();
        for (const auto& [length, count] : histogram.entries) {
            hist_json.push_back({{"length", length}, {"count", count}, {"complete", histogram.complete(length)}});
        }
        if (want_curve && want_histogram) s << json{{"curve", curve_json}, {"histogram", hist_json}}.dump() << '\n';
        else s << (want_curve ? curve_json : hist_json).dump() << '\n';
        return kSuccess;
    }
    if (want_curve) {
        s << "n,bits\n";
        for (const auto& p : curve) s << p.n << ',' << p.bits << '\n';
    }
    if (want_curve && want_histogram) s << '\n';
    if (want_histogram) {
        s << "length,count,complete\n";
        for (const auto& [length, count] : histogram.entries) {
            s << length << ',' << count << ',' << (histogram.complete(length) ? "true" : "false") << '\n';
        }
    }
    return kSuccess;
}

// ratio ----------------------------------------------------------------------

struct RatioOptions {
    std::size_t terms = 100;
    std::string format = "csv";
    std::string output;
};

int cmd_ratio(const RatioOptions& o, std::ostream& out)
{
    if (o.terms < 2) throw InputError("--terms must be at least 2");
    const auto samples = consecutive_ratios(o.terms);
    const double limit = narayana_ratio_limit(1e-14);

    Sink sink(o.output, out, false);
    auto& s = sink.get();
    if (o.format == "json") {
        // Raw numbers keep all 17 significant digits in the JSON text.
        s << '[';
        for (const auto& r : samples) s << "{\"k\":" << r.k << ",\"ratio\":" << real(r.ratio) << "},";
        s << "{\"k\":\"limit\",\"ratio\":" << real17(limit) << "}]\n";
        return kSuccess;
    }
    s << "k,ratio\n";
    for (const auto& r : samples) s << r.k << ',' << real(r.ratio) << '\n';
    s << "limit," << real17(limit) << '\n';
    return kSuccess;
}

// variants -------------------------------------------------------------------

struct VariantOptions {
    std::optional<Integer> a;
    std::vector<Integer> seeds;
    Integer max_n = 100;
    int gap = 3;
    std::uint64_t node_budget = kDefaultNodeBudget;
    std::string format = "csv";
    std::string output;
};

int cmd_variants(const VariantOptions& o, std::ostream& out, std::ostream& err)
{
    if (o.max_n < 1 || o.max_n > analysis::kMaxCoverageN) {
        throw InputError("--max must lie in [1, " + std::to_string(analysis::kMaxCoverageN) + "]");
    }
    const auto constraint = constraint_from_gap(o.gap);

    SequenceKind sequence;
    std::vector<Integer> claimed;
    if (!o.seeds.empty()) {
        if (o.seeds.size() != 3) throw InputError("--seeds takes exactly three integers a,b,c");
        sequence = kind::General{o.seeds[0], o.seeds[1], o.seeds[2]};
        if (o.a) claimed = analysis::published_unrepresentable(*o.a);
    } else if (o.a) {
        if (!analysis::supported_variant(*o.a)) {
            throw InputError("--a must be one of -5, -4, -3, -2, -1, 2");
        }
        sequence = kind::Variant{*o.a};
        claimed = analysis::published_unrepresentable(*o.a);
    } else {
        throw InputError("variants needs --a or --seeds");
    }

    auto report = analysis::sequence_coverage(sequence, o.max_n, constraint, claimed, o.node_budget);
    report.variant_a = o.a.value_or(0);

    Sink sink(o.output, out, false);
    auto& s = sink.get();
    if (o.format == "json") {
        json j{{"sequence", describe(report.sequence)},
               {"gap", static_cast<int>(report.constraint.gap())},
               {"max_n", report.max_n},
               {"unrepresentable", to_json_array(report.unrepresentable)},
               {"indeterminate", to_json_array(report.indeterminate)},
               {"claimed", to_json_array(report.claimed)},
               {"claimed_but_representable", to_json_array(report.claimed_but_representable)},
               {"unrepresentable_unclaimed", to_json_array(report.unrepresentable_unclaimed)}};
        s << j.dump() << '\n';
    } else {
        s << "n\n";
        for (auto n : report.unrepresentable) s << n << '\n';
        s << "\ndiscrepancy,n\n";
        for (auto n : report.claimed_but_representable) s << "claimed_but_representable," << n << '\n';
        for (auto n : report.unrepresentable_unclaimed) s << "unrepresentable_unclaimed," << n << '\n';
    }

    err << describe(report.sequence) << " gap>=" << report.constraint.gap() << " max=" << report.max_n
        << ": " << report.unrepresentable.size() << " unrepresentable, " << report.claimed_but_representable.size()
        << " claimed but representable, " << report.indeterminate.size() << " indeterminate\n";
    if (!report.indeterminate.empty()) {
        err << "search budget exhausted for " << report.indeterminate.size() << " values\n";
        return kCapacityError;
    }
    return kSuccess;
}

// bench ----------------------------------------------------------------------

struct BenchOptions {
    std::string dist;
    std::string samples = "10000";
    std::uint64_t seed = 1;
    std::vector<std::string> codecs{"narayana", "fibonacci", "elias-gamma"};
    std::string format = "csv";
    std::string output;
};

int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err)
{
    const auto dist = Distribution::parse(o.dist);
    std::vector<Code> codes;
    for (const auto& name : o.codecs) {
        const auto code = parse_code(name);
        if (!code) throw InputError("unknown codec '" + name + "'");
        codes.push_back(*code);
    }

    analysis::BenchReport report;
    if (o.samples == "all") {
        report = analysis::compare_codes(enumerate_support(dist), dist.name(), codes);
    } else {
        std::size_t count = 0;
        const auto [ptr, ec] = std::from_chars(o.samples.data(), o.samples.data() + o.samples.size(), count);
        if (ec != std::errc{} || ptr != o.samples.data() + o.samples.size() || count == 0) {
            throw InputError("--samples must be a positive integer or 'all'");
        }
        report = analysis::compare_codes(dist, count, o.seed, codes);
    }

    Sink sink(o.output, out, false);
    auto& s = sink.get();
    if (o.format == "json") {
        s << '[';
        for (std::size_t i = 0; i < report.records.size(); ++i) {
            const auto& r = report.records[i];
            s << (i ? "," : "") << "{\"codec\":" << json(r.codec).dump() << ",\"distribution\":"
              << json(r.distribution).dump() << ",\"samples\":" << r.samples << ",\"total_bits\":" << r.total_bits
              << ",\"mean_bits\":" << real(r.mean_bits) << '}';
        }
        s << "]\n";
    } else {
        s << "codec,distribution,samples,total_bits,mean_bits\n";
        for (const auto& r : report.records) {
            s << r.codec << ',' << r.distribution << ',' << r.samples << ',' << r.total_bits << ','
              << real(r.mean_bits) << '\n';
        }
    }
    for (const auto& r : report.records) {
        if (!r.round_trip_ok) {
            err << r.codec << " failed to decode its own stream\n";
            return kInternalError;
        }
    }
    return kSuccess;
}

// resync ---------------------------------------------------------------------

struct ResyncOptions {
    std::size_t symbols = 10000;
    std::size_t trials = 10000;
    std::uint64_t seed = 1;
    std::string dist = "uniform:100000";
    bool per_trial = false;
    std::string format = "csv";
    std::string output;
};

int cmd_resync(const ResyncOptions& o, std::ostream& out)
{
    if (o.symbols == 0 || o.trials == 0) throw InputError("--symbols and --trials must be positive");
    const auto dist = Distribution::parse(o.dist);
    // Distinct streams for values and flips under one seed.
    const auto values = draw_samples(dist, o.symbols, o.seed);
    const auto report = analysis::resync_trials(values, o.trials, o.seed + 1);

    Sink sink(o.output, out, false);
    auto& s = sink.get();
    if (o.format == "json") {
        s << "{\"trials\":" << report.trials.size() << ",\"symbols\":" << report.symbols
          << ",\"stream_bits\":" << report.stream_bits << ",\"mean_symbols_lost\":" << real(report.mean_symbols_lost)
          << ",\"max_symbols_lost\":" << report.max_symbols_lost
          << ",\"mean_resync_offset\":" << real(report.mean_resync_offset)
          << ",\"max_resync_offset\":" << report.max_resync_offset;
        if (o.per_trial) {
            s << ",\"per_trial\":[";
            for (std::size_t i = 0; i < report.trials.size(); ++i) {
                const auto& t = report.trials[i];
                s << (i ? "," : "") << "{\"flip_position\":" << t.flip_position
                  << ",\"symbols_lost\":" << t.symbols_lost << ",\"resync_offset\":" << t.resync_offset << '}';
            }
            s << ']';
        }
        s << "}\n";
        return kSuccess;
    }
    s << "trials,symbols,stream_bits,mean_symbols_lost,max_symbols_lost,mean_resync_offset,max_resync_offset\n";
    s << report.trials.size() << ',' << report.symbols << ',' << report.stream_bits << ','
      << real(report.mean_symbols_lost) << ',' << report.max_symbols_lost << ',' << real(report.mean_resync_offset)
      << ',' << report.max_resync_offset << '\n';
    if (o.per_trial) {
        s << "\nflip_position,symbols_lost,resync_offset\n";
        for (const auto& t : report.trials) s << t.flip_position << ',' << t.symbols_lost << ',' << t.resync_offset << '\n';
    }
    return kSuccess;
}

} // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Narayana universal code: encode, decode and analyse integer streams", "nuc"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"csv", "json"};

    EncodeOptions enc;
    auto* encode_cmd = app.add_subcommand("encode", "Encode decimal integers (one per line) to a .nuc stream");
    encode_cmd->add_option("--input,-i", enc.input, "Input text file (default: standard input)");
    encode_cmd->add_option("--output,-o", enc.output, "Output .nuc file (default: standard output)");

    DecodeOptions dec;
    auto* decode_cmd = app.add_subcommand("decode", "Decode a .nuc stream to decimal integers");
    decode_cmd->add_option("--input,-i", dec.input, "Input .nuc file (default: standard input)");
    decode_cmd->add_option("--output,-o", dec.output, "Output text file (default: standard output)");
    decode_cmd->add_flag("--lenient", dec.lenient, "Skip undecodable stretches instead of failing");

    StatsOptions stats;
    auto* stats_cmd = app.add_subcommand("stats", "Codeword length curve and length histogram for 1..N");
    stats_cmd->add_option("--max", stats.max_n, "Largest integer N")->capture_default_str();
    stats_cmd->add_option("--format", stats.format)->check(CLI::IsMember(formats))->capture_default_str();
    stats_cmd->add_option("--emit", stats.emit)
        ->check(CLI::IsMember({"both", "curve", "histogram"}))
        ->capture_default_str();
    stats_cmd->add_option("--output,-o", stats.output);

    RatioOptions ratio;
    auto* ratio_cmd = app.add_subcommand("ratio", "Consecutive term ratios and their limit");
    ratio_cmd->add_option("--terms", ratio.terms, "Number of sequence terms K")->capture_default_str();
    ratio_cmd->add_option("--format", ratio.format)->check(CLI::IsMember(formats))->capture_default_str();
    ratio_cmd->add_option("--output,-o", ratio.output);

    VariantOptions var;
    auto* variants_cmd = app.add_subcommand("variants", "Representability of 1..N over a variant sequence");
    variants_cmd->add_option("--a", var.a, "Variant parameter a (seeds a, 3-a, 1-a)");
    variants_cmd->add_option("--seeds", var.seeds, "Explicit seeds a,b,c instead of the derived ones")
        ->delimiter(',')
        ->expected(3);
    variants_cmd->add_option("--max", var.max_n, "Largest integer N (<= 10000)")->capture_default_str();
    variants_cmd->add_option("--gap", var.gap, "Minimum index gap")->check(CLI::IsMember({1, 2, 3}))->capture_default_str();
    variants_cmd->add_option("--node-budget", var.node_budget, "Search nodes allowed per integer")->capture_default_str();
    variants_cmd->add_option("--format", var.format)->check(CLI::IsMember(formats))->capture_default_str();
    variants_cmd->add_option("--output,-o", var.output);

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Mean code length per codec over a value distribution");
    bench_cmd->add_option("--dist", bench.dist, "uniform:K, zipf:S:K or geometric:P")->required();
    bench_cmd->add_option("--samples", bench.samples, "Sample count, or 'all' for a uniform support")
        ->capture_default_str();
    bench_cmd->add_option("--seed", bench.seed)->capture_default_str();
    bench_cmd->add_option("--codecs", bench.codecs, "Comma-separated codec list")->delimiter(',');
    bench_cmd->add_option("--format", bench.format)->check(CLI::IsMember(formats))->capture_default_str();
    bench_cmd->add_option("--output,-o", bench.output);

    ResyncOptions resync;
    auto* resync_cmd = app.add_subcommand("resync", "Single-bit-flip damage experiment on a random stream");
    resync_cmd->add_option("--symbols", resync.symbols)->capture_default_str();
    resync_cmd->add_option("--trials", resync.trials)->capture_default_str();
    resync_cmd->add_option("--seed", resync.seed)->capture_default_str();
    resync_cmd->add_option("--dist", resync.dist, "Value distribution")->capture_default_str();
    resync_cmd->add_flag("--per-trial", resync.per_trial, "Emit every trial");
    resync_cmd->add_option("--format", resync.format)->check(CLI::IsMember(formats))->capture_default_str();
    resync_cmd->add_option("--output,-o", resync.output);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "nuc: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (*encode_cmd) return cmd_encode(enc, in, out, err);
        if (*decode_cmd) return cmd_decode(dec, in, out, err);
        if (*stats_cmd) return cmd_stats(stats, out);
        if (*ratio_cmd) return cmd_ratio(ratio, out);
        if (*variants_cmd) return cmd_variants(var, out, err);
        if (*bench_cmd) return cmd_bench(bench, out, err);
        if (*resync_cmd) return cmd_resync(resync, out);
    } catch (const InputError& e) {
        err << "nuc: " << e.what() << '\n';
        return kInputError;
    } catch (const std::invalid_argument& e) {
        err << "nuc: " << e.what() << '\n';
        return kInputError;
    } catch (const CapacityExceeded& e) {
        err << "nuc: capacity exceeded: " << e.what() << '\n';
        return kCapacityError;
    } catch (const SearchBudgetExceeded& e) {
        err << "nuc: search budget exceeded: " << e.what() << '\n';
        return kCapacityError;
    } catch (const MalformedCodeword& e) {
        err << "nuc: malformed stream: " << e.what() << '\n';
        return kMalformedStream;
    } catch (const TrailingGarbage& e) {
        err << "nuc: malformed stream: " << e.what() << '\n';
        return kMalformedStream;
    } catch (const std::exception& e) {
        err << "nuc: " << e.what() << '\n';
        return kInternalError;
    }
    return kInternalError;
}

} // namespace narayana::cli
