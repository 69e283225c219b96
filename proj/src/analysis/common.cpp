#include "narayana/analysis.hpp"

#include "detail.hpp"
#include "narayana/error.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <optional>
#include <stdexcept>

namespace narayana::analysis {

Integer LengthHistogram::count(std::size_t length) const
{
    const auto it = entries.find(length);
    return it == entries.end() ? 0 : it->second;
}

bool LengthHistogram::complete(std::size_t length) const
{
    return length >= 2 && length - 2 < j_series().size() && length_class_last(length) <= max_n;
}

std::vector<std::size_t> LengthHistogram::complete_lengths() const
{
    std::vector<std::size_t> out;
    for (const auto& [length, n] : entries) {
        if (complete(length)) out.push_back(length);
    }
    return out;
}

std::vector<std::size_t> LengthHistogram::incomplete_lengths() const
{
    std::vector<std::size_t> out;
    for (const auto& [length, n] : entries) {
        if (!complete(length)) out.push_back(length);
    }
    return out;
}

Integer length_class_first(std::size_t length)
{
    if (length < 2) throw std::invalid_argument("codeword lengths start at 2");
    return j_term(length - 2);
}

Integer length_class_last(std::size_t length)
{
    if (length < 2) throw std::invalid_argument("codeword lengths start at 2");
    const auto j = j_series();
    if (length - 2 >= j.size()) throw CapacityExceeded("no codeword of length " + std::to_string(length));
    return length - 1 < j.size() ? j[length - 1] - 1 : kMaxEncodable;
}

std::vector<Integer> published_unrepresentable(Integer a)
{
    switch (a) {
    case -1: return {3, 15};
    case -2: return {2};
    case -3: return {2, 13, 19};
    default: return {};
    }
}

kind::General published_variant_seeds(Integer a)
{
    switch (a) {
    case -1: return {-1, 4, 2};
    case -2: return {-2, 5, 3};
    case -3: return {-3, 5, 4};
    default: throw std::invalid_argument("no published listing for VN_" + std::to_string(a));
    }
}

// 0, 1 and 3 put a zero among the seeds; from 4 on the terms turn negative
// for good, so no window can bound the search.
bool supported_variant(Integer a) { return a >= -5 && a <= 2 && a != 0 && a != 1; }

namespace detail {

void check_coverage_bound(Integer max_n)
{
    if (max_n < 1 || max_n > kMaxCoverageN) {
        throw std::invalid_argument("coverage bound must lie in [1, " + std::to_string(kMaxCoverageN) + "]");
    }
}

void finish_coverage(CoverageReport& report, std::vector<Integer> claimed)
{
    std::sort(claimed.begin(), claimed.end());
    claimed.erase(std::remove_if(claimed.begin(), claimed.end(), [&](Integer n) { return n < 1 || n > report.max_n; }),
                  claimed.end());
    report.claimed = claimed;
    report.claimed_but_representable.clear();
    report.unrepresentable_unclaimed.clear();
    for (auto n : claimed) {
        const bool unrep = std::binary_search(report.unrepresentable.begin(), report.unrepresentable.end(), n);
        const bool unknown = std::binary_search(report.indeterminate.begin(), report.indeterminate.end(), n);
        if (!unrep && !unknown) report.claimed_but_representable.push_back(n);
    }
    std::set_difference(report.unrepresentable.begin(), report.unrepresentable.end(), claimed.begin(), claimed.end(),
                        std::back_inserter(report.unrepresentable_unclaimed));
}

std::vector<std::size_t> codeword_boundaries(std::span<const Integer> values)
{
    std::vector<std::size_t> b;
    b.reserve(values.size() + 1);
    std::size_t pos = 0;
    b.push_back(pos);
    for (auto v : values) {
        pos += codeword_length(v);
        b.push_back(pos);
    }
    return b;
}

} // namespace detail

CoverageReport variant_coverage(Integer a, Integer max_n, RepresentabilityConstraint constraint)
{
    if (!supported_variant(a)) {
        throw std::invalid_argument("variant parameter " + std::to_string(a) +
                                    " is outside -5..2, has a zero seed, or has no positive tail");
    }
    auto report = sequence_coverage(kind::Variant{a}, max_n, constraint, published_unrepresentable(a));
    report.variant_a = a;
    return report;
}

BenchReport compare_codes(std::span<const Integer> values, const std::string& distribution_name,
                          std::span<const Code> codes)
{
    BenchReport report;
    const std::vector<Integer> expected(values.begin(), values.end());
    for (auto code : codes) {
        const auto buffer = encode_stream(code, values);
        BenchRecord r;
        r.codec = std::string(code_name(code));
        r.distribution = distribution_name;
        r.samples = values.size();
        r.total_bits = buffer.bit_length();
        r.mean_bits = values.empty() ? 0.0 : static_cast<double>(r.total_bits) / static_cast<double>(values.size());
        r.round_trip_ok = decode_stream(code, buffer, StreamMode::Strict) == expected;
        report.records.push_back(std::move(r));
    }
    return report;
}

BenchReport compare_codes(const Distribution& dist, std::size_t sample_count, std::uint64_t seed,
                          std::span<const Code> codes)
{
    if (sample_count < 1) throw std::invalid_argument("sample count must be positive");
    const auto values = draw_samples(dist, sample_count, seed);
    return compare_codes(values, dist.name(), codes);
}

ResyncTrial resync_experiment(std::span<const Integer> values, std::size_t flip_position)
{
    const auto original = encode_stream(values);
    if (flip_position >= original.padded_bit_length()) {
        throw std::invalid_argument("flip position lies past the end of the stream");
    }
    if (flip_position >= original.bit_length()) return {flip_position, 0, 0};

    const auto damaged = original.with_flipped(flip_position);
    const auto decoded = decode_stream_lenient(damaged);
    const auto original_bounds = detail::codeword_boundaries(values);

    std::vector<std::size_t> decoded_bounds{0};
    for (const auto& s : decoded.segments) decoded_bounds.push_back(s.end);

    std::vector<std::size_t> common;
    std::set_intersection(original_bounds.begin(), original_bounds.end(), decoded_bounds.begin(), decoded_bounds.end(),
                          std::back_inserter(common));

    std::size_t lo = 0;
    std::optional<std::size_t> hi;
    for (auto c : common) {
        if (c <= flip_position) lo = c;
        else if (!hi) hi = c;
    }
    const std::size_t stop = hi.value_or(std::numeric_limits<std::size_t>::max());

    std::size_t original_count = 0;
    for (std::size_t i = 0; i + 1 < original_bounds.size(); ++i) {
        if (original_bounds[i] >= lo && original_bounds[i] < stop) ++original_count;
    }
    std::size_t decoded_count = 0;
    for (const auto& s : decoded.segments) {
        if (s.value && s.begin >= lo && s.begin < stop) ++decoded_count;
    }

    ResyncTrial trial;
    trial.flip_position = flip_position;
    trial.symbols_lost = std::max(original_count, decoded_count);
    trial.resync_offset = (hi ? *hi : damaged.padded_bit_length()) - flip_position;
    return trial;
}

std::vector<std::size_t> draw_flip_positions(std::size_t stream_bits, std::size_t trial_count, std::uint64_t seed)
{
    if (stream_bits == 0 && trial_count > 0) throw std::invalid_argument("cannot flip bits of an empty stream");
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> out(trial_count);
    for (auto& p : out) p = static_cast<std::size_t>(uniform_below(rng, stream_bits));
    return out;
}

ResyncReport summarize(std::size_t symbols, std::size_t stream_bits, std::vector<ResyncTrial> trials)
{
    ResyncReport report;
    report.symbols = symbols;
    report.stream_bits = stream_bits;
    double lost = 0.0;
    double offset = 0.0;
    for (const auto& t : trials) {
        lost += static_cast<double>(t.symbols_lost);
        offset += static_cast<double>(t.resync_offset);
        report.max_symbols_lost = std::max(report.max_symbols_lost, t.symbols_lost);
        report.max_resync_offset = std::max(report.max_resync_offset, t.resync_offset);
    }
    if (!trials.empty()) {
        report.mean_symbols_lost = lost / static_cast<double>(trials.size());
        report.mean_resync_offset = offset / static_cast<double>(trials.size());
    }
    report.trials = std::move(trials);
    return report;
}

} // namespace narayana::analysis
