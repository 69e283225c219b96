#pragma once

#include "narayana/codec.hpp"
#include "narayana/sampling.hpp"
#include "narayana/sequences.hpp"
#include "narayana/zeckendorf.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

// Analysis kernels. The functions in narayana::analysis are OpenMP-parallel;
// narayana::analysis::serial holds single-threaded reference versions with
// the same results, kept for tests and benchmarks.
namespace narayana::analysis {

/// Count of n in [1, max_n] per codeword length.
struct LengthHistogram {
    std::map<std::size_t, Integer> entries;
    Integer max_n = 0;

    [[nodiscard]] Integer count(std::size_t length) const;

    // Every integer with this codeword length is <= max_n.
    [[nodiscard]] bool complete(std::size_t length) const;

    [[nodiscard]] std::vector<std::size_t> complete_lengths() const;
    [[nodiscard]] std::vector<std::size_t> incomplete_lengths() const;

    bool operator==(const LengthHistogram&) const = default;
};

// The integers of length m are exactly [J(m-2), J(m-1)).
Integer length_class_first(std::size_t length);
Integer length_class_last(std::size_t length);

LengthHistogram length_histogram(Integer max_n);

struct CurvePoint {
    Integer n = 0;
    std::size_t bits = 0;
    bool operator==(const CurvePoint&) const = default;
};

std::vector<CurvePoint> length_curve(Integer max_n);

/// Representability of [1, max_n] over one sequence.
struct CoverageReport {
    SequenceKind sequence;
    Integer variant_a = 0;
    RepresentabilityConstraint constraint;
    Integer max_n = 0;
    std::vector<Integer> unrepresentable;
    std::vector<Integer> indeterminate; // search budget ran out
    std::vector<Integer> claimed;       // published unrepresentable values, <= max_n
    std::vector<Integer> claimed_but_representable;
    std::vector<Integer> unrepresentable_unclaimed;

    [[nodiscard]] bool has_discrepancies() const
    {
        return !claimed_but_representable.empty() || !unrepresentable_unclaimed.empty();
    }
};

// Values published as having no representation over VN_a, for a in {-1, -2, -3}.
std::vector<Integer> published_unrepresentable(Integer a);

// Seeds as published in the listings of VN_{-1}, VN_{-2}, VN_{-3}. For a = -3
// the listing's second term (5) differs from 3 - a (6).
kind::General published_variant_seeds(Integer a);

// Variant parameters accepted by variant_coverage: -5..5 except those whose
// seeds contain a zero (0, 1, 3) and those whose terms end up negative (4, 5).
bool supported_variant(Integer a);

inline constexpr Integer kMaxCoverageN = 10'000;

CoverageReport variant_coverage(Integer a, Integer max_n, RepresentabilityConstraint constraint);

// Coverage over any sequence with a positive tail; `claimed` feeds the
// discrepancy lists.
CoverageReport sequence_coverage(const SequenceKind& sequence, Integer max_n, RepresentabilityConstraint constraint,
                                 std::vector<Integer> claimed = {}, std::uint64_t node_budget = kDefaultNodeBudget);

struct BenchRecord {
    std::string codec;
    std::string distribution;
    std::size_t samples = 0;
    std::uint64_t total_bits = 0;
    double mean_bits = 0.0;
    bool round_trip_ok = false;
};

struct BenchReport {
    std::vector<BenchRecord> records;
};

BenchReport compare_codes(std::span<const Integer> values, const std::string& distribution_name,
                          std::span<const Code> codes = kAllCodes);

BenchReport compare_codes(const Distribution& dist, std::size_t sample_count, std::uint64_t seed,
                          std::span<const Code> codes = kAllCodes);

// Sum of code lengths over values.
std::uint64_t total_code_bits(Code code, std::span<const Integer> values);

/// Outcome of flipping one bit of a Narayana stream.
///
/// The affected window runs from the last codeword boundary at or before the
/// flip to the first position after it where the damaged and original
/// streams both have a boundary. symbols_lost counts the larger of the
/// original and decoded symbol counts inside that window, so spurious extra
/// symbols count as damage too.
struct ResyncTrial {
    std::size_t flip_position = 0;
    std::size_t symbols_lost = 0;
    std::size_t resync_offset = 0; // bits from the flip to the realignment point
    bool operator==(const ResyncTrial&) const = default;
};

struct ResyncReport {
    std::size_t symbols = 0;
    std::size_t stream_bits = 0;
    std::vector<ResyncTrial> trials;
    double mean_symbols_lost = 0.0;
    std::size_t max_symbols_lost = 0;
    double mean_resync_offset = 0.0;
    std::size_t max_resync_offset = 0;
};

// Full re-decode of the damaged stream.
ResyncTrial resync_experiment(std::span<const Integer> values, std::size_t flip_position);

// Seeded Monte-Carlo: flips uniformly over the stream's codeword bits. Each
// trial decodes only the damaged window.
ResyncReport resync_trials(std::span<const Integer> values, std::size_t trial_count, std::uint64_t seed);

// Flip positions used by resync_trials for a given stream length and seed.
std::vector<std::size_t> draw_flip_positions(std::size_t stream_bits, std::size_t trial_count, std::uint64_t seed);

ResyncReport summarize(std::size_t symbols, std::size_t stream_bits, std::vector<ResyncTrial> trials);

namespace serial {

LengthHistogram length_histogram(Integer max_n);
std::vector<CurvePoint> length_curve(Integer max_n);

// Subset-sum sweep over all n at once instead of a search per n.
CoverageReport sequence_coverage(const SequenceKind& sequence, Integer max_n, RepresentabilityConstraint constraint,
                                 std::vector<Integer> claimed = {});

std::uint64_t total_code_bits(Code code, std::span<const Integer> values);

// resync_experiment per trial.
ResyncReport resync_trials(std::span<const Integer> values, std::size_t trial_count, std::uint64_t seed);

} // namespace serial

} // namespace narayana::analysis
