// Single-threaded reference kernels. Each takes a different route from its
// parallel counterpart where one exists: lengths come from materialized
// codewords, coverage from a subset-sum sweep, resync from full re-decodes.

#include "narayana/analysis.hpp"

#include "detail.hpp"

#include <stdexcept>

namespace narayana::analysis::serial {

LengthHistogram length_histogram(Integer max_n)
{
    if (max_n < 1) throw std::invalid_argument("length_histogram requires max_n >= 1");
    LengthHistogram h;
    h.max_n = max_n;
    for (Integer n = 1; n <= max_n; ++n) ++h.entries[encode(n).size()];
    return h;
}

std::vector<CurvePoint> length_curve(Integer max_n)
{
    if (max_n < 1) throw std::invalid_argument("length_curve requires max_n >= 1");
    std::vector<CurvePoint> curve;
    curve.reserve(static_cast<std::size_t>(max_n));
    for (Integer n = 1; n <= max_n; ++n) curve.push_back({n, encode(n).size()});
    return curve;
}

CoverageReport sequence_coverage(const SequenceKind& sequence, Integer max_n, RepresentabilityConstraint constraint,
                                 std::vector<Integer> claimed)
{
    detail::check_coverage_bound(max_n);
    const SequenceTable table(sequence);
    const auto terms = table.prefix(default_search_window(max_n, table) + 1);

    WideInt negative_mass = 0;
    for (auto t : terms) {
        if (t < 0) negative_mass -= t;
    }
    // Partial sums outside [-negative_mass, max_n + negative_mass] cannot
    // come back into [1, max_n].
    const WideInt offset = negative_mass;
    const auto width = static_cast<std::size_t>(max_n + 2 * negative_mass + 1);

    // reach[c][s]: some subset of the indices seen so far sums to s - offset
    // and the next c indices are still blocked by the gap constraint.
    const std::size_t gap = constraint.gap();
    std::vector<std::vector<char>> reach(gap, std::vector<char>(width, 0));
    reach[0][static_cast<std::size_t>(offset)] = 1;

    for (const auto t : terms) {
        std::vector<std::vector<char>> next(gap, std::vector<char>(width, 0));
        for (std::size_t c = 0; c < gap; ++c) {
            const std::size_t skip_state = c == 0 ? 0 : c - 1;
            for (std::size_t s = 0; s < width; ++s) {
                if (!reach[c][s]) continue;
                next[skip_state][s] = 1;
                if (c != 0) continue;
                const WideInt taken = static_cast<WideInt>(s) + t;
                if (taken >= 0 && taken < static_cast<WideInt>(width)) next[gap - 1][static_cast<std::size_t>(taken)] = 1;
            }
        }
        reach = std::move(next);
    }

    CoverageReport report;
    report.sequence = sequence;
    report.constraint = constraint;
    report.max_n = max_n;
    for (Integer n = 1; n <= max_n; ++n) {
        const auto s = static_cast<std::size_t>(n + offset);
        bool hit = false;
        for (std::size_t c = 0; c < gap && !hit; ++c) hit = reach[c][s] != 0;
        if (!hit) report.unrepresentable.push_back(n);
    }
    detail::finish_coverage(report, std::move(claimed));
    return report;
}

std::uint64_t total_code_bits(Code code, std::span<const Integer> values)
{
    std::uint64_t total = 0;
    for (auto v : values) total += encode(code, v).size();
    return total;
}

ResyncReport resync_trials(std::span<const Integer> values, std::size_t trial_count, std::uint64_t seed)
{
    const auto stream_bits = encode_stream(values).bit_length();
    std::vector<ResyncTrial> trials;
    trials.reserve(trial_count);
    for (auto flip : draw_flip_positions(stream_bits, trial_count, seed)) {
        trials.push_back(resync_experiment(values, flip));
    }
    return summarize(values.size(), stream_bits, std::move(trials));
}

} // namespace narayana::analysis::serial
