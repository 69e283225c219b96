#include "narayana/analysis.hpp"

#include "detail.hpp"
#include "narayana/error.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <stdexcept>

namespace narayana::analysis {

namespace {

constexpr Integer kMaxCurvePoints = Integer{1} << 27;

// Codeword lengths never exceed j_series().size() + 1 = 115.
constexpr std::size_t kLengthSlots = 128;

enum class Coverage : unsigned char { Representable, Unrepresentable, Indeterminate };

} // namespace

LengthHistogram length_histogram(Integer max_n)
{
    if (max_n < 1) throw std::invalid_argument("length_histogram requires max_n >= 1");
    std::array<Integer, kLengthSlots> totals{};

#pragma omp parallel
    {
        std::array<Integer, kLengthSlots> local{};
#pragma omp for schedule(static) nowait
        for (Integer n = 1; n <= max_n; ++n) {
            ++local[codeword_length(n)];
        }
#pragma omp critical(narayana_histogram_merge)
        for (std::size_t m = 0; m < kLengthSlots; ++m) totals[m] += local[m];
    }

    LengthHistogram h;
    h.max_n = max_n;
    for (std::size_t m = 0; m < kLengthSlots; ++m) {
        if (totals[m] != 0) h.entries.emplace(m, totals[m]);
    }
    return h;
}

std::vector<CurvePoint> length_curve(Integer max_n)
{
    if (max_n < 1) throw std::invalid_argument("length_curve requires max_n >= 1");
    if (max_n > kMaxCurvePoints) throw std::invalid_argument("length_curve is limited to 2^27 points");
    std::vector<CurvePoint> curve(static_cast<std::size_t>(max_n));

#pragma omp parallel for schedule(static)
    for (Integer n = 1; n <= max_n; ++n) {
        curve[static_cast<std::size_t>(n - 1)] = {n, codeword_length(n)};
    }
    return curve;
}

CoverageReport sequence_coverage(const SequenceKind& sequence, Integer max_n, RepresentabilityConstraint constraint,
                                 std::vector<Integer> claimed, std::uint64_t node_budget)
{
    detail::check_coverage_bound(max_n);
    const SequenceTable table(sequence);
    // Grows the shared table once, before the threads start reading it.
    const auto window = default_search_window(max_n, table);
    (void)table.term(window);

    std::vector<Coverage> status(static_cast<std::size_t>(max_n));
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 16)
    for (Integer n = 1; n <= max_n; ++n) {
        auto& slot = status[static_cast<std::size_t>(n - 1)];
        try {
            slot = representable(n, table, constraint, std::nullopt, node_budget) ? Coverage::Representable
                                                                                  : Coverage::Unrepresentable;
        } catch (const SearchBudgetExceeded&) {
            slot = Coverage::Indeterminate;
        } catch (...) {
#pragma omp critical(narayana_coverage_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    CoverageReport report;
    report.sequence = sequence;
    report.constraint = constraint;
    report.max_n = max_n;
    for (Integer n = 1; n <= max_n; ++n) {
        switch (status[static_cast<std::size_t>(n - 1)]) {
        case Coverage::Unrepresentable: report.unrepresentable.push_back(n); break;
        case Coverage::Indeterminate: report.indeterminate.push_back(n); break;
        case Coverage::Representable: break;
        }
    }
    detail::finish_coverage(report, std::move(claimed));
    return report;
}

std::uint64_t total_code_bits(Code code, std::span<const Integer> values)
{
    std::uint64_t total = 0;
    const auto size = static_cast<std::ptrdiff_t>(values.size());
#pragma omp parallel for schedule(static) reduction(+ : total)
    for (std::ptrdiff_t i = 0; i < size; ++i) {
        total += code_length(code, values[static_cast<std::size_t>(i)]);
    }
    return total;
}

namespace {

// Decodes only from the start of the damaged codeword to the first delimiter
// that lands back on an original boundary.
ResyncTrial windowed_trial(const BitBuffer& original, std::span<const std::size_t> bounds, std::size_t flip)
{
    if (flip >= original.bit_length()) return {flip, 0, 0};
    const auto damaged = original.with_flipped(flip);

    const auto first = static_cast<std::size_t>(std::upper_bound(bounds.begin(), bounds.end(), flip) - bounds.begin()) - 1;
    std::size_t pos = bounds[first];
    std::size_t decoded = 0;
    while (auto end = find_delimiter_end(damaged, pos)) {
        if (try_decode(damaged, pos, *end)) ++decoded;
        pos = *end;
        const auto it = std::lower_bound(bounds.begin(), bounds.end(), pos);
        if (it != bounds.end() && *it == pos) {
            const auto last = static_cast<std::size_t>(it - bounds.begin());
            return {flip, std::max(last - first, decoded), pos - flip};
        }
    }
    const std::size_t original_symbols = bounds.size() - 1 - first;
    return {flip, std::max(original_symbols, decoded), damaged.padded_bit_length() - flip};
}

} // namespace

ResyncReport resync_trials(std::span<const Integer> values, std::size_t trial_count, std::uint64_t seed)
{
    const auto original = encode_stream(values);
    const auto bounds = detail::codeword_boundaries(values);
    const auto flips = draw_flip_positions(original.bit_length(), trial_count, seed);
    std::vector<ResyncTrial> trials(trial_count);

    const auto count = static_cast<std::ptrdiff_t>(trial_count);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t t = 0; t < count; ++t) {
        const auto i = static_cast<std::size_t>(t);
        trials[i] = windowed_trial(original, bounds, flips[i]);
    }
    return summarize(values.size(), original.bit_length(), std::move(trials));
}

} // namespace narayana::analysis
