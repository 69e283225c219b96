#pragma once

#include "narayana/sequences.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace narayana {

// Minimum distance between selected indices.
enum class MinIndexGap : int {
    AnySubset = 1,
    NonAdjacent = 2, // no two consecutive ones
    Canonical = 3,   // what the greedy decomposition produces
};

struct RepresentabilityConstraint {
    MinIndexGap min_index_gap = MinIndexGap::Canonical;

    [[nodiscard]] std::size_t gap() const noexcept { return static_cast<std::size_t>(min_index_gap); }
    bool operator==(const RepresentabilityConstraint&) const = default;
};

// Throws std::invalid_argument unless gap is 1, 2 or 3.
RepresentabilityConstraint constraint_from_gap(int gap);

/// A set of J-series indices summing to `value`. `indices` is strictly increasing.
struct Decomposition {
    std::vector<std::size_t> indices;
    Integer value = 0;

    bool operator==(const Decomposition&) const = default;
};

// Greedy decomposition over the J series: canonical and minimal.
Decomposition decompose(Integer n);

Integer recompose(const Decomposition& d);

using IndexSet = std::vector<std::size_t>;

inline constexpr std::uint64_t kDefaultNodeBudget = std::uint64_t{1} << 24;

// Smallest index k past which no term can take part in a subset summing to n,
// plus 3 slack. Requires the table to reach a positive, increasing tail.
std::size_t default_search_window(Integer n, const SequenceTable& table);

/// Every index subset of [0, max_index] obeying the constraint whose terms sum
/// to n, in lexicographic order of the index lists.
///
/// Throws SearchBudgetExceeded after visiting more than `node_budget` subsets.
std::vector<IndexSet> all_decompositions(Integer n, const SequenceTable& table, RepresentabilityConstraint constraint,
                                         std::optional<std::size_t> max_index = std::nullopt,
                                         std::uint64_t node_budget = kDefaultNodeBudget);

// all_decompositions(...) is non-empty. Stops at the first hit.
bool representable(Integer n, const SequenceTable& table, RepresentabilityConstraint constraint,
                   std::optional<std::size_t> max_index = std::nullopt,
                   std::uint64_t node_budget = kDefaultNodeBudget);

} // namespace narayana
