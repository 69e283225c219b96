#include "narayana/zeckendorf.hpp"

#include "narayana/error.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace narayana {

RepresentabilityConstraint constraint_from_gap(int gap)
{
    switch (gap) {
    case 1: return {MinIndexGap::AnySubset};
    case 2: return {MinIndexGap::NonAdjacent};
    case 3: return {MinIndexGap::Canonical};
    default: throw std::invalid_argument("index gap must be 1, 2 or 3, got " + std::to_string(gap));
    }
}

Decomposition decompose(Integer n)
{
    if (n < 1) throw std::invalid_argument("decompose requires n >= 1");
    const auto j = j_series();
    Decomposition d;
    d.value = n;
    Integer remainder = n;
    std::size_t index = largest_j_index_leq(n) + 1;
    while (remainder > 0) {
        // The remainder after taking J(i) is below J(i - 2), so the search
        // resumes strictly below.
        do {
            --index;
        } while (j[index] > remainder);
        d.indices.push_back(index);
        remainder -= j[index];
    }
    std::reverse(d.indices.begin(), d.indices.end());
    return d;
}

Integer recompose(const Decomposition& d)
{
    Integer sum = 0;
    for (auto i : d.indices) {
        if (__builtin_add_overflow(sum, j_term(i), &sum)) {
            throw CapacityExceeded("decomposition sum exceeds 2^63 - 1");
        }
    }
    return sum;
}

std::size_t default_search_window(Integer n, const SequenceTable& table)
{
    constexpr std::size_t kScanLimit = 256;
    WideInt negative_mass = 0;
    for (std::size_t k = 0; k < kScanLimit; ++k) {
        WideInt t = 0;
        try {
            t = table.term(k);
        } catch (const CapacityExceeded&) {
            break;
        }
        if (k >= 3 && table.term(k - 3) > 0 && table.term(k - 2) > 0 && table.term(k - 1) > 0 &&
            t > static_cast<WideInt>(n) + negative_mass) {
            // Every term from k on is larger still, so none of them fits.
            return k + 3;
        }
        if (t < 0) negative_mass -= t;
    }
    throw std::invalid_argument(describe(table.kind()) + " never reaches a positive increasing tail");
}

namespace {

class SubsetSearch {
public:
    SubsetSearch(Integer target, std::vector<WideInt> terms, std::size_t gap, std::uint64_t budget, bool first_only)
        : target_(target), terms_(std::move(terms)), gap_(gap), budget_(budget), first_only_(first_only)
    {
        const std::size_t m = terms_.size();
        suffix_low_.assign(m + 1, 0);
        suffix_high_.assign(m + 1, 0);
        for (std::size_t i = m; i-- > 0;) {
            suffix_low_[i] = suffix_low_[i + 1] + (terms_[i] < 0 ? terms_[i] : 0);
            suffix_high_[i] = suffix_high_[i + 1] + (terms_[i] > 0 ? terms_[i] : 0);
        }
    }

    std::vector<IndexSet> run()
    {
        visit(0, 0);
        return std::move(found_);
    }

private:
    // Returns true when the search should stop.
    bool visit(std::size_t start, WideInt sum)
    {
        const std::size_t m = terms_.size();
        if (start >= m) return false;
        if (target_ < sum + suffix_low_[start] || target_ > sum + suffix_high_[start]) return false;
        for (std::size_t i = start; i < m; ++i) {
            if (++nodes_ > budget_) {
                throw SearchBudgetExceeded("subset search for " + narayana::to_string(target_) + " exceeded " +
                                           std::to_string(budget_) + " nodes");
            }
            current_.push_back(i);
            const WideInt next = sum + terms_[i];
            if (next == target_) {
                found_.push_back(current_);
                if (first_only_) return true;
            }
            if (visit(i + gap_, next)) return true;
            current_.pop_back();
        }
        return false;
    }

    WideInt target_;
    std::vector<WideInt> terms_;
    std::vector<WideInt> suffix_low_;
    std::vector<WideInt> suffix_high_;
    std::size_t gap_;
    std::uint64_t budget_;
    bool first_only_;
    std::uint64_t nodes_ = 0;
    IndexSet current_;
    std::vector<IndexSet> found_;
};

std::vector<IndexSet> search(Integer n, const SequenceTable& table, RepresentabilityConstraint constraint,
                             std::optional<std::size_t> max_index, std::uint64_t node_budget, bool first_only)
{
    if (n < 1) throw std::invalid_argument("decomposition search requires n >= 1");
    const std::size_t last = max_index ? *max_index : default_search_window(n, table);
    SubsetSearch s(n, table.prefix(last + 1), constraint.gap(), node_budget, first_only);
    return s.run();
}

} // namespace

std::vector<IndexSet> all_decompositions(Integer n, const SequenceTable& table, RepresentabilityConstraint constraint,
                                         std::optional<std::size_t> max_index, std::uint64_t node_budget)
{
    return search(n, table, constraint, max_index, node_budget, false);
}

bool representable(Integer n, const SequenceTable& table, RepresentabilityConstraint constraint,
                   std::optional<std::size_t> max_index, std::uint64_t node_budget)
{
    return !search(n, table, constraint, max_index, node_budget, true).empty();
}

} // namespace narayana
