#pragma once

#include "narayana/analysis.hpp"

namespace narayana::analysis::detail {

void check_coverage_bound(Integer max_n);

// Fills the claim lists of a report whose unrepresentable and indeterminate
// lists are already sorted.
void finish_coverage(CoverageReport& report, std::vector<Integer> claimed);

// Codeword start positions of a Narayana stream, then its end position.
std::vector<std::size_t> codeword_boundaries(std::span<const Integer> values);

} // namespace narayana::analysis::detail
