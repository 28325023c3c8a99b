#pragma once

#include <optional>

#include "afc/checker.hpp"
#include "afc/colouring.hpp"
#include "afc/graph.hpp"

namespace afc {

// Smallest c admitting a k-anagram-free colouring, or nullopt when every
// c <= max_c fails. Backtracking over elements in breadth-first order with
// symmetry breaking; after each assignment only the paths through the new
// element are re-checked. The budget caps the total number of path checks
// and overrunning it throws BudgetExceeded.
std::optional<int> exact_chromatic(const Graph& g, Mode mode, int k, int max_c,
                                   long long budget = 100'000'000);

// Exact values for k = 2..k_max. The sequence is non-increasing by a prefix
// argument, so an increase means the solver is broken and throws.
std::vector<int> verify_monotone_chain(const Graph& g, Mode mode, int k_max,
                                       long long budget = 100'000'000);

}  // namespace afc
