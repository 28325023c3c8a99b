#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "afc/colouring.hpp"
#include "afc/graph.hpp"

namespace afc {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PathRef {
    std::vector<int> verts;

    int order() const { return static_cast<int>(verts.size()); }
    // non-empty, distinct vertices, consecutive vertices adjacent
    bool valid_in(const Graph& g) const;
};

struct AnagramWitness {
    PathRef path;
    int k = 2;
    Mode mode = Mode::vertex;

    // re-derives the colour sequence and re-checks the block multisets
    bool verify(const Graph& g, const Colouring& col) const;
    // "k=2 path=0,3,5,6 blocks=2" where blocks is the elements per block
    std::string to_line() const;
};

struct CheckOptions {
    // cap on enumerated simple paths for general graphs; exceeding it is an
    // error, never a silent pass
    long long path_cap = 10'000'000;
    // tree scan kernel only; the general graph walk is sequential
    bool parallel = true;
};

// Searches every simple path for a k-anagram colour sequence. Trees are
// scanned pairwise in O(n^2 * c); general graphs enumerate simple paths from
// each start vertex with neighbours ascending, subject to opts.path_cap.
// The returned witness is deterministic: lowest start vertex first, then
// discovery order within that start's walk. Witnesses are re-verified before
// being returned.
std::optional<AnagramWitness> contains_k_anagram(const Graph& g,
                                                 const Colouring& col, int k,
                                                 CheckOptions opts = {});

// sequential reference for the tree kernel; same contract, same witness
std::optional<AnagramWitness> contains_k_anagram_serial(const Graph& g,
                                                        const Colouring& col,
                                                        int k,
                                                        CheckOptions opts = {});

}  // namespace afc
