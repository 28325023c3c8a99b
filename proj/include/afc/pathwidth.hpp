#pragma once

#include "afc/checker.hpp"
#include "afc/graph.hpp"

namespace afc {

// Exact pathwidth of a forest, the max over components. Throws if the input
// has a cycle.
int pathwidth(const Graph& g);

// A path whose removal lowers the pathwidth of every leftover component,
// together with the recomputed widths of those components.
struct PathwidthCert {
    int width = 0;
    PathRef main_path;
    std::vector<int> component_widths;

    bool verify(const Graph& t) const;
};

// Searches leaf-to-leaf paths, lowest-id endpoint pair first, and returns the
// first certificate that verifies. Input must be a tree with at least one
// edge.
PathwidthCert main_path(const Graph& t);

}  // namespace afc
