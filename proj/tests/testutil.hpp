#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "afc/colouring.hpp"
#include "afc/graph.hpp"

namespace testutil {

// uniform random attachment tree, rooted at 0
inline afc::Graph random_tree(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n > 0 ? n - 1 : 0);
    for (int v = 1; v < n; ++v)
        edges.emplace_back(static_cast<int>(rng() % v), v);
    return afc::Graph::from_edges(n, std::move(edges), 0);
}

inline std::vector<int> random_ids(int n, int c, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> ids(n);
    for (auto& id : ids) id = static_cast<int>(rng() % c);
    return ids;
}

inline afc::Colouring random_colouring(const afc::Graph& g, afc::Mode mode,
                                       int c, std::uint64_t seed) {
    int n = mode == afc::Mode::vertex ? g.n() : g.m();
    auto ids = random_ids(n, c, seed);
    return mode == afc::Mode::vertex
               ? afc::vertex_colouring(g, std::move(ids))
               : afc::edge_colouring(g, std::move(ids));
}

}  // namespace testutil
