#include "afc/colourers.hpp"

#include <algorithm>

#include "afc/pathwidth.hpp"

namespace afc {

Colouring colour_by_depth(const Graph& t, const Word& w, Mode mode) {
    if (!t.is_tree()) throw std::invalid_argument("depth colouring needs a tree");
    w.validate();
    const int root = t.root().value_or(0);
    const std::vector<int> depth = t.bfs_dist(root);
    const int h = *std::max_element(depth.begin(), depth.end());
    if (mode == Mode::vertex) {
        if (w.size() < h + 1)
            throw std::invalid_argument("word too short for the tree height");
        std::vector<int> ids(t.n());
        for (int v = 0; v < t.n(); ++v) ids[v] = w.syms[depth[v]];
        return vertex_colouring(t, ids);
    }
    if (w.size() < h)
        throw std::invalid_argument("word too short for the tree height");
    std::vector<int> ids(t.m());
    for (int e = 0; e < t.m(); ++e) {
        auto [u, v] = t.edges()[e];
        ids[e] = w.syms[std::max(depth[u], depth[v]) - 1];
    }
    return edge_colouring(t, ids);
}

Colouring colour_centred(const Graph& t) {
    if (t.n() == 0 || !t.is_tree())
        throw std::invalid_argument("centred colouring needs a nonempty tree");
    const int centre = t.centres().front();
    return vertex_colouring(t, t.bfs_dist(centre));
}

namespace {

// induced subgraph on a vertex subset, keeping base edge order; orig maps
// through to the caller's vertex and edge numbering
struct Induced {
    Graph g;
    std::vector<int> vert_of;  // local vertex -> caller vertex
    std::vector<int> edge_of;  // local edge -> caller edge
};

Induced induce(const Graph& base, const std::vector<int>& verts,
               const std::vector<int>& vert_orig,
               const std::vector<int>& edge_orig) {
    Induced out;
    std::vector<int> local(base.n(), -1);
    out.vert_of.reserve(verts.size());
    for (size_t i = 0; i < verts.size(); ++i) {
        local[verts[i]] = static_cast<int>(i);
        out.vert_of.push_back(vert_orig[verts[i]]);
    }
    std::vector<std::pair<int, int>> es;
    for (int e = 0; e < base.m(); ++e) {
        auto [u, v] = base.edges()[e];
        if (local[u] != -1 && local[v] != -1) {
            es.emplace_back(local[u], local[v]);
            out.edge_of.push_back(edge_orig[e]);
        }
    }
    out.g = Graph::from_edges(static_cast<int>(verts.size()), es);
    return out;
}

std::vector<int> identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

void pw_vertex_rec(const Graph& f, const std::vector<int>& vert_orig,
                   const std::vector<int>& edge_orig, std::vector<int>& out) {
    for (const auto& comp : f.components()) {
        Induced sub = induce(f, comp, vert_orig, edge_orig);
        const int p = pathwidth(sub.g);
        if (p == 0) {
            out[sub.vert_of[0]] = 0;
            continue;
        }
        PathwidthCert cert = main_path(sub.g);
        const Word w = keranen_prefix(cert.main_path.order());
        std::vector<char> on_path(sub.g.n(), 0);
        for (int i = 0; i < cert.main_path.order(); ++i) {
            int v = cert.main_path.verts[i];
            on_path[v] = 1;
            out[sub.vert_of[v]] = 4 * p - 3 + w.syms[i];
        }
        std::vector<int> rest;
        for (int v = 0; v < sub.g.n(); ++v)
            if (!on_path[v]) rest.push_back(v);
        if (rest.empty()) continue;
        Induced leftover = induce(sub.g, rest, sub.vert_of, sub.edge_of);
        pw_vertex_rec(leftover.g, leftover.vert_of, leftover.edge_of, out);
    }
}

void pw_edge_rec(const Graph& f, const std::vector<int>& vert_orig,
                 const std::vector<int>& edge_orig, std::vector<int>& out) {
    for (const auto& comp : f.components()) {
        Induced sub = induce(f, comp, vert_orig, edge_orig);
        if (sub.g.m() == 0) continue;
        const int p = pathwidth(sub.g);
        PathwidthCert cert = main_path(sub.g);
        const Word w = dekking_prefix(3, cert.main_path.order() - 1);
        std::vector<char> on_path(sub.g.n(), 0);
        for (int v : cert.main_path.verts) on_path[v] = 1;
        for (int i = 0; i + 1 < cert.main_path.order(); ++i) {
            int e = sub.g.edge_id(cert.main_path.verts[i],
                                  cert.main_path.verts[i + 1]);
            out[sub.edge_of[e]] = 4 * p - 4 + w.syms[i];
        }
        for (int e = 0; e < sub.g.m(); ++e) {
            auto [u, v] = sub.g.edges()[e];
            if (on_path[u] != on_path[v]) out[sub.edge_of[e]] = 4 * p - 1;
        }
        std::vector<int> rest;
        for (int v = 0; v < sub.g.n(); ++v)
            if (!on_path[v]) rest.push_back(v);
        if (rest.empty()) continue;
        Induced leftover = induce(sub.g, rest, sub.vert_of, sub.edge_of);
        pw_edge_rec(leftover.g, leftover.vert_of, leftover.edge_of, out);
    }
}

}  // namespace

Colouring colour_pathwidth_vertex(const Graph& t) {
    pathwidth(t);  // forest validation
    std::vector<int> ids(t.n(), 0);
    pw_vertex_rec(t, identity(t.n()), identity(t.m()), ids);
    return vertex_colouring(t, ids);
}

Colouring colour_pathwidth_edge3(const Graph& t) {
    pathwidth(t);
    std::vector<int> ids(t.m(), 0);
    pw_edge_rec(t, identity(t.n()), identity(t.m()), ids);
    return edge_colouring(t, ids);
}

namespace {

// heap-numbered complete binary tree of height h; returns colour ids and the
// palette size
std::vector<int> cbt_scheme(int h, int& count) {
    const long long n = (1LL << (h + 1)) - 1;
    const int t = 2 * ((h + 2) / 4);
    std::vector<int> ids(n, -1);
    const int top = std::min(t, h);
    for (int level = 0; level <= top; ++level) {
        long long lo = (1LL << level) - 1, hi = (1LL << (level + 1)) - 1;
        if (level % 2 == 0) {
            for (long long i = lo; i < hi; ++i) ids[i] = 0;
        } else {
            int j = (level + 1) / 2;
            for (long long i = lo; i < hi; ++i)
                ids[i] = (i % 2 == 1) ? 2 * j - 1 : 2 * j;  // left child odd index
        }
    }
    const int b = h - t - 1;
    if (b < 0) {
        count = t + 1;
        return ids;
    }
    int subcount = 0;
    const std::vector<int> sub = cbt_scheme(b, subcount);
    const int reuse = std::min(t / 2, subcount);
    count = t + 1 + (subcount - reuse);

    std::vector<int> glob(sub.size());
    long long lo = (1LL << (t + 1)) - 1, hi = (1LL << (t + 2)) - 1;
    for (long long r = lo; r < hi; ++r) {
        // odd-level colours missing from the root path of this subtree
        std::vector<int> reusable;
        std::vector<int> anc(t + 2);
        long long a = r;
        for (int level = t + 1; level >= 0; --level) {
            anc[level] = static_cast<int>(a);
            a = (a - 1) / 2;
        }
        for (int level = 1; level <= t - 1; level += 2) {
            int j = (level + 1) / 2;
            int used = ids[anc[level]];
            reusable.push_back(used == 2 * j - 1 ? 2 * j : 2 * j - 1);
        }

        glob[0] = static_cast<int>(r);
        for (size_t y = 0; y < sub.size(); ++y) {
            if (2 * y + 1 < sub.size()) glob[2 * y + 1] = 2 * glob[y] + 1;
            if (2 * y + 2 < sub.size()) glob[2 * y + 2] = 2 * glob[y] + 2;
        }
        for (size_t y = 0; y < sub.size(); ++y) {
            int x = sub[y];
            ids[glob[y]] = x < reuse ? reusable[x] : t + 1 + (x - reuse);
        }
    }
    return ids;
}

}  // namespace

Colouring colour_binary_tree(int h) {
    if (h < 0) throw std::invalid_argument("height must be nonnegative");
    if (h > 21) throw std::invalid_argument("tree too large");
    int count = 0;
    std::vector<int> ids = cbt_scheme(h, count);
    Graph t = make_complete_dary_tree(2, h);
    return vertex_colouring(t, ids);
}

Colouring colour_cycle(int n, Mode mode) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g = make_cycle(n);
    const Word w = keranen_prefix(n - 1);
    if (mode == Mode::vertex) {
        std::vector<int> ids(n);
        ids[0] = 4;
        for (int v = 1; v < n; ++v) ids[v] = w.syms[v - 1];
        return vertex_colouring(g, ids);
    }
    std::vector<int> ids(g.m());
    ids[g.edge_id(0, 1)] = 4;
    for (int i = 1; i < n; ++i) {
        int u = i, v = (i + 1) % n;
        ids[g.edge_id(std::min(u, v), std::max(u, v))] = w.syms[i - 1];
    }
    return edge_colouring(g, ids);
}

Colouring colour_tree_k_anagram(const Graph& t, int k, Mode mode) {
    if (k < 4) throw std::invalid_argument("k must be at least 4");
    if (!t.is_tree()) throw std::invalid_argument("needs a tree");
    const int root = t.root().value_or(0);
    const std::vector<int> depth = t.bfs_dist(root);
    const int h = *std::max_element(depth.begin(), depth.end());
    const int len = mode == Mode::vertex ? h + 1 : h;
    Word w;
    if (k >= 8)
        w = dekking_prefix(4, len);
    else if (k >= 6)
        w = dekking_prefix(3, len);
    else
        w = keranen_prefix(len);
    return colour_by_depth(t, w, mode);
}

}  // namespace afc
