#include "afc/solver.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace afc {

namespace {

// breadth-first ranks from vertex 0, restarting at the smallest unreached
// vertex when the graph is disconnected
std::vector<int> bfs_ranks(const Graph& g) {
    std::vector<int> rank(g.n(), -1);
    int next = 0;
    for (int s = 0; s < g.n(); ++s) {
        if (rank[s] >= 0) continue;
        std::queue<int> q;
        rank[s] = next++;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& a : g.adj(v)) {
                if (rank[a.to] < 0) {
                    rank[a.to] = next++;
                    q.push(a.to);
                }
            }
        }
    }
    return rank;
}

std::vector<int> element_order(const Graph& g, Mode mode) {
    const std::vector<int> rank = bfs_ranks(g);
    if (mode == Mode::vertex) {
        std::vector<int> vs(g.n());
        std::iota(vs.begin(), vs.end(), 0);
        std::sort(vs.begin(), vs.end(),
                  [&](int a, int b) { return rank[a] < rank[b]; });
        return vs;
    }
    std::vector<int> es(g.m());
    std::iota(es.begin(), es.end(), 0);
    auto key = [&](int e) {
        auto [u, v] = g.edges()[e];
        int ru = rank[u];
        int rv = rank[v];
        if (ru > rv) std::swap(ru, rv);
        return std::tuple(rv, ru, e);
    };
    std::sort(es.begin(), es.end(),
              [&](int a, int b) { return key(a) < key(b); });
    return es;
}

// Enumerates every simple path through one freshly coloured element, over the
// elements already assigned, and tests each colour sequence. Paths with the
// element interior are generated once by ordering the two arms; paths with it
// as an endpoint grow a single arm.
struct Scan {
    const Graph& g;
    const std::vector<int>& ids;  // per element, -1 when unassigned
    int k;
    long long& checks;
    long long budget;

    std::vector<char> used;
    std::vector<int> seq_left;   // colours outward from the pivot
    std::vector<int> seq_right;
    std::vector<int> seq;
    int pivot_colour = 0;

    Scan(const Graph& g_, const std::vector<int>& ids_, int k_,
         long long& checks_, long long budget_)
        : g(g_), ids(ids_), k(k_), checks(checks_), budget(budget_),
          used(g_.n(), 0) {}

    bool anagram_now() {
        if (++checks > budget)
            throw BudgetExceeded(
                "solver path-check budget exceeded; raise the budget to keep "
                "searching");
        seq.assign(seq_left.rbegin(), seq_left.rend());
        seq.push_back(pivot_colour);
        seq.insert(seq.end(), seq_right.begin(), seq_right.end());
        return is_k_anagram(seq, k);
    }
};

struct VertexScan : Scan {
    int v;
    std::vector<int> left_verts;

    VertexScan(const Graph& g_, const std::vector<int>& ids_, int k_,
               long long& checks_, long long budget_, int v_)
        : Scan(g_, ids_, k_, checks_, budget_), v(v_) {
        pivot_colour = ids[v];
    }

    bool grow_right(int head, int min_first) {
        for (const auto& a : g.adj(head)) {
            int w = a.to;
            if (w < min_first || used[w] || ids[w] < 0) continue;
            used[w] = 1;
            seq_right.push_back(ids[w]);
            bool hit = anagram_now() || grow_right(w, 0);
            seq_right.pop_back();
            used[w] = 0;
            if (hit) return true;
        }
        return false;
    }

    // every left arm state admits the full right enumeration; the first left
    // step bounds the first right step so interior paths appear once
    bool grow_left(int head) {
        for (const auto& a : g.adj(head)) {
            int w = a.to;
            if (used[w] || ids[w] < 0) continue;
            used[w] = 1;
            seq_left.push_back(ids[w]);
            left_verts.push_back(w);
            bool hit = grow_right(v, left_verts.front() + 1) || grow_left(w);
            left_verts.pop_back();
            seq_left.pop_back();
            used[w] = 0;
            if (hit) return true;
        }
        return false;
    }

    bool run() {
        used[v] = 1;
        if (anagram_now()) return true;  // the vertex alone
        if (grow_right(v, 0)) return true;
        return grow_left(v);
    }
};

struct EdgeScan : Scan {
    int u, w;

    EdgeScan(const Graph& g_, const std::vector<int>& ids_, int k_,
             long long& checks_, long long budget_, int eid)
        : Scan(g_, ids_, k_, checks_, budget_) {
        std::tie(u, w) = g.edges()[eid];
        pivot_colour = ids[eid];
    }

    bool grow_w_side(int head) {
        for (const auto& a : g.adj(head)) {
            int x = a.to;
            if (used[x] || ids[a.eid] < 0) continue;
            used[x] = 1;
            seq_right.push_back(ids[a.eid]);
            bool hit = anagram_now() || grow_w_side(x);
            seq_right.pop_back();
            used[x] = 0;
            if (hit) return true;
        }
        return false;
    }

    bool grow_u_side(int head) {
        for (const auto& a : g.adj(head)) {
            int x = a.to;
            if (used[x] || ids[a.eid] < 0) continue;
            used[x] = 1;
            seq_left.push_back(ids[a.eid]);
            bool hit = anagram_now() || grow_w_side(w) || grow_u_side(x);
            seq_left.pop_back();
            used[x] = 0;
            if (hit) return true;
        }
        return false;
    }

    bool run() {
        used[u] = 1;
        used[w] = 1;
        if (anagram_now()) return true;  // the edge alone
        if (grow_w_side(w)) return true;
        return grow_u_side(u);
    }
};

struct Backtracker {
    const Graph& g;
    Mode mode;
    int k;
    int c;
    long long& checks;
    long long budget;
    std::vector<int> order;
    std::vector<int> ids;

    Backtracker(const Graph& g_, Mode mode_, int k_, int c_,
                long long& checks_, long long budget_, std::vector<int> ord)
        : g(g_), mode(mode_), k(k_), c(c_), checks(checks_), budget(budget_),
          order(std::move(ord)),
          ids(mode_ == Mode::vertex ? g_.n() : g_.m(), -1) {}

    bool creates_anagram(int elem) {
        if (mode == Mode::vertex) {
            VertexScan s(g, ids, k, checks, budget, elem);
            return s.run();
        }
        EdgeScan s(g, ids, k, checks, budget, elem);
        return s.run();
    }

    bool place(std::size_t idx, int max_used) {
        if (idx == order.size()) return true;
        int e = order[idx];
        int cap = std::min(c - 1, max_used + 1);
        for (int col = 0; col <= cap; ++col) {
            ids[e] = col;
            if (!creates_anagram(e) &&
                place(idx + 1, std::max(max_used, col)))
                return true;
        }
        ids[e] = -1;
        return false;
    }
};

}  // namespace

std::optional<int> exact_chromatic(const Graph& g, Mode mode, int k, int max_c,
                                   long long budget) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (max_c < 1) throw std::invalid_argument("max_c must be at least 1");
    const int elems = mode == Mode::vertex ? g.n() : g.m();
    if (elems == 0) return 1;

    const std::vector<int> order = element_order(g, mode);
    long long checks = 0;
    for (int c = 1; c <= max_c; ++c) {
        Backtracker bt(g, mode, k, c, checks, budget, order);
        if (!bt.place(0, -1)) continue;
        Colouring col = mode == Mode::vertex ? vertex_colouring(g, bt.ids)
                                             : edge_colouring(g, bt.ids);
        if (contains_k_anagram_serial(g, col, k))
            throw std::logic_error(
                "internal error: solver colouring failed re-verification");
        return c;
    }
    return std::nullopt;
}

std::vector<int> verify_monotone_chain(const Graph& g, Mode mode, int k_max,
                                       long long budget) {
    if (k_max < 2) throw std::invalid_argument("k_max must be at least 2");
    const int elems = mode == Mode::vertex ? g.n() : g.m();
    const int max_c = std::max(elems, 1);
    std::vector<int> vals;
    for (int k = 2; k <= k_max; ++k) {
        // colouring every element distinctly is always anagram free, so a
        // value within the element count must exist
        auto v = exact_chromatic(g, mode, k, max_c, budget);
        if (!v)
            throw std::logic_error(
                "internal error: no colouring found within the element count");
        if (!vals.empty() && *v > vals.back())
            throw std::logic_error(
                "internal error: exact values increased with k");
        vals.push_back(*v);
    }
    return vals;
}

}  // namespace afc
