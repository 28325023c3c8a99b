#include "afc/checker.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <climits>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace afc {

bool PathRef::valid_in(const Graph& g) const {
    if (verts.empty()) return false;
    std::vector<char> seen(g.n(), 0);
    for (int v : verts) {
        if (v < 0 || v >= g.n() || seen[v]) return false;
        seen[v] = 1;
    }
    for (size_t i = 0; i + 1 < verts.size(); ++i)
        if (g.edge_id(verts[i], verts[i + 1]) < 0) return false;
    return true;
}

bool AnagramWitness::verify(const Graph& g, const Colouring& col) const {
    if (mode != col.mode) return false;
    if (!path.valid_in(g)) return false;
    std::vector<int> seq;
    try {
        seq = colour_sequence(g, col, path.verts);
        return is_k_anagram(seq, k);
    } catch (const std::exception&) {
        return false;
    }
}

// One '|'-separated segment per block of the colour sequence. Vertex blocks
// partition the list; edge blocks share their junction vertex, so each
// segment spans its block's edges on its own.
std::string AnagramWitness::to_line() const {
    std::ostringstream os;
    int elements = mode == Mode::vertex ? path.order() : path.order() - 1;
    int block = elements / k;
    os << "k=" << k << " path=";
    for (int b = 0; b < k; ++b) {
        if (b > 0) os << "|";
        int lo = b * block;
        int hi = mode == Mode::vertex ? (b + 1) * block - 1 : (b + 1) * block;
        for (int i = lo; i <= hi; ++i)
            os << path.verts[i] << (i == hi ? "" : ",");
    }
    return os.str();
}

namespace {

// Shared scan state for one start vertex. The path from the start to the
// current vertex is kept on an explicit stack together with per-depth prefix
// colour counts, so each candidate split is a block comparison over count
// differences.
struct ScanState {
    const Graph& g;
    const Colouring& col;
    int k;
    int c;
    bool edge_mode;

    std::vector<int> verts;      // path vertices
    std::vector<int> prefix;     // (n + 1) rows of c counts
    long long steps = 0;         // visits, the deterministic tiebreaker
    long long hit_step = -1;
    std::vector<int> hit_path;

    ScanState(const Graph& gg, const Colouring& cc, int kk)
        : g(gg), col(cc), k(kk), c(cc.c), edge_mode(cc.mode == Mode::edge) {
        verts.reserve(g.n());
        prefix.assign(static_cast<size_t>(g.n() + 1) * std::max(c, 1), 0);
    }

    int* row(int i) { return prefix.data() + static_cast<size_t>(i) * std::max(c, 1); }

    // number of coloured elements on the current path
    int elements() const {
        return edge_mode ? static_cast<int>(verts.size()) - 1
                         : static_cast<int>(verts.size());
    }

    void push(int v, int via_eid) {
        verts.push_back(v);
        int len = elements();
        if (len > 0) {
            int id = edge_mode ? col.ids[via_eid] : col.ids[v];
            const int* prev = row(len - 1);
            int* cur = row(len);
            std::copy(prev, prev + c, cur);
            cur[id] += 1;
        } else {
            std::fill(row(0), row(0) + std::max(c, 1), 0);
        }
    }

    void pop() { verts.pop_back(); }

    bool blocks_equal(int len) {
        int b = len / k;
        for (int j = 1; j < k; ++j) {
            const int* lo = row((j - 1) * b);
            const int* mid = row(j * b);
            const int* hi = row((j + 1) * b);
            for (int t = 0; t < c; ++t)
                if (mid[t] - lo[t] != hi[t] - mid[t]) return false;
        }
        return true;
    }

    // check the full current path, endpoints fixed
    bool check() {
        int len = elements();
        if (len < k || len % k != 0) return false;
        if (!blocks_equal(len)) return false;
        hit_step = steps;
        hit_path = verts;
        return true;
    }
};

// DFS over the tree from start s; pairs are checked once via v > s.
// Returns true at the first (minimum step) hit for this start.
bool tree_scan_from(ScanState& st, int s) {
    struct Frame {
        int v, parent;
        size_t ai;
    };
    st.verts.clear();
    st.steps = 0;
    st.hit_step = -1;
    std::vector<Frame> frames;
    st.push(s, -1);
    frames.push_back({s, -1, 0});
    while (!frames.empty()) {
        Frame& f = frames.back();
        const auto& arcs = st.g.adj(f.v);
        if (f.ai < arcs.size()) {
            auto [to, eid] = arcs[f.ai++];
            if (to == f.parent) continue;
            st.push(to, eid);
            st.steps += 1;
            if (to > s && st.check()) return true;
            frames.push_back({to, f.v, 0});
        } else {
            st.pop();
            frames.pop_back();
        }
    }
    return false;
}

struct BestHit {
    long long start = LLONG_MAX;
    long long step = LLONG_MAX;
    std::vector<int> path;

    bool better_than(const BestHit& o) const {
        return start != o.start ? start < o.start : step < o.step;
    }
};

std::optional<AnagramWitness> finish(const Graph& g, const Colouring& col,
                                     int k, const BestHit& best) {
    if (best.start == LLONG_MAX) return std::nullopt;
    AnagramWitness w;
    w.path.verts = best.path;
    w.k = k;
    w.mode = col.mode;
    if (!w.verify(g, col))
        throw std::logic_error("internal error: witness failed re-verification");
    return w;
}

std::optional<AnagramWitness> scan_tree(const Graph& g, const Colouring& col,
                                        int k, bool parallel) {
    const int n = g.n();
    BestHit best;
#ifdef _OPENMP
    if (parallel && n > 32) {
        std::atomic<long long> upper{LLONG_MAX};
#pragma omp parallel
        {
            ScanState st(g, col, k);
            BestHit local;
#pragma omp for schedule(dynamic, 8) nowait
            for (int s = 0; s < n; ++s) {
                if (s > upper.load(std::memory_order_relaxed)) continue;
                if (tree_scan_from(st, s)) {
                    BestHit cand{s, st.hit_step, st.hit_path};
                    if (cand.better_than(local)) local = std::move(cand);
                    long long cur = upper.load(std::memory_order_relaxed);
                    while (s < cur &&
                           !upper.compare_exchange_weak(cur, s,
                                                        std::memory_order_relaxed)) {
                    }
                }
            }
#pragma omp critical(afc_scan_merge)
            if (local.better_than(best)) best = std::move(local);
        }
        return finish(g, col, k, best);
    }
#endif
    (void)parallel;
    ScanState st(g, col, k);
    for (int s = 0; s < n; ++s) {
        if (tree_scan_from(st, s)) {
            best = {s, st.hit_step, st.hit_path};
            break;  // first start with a hit carries the minimal key
        }
    }
    return finish(g, col, k, best);
}

// General graphs: enumerate simple paths from every start vertex with
// neighbours ascending. Each unordered path is checked once, from its lower
// endpoint. The cap counts path extensions and overrunning it throws.
std::optional<AnagramWitness> walk_general(const Graph& g, const Colouring& col,
                                           int k, long long cap) {
    const int n = g.n();
    ScanState st(g, col, k);
    std::vector<char> on_path(n, 0);
    long long enumerated = 0;
    struct Frame {
        int v;
        size_t ai;
    };
    for (int s = 0; s < n; ++s) {
        st.verts.clear();
        st.steps = 0;
        std::vector<Frame> frames;
        st.push(s, -1);
        on_path[s] = 1;
        frames.push_back({s, 0});
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& arcs = g.adj(f.v);
            if (f.ai < arcs.size()) {
                auto [to, eid] = arcs[f.ai++];
                if (on_path[to]) continue;
                if (++enumerated > cap)
                    throw BudgetExceeded(
                        "path enumeration cap exceeded; raise the cap to keep "
                        "searching");
                st.push(to, eid);
                st.steps += 1;
                on_path[to] = 1;
                if (to > s && st.check()) {
                    BestHit best{s, st.hit_step, st.hit_path};
                    return finish(g, col, k, best);
                }
                frames.push_back({to, 0});
            } else {
                on_path[f.v] = 0;
                st.pop();
                frames.pop_back();
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<AnagramWitness> contains_k_anagram(const Graph& g,
                                                 const Colouring& col, int k,
                                                 CheckOptions opts) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    col.validate(g);
    if (g.n() == 0) return std::nullopt;
    if (g.is_tree()) return scan_tree(g, col, k, opts.parallel);
    return walk_general(g, col, k, opts.path_cap);
}

std::optional<AnagramWitness> contains_k_anagram_serial(const Graph& g,
                                                        const Colouring& col,
                                                        int k,
                                                        CheckOptions opts) {
    opts.parallel = false;
    return contains_k_anagram(g, col, k, opts);
}

}  // namespace afc
