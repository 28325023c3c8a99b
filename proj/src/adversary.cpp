#include "afc/adversary.hpp"

#include <algorithm>

namespace afc {

const char* family_name(Family f) {
    switch (f) {
        case Family::edge_binary_tree: return "edge_binary_tree";
        case Family::sibling_graph: return "sibling_graph";
        case Family::complete_dary: return "complete_dary";
        case Family::kpower_gadget: return "kpower_gadget";
    }
    return "?";
}

Family family_from_name(const std::string& s) {
    if (s == "edge_binary_tree") return Family::edge_binary_tree;
    if (s == "sibling_graph") return Family::sibling_graph;
    if (s == "complete_dary") return Family::complete_dary;
    if (s == "kpower_gadget") return Family::kpower_gadget;
    throw std::invalid_argument("unknown gadget family: " + s);
}

void GadgetSpec::validate() const {
    switch (family) {
        case Family::edge_binary_tree:
            if (h < 1) throw std::invalid_argument("edge_binary_tree needs h >= 1");
            return;
        case Family::sibling_graph:
            if (h < 1 || h % 2 == 0)
                throw std::invalid_argument("sibling_graph needs odd h >= 1");
            return;
        case Family::complete_dary:
            if (d < 2 || h < 1)
                throw std::invalid_argument("complete_dary needs d >= 2 and h >= 1");
            return;
        case Family::kpower_gadget:
            if (k < 2 || t < 1)
                throw std::invalid_argument("kpower_gadget needs k >= 2 and t >= 1");
            return;
    }
    throw std::invalid_argument("bad family");
}

std::vector<int> Gadget::leaves() const {
    if (spec.family == Family::kpower_gadget)
        throw std::logic_error("kpower gadget has no leaf level");
    std::vector<int> out;
    for (int v = 0; v < g.n(); ++v)
        if (depth[v] == spec.h) out.push_back(v);
    return out;
}

namespace {

constexpr long long kMaxGadgetSize = 5'000'000;

void fill_dary_parents(Gadget& gd, int d) {
    const int n = gd.g.n();
    gd.parent.assign(n, -1);
    gd.depth.assign(n, 0);
    for (int v = 1; v < n; ++v) {
        gd.parent[v] = (v - 1) / d;
        gd.depth[v] = gd.depth[gd.parent[v]] + 1;
    }
}

Gadget build_sibling(const GadgetSpec& spec) {
    const int h = spec.h;
    long long n = 1, width = 1;
    for (int level = 1; level <= h; ++level) {
        if (level % 2 == 1) width *= 2;
        n += width;
        if (n > kMaxGadgetSize) throw std::invalid_argument("gadget too large");
    }
    Gadget gd;
    gd.spec = spec;
    gd.parent.assign(n, -1);
    gd.depth.assign(n, 0);
    std::vector<std::pair<int, int>> es;
    std::vector<int> level = {0};
    int next = 1;
    for (int dep = 0; dep < h; ++dep) {
        const int kids = dep % 2 == 0 ? 2 : 1;
        std::vector<int> below;
        for (int v : level) {
            int first = next;
            for (int j = 0; j < kids; ++j) {
                int w = next++;
                gd.parent[w] = v;
                gd.depth[w] = dep + 1;
                es.emplace_back(v, w);
                below.push_back(w);
            }
            if (kids == 2) es.emplace_back(first, first + 1);
        }
        level = std::move(below);
    }
    std::sort(es.begin(), es.end());
    gd.g = Graph::from_edges(static_cast<int>(n), es, 0);
    if (gd.g.max_degree() > 3)
        throw std::logic_error("sibling graph degree certificate failed");
    return gd;
}

KpNode build_kp(int k, int t, int& next, std::vector<std::pair<int, int>>& es) {
    KpNode nd;
    nd.u = next++;
    nd.v = next++;
    nd.a = next++;
    nd.b = next++;
    es.emplace_back(nd.u, nd.a);
    es.emplace_back(nd.v, nd.b);
    if (t == 1) {
        nd.path.resize(k);
        for (int i = 0; i < k; ++i) nd.path[i] = next++;
        for (int i = 0; i + 1 < k; ++i) es.emplace_back(nd.path[i], nd.path[i + 1]);
        for (int p : nd.path) {
            es.emplace_back(nd.a, p);
            es.emplace_back(nd.b, p);
        }
        return nd;
    }
    nd.subs.reserve(k);
    for (int i = 0; i < k; ++i) nd.subs.push_back(build_kp(k, t - 1, next, es));
    for (int i = 0; i < k; ++i) {
        es.emplace_back(nd.a, nd.subs[i].u);
        es.emplace_back(nd.b, nd.subs[i].v);
    }
    for (int i = 1; i < k; ++i) {  // chain edges, 1-based rule
        if (i % 2 == 0)
            es.emplace_back(nd.subs[i - 1].u, nd.subs[i].u);
        else
            es.emplace_back(nd.subs[i - 1].v, nd.subs[i].v);
    }
    return nd;
}

Gadget build_kpower(const GadgetSpec& spec) {
    long long n = spec.k + 4;
    for (int level = 2; level <= spec.t; ++level) {
        n = n * spec.k + 4;
        if (n > kMaxGadgetSize) throw std::invalid_argument("gadget too large");
    }
    Gadget gd;
    gd.spec = spec;
    std::vector<std::pair<int, int>> es;
    int next = 0;
    gd.kp = build_kp(spec.k, spec.t, next, es);
    std::sort(es.begin(), es.end());
    gd.g = Graph::from_edges(next, es);
    if (gd.g.max_degree() > spec.k + 1)
        throw std::logic_error("kpower degree certificate failed");
    if (gd.g.degree(gd.kp.u) != 1 || gd.g.degree(gd.kp.v) != 1)
        throw std::logic_error("kpower pendant certificate failed");
    return gd;
}

}  // namespace

Gadget build(const GadgetSpec& spec) {
    spec.validate();
    switch (spec.family) {
        case Family::edge_binary_tree: {
            Gadget gd;
            gd.spec = spec;
            gd.g = make_complete_dary_tree(2, spec.h);
            fill_dary_parents(gd, 2);
            return gd;
        }
        case Family::complete_dary: {
            Gadget gd;
            gd.spec = spec;
            gd.g = make_complete_dary_tree(spec.d, spec.h);
            fill_dary_parents(gd, spec.d);
            return gd;
        }
        case Family::sibling_graph:
            return build_sibling(spec);
        case Family::kpower_gadget:
            return build_kpower(spec);
    }
    throw std::invalid_argument("bad family");
}

namespace {

constexpr unsigned __int128 kU128Max = ~static_cast<unsigned __int128>(0);

struct Big {
    unsigned __int128 val = 0;
    bool over = false;
};

Big big_of(long long x) { return {static_cast<unsigned __int128>(x), false}; }

Big big_mul(Big a, Big b) {
    if (a.over || b.over) return {0, true};
    if (a.val == 0 || b.val == 0) return {0, false};
    if (a.val > kU128Max / b.val) return {0, true};
    return {a.val * b.val, false};
}

Big big_pow(long long base, long long exp) {
    Big r = big_of(1);
    Big b = big_of(base);
    while (exp > 0) {
        if (exp & 1) r = big_mul(r, b);
        exp >>= 1;
        if (exp > 0) b = big_mul(b, b);
    }
    return r;
}

// a > b with saturation awareness
bool big_gt(Big a, Big b) {
    if (a.over && b.over)
        throw std::overflow_error("premise arithmetic exceeds 128 bits");
    if (a.over) return true;
    if (b.over) return false;
    return a.val > b.val;
}

bool big_le(Big a, Big b) { return !big_gt(a, b); }

}  // namespace

bool premise_ok(const GadgetSpec& spec, int c) {
    spec.validate();
    if (c < 1) throw std::invalid_argument("colour count must be at least 1");
    switch (spec.family) {
        case Family::edge_binary_tree:
            return big_gt(big_pow(2, spec.h), big_pow(spec.h + 1, c));
        case Family::sibling_graph:
            return big_gt(big_pow(2, (spec.h + 1) / 2), big_pow(spec.h + 2, c));
        case Family::complete_dary:
            return big_le(big_mul(big_pow(spec.d, c), big_pow(c, spec.h)),
                          big_pow(spec.d, spec.h));
        case Family::kpower_gadget:
            return big_gt(big_pow(spec.k, spec.t),
                          big_mul(big_pow(spec.k - 1, spec.t),
                                  big_pow(4LL * spec.t + 2, c)));
    }
    throw std::invalid_argument("bad family");
}

namespace {

AnagramWitness make_witness(const Graph& g, const Colouring& col,
                            std::vector<int> verts, int k) {
    AnagramWitness w;
    w.path.verts = std::move(verts);
    w.k = k;
    w.mode = col.mode;
    if (!w.verify(g, col))
        throw std::logic_error("internal error: witness failed re-verification");
    return w;
}

void require_family(const Gadget& gd, Family want) {
    if (gd.spec.family != want)
        throw std::invalid_argument("gadget family mismatch");
}

void require_premise(const Gadget& gd, const Colouring& col) {
    if (!premise_ok(gd.spec, col.c))
        throw PremiseViolated("counting premise fails for " +
                              std::string(family_name(gd.spec.family)) + " with c=" +
                              std::to_string(col.c) +
                              "; the pigeonhole is not guaranteed");
}

}  // namespace

AnagramWitness find_anagram_edge_tree(const Gadget& gd, const Colouring& col) {
    require_family(gd, Family::edge_binary_tree);
    if (col.mode != Mode::edge)
        throw std::invalid_argument("edge tree attack needs an edge colouring");
    col.validate(gd.g);
    require_premise(gd, col);

    // edge towards the parent, colour looked up once per vertex
    std::vector<int> up(gd.g.n(), -1);
    for (int v = 1; v < gd.g.n(); ++v) {
        int p = gd.parent[v];
        up[v] = col.ids[gd.g.edge_id(std::min(p, v), std::max(p, v))];
    }

    std::map<std::vector<int>, int> seen;
    int p = -1, q = -1;
    for (int leaf : gd.leaves()) {
        std::vector<int> key(col.c, 0);
        for (int v = leaf; v != 0; v = gd.parent[v]) key[up[v]] += 1;
        auto [it, fresh] = seen.emplace(std::move(key), leaf);
        if (!fresh) {
            p = it->second;
            q = leaf;
            break;
        }
    }
    if (p < 0) throw std::logic_error("pigeonhole failed despite premise");

    int x = p, y = q;
    while (x != y) {
        x = gd.parent[x];
        y = gd.parent[y];
    }
    const int z = x;
    std::vector<int> verts;
    for (int v = p; v != z; v = gd.parent[v]) verts.push_back(v);
    verts.push_back(z);
    std::vector<int> down;
    for (int v = q; v != z; v = gd.parent[v]) down.push_back(v);
    verts.insert(verts.end(), down.rbegin(), down.rend());
    return make_witness(gd.g, col, std::move(verts), 2);
}

AnagramWitness find_anagram_vertex_graph(const Gadget& gd, const Colouring& col) {
    require_family(gd, Family::sibling_graph);
    if (col.mode != Mode::vertex)
        throw std::invalid_argument("sibling graph attack needs a vertex colouring");
    col.validate(gd.g);
    require_premise(gd, col);

    std::map<std::vector<int>, int> seen;
    int p = -1, q = -1;
    for (int leaf : gd.leaves()) {
        std::vector<int> key(col.c, 0);
        for (int v = leaf;; v = gd.parent[v]) {
            key[col.ids[v]] += 1;
            if (v == 0) break;
        }
        auto [it, fresh] = seen.emplace(std::move(key), leaf);
        if (!fresh) {
            p = it->second;
            q = leaf;
            break;
        }
    }
    if (p < 0) throw std::logic_error("pigeonhole failed despite premise");

    // climb lockstep to just above the divergence vertex
    int x = p, y = q;
    while (gd.parent[x] != gd.parent[y]) {
        x = gd.parent[x];
        y = gd.parent[y];
    }
    if (gd.g.edge_id(std::min(x, y), std::max(x, y)) < 0)
        throw std::logic_error("divergence children are not siblings");
    std::vector<int> verts;
    for (int v = p; v != x; v = gd.parent[v]) verts.push_back(v);
    verts.push_back(x);
    std::vector<int> down;
    for (int v = q; v != y; v = gd.parent[v]) down.push_back(v);
    down.push_back(y);
    verts.insert(verts.end(), down.rbegin(), down.rend());
    return make_witness(gd.g, col, std::move(verts), 2);
}

AnagramWitness find_anagram_dary(const Gadget& gd, const Colouring& col) {
    require_family(gd, Family::complete_dary);
    if (col.mode != Mode::vertex)
        throw std::invalid_argument("dary attack needs a vertex colouring");
    col.validate(gd.g);
    require_premise(gd, col);
    const int d = gd.spec.d, h = gd.spec.h;

    // bucket leaves by root-path colour sequence; keep the largest bucket,
    // ties to the smallest first leaf
    std::map<std::vector<int>, std::vector<int>> buckets;
    for (int leaf : gd.leaves()) {
        std::vector<int> seq;
        seq.reserve(h + 1);
        for (int v = leaf;; v = gd.parent[v]) {
            seq.push_back(col.ids[v]);
            if (v == 0) break;
        }
        std::reverse(seq.begin(), seq.end());
        buckets[std::move(seq)].push_back(leaf);
    }
    const std::vector<int>* seq = nullptr;
    const std::vector<int>* bucket = nullptr;
    for (const auto& [key, leaves] : buckets) {
        if (!bucket || leaves.size() > bucket->size() ||
            (leaves.size() == bucket->size() && leaves[0] < (*bucket)[0])) {
            seq = &key;
            bucket = &leaves;
        }
    }

    // ancestor closure, coloured by level
    std::vector<char> in_r(gd.g.n(), 0);
    for (int leaf : *bucket)
        for (int v = leaf;; v = gd.parent[v]) {
            if (in_r[v]) break;
            in_r[v] = 1;
            if (v == 0) break;
        }
    std::vector<int> kids(gd.g.n(), 0);
    for (int v = 1; v < gd.g.n(); ++v)
        if (in_r[v]) kids[gd.parent[v]] += 1;

    // a level is good when some vertex does not have exactly one child
    std::vector<char> good(h + 1, 0);
    for (int v = 0; v < gd.g.n(); ++v)
        if (in_r[v] && kids[v] != 1) good[gd.depth[v]] = 1;

    int la = -1, lb = -1;
    std::map<int, int> first_level_of_colour;
    for (int level = 0; level <= h; ++level) {
        if (!good[level]) continue;
        auto [it, fresh] = first_level_of_colour.emplace((*seq)[level], level);
        if (!fresh) {
            la = it->second;
            lb = level;
            break;
        }
    }
    if (la < 0) throw std::logic_error("no repeated good-level colour despite premise");

    int v = -1;
    for (int x = 0; x < gd.g.n(); ++x)
        if (in_r[x] && gd.depth[x] == la && kids[x] >= 2) {
            v = x;
            break;
        }
    if (v < 0) throw std::logic_error("good level lost its branching vertex");

    int c1 = -1, c2 = -1;
    for (int j = d * v + 1; j <= d * v + d; ++j)
        if (in_r[j]) {
            if (c1 < 0)
                c1 = j;
            else if (c2 < 0) {
                c2 = j;
                break;
            }
        }
    auto descend = [&](int x) {
        while (gd.depth[x] < lb) {
            int nextv = -1;
            for (int j = d * x + 1; j <= d * x + d; ++j)
                if (in_r[j]) {
                    nextv = j;
                    break;
                }
            if (nextv < 0) throw std::logic_error("closure lost a descent path");
            x = nextv;
        }
        return x;
    };
    const int u = descend(c1), w = descend(c2);

    std::vector<int> verts;
    for (int x = u; x != v; x = gd.parent[x]) verts.push_back(x);
    verts.push_back(v);
    std::vector<int> wside;
    for (int x = w; x != v; x = gd.parent[x]) wside.push_back(x);
    // drop w itself, keep q_{n-1} .. q_1
    for (size_t i = wside.size(); i-- > 1;) verts.push_back(wside[i]);
    return make_witness(gd.g, col, std::move(verts), 2);
}

bool MultisetFamily::meets_bound() const {
    return big_le(big_pow(k, t), big_mul(big_of(size()), big_pow(k - 1, t)));
}

namespace {

using Outcome = std::variant<AnagramWitness, MultisetFamily>;

Outcome attack_node(const Graph& g, const Colouring& col, const KpNode& nd,
                    int k, int t) {
    if (nd.subs.empty()) {
        bool mono = true;
        for (int p : nd.path)
            if (col.ids[p] != col.ids[nd.path[0]]) mono = false;
        if (mono) return make_witness(g, col, nd.path, k);
        MultisetFamily fam;
        fam.k = k;
        fam.t = 1;
        for (int p : nd.path) {
            std::vector<int> key(col.c, 0);
            for (int x : {nd.u, nd.a, p, nd.b, nd.v}) key[col.ids[x]] += 1;
            fam.reps.emplace(std::move(key),
                             std::vector<int>{nd.u, nd.a, p, nd.b, nd.v});
        }
        if (!fam.meets_bound())
            throw std::logic_error("base family below its bound");
        return fam;
    }

    std::vector<MultisetFamily> fams;
    fams.reserve(nd.subs.size());
    for (const KpNode& sub : nd.subs) {
        Outcome r = attack_node(g, col, sub, k, t - 1);
        if (std::holds_alternative<AnagramWitness>(r)) return r;
        fams.push_back(std::get<MultisetFamily>(std::move(r)));
    }

    // common multiset: stitch the k representatives into one path
    for (const auto& [key, rep0] : fams[0].reps) {
        bool common = true;
        for (size_t i = 1; i < fams.size() && common; ++i)
            common = fams[i].reps.count(key) > 0;
        if (!common) continue;
        std::vector<int> verts;
        for (size_t i = 0; i < fams.size(); ++i) {
            const std::vector<int>& rep = fams[i].reps.at(key);
            if (i % 2 == 0)
                verts.insert(verts.end(), rep.begin(), rep.end());
            else
                verts.insert(verts.end(), rep.rbegin(), rep.rend());
        }
        return make_witness(g, col, std::move(verts), k);
    }

    MultisetFamily out;
    out.k = k;
    out.t = t;
    const int extra[4] = {nd.u, nd.a, nd.b, nd.v};
    for (const MultisetFamily& fam : fams)
        for (const auto& [key, rep] : fam.reps) {
            std::vector<int> lifted_key = key;
            for (int x : extra) lifted_key[col.ids[x]] += 1;
            std::vector<int> lifted;
            lifted.reserve(rep.size() + 4);
            lifted.push_back(nd.u);
            lifted.push_back(nd.a);
            lifted.insert(lifted.end(), rep.begin(), rep.end());
            lifted.push_back(nd.b);
            lifted.push_back(nd.v);
            out.reps.emplace(std::move(lifted_key), std::move(lifted));
        }
    if (!out.meets_bound())
        throw std::logic_error("family merge fell below its bound");
    return out;
}

}  // namespace

std::variant<AnagramWitness, MultisetFamily> find_kanagram_gadget(
    const Gadget& gd, const Colouring& col) {
    require_family(gd, Family::kpower_gadget);
    if (col.mode != Mode::vertex)
        throw std::invalid_argument("kpower attack needs a vertex colouring");
    col.validate(gd.g);
    Outcome r = attack_node(gd.g, col, gd.kp, gd.spec.k, gd.spec.t);
    if (std::holds_alternative<MultisetFamily>(r) && premise_ok(gd.spec, col.c))
        throw std::logic_error(
            "premise holds but the induction produced no anagram");
    return r;
}

}  // namespace afc
