#include "afc/pathwidth.hpp"

#include <algorithm>
#include <queue>

namespace afc {

namespace {

// Rooted-tree label: a strictly decreasing chain of sub-branch widths, each
// tagged by how much room is left beside it. OPEN: a width-k part can still
// take the vertex as an endpoint extension. MID: two open width-k parts were
// joined through this subtree, sealed at both ends. CLOSED: a width-k part
// plus a residual chain below it.
enum class Flag { open, mid, closed };

struct Level {
    int k;
    Flag flag;
};

using Label = std::vector<Level>;

Label combine(const std::vector<Label>& kids);

// Can the branches below fit in a decomposition of width K that still passes
// through the parent? One level-K hole is spent per MID/CLOSED branch, two
// OPEN level-K branches can share.
bool sat(const std::vector<Label>& labels, int K) {
    if (K <= 0) return labels.empty();
    std::vector<const Label*> hits;
    for (const Label& l : labels) {
        if (l[0].k > K) return false;
        if (l[0].k == K) hits.push_back(&l);
    }
    if (hits.size() >= 3) return false;
    if (hits.size() == 2)
        return hits[0]->front().flag == Flag::open &&
               hits[1]->front().flag == Flag::open;
    if (hits.size() == 1) {
        const Label& l1 = *hits[0];
        if (l1[0].flag == Flag::open) return true;
        std::vector<Label> rest;
        for (const Label& l : labels)
            if (&l != &l1) rest.push_back(l);
        if (l1[0].flag == Flag::closed)
            rest.emplace_back(l1.begin() + 1, l1.end());
        return sat(rest, K - 1);
    }
    return true;
}

Flag flag_of(const std::vector<Label>& labels, int K) {
    std::vector<const Label*> hits;
    for (const Label& l : labels)
        if (l[0].k == K) hits.push_back(&l);
    if (hits.empty()) return Flag::open;
    if (hits.size() == 2) return Flag::mid;
    return hits[0]->front().flag == Flag::open ? Flag::open : Flag::closed;
}

std::vector<Level> residual_of(const std::vector<Label>& labels, int K) {
    std::vector<const Label*> hits;
    for (const Label& l : labels)
        if (l[0].k == K) hits.push_back(&l);
    if (hits.size() != 1 || hits[0]->front().flag == Flag::open) return {};
    const Label& l1 = *hits[0];
    std::vector<Label> rest;
    for (const Label& l : labels)
        if (&l != &l1) rest.push_back(l);
    if (l1[0].flag == Flag::closed) rest.emplace_back(l1.begin() + 1, l1.end());
    return combine(rest);
}

Label combine(const std::vector<Label>& kids) {
    if (kids.empty()) return {{0, Flag::open}};
    int K = 1;
    for (const Label& l : kids) K = std::max(K, l[0].k);
    while (!sat(kids, K)) ++K;
    Label out = {{K, flag_of(kids, K)}};
    auto rest = residual_of(kids, K);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

// width of one component, processed bottom-up from a BFS order
int component_width(const Graph& g, int root, std::vector<int>& comp_of,
                    int mark) {
    std::vector<int> order, parent(g.n(), -1);
    order.push_back(root);
    comp_of[root] = mark;
    for (size_t i = 0; i < order.size(); ++i) {
        int u = order[i];
        for (const auto& a : g.adj(u)) {
            if (comp_of[a.to] != -1) continue;
            comp_of[a.to] = mark;
            parent[a.to] = u;
            order.push_back(a.to);
        }
    }
    std::vector<std::vector<Label>> kids(order.size());
    std::vector<int> slot(g.n(), -1);
    for (size_t i = 0; i < order.size(); ++i) slot[order[i]] = static_cast<int>(i);
    for (size_t i = order.size(); i-- > 0;) {
        int u = order[i];
        Label lab = combine(kids[i]);
        if (parent[u] != -1)
            kids[slot[parent[u]]].push_back(std::move(lab));
        else
            return lab[0].k;
    }
    return 0;  // unreachable
}

}  // namespace

int pathwidth(const Graph& g) {
    if (g.n() == 0) return 0;
    auto comps = g.components();
    int edges_expected = g.n() - static_cast<int>(comps.size());
    if (g.m() != edges_expected)
        throw std::invalid_argument("pathwidth needs a forest");
    std::vector<int> comp_of(g.n(), -1);
    int best = 0;
    int mark = 0;
    for (const auto& comp : comps)
        best = std::max(best, component_width(g, comp.front(), comp_of, mark++));
    return best;
}

bool PathwidthCert::verify(const Graph& t) const {
    if (!t.is_tree()) return false;
    if (pathwidth(t) != width) return false;
    if (!main_path.valid_in(t)) return false;

    std::vector<char> removed(t.n(), 0);
    for (int v : main_path.verts) removed[v] = 1;
    std::vector<int> new_of(t.n(), -1);
    int kept = 0;
    for (int v = 0; v < t.n(); ++v)
        if (!removed[v]) new_of[v] = kept++;
    std::vector<std::pair<int, int>> rest_edges;
    for (const auto& [u, v] : t.edges())
        if (!removed[u] && !removed[v]) rest_edges.emplace_back(new_of[u], new_of[v]);
    Graph rest = Graph::from_edges(kept, rest_edges);

    std::vector<int> widths;
    for (const auto& comp : rest.components()) {
        std::vector<int> local(rest.n(), -1);
        for (size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> es;
        for (const auto& [u, v] : rest.edges())
            if (local[u] != -1 && local[v] != -1) es.emplace_back(local[u], local[v]);
        Graph sub = Graph::from_edges(static_cast<int>(comp.size()), es);
        widths.push_back(pathwidth(sub));
    }
    if (widths != component_widths) return false;
    for (int w : widths)
        if (w > width - 1) return false;
    return true;
}

PathwidthCert main_path(const Graph& t) {
    if (!t.is_tree()) throw std::invalid_argument("main path needs a tree");
    if (t.m() == 0) throw std::invalid_argument("main path needs at least one edge");
    const int pw = pathwidth(t);

    std::vector<int> leaves;
    for (int v = 0; v < t.n(); ++v)
        if (t.degree(v) == 1) leaves.push_back(v);

    auto widths_after = [&](const std::vector<int>& path,
                            std::vector<int>& out) {
        std::vector<char> removed(t.n(), 0);
        for (int v : path) removed[v] = 1;
        std::vector<int> new_of(t.n(), -1);
        int kept = 0;
        for (int v = 0; v < t.n(); ++v)
            if (!removed[v]) new_of[v] = kept++;
        std::vector<std::pair<int, int>> es;
        for (const auto& [u, v] : t.edges())
            if (!removed[u] && !removed[v]) es.emplace_back(new_of[u], new_of[v]);
        Graph rest = Graph::from_edges(kept, es);
        out.clear();
        for (const auto& comp : rest.components()) {
            std::vector<int> local(rest.n(), -1);
            for (size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
            std::vector<std::pair<int, int>> ces;
            for (const auto& [u, v] : rest.edges())
                if (local[u] != -1 && local[v] != -1) ces.emplace_back(local[u], local[v]);
            Graph sub = Graph::from_edges(static_cast<int>(comp.size()), ces);
            int w = pathwidth(sub);
            if (w > pw - 1) return false;
            out.push_back(w);
        }
        return true;
    };

    std::vector<int> widths;
    for (size_t i = 0; i < leaves.size(); ++i)
        for (size_t j = i + 1; j < leaves.size(); ++j) {
            auto path = t.path_between(leaves[i], leaves[j]);
            if (widths_after(path, widths)) {
                PathwidthCert cert;
                cert.width = pw;
                cert.main_path.verts = std::move(path);
                cert.component_widths = std::move(widths);
                return cert;
            }
        }
    throw std::logic_error("no leaf pair certified; tree invariant broken");
}

}  // namespace afc
