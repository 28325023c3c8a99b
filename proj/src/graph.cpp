#include "afc/graph.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

namespace afc {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges,
                        std::optional<int> root) {
    if (n < 0) throw FormatError("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw FormatError("edge endpoint out of range");
        if (u == v) throw FormatError("self loop");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) throw FormatError("duplicate edge");
    }
    g.edges_ = std::move(edges);
    for (int e = 0; e < static_cast<int>(g.edges_.size()); ++e) {
        auto [u, v] = g.edges_[e];
        g.adj_[u].push_back({v, e});
        g.adj_[v].push_back({u, e});
    }
    for (auto& a : g.adj_)
        std::sort(a.begin(), a.end(),
                  [](const Arc& x, const Arc& y) { return x.to < y.to; });
    g.is_tree_ = (n > 0) && g.m() == n - 1 && g.connected();
    if (root) g.set_root(*root);
    return g;
}

void Graph::set_root(int r) {
    if (r < 0 || r >= n_) throw FormatError("root out of range");
    root_ = r;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::edge_id(int u, int v) const {
    for (const Arc& a : adj_.at(u))
        if (a.to == v) return a.eid;
    return -1;
}

std::vector<int> Graph::bfs_dist(int s) const {
    std::vector<int> dist(n_, -1);
    std::queue<int> q;
    dist.at(s) = 0;
    q.push(s);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (const Arc& a : adj_[v])
            if (dist[a.to] < 0) {
                dist[a.to] = dist[v] + 1;
                q.push(a.to);
            }
    }
    return dist;
}

int Graph::eccentricity(int s) const {
    auto dist = bfs_dist(s);
    int e = 0;
    for (int d : dist) {
        if (d < 0) throw std::invalid_argument("eccentricity of a disconnected graph");
        e = std::max(e, d);
    }
    return e;
}

std::vector<int> Graph::centres() const {
    int best = n_;
    std::vector<int> out;
    for (int v = 0; v < n_; ++v) {
        int e = eccentricity(v);
        if (e < best) {
            best = e;
            out.clear();
        }
        if (e == best) out.push_back(v);
    }
    return out;
}

int Graph::radius() const {
    if (n_ == 0) throw std::invalid_argument("radius of the empty graph");
    return eccentricity(centres().front());
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n_, 0);
    for (int s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        seen[s] = 1;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (const Arc& a : adj_[v])
                if (!seen[a.to]) {
                    seen[a.to] = 1;
                    q.push(a.to);
                }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool Graph::connected() const {
    if (n_ == 0) return true;
    auto dist = bfs_dist(0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<int> Graph::path_between(int u, int v) const {
    if (!is_tree_) throw std::invalid_argument("path_between needs a tree");
    std::vector<int> par(n_, -2);
    std::queue<int> q;
    par.at(u) = -1;
    q.push(u);
    while (!q.empty() && par.at(v) == -2) {
        int x = q.front();
        q.pop();
        for (const Arc& a : adj_[x])
            if (par[a.to] == -2) {
                par[a.to] = x;
                q.push(a.to);
            }
    }
    std::vector<int> path;
    for (int x = v; x != -1; x = par[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    assert(path.front() == u);
    return path;
}

std::vector<int> Graph::depths_from_root() const {
    if (!root_) throw std::invalid_argument("graph has no root");
    if (!is_tree_) throw std::invalid_argument("depths need a tree");
    return bfs_dist(*root_);
}

int Graph::height_from_root() const {
    auto d = depths_from_root();
    return *std::max_element(d.begin(), d.end());
}

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least one vertex");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    return Graph::from_edges(n, std::move(es), 0);
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    es.push_back({0, n - 1});
    std::sort(es.begin(), es.end());
    return Graph::from_edges(n, std::move(es));
}

Graph make_complete_dary_tree(int d, int h) {
    if (d < 1 || h < 0) throw std::invalid_argument("bad tree parameters");
    // BFS numbering: vertex v at depth < h has children d*v + 1 .. d*v + d
    long long n = 1, level = 1;
    for (int i = 0; i < h; ++i) {
        level *= d;
        n += level;
        if (n > 5'000'000) throw std::invalid_argument("tree too large");
    }
    std::vector<std::pair<int, int>> es;
    for (long long v = 0; v * d + 1 < n; ++v)
        for (int j = 1; j <= d; ++j) {
            long long ch = v * d + j;
            if (ch < n) es.push_back({static_cast<int>(v), static_cast<int>(ch)});
        }
    std::sort(es.begin(), es.end());
    return Graph::from_edges(static_cast<int>(n), std::move(es), 0);
}

Graph line_graph(const Graph& g) {
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < g.n(); ++v) {
        const auto& a = g.adj(v);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = i + 1; j < a.size(); ++j) {
                int x = a[i].eid, y = a[j].eid;
                if (x > y) std::swap(x, y);
                es.push_back({x, y});
            }
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return Graph::from_edges(g.m(), std::move(es));
}

Graph parse_graph(std::istream& in) {
    std::string line;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, out)) {
            if (out.find_first_not_of(" \t\r\n") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line(line)) throw FormatError("empty graph file");
    std::istringstream head(line);
    int n, m;
    if (!(head >> n >> m)) throw FormatError("bad graph header, expected \"n m\"");
    if (n < 0 || m < 0) throw FormatError("bad graph header");
    std::vector<std::pair<int, int>> es;
    es.reserve(m);
    for (int i = 0; i < m; ++i) {
        if (!next_line(line)) throw FormatError("missing edge lines");
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) throw FormatError("bad edge line: " + line);
        if (!(0 <= u && u < v && v < n))
            throw FormatError("edge must satisfy 0 <= u < v < n: " + line);
        es.push_back({u, v});
    }
    std::optional<int> root;
    if (next_line(line)) {
        std::istringstream ls(line);
        std::string word;
        int r;
        if (!(ls >> word >> r) || word != "root")
            throw FormatError("unexpected trailing line: " + line);
        root = r;
    }
    return Graph::from_edges(n, std::move(es), root);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    if (g.root()) out << "root " << *g.root() << '\n';
}

std::string graph_to_string(const Graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

}  // namespace afc
