#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace afc {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simple undirected graph with a fixed edge order. Edges are stored as (u, v)
// with u < v; the order of the edge list is significant because edge
// colourings index into it.
class Graph {
public:
    struct Arc {
        int to;
        int eid;
    };

    Graph() = default;

    // Validates: endpoints in range, u != v, no duplicate edges.
    // The tree flag is computed, not declared: connected and m == n - 1.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges,
                            std::optional<int> root = std::nullopt);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    bool is_tree() const { return is_tree_; }
    std::optional<int> root() const { return root_; }
    void set_root(int r);

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<Arc>& adj(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    int max_degree() const;

    // -1 when u and v are not adjacent
    int edge_id(int u, int v) const;

    std::vector<int> bfs_dist(int s) const;
    int eccentricity(int s) const;
    // vertices of minimum eccentricity, ascending (connected graphs only)
    std::vector<int> centres() const;
    int radius() const;
    std::vector<std::vector<int>> components() const;
    bool connected() const;

    // unique u..v vertex path; trees only
    std::vector<int> path_between(int u, int v) const;

    // depths from the stored root (error when unrooted or not a tree)
    std::vector<int> depths_from_root() const;
    int height_from_root() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<Arc>> adj_;
    std::optional<int> root_;
    bool is_tree_ = false;
};

Graph make_path(int n);
Graph make_cycle(int n);
// complete d-ary tree of height h, BFS numbering, root 0
Graph make_complete_dary_tree(int d, int h);

// vertices of the line graph are the edge ids of g, in g's edge order
Graph line_graph(const Graph& g);

// text format: "n m" header, m lines "u v" with u < v, optional "root r"
Graph parse_graph(std::istream& in);
Graph load_graph(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_string(const Graph& g);

}  // namespace afc
