#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "afc/graph.hpp"

namespace afc {

enum class Mode { vertex, edge };

const char* mode_name(Mode m);
Mode mode_from_name(const std::string& s);

// Total assignment of colour ids to the vertices (or edges, in the graph's
// edge order) of one graph. Ids are dense: every id is in [0, c) and c is
// the number of distinct ids present.
struct Colouring {
    Mode mode = Mode::vertex;
    int c = 0;
    std::vector<int> ids;

    int size() const { return static_cast<int>(ids.size()); }
    void validate(const Graph& g) const;  // throws FormatError on mismatch
    bool dense() const;

    // remap to dense ids, preserving the numeric order of the ids kept
    Colouring compacted() const;
};

Colouring vertex_colouring(const Graph& g, std::vector<int> ids);
Colouring edge_colouring(const Graph& g, std::vector<int> ids);

struct ColourMultiset {
    std::vector<int> counts;

    ColourMultiset() = default;
    explicit ColourMultiset(int c) : counts(c, 0) {}
    void add(int id) { counts.at(id) += 1; }
    void sub(int id) { counts.at(id) -= 1; }
    int total() const;
    bool operator==(const ColourMultiset&) const = default;
};

// A sequence is a k-anagram when its length is a positive multiple of k and
// its k consecutive blocks carry equal colour multisets. k must be >= 2.
bool is_k_anagram(const std::vector<int>& seq, int k);

// colour sequence read along a path; in edge mode the elements are the
// consecutive edges, so the sequence is one shorter than the vertex list
std::vector<int> colour_sequence(const Graph& g, const Colouring& col,
                                 const std::vector<int>& path);
ColourMultiset multiset_of_path(const Graph& g, const Colouring& col,
                                const std::vector<int>& path);

// number of multisets of size n over c colours: C(n + c - 1, c - 1);
// throws std::overflow_error when it does not fit in 64 bits
std::uint64_t count_colour_multisets(int n, int c);
// the convenient weaker bound (n + 1)^c
std::uint64_t colour_multiset_weak_bound(int n, int c);

// text format: line "mode=vertex c=3" then one line of space separated ids
Colouring parse_colouring(std::istream& in);
Colouring load_colouring(const std::string& path);
void write_colouring(std::ostream& out, const Colouring& col);
std::string colouring_to_string(const Colouring& col);

// DOT export, colour labels when a colouring is given
std::string to_dot(const Graph& g, const Colouring* col = nullptr);

}  // namespace afc
