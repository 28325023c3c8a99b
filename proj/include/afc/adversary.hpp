#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "afc/checker.hpp"
#include "afc/colouring.hpp"
#include "afc/graph.hpp"

namespace afc {

// Thrown when a finder's counting premise does not hold for the given number
// of colours. The finders run pigeonhole proofs, not searches, so without the
// premise they refuse instead of guessing.
struct PremiseViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Family {
    edge_binary_tree,  // complete binary tree, attacked through edge colours
    sibling_graph,     // tree plus edges between siblings, max degree 3
    complete_dary,     // complete d-ary tree, attacked through vertex colours
    kpower_gadget,     // recursive S(t) construction, max degree k + 1
};

const char* family_name(Family f);
Family family_from_name(const std::string& s);

struct GadgetSpec {
    Family family = Family::edge_binary_tree;
    int h = 0;  // tree height (edge_binary_tree, sibling_graph, complete_dary)
    int d = 0;  // arity (complete_dary)
    int k = 0;  // anagram block count (kpower_gadget)
    int t = 0;  // induction depth (kpower_gadget)

    void validate() const;
};

// Recursive shape of one kpower gadget level. At t = 1 the node holds the
// central path; deeper nodes hold the k sub-gadgets chained through their
// special vertices.
struct KpNode {
    int u = -1, v = -1, a = -1, b = -1;
    std::vector<int> path;
    std::vector<KpNode> subs;
};

struct Gadget {
    GadgetSpec spec;
    Graph g;
    std::vector<int> parent;  // tree parent, -1 at the root (tree families)
    std::vector<int> depth;
    KpNode kp;  // kpower_gadget only

    std::vector<int> leaves() const;  // tree families: vertices at depth h
};

// Constructs the gadget with canonical construction-order numbering and
// asserts its degree certificate (sibling_graph max degree 3, kpower_gadget
// max degree k + 1 with pendant u and v).
Gadget build(const GadgetSpec& spec);

// Whether c colours are few enough that the counting argument goes through.
// Exact integer arithmetic throughout; throws std::overflow_error when both
// sides exceed 128 bits.
bool premise_ok(const GadgetSpec& spec, int c);

// Pigeonhole on root-to-leaf edge multisets of the complete binary tree;
// returns the leaf-to-leaf path split at the least common ancestor.
AnagramWitness find_anagram_edge_tree(const Gadget& gd, const Colouring& col);

// Same pigeonhole on vertex multisets; the sibling edge at the divergence
// point joins the two halves into one path.
AnagramWitness find_anagram_vertex_graph(const Gadget& gd, const Colouring& col);

// Runs the level argument: some two same-coloured levels of the sequence-
// uniform subtree both branch, which yields a balanced even path.
AnagramWitness find_anagram_dary(const Gadget& gd, const Colouring& col);

// Distinct uv-path colour multisets, keyed by count vector, each with one
// representative path kept for stitching.
struct MultisetFamily {
    int k = 0, t = 0;
    std::map<std::vector<int>, std::vector<int>> reps;

    int size() const { return static_cast<int>(reps.size()); }
    // size * (k-1)^t >= k^t, the S(t) lower bound, in exact arithmetic
    bool meets_bound() const;
};

// The S(t) induction as an algorithm: either a verified k-anagram or the
// family of uv-path multisets it is obliged to produce. When premise_ok
// holds, the family outcome is impossible and raises logic_error.
std::variant<AnagramWitness, MultisetFamily> find_kanagram_gadget(
    const Gadget& gd, const Colouring& col);

}  // namespace afc
