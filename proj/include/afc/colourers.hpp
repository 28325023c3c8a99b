#pragma once

#include "afc/colouring.hpp"
#include "afc/graph.hpp"
#include "afc/words.hpp"

namespace afc {

// Colours a tree by depth below the root (the stored root, vertex 0 when
// unset), reading colour x for depth x from the word. Edge mode colours each
// edge by the depth of its deeper endpoint, so the word needs height symbols
// rather than height + 1.
Colouring colour_by_depth(const Graph& t, const Word& w, Mode mode);

// distance-from-centre colouring; exactly radius + 1 colours
Colouring colour_centred(const Graph& t);

// Vertex colouring of a forest with at most 4 pw + 1 colours: the main path
// of each widest component takes the top 4 ids, everything else recurses on
// the low block.
Colouring colour_pathwidth_vertex(const Graph& t);

// Edge colouring of a forest, free of 3-anagrams, with at most 4 pw colours:
// main path edges take 3 fresh ids, edges from the path into the leftover
// components take the fourth, the components recurse below.
Colouring colour_pathwidth_edge3(const Graph& t);

// Vertex colouring of the complete binary tree of height h, heap numbering.
// Even depths of the top block share one colour, each odd level gets a
// sibling-distinguishing pair, and the hanging subtrees recurse, reusing the
// odd-level colours that avoid their root paths.
Colouring colour_binary_tree(int h);

// one unique colour plus a square-free word around the rest; at most 5
Colouring colour_cycle(int n, Mode mode);

// Depth colouring through the cheapest word whose block count fits k:
// 4 colours for k >= 4, 3 for k >= 6, 2 for k >= 8.
Colouring colour_tree_k_anagram(const Graph& t, int k, Mode mode);

}  // namespace afc
