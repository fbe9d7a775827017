#pragma once

#include <vector>

#include "signedpinv/rational.hpp"
#include "signedpinv/signed_graph.hpp"

namespace signedpinv {

// Raised when an enumeration is asked to run past the configured edge cap.
class CapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultEdgeCap = 24;

// Edge index sets are 0-based, strictly increasing; the result lists are in
// lexicographic order, so repeated runs are byte-for-byte identical.
struct SpanningTree {
    std::vector<int> edge_indices;  // n - 1 edges
};

struct TuSubgraph {
    std::vector<int> edge_indices;  // n edges
    int component_count = 0;        // every component is unicyclic with a negative cycle
};

// All spanning trees of a connected graph, by backtracking over the edge
// list with a cycle test. Throws GraphError on disconnected input and
// CapError when the graph has more than edge_cap edges.
std::vector<SpanningTree> spanning_trees(const SignedGraph& g, int edge_cap = kDefaultEdgeCap);

// All n-edge subgraphs whose components each carry exactly one cycle with
// negative sign product. Empty exactly when the graph is balanced. Same
// cap and connectivity requirements as spanning_trees.
std::vector<TuSubgraph> tu_subgraphs(const SignedGraph& g, int edge_cap = kDefaultEdgeCap);

// Spanning-tree count of the underlying unsigned graph through the
// determinant of a Laplacian principal minor. Independent of the
// backtracking enumeration; used to cross-check it.
Rational spanning_tree_count_by_determinant(const SignedGraph& g);

// The squared volume of the incidence matrix: n * (number of spanning
// trees) for balanced graphs, sum of 4^component_count over the subgraphs
// of tu_subgraphs otherwise. Equals det(L) in the unbalanced case.
Rational vol_squared(const SignedGraph& g, int edge_cap = kDefaultEdgeCap);

}  // namespace signedpinv
