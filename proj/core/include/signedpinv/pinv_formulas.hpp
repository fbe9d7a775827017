#pragma once

#include <array>
#include <string_view>

#include "signedpinv/linalg.hpp"
#include "signedpinv/signed_graph.hpp"
#include "signedpinv/spanning.hpp"

namespace signedpinv {

// A combinatorial formula produced a matrix that failed its own exact
// verification. This signals a bug in the library, never bad input.
class InternalCheckError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class PinvMethod {
    tree_formula,
    unicyclic_inverse,
    balanced_unicyclic,
    general_balanced,
    general_unbalanced,
    oracle,
};

std::string_view to_string(PinvMethod m);

// Every constructor of this report verifies the four Moore-Penrose
// conditions exactly before returning, so `penrose` is all-true on any
// value you can observe; a failure raises InternalCheckError instead.
struct PinvReport {
    RatMatrix pinv;  // m x n when inverting an n x m incidence matrix
    PinvMethod method = PinvMethod::oracle;
    std::array<bool, 4> penrose{};
};

// Row weight w(e): -1 when a negative edge has both arrows pointing into
// its endpoints, +1 otherwise.
int edge_weight(const SignedEdge& e);

// Orientation of edge e as head/tail: a negative edge points from its
// smaller to its larger endpoint; a positive edge points along its arrow,
// tail at the mark +1 and head at the mark -1. Returns {head, tail}.
std::pair<int, int> head_tail_vertices(const SignedEdge& e);

// The two components of t minus edge_index, where t is a spanning tree of g
// given as edge indices. Side lists are ascending. Throws GraphError if t
// is not a spanning tree or does not contain edge_index.
struct HeadTailSplit {
    int head_vertex = 0, tail_vertex = 0;
    std::vector<int> head_side, tail_side;
};
HeadTailSplit head_tail(const SignedGraph& g, const std::vector<int>& tree_edges, int edge_index);

// Closed-form pseudoinverse of the incidence matrix of a signed tree
// (connected, m = n - 1).
PinvReport tree_pinv(const SignedGraph& g);

// Exact inverse of the (square, invertible) incidence matrix of a connected
// unicyclic graph whose cycle has negative sign product.
PinvReport unbalanced_unicyclic_inverse(const SignedGraph& g);

// Pseudoinverse for a connected unicyclic graph whose cycle is positive:
// bridge rows in closed form, cycle rows averaged over the spanning trees.
PinvReport balanced_unicyclic_pinv(const SignedGraph& g);

// Pseudoinverse of the incidence matrix of any connected signed graph, as a
// weighted average over spanning trees (balanced) or over the maximal
// subgraphs of tu_subgraphs (unbalanced).
PinvReport general_pinv(const SignedGraph& g, int edge_cap = kDefaultEdgeCap);

// Rank-factorization route, ignoring all graph structure.
PinvReport pinv_by_oracle(const SignedGraph& g);

// Dispatches to the most specific formula for g's shape.
PinvReport pinv_auto(const SignedGraph& g, int edge_cap = kDefaultEdgeCap);

// N * pinv(N), the orthogonal projector onto the column space of the
// incidence matrix: the identity for unbalanced graphs, I - (1/n) S for
// balanced ones (S the path-sign matrix). Verified against the product
// before returning.
RatMatrix projector(const SignedGraph& g, int edge_cap = kDefaultEdgeCap);

// Whether laplacian_pinv re-derives its result through the spanning-tree
// pair sum: always, never, or only when the tree count is small enough for
// the quadratic pass to stay cheap.
enum class PsiCheck { off, on, automatic };
inline constexpr int kPsiAutoTreeLimit = 32;

// Pseudoinverse of the Laplacian L = N N^T, computed as (pinv N)^T (pinv N)
// and Penrose-verified against L.
PinvReport laplacian_pinv(const SignedGraph& g, PsiCheck check = PsiCheck::automatic,
                          int edge_cap = kDefaultEdgeCap);

// The same matrix through the explicit double sum over ordered pairs of
// spanning trees (balanced graphs only). Quadratic in the tree count; kept
// as an independent aggregation route for cross-checking.
RatMatrix laplacian_pinv_by_tree_pairs(const SignedGraph& g, int edge_cap = kDefaultEdgeCap);

// Pairwise resistance r_ij = lp_ii + lp_jj - 2 s_i s_j lp_ij where lp is
// the Laplacian pseudoinverse and s_ij the path sign. Balanced graphs only;
// symmetric with zero diagonal, and equal to the distance matrix on trees.
RatMatrix signed_resistance(const SignedGraph& g, int edge_cap = kDefaultEdgeCap);

}  // namespace signedpinv
