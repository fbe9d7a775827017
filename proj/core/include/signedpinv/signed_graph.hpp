#pragma once

#include <stdexcept>
#include <vector>

#include "signedpinv/rat_matrix.hpp"

namespace signedpinv {

// Input that violates a structural precondition (loops, duplicate edges,
// inconsistent orientation marks, disconnected where connectivity is
// required, wrong graph class for a specialized formula).
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An undirected signed edge with an orientation mark at each endpoint.
// Marks are +1 for an arrow pointing out of the endpoint and -1 for an
// arrow pointing into it; they satisfy eta_u * eta_v == -sigma. Endpoints
// are 1-based and stored with u < v.
struct SignedEdge {
    int u = 0, v = 0;
    int sigma = 1;
    int eta_u = 1, eta_v = -1;
};

bool operator==(const SignedEdge& a, const SignedEdge& b);

// For a positive edge the default marks are eta_u = +1, eta_v = -1
// (u < v); for a negative edge both are +1.
SignedEdge make_edge(int u, int v, int sigma);
SignedEdge make_edge(int u, int v, int sigma, int eta_u, int eta_v);

// Simple signed graph on vertices 1..n. The edge order is significant:
// edge i owns column i of the incidence matrix and row i of its
// pseudoinverse. Construction validates all structural invariants.
class SignedGraph {
public:
    SignedGraph(int vertex_count, std::vector<SignedEdge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<SignedEdge>& edges() const { return edges_; }
    const SignedEdge& edge(int i) const { return edges_[i]; }

private:
    int n_;
    std::vector<SignedEdge> edges_;
};

// n x m vertex-edge incidence matrix: column i holds the orientation marks
// of edge i at its two endpoints and zeros elsewhere.
RatMatrix incidence(const SignedGraph& g);

// Reconstructs the graph from an incidence matrix; throws GraphError if any
// column is not a valid +/-1 pair or a duplicate edge appears.
SignedGraph incidence_to_graph(const RatMatrix& n);

bool is_connected(const SignedGraph& g);

struct BalanceResult {
    bool balanced = true;
    // When unbalanced: the edge indices (0-based) of one negative cycle,
    // in traversal order.
    std::vector<int> witness_cycle;
};

// A connected signed graph is balanced when every cycle has positive sign
// product. Throws GraphError on disconnected input.
BalanceResult is_balanced(const SignedGraph& g);

// Vertex labels s with s[u]*s[v] == sigma(uv) for every edge; exists exactly
// for balanced graphs (throws GraphError otherwise). s[0] unused, s[1] = +1.
std::vector<int> switching_labels(const SignedGraph& g);

// S with s_ij = common sign of every i-j path; defined for connected
// balanced graphs. Symmetric with unit diagonal.
RatMatrix path_sign_matrix(const SignedGraph& g);

// L = D - A where D is the degree diagonal and A the signed adjacency
// matrix; equals N N^T for the incidence matrix N.
RatMatrix laplacian(const SignedGraph& g);

// Adjacency as (neighbor, edge index) lists, 1-based vertex slots.
std::vector<std::vector<std::pair<int, int>>> adjacency(const SignedGraph& g);

// All-pairs hop distances by breadth-first search; throws GraphError on
// disconnected input.
RatMatrix graph_distance_matrix(const SignedGraph& g);

}  // namespace signedpinv
