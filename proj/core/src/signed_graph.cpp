#include "signedpinv/signed_graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>
#include <utility>

namespace signedpinv {

bool operator==(const SignedEdge& a, const SignedEdge& b) {
    return a.u == b.u && a.v == b.v && a.sigma == b.sigma && a.eta_u == b.eta_u &&
           a.eta_v == b.eta_v;
}

SignedEdge make_edge(int u, int v, int sigma) {
    if (u > v) std::swap(u, v);
    return sigma > 0 ? SignedEdge{u, v, 1, 1, -1} : SignedEdge{u, v, -1, 1, 1};
}

SignedEdge make_edge(int u, int v, int sigma, int eta_u, int eta_v) {
    if (u > v) {
        std::swap(u, v);
        std::swap(eta_u, eta_v);
    }
    return SignedEdge{u, v, sigma, eta_u, eta_v};
}

SignedGraph::SignedGraph(int vertex_count, std::vector<SignedEdge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 1) throw GraphError("graph needs at least one vertex");
    std::set<std::pair<int, int>> seen;
    for (const SignedEdge& e : edges_) {
        if (e.u < 1 || e.v < 1 || e.u > n_ || e.v > n_)
            throw GraphError("edge endpoint out of range: " + std::to_string(e.u) + "-" +
                             std::to_string(e.v));
        if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) throw GraphError("edge endpoints not normalized");
        if (!seen.insert({e.u, e.v}).second)
            throw GraphError("parallel edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        if (e.sigma != 1 && e.sigma != -1) throw GraphError("edge sign must be +1 or -1");
        if ((e.eta_u != 1 && e.eta_u != -1) || (e.eta_v != 1 && e.eta_v != -1))
            throw GraphError("orientation marks must be +1 or -1");
        if (e.eta_u * e.eta_v != -e.sigma)
            throw GraphError("orientation marks inconsistent with sign on edge " +
                             std::to_string(e.u) + "-" + std::to_string(e.v));
    }
}

RatMatrix incidence(const SignedGraph& g) {
    RatMatrix n(g.vertex_count(), g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        const SignedEdge& e = g.edge(i);
        n.at(e.u - 1, i) = e.eta_u;
        n.at(e.v - 1, i) = e.eta_v;
    }
    return n;
}

SignedGraph incidence_to_graph(const RatMatrix& n) {
    const Rational one(1), minus_one(-1);
    std::vector<SignedEdge> edges;
    for (std::size_t c = 0; c < n.cols(); ++c) {
        int u = 0, v = 0, eta_u = 0, eta_v = 0;
        for (std::size_t r = 0; r < n.rows(); ++r) {
            const Rational& x = n.at(r, c);
            if (x.is_zero()) continue;
            if (x != one && x != minus_one)
                throw GraphError("incidence entry not in {-1,0,1} in column " +
                                 std::to_string(c + 1));
            const int mark = x == one ? 1 : -1;
            if (u == 0) {
                u = static_cast<int>(r) + 1;
                eta_u = mark;
            } else if (v == 0) {
                v = static_cast<int>(r) + 1;
                eta_v = mark;
            } else {
                throw GraphError("more than two nonzeros in column " + std::to_string(c + 1));
            }
        }
        if (v == 0) throw GraphError("fewer than two nonzeros in column " + std::to_string(c + 1));
        edges.push_back(make_edge(u, v, -eta_u * eta_v, eta_u, eta_v));
    }
    return SignedGraph(static_cast<int>(n.rows()), std::move(edges));
}

std::vector<std::vector<std::pair<int, int>>> adjacency(const SignedGraph& g) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count() + 1);
    for (int i = 0; i < g.edge_count(); ++i) {
        const SignedEdge& e = g.edge(i);
        adj[e.u].emplace_back(e.v, i);
        adj[e.v].emplace_back(e.u, i);
    }
    return adj;
}

bool is_connected(const SignedGraph& g) {
    const auto adj = adjacency(g);
    std::vector<char> seen(g.vertex_count() + 1, 0);
    std::queue<int> q;
    q.push(1);
    seen[1] = 1;
    int reached = 1;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (const auto& [w, ei] : adj[u]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == g.vertex_count();
}

namespace {

struct BfsTree {
    std::vector<int> parent;       // parent vertex, 0 at the root
    std::vector<int> parent_edge;  // edge index to the parent, -1 at the root
    std::vector<int> label;        // sign product along the tree path to the root
    std::vector<int> order;        // visit order
};

BfsTree bfs_tree(const SignedGraph& g) {
    if (!is_connected(g)) throw GraphError("graph is not connected");
    const auto adj = adjacency(g);
    BfsTree t;
    t.parent.assign(g.vertex_count() + 1, 0);
    t.parent_edge.assign(g.vertex_count() + 1, -1);
    t.label.assign(g.vertex_count() + 1, 0);
    std::queue<int> q;
    q.push(1);
    t.label[1] = 1;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        t.order.push_back(u);
        for (const auto& [w, ei] : adj[u]) {
            if (t.label[w] != 0) continue;
            t.label[w] = t.label[u] * g.edge(ei).sigma;
            t.parent[w] = u;
            t.parent_edge[w] = ei;
            q.push(w);
        }
    }
    return t;
}

}  // namespace

BalanceResult is_balanced(const SignedGraph& g) {
    const BfsTree t = bfs_tree(g);
    std::vector<char> in_tree(g.edge_count(), 0);
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (t.parent_edge[v] >= 0) in_tree[t.parent_edge[v]] = 1;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (in_tree[i]) continue;
        const SignedEdge& e = g.edge(i);
        if (t.label[e.u] * t.label[e.v] == e.sigma) continue;
        // Negative cycle: the tree paths from both endpoints up to their
        // lowest common ancestor, plus this edge.
        std::vector<int> up_u, up_v;
        std::vector<char> on_u_path(g.vertex_count() + 1, 0);
        for (int x = e.u; x != 0; x = t.parent[x]) on_u_path[x] = 1;
        int meet = e.v;
        while (!on_u_path[meet]) {
            up_v.push_back(t.parent_edge[meet]);
            meet = t.parent[meet];
        }
        for (int x = e.u; x != meet; x = t.parent[x]) up_u.push_back(t.parent_edge[x]);
        BalanceResult res;
        res.balanced = false;
        res.witness_cycle.push_back(i);
        for (int ei : up_v) res.witness_cycle.push_back(ei);
        for (auto it = up_u.rbegin(); it != up_u.rend(); ++it) res.witness_cycle.push_back(*it);
        return res;
    }
    return BalanceResult{};
}

std::vector<int> switching_labels(const SignedGraph& g) {
    const BfsTree t = bfs_tree(g);
    for (const SignedEdge& e : g.edges())
        if (t.label[e.u] * t.label[e.v] != e.sigma)
            throw GraphError("switching labels require a balanced graph");
    return t.label;
}

RatMatrix path_sign_matrix(const SignedGraph& g) {
    const std::vector<int> s = switching_labels(g);
    const int n = g.vertex_count();
    RatMatrix m(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m.at(i - 1, j - 1) = s[i] * s[j];
    return m;
}

RatMatrix graph_distance_matrix(const SignedGraph& g) {
    if (!is_connected(g)) throw GraphError("graph is not connected");
    const auto adj = adjacency(g);
    const int n = g.vertex_count();
    RatMatrix d(n, n);
    for (int src = 1; src <= n; ++src) {
        std::vector<int> dist(n + 1, -1);
        std::queue<int> q;
        q.push(src);
        dist[src] = 0;
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (const auto& [w, ei] : adj[u])
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
        }
        for (int j = 1; j <= n; ++j) d.at(src - 1, j - 1) = dist[j];
    }
    return d;
}

RatMatrix laplacian(const SignedGraph& g) {
    const int n = g.vertex_count();
    RatMatrix l(n, n);
    for (const SignedEdge& e : g.edges()) {
        l.at(e.u - 1, e.u - 1) += 1;
        l.at(e.v - 1, e.v - 1) += 1;
        l.at(e.u - 1, e.v - 1) -= e.sigma;
        l.at(e.v - 1, e.u - 1) -= e.sigma;
    }
    return l;
}

}  // namespace signedpinv
