#include "signedpinv/pinv_formulas.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

namespace signedpinv {

namespace {

using Adj = std::vector<std::vector<std::pair<int, int>>>;

// One side of the graph after deleting `excluded_edge`, restricted to the
// edges enabled in `mask`: the vertices reachable from `start` and, for
// each, the sign product of the walk back to `start`. In the balanced and
// tree cases used here that product is path-independent.
struct SideScan {
    std::vector<int> vertices;  // visit order
    std::vector<int> sign;      // 1-based; 0 marks "not on this side"
};

void scan_side(const SignedGraph& g, const Adj& adj, const std::vector<char>& mask,
               int excluded_edge, int start, SideScan& out) {
    out.vertices.clear();
    out.sign.assign(g.vertex_count() + 1, 0);
    std::queue<int> q;
    q.push(start);
    out.sign[start] = 1;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        out.vertices.push_back(u);
        for (const auto& [w, ei] : adj[u]) {
            if (ei == excluded_edge || !mask[ei] || out.sign[w] != 0) continue;
            out.sign[w] = out.sign[u] * g.edge(ei).sigma;
            q.push(w);
        }
    }
}

// The row of edge i in the pseudoinverse of the incidence matrix of the
// spanning tree selected by `mask` (which must contain i): entry j is
//   w(e_i) * sgn(path j .. nearest endpoint of e_i) / n
//   * (head-side size)            for j on the tail side,
//   * (-sigma(e_i) * tail-side size)  for j on the head side.
std::vector<Rational> tree_formula_row(const SignedGraph& g, const Adj& adj,
                                       const std::vector<char>& mask, int i) {
    const SignedEdge& e = g.edge(i);
    const auto [head_v, tail_v] = head_tail_vertices(e);
    SideScan head_scan, tail_scan;
    scan_side(g, adj, mask, i, head_v, head_scan);
    scan_side(g, adj, mask, i, tail_v, tail_scan);
    const long n = g.vertex_count();
    const long w = edge_weight(e);
    const long head_size = static_cast<long>(head_scan.vertices.size());
    const long tail_size = static_cast<long>(tail_scan.vertices.size());
    std::vector<Rational> row(g.vertex_count());
    for (const int j : tail_scan.vertices)
        row[j - 1] = Rational(w * tail_scan.sign[j] * head_size, n);
    for (const int j : head_scan.vertices)
        row[j - 1] = Rational(-w * head_scan.sign[j] * e.sigma * tail_size, n);
    return row;
}

void add_scaled_row(RatMatrix& out, int i, const std::vector<Rational>& row,
                    const Rational& scale) {
    for (std::size_t j = 0; j < row.size(); ++j)
        if (!row[j].is_zero()) out.at(i, j) += scale * row[j];
}

// Cycle of a unicyclic edge set, found by repeatedly stripping degree-one
// vertices. Returns per-edge flags for membership in `edges`' unique cycle.
std::vector<char> cycle_edges_of(const SignedGraph& g, const std::vector<int>& edges) {
    std::vector<int> degree(g.vertex_count() + 1, 0);
    for (const int ei : edges) {
        ++degree[g.edge(ei).u];
        ++degree[g.edge(ei).v];
    }
    std::vector<char> removed_edge(g.edge_count(), 0), removed_vertex(g.vertex_count() + 1, 0);
    const auto adj = adjacency(g);
    std::vector<char> in_set(g.edge_count(), 0);
    for (const int ei : edges) in_set[ei] = 1;
    std::queue<int> leaves;
    for (const int ei : edges) {
        if (degree[g.edge(ei).u] == 1) leaves.push(g.edge(ei).u);
        if (degree[g.edge(ei).v] == 1) leaves.push(g.edge(ei).v);
    }
    while (!leaves.empty()) {
        const int u = leaves.front();
        leaves.pop();
        if (removed_vertex[u] || degree[u] != 1) continue;
        removed_vertex[u] = 1;
        for (const auto& [w, ei] : adj[u]) {
            if (!in_set[ei] || removed_edge[ei] || removed_vertex[w]) continue;
            removed_edge[ei] = 1;
            --degree[u];
            --degree[w];
            if (degree[w] == 1) leaves.push(w);
        }
    }
    std::vector<char> on_cycle(g.edge_count(), 0);
    for (const int ei : edges)
        if (!removed_edge[ei]) on_cycle[ei] = 1;
    return on_cycle;
}

// Inverse rows for one unicyclic component whose cycle has negative sign,
// added into `out` with the given scale. Only the component's edges are
// read and only its vertex columns written; everything else stays zero.
void add_unicyclic_component_rows(const SignedGraph& g, const Adj& adj,
                                  const std::vector<int>& comp_edges, const Rational& scale,
                                  RatMatrix& out) {
    const auto on_cycle = cycle_edges_of(g, comp_edges);
    std::vector<char> mask(g.edge_count(), 0);
    for (const int ei : comp_edges) mask[ei] = 1;
    int cycle_vertex = 0;
    for (const int ei : comp_edges)
        if (on_cycle[ei]) {
            cycle_vertex = g.edge(ei).u;
            break;
        }
    SideScan scan;
    for (const int i : comp_edges) {
        const SignedEdge& e = g.edge(i);
        const long w = edge_weight(e);
        if (on_cycle[i]) {
            // Deleting a cycle edge leaves a tree on the component; entries
            // are half the path sign from the edge's tail.
            const int tail_v = head_tail_vertices(e).second;
            scan_side(g, adj, mask, i, tail_v, scan);
            for (const int j : scan.vertices)
                out.at(i, j - 1) += scale * Rational(w * scan.sign[j], 2);
        } else {
            // A bridge separates a pendant part from the part holding the
            // cycle; only the pendant part gets nonzero entries, negated
            // when a positive bridge points into it.
            scan_side(g, adj, mask, i, e.u, scan);
            const bool u_side_has_cycle = scan.sign[cycle_vertex] != 0;
            const int pendant_end = u_side_has_cycle ? e.v : e.u;
            if (u_side_has_cycle) scan_side(g, adj, mask, i, e.v, scan);
            const int head_v = head_tail_vertices(e).first;
            const long flip = (e.sigma > 0 && head_v == pendant_end) ? -1 : 1;
            for (const int j : scan.vertices)
                out.at(i, j - 1) += scale * Rational(w * flip * scan.sign[j]);
        }
    }
}

std::array<bool, 4> verify_or_throw(const RatMatrix& a, const RatMatrix& x, const char* what) {
    const auto checks = penrose_verify(a, x);
    if (!(checks[0] && checks[1] && checks[2] && checks[3]))
        throw InternalCheckError(std::string(what) + ": result failed exact Moore-Penrose verification");
    return checks;
}

void require_connected(const SignedGraph& g) {
    if (!is_connected(g)) throw GraphError("graph is not connected");
}

}  // namespace

std::string_view to_string(PinvMethod m) {
    switch (m) {
        case PinvMethod::tree_formula: return "tree-formula";
        case PinvMethod::unicyclic_inverse: return "unicyclic-inverse";
        case PinvMethod::balanced_unicyclic: return "balanced-unicyclic";
        case PinvMethod::general_balanced: return "general-balanced";
        case PinvMethod::general_unbalanced: return "general-unbalanced";
        case PinvMethod::oracle: return "oracle";
    }
    return "unknown";
}

int edge_weight(const SignedEdge& e) {
    return (e.sigma < 0 && e.eta_u == -1 && e.eta_v == -1) ? -1 : 1;
}

std::pair<int, int> head_tail_vertices(const SignedEdge& e) {
    if (e.sigma < 0) return {e.v, e.u};
    return e.eta_u < 0 ? std::pair<int, int>{e.u, e.v} : std::pair<int, int>{e.v, e.u};
}

HeadTailSplit head_tail(const SignedGraph& g, const std::vector<int>& tree_edges,
                        int edge_index) {
    const int n = g.vertex_count();
    if (static_cast<int>(tree_edges.size()) != n - 1)
        throw GraphError("spanning tree needs exactly n - 1 edges");
    std::vector<char> mask(g.edge_count(), 0);
    for (const int ei : tree_edges) {
        if (ei < 0 || ei >= g.edge_count()) throw GraphError("tree edge index out of range");
        if (mask[ei]) throw GraphError("repeated tree edge index");
        mask[ei] = 1;
    }
    if (edge_index < 0 || edge_index >= g.edge_count() || !mask[edge_index])
        throw GraphError("edge is not part of the given tree");
    const auto adj = adjacency(g);
    const auto [head_v, tail_v] = head_tail_vertices(g.edge(edge_index));
    SideScan head_scan, tail_scan;
    scan_side(g, adj, mask, edge_index, head_v, head_scan);
    scan_side(g, adj, mask, edge_index, tail_v, tail_scan);
    if (head_scan.vertices.size() + tail_scan.vertices.size() != static_cast<std::size_t>(n))
        throw GraphError("edge set is not a spanning tree");
    HeadTailSplit split;
    split.head_vertex = head_v;
    split.tail_vertex = tail_v;
    split.head_side = head_scan.vertices;
    split.tail_side = tail_scan.vertices;
    std::sort(split.head_side.begin(), split.head_side.end());
    std::sort(split.tail_side.begin(), split.tail_side.end());
    return split;
}

PinvReport tree_pinv(const SignedGraph& g) {
    require_connected(g);
    const int n = g.vertex_count(), m = g.edge_count();
    if (m != n - 1) throw GraphError("tree formula needs a tree (m = n - 1)");
    const auto adj = adjacency(g);
    const std::vector<char> mask(m, 1);
    RatMatrix out(m, n);
    for (int i = 0; i < m; ++i)
        add_scaled_row(out, i, tree_formula_row(g, adj, mask, i), Rational(1));
    const auto checks = verify_or_throw(incidence(g), out, "tree_pinv");
    return {std::move(out), PinvMethod::tree_formula, checks};
}

PinvReport unbalanced_unicyclic_inverse(const SignedGraph& g) {
    require_connected(g);
    const int n = g.vertex_count(), m = g.edge_count();
    if (m != n) throw GraphError("unicyclic inverse needs m = n");
    if (is_balanced(g).balanced)
        throw GraphError("cycle has positive sign; the incidence matrix is singular");
    const auto adj = adjacency(g);
    std::vector<int> all_edges(m);
    for (int i = 0; i < m; ++i) all_edges[i] = i;
    RatMatrix out(m, n);
    add_unicyclic_component_rows(g, adj, all_edges, Rational(1), out);
    const auto checks = verify_or_throw(incidence(g), out, "unbalanced_unicyclic_inverse");
    return {std::move(out), PinvMethod::unicyclic_inverse, checks};
}

PinvReport balanced_unicyclic_pinv(const SignedGraph& g) {
    require_connected(g);
    const int n = g.vertex_count(), m = g.edge_count();
    if (m != n) throw GraphError("unicyclic pseudoinverse needs m = n");
    if (!is_balanced(g).balanced)
        throw GraphError("cycle has negative sign; use the exact inverse instead");
    const auto adj = adjacency(g);
    std::vector<int> all_edges(m);
    for (int i = 0; i < m; ++i) all_edges[i] = i;
    const auto on_cycle = cycle_edges_of(g, all_edges);
    const long cycle_len = std::count(on_cycle.begin(), on_cycle.end(), char(1));
    std::vector<char> mask(m, 1);
    RatMatrix out(m, n);
    const Rational tree_share(1, cycle_len);
    for (int i = 0; i < m; ++i) {
        if (!on_cycle[i]) {
            // Every spanning tree contains this bridge and splits the
            // vertices the same way, so the average collapses to one row.
            add_scaled_row(out, i, tree_formula_row(g, adj, mask, i), Rational(1));
            continue;
        }
        for (int k = 0; k < m; ++k) {
            if (!on_cycle[k] || k == i) continue;
            mask[k] = 0;
            add_scaled_row(out, i, tree_formula_row(g, adj, mask, i), tree_share);
            mask[k] = 1;
        }
    }
    const auto checks = verify_or_throw(incidence(g), out, "balanced_unicyclic_pinv");
    return {std::move(out), PinvMethod::balanced_unicyclic, checks};
}

PinvReport general_pinv(const SignedGraph& g, int edge_cap) {
    require_connected(g);
    const int n = g.vertex_count(), m = g.edge_count();
    const auto adj = adjacency(g);
    RatMatrix out(m, n);
    PinvMethod method;
    if (is_balanced(g).balanced) {
        method = PinvMethod::general_balanced;
        const auto trees = spanning_trees(g, edge_cap);
        const Rational tree_share(1, static_cast<long>(trees.size()));
        std::vector<char> mask(m, 0);
        for (const SpanningTree& t : trees) {
            for (const int ei : t.edge_indices) mask[ei] = 1;
            for (const int ei : t.edge_indices)
                add_scaled_row(out, ei, tree_formula_row(g, adj, mask, ei), tree_share);
            for (const int ei : t.edge_indices) mask[ei] = 0;
        }
    } else {
        method = PinvMethod::general_unbalanced;
        const auto subgraphs = tu_subgraphs(g, edge_cap);
        Rational total_weight(0);
        for (const TuSubgraph& h : subgraphs)
            total_weight += pow_int(4, static_cast<unsigned>(h.component_count));
        // Split each subgraph into its components and add that component's
        // inverse rows, weighted by 4^(component count) / total.
        for (const TuSubgraph& h : subgraphs) {
            const Rational weight =
                pow_int(4, static_cast<unsigned>(h.component_count)) / total_weight;
            std::vector<int> root(n + 1);
            for (int v = 1; v <= n; ++v) root[v] = v;
            const auto find = [&](int v) {
                while (root[v] != v) v = root[v] = root[root[v]];
                return v;
            };
            for (const int ei : h.edge_indices) {
                const int a = find(g.edge(ei).u), b = find(g.edge(ei).v);
                if (a != b) root[a] = b;
            }
            std::map<int, std::vector<int>> components;
            for (const int ei : h.edge_indices) components[find(g.edge(ei).u)].push_back(ei);
            for (const auto& [r, comp_edges] : components)
                add_unicyclic_component_rows(g, adj, comp_edges, weight, out);
        }
    }
    const auto checks = verify_or_throw(incidence(g), out, "general_pinv");
    return {std::move(out), method, checks};
}

PinvReport pinv_by_oracle(const SignedGraph& g) {
    const RatMatrix n = incidence(g);
    RatMatrix x = pinv_oracle(n);
    const auto checks = verify_or_throw(n, x, "pinv_by_oracle");
    return {std::move(x), PinvMethod::oracle, checks};
}

PinvReport pinv_auto(const SignedGraph& g, int edge_cap) {
    require_connected(g);
    const int n = g.vertex_count(), m = g.edge_count();
    if (m == n - 1 && n >= 2) return tree_pinv(g);
    if (m == n)
        return is_balanced(g).balanced ? balanced_unicyclic_pinv(g)
                                       : unbalanced_unicyclic_inverse(g);
    return general_pinv(g, edge_cap);
}

RatMatrix projector(const SignedGraph& g, int edge_cap) {
    const int n = g.vertex_count();
    RatMatrix p = RatMatrix::identity(n);
    if (is_balanced(g).balanced) {
        const auto s = switching_labels(g);
        const Rational share(1, n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) p.at(i - 1, j - 1) -= Rational(s[i] * s[j]) * share;
    }
    if (incidence(g) * general_pinv(g, edge_cap).pinv != p)
        throw InternalCheckError("projector: closed form disagrees with N * pinv(N)");
    return p;
}

PinvReport laplacian_pinv(const SignedGraph& g, PsiCheck check, int edge_cap) {
    const PinvReport rep = general_pinv(g, edge_cap);
    RatMatrix lp = rep.pinv.transpose() * rep.pinv;
    const auto checks = verify_or_throw(laplacian(g), lp, "laplacian_pinv");
    if (is_balanced(g).balanced && check != PsiCheck::off) {
        const bool run = check == PsiCheck::on ||
                         spanning_tree_count_by_determinant(g) <= Rational(kPsiAutoTreeLimit);
        if (run && laplacian_pinv_by_tree_pairs(g, edge_cap) != lp)
            throw InternalCheckError("laplacian_pinv: tree-pair sum disagrees with product form");
    }
    return {std::move(lp), rep.method, checks};
}

RatMatrix laplacian_pinv_by_tree_pairs(const SignedGraph& g, int edge_cap) {
    require_connected(g);
    if (!is_balanced(g).balanced)
        throw GraphError("tree-pair sum is defined for balanced graphs");
    const int n = g.vertex_count(), m = g.edge_count();
    const auto adj = adjacency(g);
    const auto trees = spanning_trees(g, edge_cap);
    RatMatrix acc(n, n);
    std::vector<char> mask(m, 0);
    for (int k = 0; k < m; ++k) {
        std::vector<std::vector<Rational>> rows;
        for (const SpanningTree& t : trees) {
            if (!std::binary_search(t.edge_indices.begin(), t.edge_indices.end(), k)) continue;
            for (const int ei : t.edge_indices) mask[ei] = 1;
            rows.push_back(tree_formula_row(g, adj, mask, k));
            for (const int ei : t.edge_indices) mask[ei] = 0;
        }
        for (const auto& row_r : rows)
            for (const auto& row_s : rows)
                for (int i = 0; i < n; ++i) {
                    if (row_r[i].is_zero()) continue;
                    for (int j = 0; j < n; ++j)
                        if (!row_s[j].is_zero()) acc.at(i, j) += row_r[i] * row_s[j];
                }
    }
    const Rational tree_count(static_cast<long>(trees.size()));
    return scale(Rational(1) / (tree_count * tree_count), acc);
}

RatMatrix signed_resistance(const SignedGraph& g, int edge_cap) {
    if (!is_balanced(g).balanced)
        throw GraphError("signed resistance is defined for balanced graphs");
    const RatMatrix lp = laplacian_pinv(g, PsiCheck::automatic, edge_cap).pinv;
    const auto s = switching_labels(g);
    const int n = g.vertex_count();
    RatMatrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r.at(i, j) = lp.at(i, i) + lp.at(j, j) -
                         Rational(2 * s[i + 1] * s[j + 1]) * lp.at(i, j);
    return r;
}

}  // namespace signedpinv
