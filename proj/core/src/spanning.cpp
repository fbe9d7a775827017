#include "signedpinv/spanning.hpp"

#include <string>

#include "signedpinv/linalg.hpp"

namespace signedpinv {

namespace {

void check_cap(const SignedGraph& g, int edge_cap) {
    if (g.edge_count() > edge_cap)
        throw CapError("enumeration over " + std::to_string(g.edge_count()) +
                       " edges exceeds the cap of " + std::to_string(edge_cap) +
                       " (raise it explicitly for larger inputs)");
    if (!is_connected(g)) throw GraphError("graph is not connected");
}

// Union-find over vertices with union by size and an undo stack instead of
// path compression, so backtracking can roll merges back. Each vertex
// carries the sign product of its path to the set root, and each root the
// edge count of its component and whether that component closed a cycle.
class SignedForest {
public:
    explicit SignedForest(int n)
        : parent_(n + 1), sign_to_parent_(n + 1, 1), size_(n + 1, 1), edge_count_(n + 1, 0),
          has_cycle_(n + 1, 0) {
        for (int v = 0; v <= n; ++v) parent_[v] = v;
    }

    struct Find {
        int root;
        int sign;  // sign product along the path to the root
    };

    Find find(int v) const {
        int sign = 1;
        while (parent_[v] != v) {
            sign *= sign_to_parent_[v];
            v = parent_[v];
        }
        return {v, sign};
    }

    int component_edges(int root) const { return edge_count_[root]; }
    int component_vertices(int root) const { return size_[root]; }
    bool component_has_cycle(int root) const { return has_cycle_[root]; }

    // Joins the components of u and v with an edge of the given sign.
    // Precondition: different roots.
    void merge(Find u, Find v, int sigma) {
        if (size_[u.root] < size_[v.root]) std::swap(u, v);
        trail_.push_back({v.root, u.root, edge_count_[u.root], has_cycle_[u.root]});
        parent_[v.root] = u.root;
        // A path v..v.root..u.root must multiply to sigma * sign(u path).
        sign_to_parent_[v.root] = v.sign * sigma * u.sign;
        size_[u.root] += size_[v.root];
        edge_count_[u.root] += edge_count_[v.root] + 1;
        // The surviving root speaks for the whole component, so a cycle in
        // either half must follow it.
        has_cycle_[u.root] |= has_cycle_[v.root];
    }

    // Records an edge that closes a cycle inside the component of `root`.
    void close_cycle(int root) {
        trail_.push_back({-1, root, edge_count_[root], has_cycle_[root]});
        ++edge_count_[root];
        has_cycle_[root] = 1;
    }

    std::size_t mark() const { return trail_.size(); }

    void rollback(std::size_t to_mark) {
        while (trail_.size() > to_mark) {
            const Entry e = trail_.back();
            trail_.pop_back();
            if (e.child_root < 0) {
                edge_count_[e.parent_root] = e.parent_edges_before;
            } else {
                parent_[e.child_root] = e.child_root;
                sign_to_parent_[e.child_root] = 1;
                size_[e.parent_root] -= size_[e.child_root];
                edge_count_[e.parent_root] = e.parent_edges_before;
            }
            has_cycle_[e.parent_root] = e.parent_cycle_before;
        }
    }

private:
    struct Entry {
        int child_root;  // -1 for a cycle-closing edge
        int parent_root;
        int parent_edges_before;
        char parent_cycle_before;
    };

    std::vector<int> parent_, sign_to_parent_, size_, edge_count_;
    std::vector<char> has_cycle_;
    std::vector<Entry> trail_;
};

}  // namespace

std::vector<SpanningTree> spanning_trees(const SignedGraph& g, int edge_cap) {
    check_cap(g, edge_cap);
    const int n = g.vertex_count(), m = g.edge_count(), need = n - 1;
    std::vector<SpanningTree> out;
    SignedForest forest(n);
    std::vector<int> chosen;
    // Include/exclude backtracking in edge-index order: any acyclic set of
    // n-1 edges is a spanning tree, so the only branch condition is the
    // cycle test, and the output is naturally in lexicographic order.
    auto rec = [&](auto&& self, int i) -> void {
        if (static_cast<int>(chosen.size()) == need) {
            out.push_back({chosen});
            return;
        }
        if (m - i < need - static_cast<int>(chosen.size())) return;
        const SignedEdge& e = g.edge(i);
        const auto fu = forest.find(e.u), fv = forest.find(e.v);
        if (fu.root != fv.root) {
            const auto mark = forest.mark();
            forest.merge(fu, fv, e.sigma);
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
            forest.rollback(mark);
        }
        self(self, i + 1);
    };
    if (need == 0)
        out.push_back({{}});
    else
        rec(rec, 0);
    return out;
}

std::vector<TuSubgraph> tu_subgraphs(const SignedGraph& g, int edge_cap) {
    check_cap(g, edge_cap);
    const int n = g.vertex_count(), m = g.edge_count();
    std::vector<TuSubgraph> out;
    SignedForest forest(n);
    std::vector<int> chosen;
    // Same include/exclude scheme over n edges. A component may never hold
    // more edges than vertices, and the single cycle it closes must have
    // negative sign; with n edges on n vertices those local conditions force
    // every component to be unicyclic with a negative cycle, so no final
    // validation pass is needed.
    auto rec = [&](auto&& self, int i) -> void {
        if (static_cast<int>(chosen.size()) == n) {
            int components = 0;
            for (int v = 1; v <= n; ++v)
                if (forest.find(v).root == v) ++components;
            out.push_back({chosen, components});
            return;
        }
        if (m - i < n - static_cast<int>(chosen.size())) return;
        const SignedEdge& e = g.edge(i);
        const auto fu = forest.find(e.u), fv = forest.find(e.v);
        bool can_take = false;
        if (fu.root == fv.root)
            can_take = !forest.component_has_cycle(fu.root) && fu.sign * fv.sign * e.sigma == -1;
        else
            can_take = !(forest.component_has_cycle(fu.root) && forest.component_has_cycle(fv.root));
        if (can_take) {
            const auto mark = forest.mark();
            if (fu.root == fv.root)
                forest.close_cycle(fu.root);
            else
                forest.merge(fu, fv, e.sigma);
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
            forest.rollback(mark);
        }
        self(self, i + 1);
    };
    rec(rec, 0);
    return out;
}

Rational spanning_tree_count_by_determinant(const SignedGraph& g) {
    if (!is_connected(g)) throw GraphError("graph is not connected");
    const int n = g.vertex_count();
    if (n == 1) return 1;
    RatMatrix minor(n - 1, n - 1);
    for (const SignedEdge& e : g.edges()) {
        const int u = e.u - 2, v = e.v - 2;  // drop vertex 1
        if (u >= 0) minor.at(u, u) += 1;
        if (v >= 0) minor.at(v, v) += 1;
        if (u >= 0 && v >= 0) {
            minor.at(u, v) -= 1;
            minor.at(v, u) -= 1;
        }
    }
    return det(minor);
}

Rational vol_squared(const SignedGraph& g, int edge_cap) {
    if (is_balanced(g).balanced) {
        return Rational(g.vertex_count()) * spanning_tree_count_by_determinant(g);
    }
    Rational total(0);
    for (const TuSubgraph& h : tu_subgraphs(g, edge_cap))
        total += pow_int(4, static_cast<unsigned>(h.component_count));
    return total;
}

}  // namespace signedpinv
