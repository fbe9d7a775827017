// Acceptance gate: one line per criterion, exit 0 only when every line
// passes. Each criterion is independent; a failure reports the first
// offending case and keeps the remaining criteria running.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "signedpinv/edge_list.hpp"
#include "signedpinv/linalg.hpp"
#include "signedpinv/pinv_formulas.hpp"
#include "signedpinv/signed_graph.hpp"
#include "signedpinv/spanning.hpp"
#include "test_support.hpp"

using namespace signedpinv;
using testsupport::load_fixture;

namespace {

bool all_true(const std::array<bool, 4>& checks) {
    return checks[0] && checks[1] && checks[2] && checks[3];
}

std::string describe(const SignedGraph& g) {
    std::string s = to_edge_list(g);
    std::replace(s.begin(), s.end(), '\n', ';');
    return s;
}

// ---- criteria 1-4: fixture matrices and worked entries ----------------

std::string criterion_tree_fixture() {
    const PinvReport rep = tree_pinv(load_fixture("tree.sg"));
    if (rep.pinv != testsupport::tree_pinv_expected()) return "matrix mismatch";
    if (rep.pinv.at(4, 3) != Rational(-1, 7)) return "entry (5,4) is not -1/7";
    if (!all_true(rep.penrose)) return "Penrose conditions failed";
    return "";
}

std::string criterion_unicyclic_fixture() {
    const PinvReport rep = unbalanced_unicyclic_inverse(load_fixture("gamma1.sg"));
    if (rep.pinv != testsupport::gamma1_inverse_expected()) return "matrix mismatch";
    if (rep.pinv.at(6, 3) != Rational(-1, 2)) return "entry (7,4) is not -1/2";
    if (rep.pinv.at(1, 5) != Rational(-1)) return "entry (2,6) is not -1";
    return "";
}

std::string criterion_bicyclic_fixture(const char* name, std::size_t count,
                                       long volume, const Rational& entry53) {
    const SignedGraph g = load_fixture(name);
    const std::vector<TuSubgraph> subs = tu_subgraphs(g);
    if (subs.size() != count)
        return "subgraph count " + std::to_string(subs.size()) + ", wanted " +
               std::to_string(count);
    if (vol_squared(g) != Rational(volume)) return "vol^2 mismatch";
    const PinvReport rep = general_pinv(g);
    if (rep.pinv.at(4, 2) != entry53)
        return "entry (5,3) is " + rep.pinv.at(4, 2).str() + ", wanted " + entry53.str();
    return "";
}

std::string criterion_gamma3_extra() {
    // Component counts behind the count of 8: seven single-cycle subgraphs
    // and one with two cycles.
    const std::vector<TuSubgraph> subs = tu_subgraphs(load_fixture("gamma3.sg"));
    int ones = 0, twos = 0;
    for (const TuSubgraph& h : subs) {
        if (h.component_count == 1) ++ones;
        if (h.component_count == 2) ++twos;
    }
    if (ones != 7 || twos != 1)
        return "component profile " + std::to_string(ones) + "/" + std::to_string(twos) +
               ", wanted 7/1";
    return "";
}

// ---- shared sweep state ------------------------------------------------

struct SweepRecord {
    long graphs = 0;
    long unicyclic = 0;
    long balanced = 0;
    long unbalanced = 0;
    std::string volume_failure;     // criterion 7, exhaustive part
    std::string coherence_failure;  // criterion 8, unicyclic part
};

std::string check_volume(const SignedGraph& g, bool balanced) {
    const Rational v2 = vol_squared(g);
    const Rational dl = det(laplacian(g));
    if (balanced) {
        if (!dl.is_zero()) return "det(L) nonzero on balanced " + describe(g);
        if (v2 != Rational(g.vertex_count()) * spanning_tree_count_by_determinant(g))
            return "vol^2 is not n*tau on " + describe(g);
    } else if (dl != v2) {
        return "det(L) != vol^2 on " + describe(g);
    }
    return "";
}

// Every connected signed graph on up to five vertices, canonical marks.
std::string criterion_exhaustive_sweep(SweepRecord& record) {
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
        const int p = static_cast<int>(pairs.size());
        for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
            std::vector<std::pair<int, int>> picked;
            for (int b = 0; b < p; ++b)
                if (mask >> b & 1) picked.push_back(pairs[b]);
            const int m = static_cast<int>(picked.size());
            if (m < n - 1) continue;
            {
                std::vector<int> parent(n + 1);
                for (int v = 1; v <= n; ++v) parent[v] = v;
                std::function<int(int)> find = [&](int v) {
                    while (parent[v] != v) v = parent[v] = parent[parent[v]];
                    return v;
                };
                int components = n;
                for (const auto& [u, v] : picked)
                    if (find(u) != find(v)) {
                        parent[find(u)] = find(v);
                        --components;
                    }
                if (components != 1) continue;
            }
            for (std::uint32_t signs = 0; signs < (1u << m); ++signs) {
                std::vector<SignedEdge> edges;
                edges.reserve(picked.size());
                for (int b = 0; b < m; ++b)
                    edges.push_back(make_edge(picked[b].first, picked[b].second,
                                              signs >> b & 1 ? -1 : 1));
                const SignedGraph g(n, std::move(edges));
                ++record.graphs;

                const PinvReport rep = general_pinv(g);
                if (rep.pinv != pinv_oracle(incidence(g)))
                    return "oracle mismatch on " + describe(g);
                if (!all_true(rep.penrose)) return "Penrose failure on " + describe(g);

                const bool balanced = is_balanced(g).balanced;
                (balanced ? record.balanced : record.unbalanced) += 1;
                if (record.volume_failure.empty())
                    record.volume_failure = check_volume(g, balanced);

                if (m == n && record.coherence_failure.empty()) {
                    ++record.unicyclic;
                    const PinvReport special = balanced
                                                   ? balanced_unicyclic_pinv(g)
                                                   : unbalanced_unicyclic_inverse(g);
                    if (special.pinv != rep.pinv)
                        record.coherence_failure =
                            "dedicated formula disagrees on " + describe(g);
                }
            }
        }
    }
    return "";
}

struct RandomRecord {
    long graphs = 0;
    std::string volume_failure;
};

std::string criterion_random_equivalence(RandomRecord& record) {
    std::mt19937_64 rng(90210);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);  // up to 10 vertices
        const long pairs = static_cast<long>(n) * (n - 1) / 2;
        const int m =
            n - 1 + static_cast<int>(rng() % (std::min<long>(14, pairs) - (n - 1) + 1));
        const SignedGraph g = testsupport::random_connected(rng, n, m);
        ++record.graphs;

        const RatMatrix nm = incidence(g);
        const PinvReport rep = general_pinv(g);
        if (rep.pinv != pinv_oracle(nm)) return "oracle mismatch on " + describe(g);

        const PinvReport lrep = laplacian_pinv(g);
        if (!all_true(penrose_verify(laplacian(g), lrep.pinv)))
            return "Laplacian Penrose failure on " + describe(g);

        if (projector(g) != nm * rep.pinv)
            return "projector mismatch on " + describe(g);

        if (record.volume_failure.empty())
            record.volume_failure = check_volume(g, is_balanced(g).balanced);
    }
    return "";
}

std::string criterion_tree_coherence() {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 220; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);  // up to 8 vertices
        const SignedGraph g = testsupport::random_tree(rng, n);
        if (tree_pinv(g).pinv != general_pinv(g).pinv)
            return "tree formula disagrees on " + describe(g);
    }
    return "";
}

std::string criterion_resistance() {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 120; ++trial) {
        const SignedGraph g = testsupport::random_tree(rng, 2 + trial % 9);
        if (signed_resistance(g) != graph_distance_matrix(g))
            return "tree resistance is not the distance matrix on " + describe(g);
    }
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + trial % 8;
        const int m = std::min(n - 1 + trial % 4, n * (n - 1) / 2);
        const SignedGraph g = testsupport::random_balanced(rng, n, m);
        const RatMatrix r = signed_resistance(g);
        if (!r.is_symmetric()) return "asymmetric resistance on " + describe(g);
        for (int i = 0; i < n; ++i)
            if (!r.at(i, i).is_zero()) return "nonzero diagonal on " + describe(g);
    }
    return "";
}

std::string criterion_reductions() {
    std::mt19937_64 rng(1999);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + trial % 8;
        const bool all_positive = trial % 2 == 0;
        SignedGraph base = testsupport::random_tree(rng, n);
        std::vector<SignedEdge> edges;
        for (const SignedEdge& e : base.edges())
            edges.push_back(all_positive ? testsupport::random_edge(rng, e.u, e.v, 1)
                                         : make_edge(e.u, e.v, -1, 1, 1));
        const SignedGraph g(n, std::move(edges));
        const RatMatrix p = tree_pinv(g).pinv;
        const RatMatrix dist = graph_distance_matrix(g);
        std::vector<int> all(g.edge_count());
        for (int i = 0; i < g.edge_count(); ++i) all[i] = i;
        for (int i = 0; i < g.edge_count(); ++i) {
            const HeadTailSplit split = head_tail(g, all, i);
            for (int j = 1; j <= n; ++j) {
                const bool in_tail = std::binary_search(split.tail_side.begin(),
                                                        split.tail_side.end(), j);
                Rational expected;
                if (all_positive) {
                    // Orientation alone sets the sign: head side negative.
                    expected = in_tail
                                   ? Rational(static_cast<long>(split.head_side.size()), n)
                                   : Rational(-static_cast<long>(split.tail_side.size()), n);
                } else {
                    // Sign alternates with the hop distance to the edge.
                    const SignedEdge& e = g.edge(i);
                    const Rational du = dist.at(j - 1, e.u - 1), dv = dist.at(j - 1, e.v - 1);
                    const long hops = (du < dv ? du : dv).num().get_si();
                    const long parity = hops % 2 == 0 ? 1 : -1;
                    const long size = in_tail ? static_cast<long>(split.head_side.size())
                                              : static_cast<long>(split.tail_side.size());
                    expected = Rational(parity * size, n);
                }
                if (p.at(i, j - 1) != expected)
                    return "entry (" + std::to_string(i + 1) + "," + std::to_string(j) +
                           ") off on " + describe(g);
            }
        }
    }
    return "";
}

#ifdef SIGNEDPINV_CLI_BIN
std::string capture(const std::string& command, int& code) {
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        code = -1;
        return output;
    }
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
    code = pclose(pipe);
    return output;
}

std::string extra_cli_determinism() {
    const std::string command = std::string(SIGNEDPINV_CLI_BIN) + " --json pinv " +
                                testsupport::fixture_path("gamma2.sg") + " --check 2>&1";
    int code_a = 0, code_b = 0;
    const std::string a = capture(command, code_a);
    const std::string b = capture(command, code_b);
    if (code_a != 0 || code_b != 0) return "nonzero exit from the tool";
    if (a.empty()) return "no output captured";
    if (a != b) return "two identical runs differed";
    if (a.find("\"input_digest\"") == std::string::npos) return "document lacks a digest";
    if (a.find("\"oracle_match\": true") == std::string::npos)
        return "oracle check not reported";
    return "";
}
#endif

}  // namespace

int main() {
    struct Outcome {
        std::string label;
        std::string failure;
        double seconds = 0;
    };
    std::vector<Outcome> outcomes;
    SweepRecord sweep;
    RandomRecord randoms;

    const auto run = [&](const std::string& label, double budget_seconds,
                         const std::function<std::string()>& body) {
        Outcome o;
        o.label = label;
        const auto start = std::chrono::steady_clock::now();
        try {
            o.failure = body();
        } catch (const std::exception& e) {
            o.failure = std::string("exception: ") + e.what();
        }
        o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                        .count();
        if (o.failure.empty() && budget_seconds > 0 && o.seconds > budget_seconds) {
            std::ostringstream os;
            os << "took " << o.seconds << " s, budget " << budget_seconds << " s";
            o.failure = os.str();
        }
        outcomes.push_back(std::move(o));
    };

    run("criterion 1 (tree fixture pseudoinverse)", 1.0, criterion_tree_fixture);
    run("criterion 2 (unbalanced unicyclic fixture inverse)", 1.0,
        criterion_unicyclic_fixture);
    run("criterion 3 (first bicyclic fixture: count 3, vol^2 12, entry -2/3)", 1.0, [] {
        return criterion_bicyclic_fixture("gamma2.sg", 3, 12, Rational(-2, 3));
    });
    run("criterion 4 (second bicyclic fixture: count 8, vol^2 44, entry -6/11)", 1.0, [] {
        const std::string base =
            criterion_bicyclic_fixture("gamma3.sg", 8, 44, Rational(-6, 11));
        return base.empty() ? criterion_gamma3_extra() : base;
    });
    run("criterion 5 (exhaustive oracle sweep, n <= 5)", 300.0,
        [&] { return criterion_exhaustive_sweep(sweep); });
    run("criterion 6 (1000 random graphs vs oracle, Laplacian, projector)", 600.0,
        [&] { return criterion_random_equivalence(randoms); });
    run("criterion 7 (det(L) vs vol^2 across both sweeps)", 0, [&]() -> std::string {
        if (!sweep.volume_failure.empty()) return sweep.volume_failure;
        if (!randoms.volume_failure.empty()) return randoms.volume_failure;
        if (sweep.graphs == 0 || randoms.graphs == 0) return "sweeps did not run";
        return "";
    });
    run("criterion 8 (specialized formulas match the general one)", 0,
        [&]() -> std::string {
            if (!sweep.coherence_failure.empty()) return sweep.coherence_failure;
            if (sweep.unicyclic == 0) return "sweep saw no unicyclic graphs";
            return criterion_tree_coherence();
        });
    run("criterion 9 (resistance: distance on trees, symmetric zero-diagonal)", 0,
        criterion_resistance);
    run("criterion 10 (all-positive and all-negative tree reductions, per entry)", 0,
        criterion_reductions);
#ifdef SIGNEDPINV_CLI_BIN
    run("extra (byte-identical repeated tool runs)", 0, extra_cli_determinism);
#endif

    int failures = 0;
    for (const Outcome& o : outcomes) {
        std::ostringstream line;
        line << o.label << ": " << (o.failure.empty() ? "pass" : "FAIL") << " [";
        line.setf(std::ios::fixed);
        line.precision(2);
        line << o.seconds << " s]";
        if (!o.failure.empty()) {
            line << " " << o.failure;
            ++failures;
        }
        std::cout << line.str() << '\n';
    }
    std::cout << "checked " << sweep.graphs << " exhaustive graphs ("
              << sweep.balanced << " balanced, " << sweep.unbalanced << " unbalanced, "
              << sweep.unicyclic << " unicyclic) and " << randoms.graphs
              << " random graphs\n";
    std::cout << "summary: " << outcomes.size() - failures << "/" << outcomes.size()
              << " pass\n";
    return failures == 0 ? 0 : 1;
}
