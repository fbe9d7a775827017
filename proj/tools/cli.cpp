#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "signedpinv/edge_list.hpp"
#include "signedpinv/linalg.hpp"
#include "signedpinv/pinv_formulas.hpp"
#include "signedpinv/signed_graph.hpp"
#include "signedpinv/spanning.hpp"

namespace sp = signedpinv;
using nlohmann::json;

namespace {

struct Context {
    bool json_mode = false;
    int cap = sp::kDefaultEdgeCap;
    std::uint64_t seed = 1;
    std::ostream* out = nullptr;
};

std::string fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setfill('0') << std::setw(16) << h;
    return os.str();
}

json matrix_payload(const sp::RatMatrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(m.at(i, j).str());
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

void print_matrix(std::ostream& out, const sp::RatMatrix& m) {
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            width[j] = std::max(width[j], m.at(i, j).str().size());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const std::string s = m.at(i, j).str();
            if (j) out << ' ';
            out << std::string(width[j] - s.size(), ' ') << s;
        }
        out << '\n';
    }
}

json one_based(const std::vector<int>& indices) {
    json a = json::array();
    for (int i : indices) a.push_back(i + 1);
    return a;
}

void print_one_based(std::ostream& out, const std::vector<int>& indices) {
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (k) out << ' ';
        out << indices[k] + 1;
    }
}

void emit(const Context& ctx, const json& doc) { *ctx.out << doc.dump(2) << '\n'; }

json document(const char* command, const sp::SignedGraph& g) {
    return json{{"command", command}, {"input_digest", fnv1a64(sp::to_edge_list(g))}};
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

int cmd_info(const Context& ctx, const std::string& path) {
    const sp::SignedGraph g = sp::read_edge_list_file(path);
    const bool connected = sp::is_connected(g);
    const std::size_t r = sp::rank(sp::incidence(g));
    std::optional<sp::BalanceResult> balance;
    if (connected) balance = sp::is_balanced(g);
    if (ctx.json_mode) {
        json result{
            {"vertices", g.vertex_count()},
            {"edges", g.edge_count()},
            {"connected", connected},
            {"incidence_rank", r},
            {"balanced", nullptr},
        };
        if (balance) {
            result["balanced"] = balance->balanced;
            if (!balance->balanced)
                result["witness_cycle"] = one_based(balance->witness_cycle);
        }
        json doc = document("info", g);
        doc["result"] = std::move(result);
        emit(ctx, doc);
        return 0;
    }
    std::ostream& out = *ctx.out;
    out << "vertices: " << g.vertex_count() << '\n';
    out << "edges: " << g.edge_count() << '\n';
    out << "connected: " << yesno(connected) << '\n';
    if (balance) {
        out << "balanced: " << yesno(balance->balanced) << '\n';
        if (!balance->balanced) {
            out << "negative cycle edges: ";
            print_one_based(out, balance->witness_cycle);
            out << '\n';
        }
    } else {
        out << "balanced: n/a\n";
    }
    out << "incidence rank: " << r << '\n';
    return 0;
}

int cmd_matrix(const Context& ctx, const char* command, const std::string& path) {
    const sp::SignedGraph g = sp::read_edge_list_file(path);
    const sp::RatMatrix m =
        std::string_view(command) == "incidence" ? sp::incidence(g) : sp::laplacian(g);
    if (ctx.json_mode) {
        json doc = document(command, g);
        doc["result"] = json{{"matrix", matrix_payload(m)}};
        emit(ctx, doc);
    } else {
        print_matrix(*ctx.out, m);
    }
    return 0;
}

json verification_payload(const sp::PinvReport& rep, const std::optional<bool>& oracle_match) {
    json v{
        {"method", std::string(sp::to_string(rep.method))},
        {"penrose",
         json::array({rep.penrose[0], rep.penrose[1], rep.penrose[2], rep.penrose[3]})},
    };
    if (oracle_match) v["oracle_match"] = *oracle_match;
    return v;
}

void print_report_head(std::ostream& out, const sp::PinvReport& rep,
                       const std::optional<bool>& oracle_match) {
    out << "method: " << sp::to_string(rep.method) << '\n';
    const bool ok =
        rep.penrose[0] && rep.penrose[1] && rep.penrose[2] && rep.penrose[3];
    out << "penrose: " << (ok ? "ok" : "FAIL") << '\n';
    if (oracle_match) out << "oracle: " << (*oracle_match ? "match" : "MISMATCH") << '\n';
}

int cmd_pinv(const Context& ctx, const std::string& path, const std::string& method,
             bool check) {
    const sp::SignedGraph g = sp::read_edge_list_file(path);
    sp::PinvReport rep;
    if (method == "auto") {
        rep = sp::pinv_auto(g, ctx.cap);
    } else if (method == "tree") {
        rep = sp::tree_pinv(g);
    } else if (method == "unicyclic") {
        rep = sp::is_balanced(g).balanced ? sp::balanced_unicyclic_pinv(g)
                                          : sp::unbalanced_unicyclic_inverse(g);
    } else if (method == "general") {
        rep = sp::general_pinv(g, ctx.cap);
    } else {
        rep = sp::pinv_by_oracle(g);
    }
    std::optional<bool> oracle_match;
    if (check) oracle_match = rep.pinv == sp::pinv_oracle(sp::incidence(g));
    if (ctx.json_mode) {
        json doc = document("pinv", g);
        doc["result"] = json{{"matrix", matrix_payload(rep.pinv)}};
        doc["verification"] = verification_payload(rep, oracle_match);
        emit(ctx, doc);
    } else {
        print_report_head(*ctx.out, rep, oracle_match);
        print_matrix(*ctx.out, rep.pinv);
    }
    return oracle_match && !*oracle_match ? 1 : 0;
}

int cmd_lpinv(const Context& ctx, const std::string& path) {
    const sp::SignedGraph g = sp::read_edge_list_file(path);
    const sp::PinvReport rep = sp::laplacian_pinv(g, sp::PsiCheck::automatic, ctx.cap);
    if (ctx.json_mode) {
        json doc = document("lpinv", g);
        doc["result"] = json{{"matrix", matrix_payload(rep.pinv)}};
        doc["verification"] = verification_payload(rep, std::nullopt);
        emit(ctx, doc);
    } else {
        print_report_head(*ctx.out, rep, std::nullopt);
        print_matrix(*ctx.out, rep.pinv);
    }
    return 0;
}

constexpr const char* kResistanceNote =
    "equals hop distance on trees; on other balanced graphs the resistance "
    "reading of these values is a conjecture, tested but not proved";

int cmd_resistance(const Context& ctx, const std::string& path) {
    const sp::SignedGraph g = sp::read_edge_list_file(path);
    const sp::RatMatrix r = sp::signed_resistance(g, ctx.cap);
    if (ctx.json_mode) {
        json doc = document("resistance", g);
        doc["result"] = json{{"matrix", matrix_payload(r)}, {"note", kResistanceNote}};
        emit(ctx, doc);
    } else {
        *ctx.out << "note: " << kResistanceNote << '\n';
        print_matrix(*ctx.out, r);
    }
    return 0;
}

int cmd_enumerate(const Context& ctx, const std::string& path, bool want_trees,
                  bool count_only) {
    const sp::SignedGraph g = sp::read_edge_list_file(path);
    const bool balanced = sp::is_balanced(g).balanced;
    if (!want_trees && balanced)
        throw sp::GraphError("--tu needs an unbalanced graph; this one is balanced");
    const sp::Rational v2 = sp::vol_squared(g, ctx.cap);
    const sp::Rational dl = sp::det(sp::laplacian(g));
    const bool consistent = balanced ? dl.is_zero() : dl == v2;

    json result;
    std::ostream& out = *ctx.out;
    if (want_trees) {
        const std::vector<sp::SpanningTree> trees = sp::spanning_trees(g, ctx.cap);
        if (ctx.json_mode) {
            result = json{{"kind", "spanning-trees"},
                          {"count", trees.size()},
                          {"vol_squared", v2.str()},
                          {"det_laplacian", dl.str()},
                          {"consistent", consistent}};
            if (!count_only) {
                json listing = json::array();
                for (const sp::SpanningTree& t : trees)
                    listing.push_back(one_based(t.edge_indices));
                result["trees"] = std::move(listing);
            }
        } else {
            out << "spanning trees: " << trees.size() << '\n';
            out << "vol^2: " << v2 << '\n';
            if (!balanced) out << "det(L): " << dl << '\n';
            out << "consistent: " << yesno(consistent) << '\n';
            if (!count_only)
                for (std::size_t k = 0; k < trees.size(); ++k) {
                    out << "tree " << k + 1 << ": ";
                    print_one_based(out, trees[k].edge_indices);
                    out << '\n';
                }
        }
    } else {
        const std::vector<sp::TuSubgraph> subs = sp::tu_subgraphs(g, ctx.cap);
        if (ctx.json_mode) {
            result = json{{"kind", "tu-subgraphs"},
                          {"count", subs.size()},
                          {"vol_squared", v2.str()},
                          {"det_laplacian", dl.str()},
                          {"consistent", consistent}};
            if (!count_only) {
                json listing = json::array();
                for (const sp::TuSubgraph& h : subs)
                    listing.push_back(json{{"edges", one_based(h.edge_indices)},
                                           {"cycles", h.component_count}});
                result["subgraphs"] = std::move(listing);
            }
        } else {
            out << "tu subgraphs: " << subs.size() << '\n';
            out << "vol^2: " << v2 << '\n';
            out << "det(L): " << dl << '\n';
            out << "consistent: " << yesno(consistent) << '\n';
            if (!count_only)
                for (std::size_t k = 0; k < subs.size(); ++k) {
                    out << "subgraph " << k + 1 << " (cycles " << subs[k].component_count
                        << "): ";
                    print_one_based(out, subs[k].edge_indices);
                    out << '\n';
                }
        }
    }
    if (ctx.json_mode) {
        json doc = document("enumerate", g);
        doc["result"] = std::move(result);
        emit(ctx, doc);
    }
    return consistent ? 0 : 1;
}

int cmd_vol(const Context& ctx, const std::string& path) {
    const sp::SignedGraph g = sp::read_edge_list_file(path);
    const bool balanced = sp::is_balanced(g).balanced;
    const sp::Rational v2 = sp::vol_squared(g, ctx.cap);
    const sp::Rational dl = sp::det(sp::laplacian(g));
    std::optional<sp::Rational> tau;
    bool consistent;
    if (balanced) {
        tau = sp::spanning_tree_count_by_determinant(g);
        consistent = dl.is_zero() && v2 == sp::Rational(g.vertex_count()) * *tau;
    } else {
        consistent = dl == v2;
    }
    if (ctx.json_mode) {
        json result{{"balanced", balanced},
                    {"vol_squared", v2.str()},
                    {"det_laplacian", dl.str()},
                    {"consistent", consistent}};
        if (tau) result["spanning_trees"] = tau->str();
        json doc = document("vol", g);
        doc["result"] = std::move(result);
        emit(ctx, doc);
    } else {
        std::ostream& out = *ctx.out;
        out << "balanced: " << yesno(balanced) << '\n';
        out << "vol^2: " << v2 << '\n';
        out << "det(L): " << dl << '\n';
        if (tau) out << "spanning trees: " << *tau << '\n';
        out << "consistent: " << yesno(consistent) << '\n';
    }
    return consistent ? 0 : 1;
}

// One graph through every cross-check the library offers. Returns the first
// failure description, or nothing when all checks pass.
std::optional<std::string> check_graph(const sp::SignedGraph& g, int cap) {
    const sp::RatMatrix n = sp::incidence(g);
    const sp::RatMatrix oracle = sp::pinv_oracle(n);
    const sp::PinvReport rep = sp::general_pinv(g, cap);
    if (rep.pinv != oracle) return "general pseudoinverse disagrees with the oracle";
    const sp::PinvReport by_auto = sp::pinv_auto(g, cap);
    if (by_auto.pinv != oracle)
        return "method " + std::string(sp::to_string(by_auto.method)) +
               " disagrees with the oracle";

    const bool balanced = sp::is_balanced(g).balanced;
    sp::RatMatrix wanted = sp::RatMatrix::identity(g.vertex_count());
    if (balanced)
        wanted = wanted -
                 sp::scale(sp::Rational(1, g.vertex_count()), sp::path_sign_matrix(g));
    if (n * rep.pinv != wanted) return "projector identity fails";

    const sp::PinvReport lrep = sp::laplacian_pinv(g, sp::PsiCheck::automatic, cap);
    if (lrep.pinv != sp::pinv_oracle(sp::laplacian(g)))
        return "laplacian pseudoinverse disagrees with the oracle";

    const sp::Rational v2 = sp::vol_squared(g, cap);
    const sp::Rational dl = sp::det(sp::laplacian(g));
    if (balanced ? !dl.is_zero() : dl != v2)
        return "det(L) disagrees with the enumeration volume";
    if (balanced &&
        v2 != sp::Rational(g.vertex_count()) * sp::spanning_tree_count_by_determinant(g))
        return "volume disagrees with the spanning-tree count";
    return std::nullopt;
}

sp::SignedGraph random_graph(std::mt19937_64& rng, int max_n, int max_m) {
    std::uniform_int_distribution<int> pick_n(2, std::max(2, max_n));
    const int n = pick_n(rng);
    const long pairs = static_cast<long>(n) * (n - 1) / 2;
    const int hi = static_cast<int>(std::min<long>(max_m, pairs));
    std::uniform_int_distribution<int> pick_m(n - 1, std::max(n - 1, hi));
    const int m = pick_m(rng);
    std::set<std::pair<int, int>> used;
    std::vector<sp::SignedEdge> edges;
    auto add = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        if (!used.insert({u, v}).second) return;
        sp::SignedEdge e = sp::make_edge(u, v, rng() % 2 ? 1 : -1);
        if (rng() % 2) {
            e.eta_u = -e.eta_u;
            e.eta_v = -e.eta_v;
        }
        edges.push_back(e);
    };
    for (int v = 2; v <= n; ++v) add(1 + static_cast<int>(rng() % (v - 1)), v);
    while (static_cast<int>(edges.size()) < m) {
        const int u = 1 + static_cast<int>(rng() % n);
        const int v = 1 + static_cast<int>(rng() % n);
        if (u != v) add(u, v);
    }
    return sp::SignedGraph(n, std::move(edges));
}

bool covers_connected(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> parent(n + 1);
    for (int v = 1; v <= n; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    int components = n;
    for (const auto& [u, v] : edges) {
        const int ru = find(u), rv = find(v);
        if (ru != rv) {
            parent[ru] = rv;
            --components;
        }
    }
    return components == 1;
}

struct VerifyTally {
    long graphs = 0;
    long failures = 0;
    json failed = json::array();

    void record(const sp::SignedGraph& g, const std::string& why) {
        ++failures;
        failed.push_back(json{{"graph", sp::to_edge_list(g)}, {"reason", why}});
    }
};

int finish_verify(const Context& ctx, json result, const VerifyTally& tally) {
    result["graphs"] = tally.graphs;
    result["failures"] = tally.failures;
    result["failed"] = tally.failed;
    result["pass"] = tally.failures == 0;
    if (ctx.json_mode) {
        json doc{{"command", "verify"}, {"input_digest", nullptr}};
        doc["result"] = std::move(result);
        emit(ctx, doc);
    } else {
        *ctx.out << "graphs checked: " << tally.graphs << '\n';
        for (const json& f : tally.failed)
            *ctx.out << "FAIL (" << f["reason"].get<std::string>() << "):\n"
                     << f["graph"].get<std::string>();
        *ctx.out << "failures: " << tally.failures << '\n';
    }
    return tally.failures == 0 ? 0 : 1;
}

int cmd_verify_files(const Context& ctx, const std::vector<std::string>& files) {
    VerifyTally tally;
    json checks = json::array();
    for (const std::string& f : files) {
        const sp::SignedGraph g = sp::read_edge_list_file(f);
        const std::optional<std::string> why = check_graph(g, ctx.cap);
        ++tally.graphs;
        if (why) tally.record(g, *why);
        if (ctx.json_mode)
            checks.push_back(json{{"input", f},
                                  {"digest", fnv1a64(sp::to_edge_list(g))},
                                  {"pass", !why}});
        else
            *ctx.out << f << ": " << (why ? "FAIL" : "ok") << '\n';
    }
    json result{{"mode", "files"}, {"checks", std::move(checks)}};
    return finish_verify(ctx, std::move(result), tally);
}

int cmd_verify_random(const Context& ctx, int max_n, int max_m, std::uint64_t seed) {
    constexpr int kGraphs = 25;
    if (!ctx.json_mode)
        *ctx.out << "random verification: " << kGraphs << " graphs, up to " << max_n
                 << " vertices and " << max_m << " edges, seed " << seed << '\n';
    std::mt19937_64 rng(seed);
    VerifyTally tally;
    for (int t = 0; t < kGraphs; ++t) {
        const sp::SignedGraph g = random_graph(rng, max_n, max_m);
        ++tally.graphs;
        if (const auto why = check_graph(g, ctx.cap)) tally.record(g, *why);
    }
    json result{{"mode", "random"},
                {"max_vertices", max_n},
                {"max_edges", max_m},
                {"seed", seed}};
    return finish_verify(ctx, std::move(result), tally);
}

int cmd_verify_exhaustive(const Context& ctx, int max_n, int cap) {
    if (!ctx.json_mode)
        *ctx.out << "exhaustive verification: connected signed graphs on up to " << max_n
                 << " vertices\n";
    VerifyTally tally;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
        const int p = static_cast<int>(pairs.size());
        for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
            std::vector<std::pair<int, int>> picked;
            for (int b = 0; b < p; ++b)
                if (mask >> b & 1) picked.push_back(pairs[b]);
            if (static_cast<int>(picked.size()) < n - 1) continue;
            if (!covers_connected(n, picked)) continue;
            const int m = static_cast<int>(picked.size());
            for (std::uint32_t signs = 0; signs < (1u << m); ++signs) {
                std::vector<sp::SignedEdge> edges;
                edges.reserve(picked.size());
                for (int b = 0; b < m; ++b)
                    edges.push_back(sp::make_edge(picked[b].first, picked[b].second,
                                                  signs >> b & 1 ? -1 : 1));
                const sp::SignedGraph g(n, std::move(edges));
                ++tally.graphs;
                if (const auto why = check_graph(g, cap)) tally.record(g, *why);
            }
        }
    }
    json result{{"mode", "exhaustive"}, {"max_vertices", max_n}};
    return finish_verify(ctx, std::move(result), tally);
}

}  // namespace

namespace signedpinv {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Context ctx;
    ctx.out = &out;

    CLI::App app{"exact pseudoinverses of signed-graph incidence and Laplacian matrices"};
    app.require_subcommand(1);
    app.add_flag("--json", ctx.json_mode, "emit a JSON document instead of text");
    app.add_option("--cap", ctx.cap, "edge-count cap for enumeration-backed routines")
        ->capture_default_str();
    app.add_option("--seed", ctx.seed, "seed for randomized verification")
        ->capture_default_str();

    std::string info_path;
    CLI::App* info = app.add_subcommand(
        "info", "order, size, connectivity, balance, and incidence rank");
    info->add_option("file", info_path, "edge-list file")->required();

    std::string incidence_path;
    CLI::App* incidence_cmd =
        app.add_subcommand("incidence", "vertex-edge incidence matrix");
    incidence_cmd->add_option("file", incidence_path, "edge-list file")->required();

    std::string laplacian_path;
    CLI::App* laplacian_cmd = app.add_subcommand("laplacian", "Laplacian matrix");
    laplacian_cmd->add_option("file", laplacian_path, "edge-list file")->required();

    std::string pinv_path, pinv_method = "auto";
    bool pinv_check = false;
    CLI::App* pinv = app.add_subcommand(
        "pinv", "Moore-Penrose inverse of the incidence matrix");
    pinv->add_option("file", pinv_path, "edge-list file")->required();
    pinv->add_option("--method", pinv_method, "formula to apply")
        ->check(CLI::IsMember({"auto", "tree", "unicyclic", "general", "oracle"}))
        ->capture_default_str();
    pinv->add_flag("--check", pinv_check,
                   "also run the factorization oracle and compare");

    std::string lpinv_path;
    CLI::App* lpinv = app.add_subcommand(
        "lpinv", "Moore-Penrose inverse of the Laplacian");
    lpinv->add_option("file", lpinv_path, "edge-list file")->required();

    std::string resistance_path;
    CLI::App* resistance = app.add_subcommand(
        "resistance", "pairwise resistance matrix of a balanced graph");
    resistance->add_option("file", resistance_path, "edge-list file")->required();

    std::string enumerate_path;
    bool want_trees = false, want_tu = false, count_only = false;
    CLI::App* enumerate_cmd = app.add_subcommand(
        "enumerate", "spanning trees or maximal unbalanced spanning subgraphs");
    enumerate_cmd->add_option("file", enumerate_path, "edge-list file")->required();
    CLI::Option* trees_flag =
        enumerate_cmd->add_flag("--trees", want_trees, "list spanning trees");
    CLI::Option* tu_flag = enumerate_cmd->add_flag(
        "--tu", want_tu, "list spanning subgraphs whose components each hold one negative cycle");
    trees_flag->excludes(tu_flag);
    tu_flag->excludes(trees_flag);
    enumerate_cmd->add_flag("--count-only", count_only, "suppress the listing");

    std::string vol_path;
    CLI::App* vol = app.add_subcommand(
        "vol", "squared incidence volume against the Laplacian determinant");
    vol->add_option("file", vol_path, "edge-list file")->required();

    std::vector<std::string> verify_files;
    std::vector<std::int64_t> verify_random;
    int verify_exhaustive = 0;
    CLI::App* verify = app.add_subcommand(
        "verify", "cross-check every formula against the oracle");
    verify->add_option("files", verify_files, "edge-list files to check");
    CLI::Option* random_opt = verify->add_option(
        "--random", verify_random,
        "check 25 random connected graphs: MAX_VERTICES MAX_EDGES [SEED]");
    random_opt->expected(2, 3);
    CLI::Option* exhaustive_opt =
        verify->add_option("--exhaustive", verify_exhaustive,
                           "check every connected signed graph on up to N vertices")
            ->check(CLI::Range(1, 5));
    random_opt->excludes(exhaustive_opt);
    exhaustive_opt->excludes(random_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*info) return cmd_info(ctx, info_path);
        if (*incidence_cmd) return cmd_matrix(ctx, "incidence", incidence_path);
        if (*laplacian_cmd) return cmd_matrix(ctx, "laplacian", laplacian_path);
        if (*pinv) return cmd_pinv(ctx, pinv_path, pinv_method, pinv_check);
        if (*lpinv) return cmd_lpinv(ctx, lpinv_path);
        if (*resistance) return cmd_resistance(ctx, resistance_path);
        if (*enumerate_cmd) {
            if (want_trees == want_tu) {
                err << "error: enumerate needs exactly one of --trees or --tu\n";
                return 2;
            }
            return cmd_enumerate(ctx, enumerate_path, want_trees, count_only);
        }
        if (*vol) return cmd_vol(ctx, vol_path);
        // verify
        const int modes = (verify_files.empty() ? 0 : 1) + (random_opt->count() ? 1 : 0) +
                          (exhaustive_opt->count() ? 1 : 0);
        if (modes != 1) {
            err << "error: verify needs exactly one of input files, --random, or "
                   "--exhaustive\n";
            return 2;
        }
        if (!verify_files.empty()) return cmd_verify_files(ctx, verify_files);
        if (exhaustive_opt->count()) return cmd_verify_exhaustive(ctx, verify_exhaustive, ctx.cap);
        const std::int64_t n = verify_random[0], m = verify_random[1];
        if (n < 2 || m < n - 1) {
            err << "error: --random needs MAX_VERTICES >= 2 and MAX_EDGES >= MAX_VERTICES - 1\n";
            return 2;
        }
        const std::uint64_t seed =
            verify_random.size() == 3 ? static_cast<std::uint64_t>(verify_random[2]) : ctx.seed;
        return cmd_verify_random(ctx, static_cast<int>(n), static_cast<int>(m), seed);
    } catch (const sp::InternalCheckError& e) {
        err << "internal check failed: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace signedpinv
