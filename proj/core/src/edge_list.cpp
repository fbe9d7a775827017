#include "signedpinv/edge_list.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace signedpinv {

namespace {

int parse_vertex(const std::string& tok, int line_no) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) {
            return c >= '0' && c <= '9';
        }))
        throw ParseError("line " + std::to_string(line_no) + ": bad vertex id '" + tok + "'");
    try {
        const int v = std::stoi(tok);
        if (v < 1) throw std::out_of_range("");
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": bad vertex id '" + tok + "'");
    }
}

int parse_sign(const std::string& tok, int line_no) {
    if (tok == "+" || tok == "+1" || tok == "1") return 1;
    if (tok == "-" || tok == "-1") return -1;
    throw ParseError("line " + std::to_string(line_no) + ": bad sign '" + tok + "'");
}

int parse_mark(const std::string& tok, int line_no) {
    if (tok == "1") return 1;
    if (tok == "-1") return -1;
    throw ParseError("line " + std::to_string(line_no) + ": bad orientation mark '" + tok + "'");
}

}  // namespace

SignedGraph parse_edge_list(std::istream& in) {
    std::vector<SignedEdge> edges;
    int declared_n = 0, max_vertex = 0;
    bool saw_header = false, saw_edge = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != line.npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok[0] == "n") {
            if (saw_header || saw_edge)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": vertex-count header must come first");
            if (tok.size() != 2)
                throw ParseError("line " + std::to_string(line_no) + ": malformed header");
            declared_n = parse_vertex(tok[1], line_no);
            saw_header = true;
            continue;
        }
        if (tok.size() != 3 && tok.size() != 5)
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected 'u v s' or 'u v s eta_u eta_v'");
        const int u = parse_vertex(tok[0], line_no);
        const int v = parse_vertex(tok[1], line_no);
        const int sigma = parse_sign(tok[2], line_no);
        if (u == v) throw ParseError("line " + std::to_string(line_no) + ": loop at vertex " +
                                     std::to_string(u));
        SignedEdge e;
        if (tok.size() == 5) {
            const int eta_u = parse_mark(tok[3], line_no);
            const int eta_v = parse_mark(tok[4], line_no);
            if (eta_u * eta_v != -sigma)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": orientation marks inconsistent with sign");
            e = make_edge(u, v, sigma, eta_u, eta_v);
        } else {
            e = make_edge(u, v, sigma);
        }
        edges.push_back(e);
        saw_edge = true;
        max_vertex = std::max({max_vertex, u, v});
    }
    if (saw_header && max_vertex > declared_n)
        throw ParseError("edge endpoint " + std::to_string(max_vertex) +
                         " exceeds declared vertex count " + std::to_string(declared_n));
    const int n = saw_header ? declared_n : max_vertex;
    if (n == 0) throw ParseError("no vertices: empty edge list without a header");
    try {
        return SignedGraph(n, std::move(edges));
    } catch (const GraphError& e) {
        throw ParseError(e.what());
    }
}

SignedGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

SignedGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_edge_list(in);
}

std::string to_edge_list(const SignedGraph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (const SignedEdge& e : g.edges())
        out << e.u << " " << e.v << " " << (e.sigma > 0 ? "+" : "-") << " " << e.eta_u << " "
            << e.eta_v << "\n";
    return out.str();
}

}  // namespace signedpinv
