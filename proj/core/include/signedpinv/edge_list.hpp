#pragma once

#include <iosfwd>
#include <string>

#include "signedpinv/signed_graph.hpp"

namespace signedpinv {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Text format, one edge per line:
//
//   u v s [eta_u eta_v]
//
// with s one of +, -, +1, -1, 1 and each eta one of 1, -1. '#' starts a
// comment, blank lines are skipped, and an optional first line "n <count>"
// fixes the vertex count (otherwise it is the largest endpoint seen).
// Omitted marks get the defaults of make_edge. Endpoint order within a
// line is free; edges are normalized to u < v.
SignedGraph parse_edge_list(std::istream& in);
SignedGraph parse_edge_list(const std::string& text);
SignedGraph read_edge_list_file(const std::string& path);

// Canonical serialization: "n <count>" header, then every edge as
// "u v s eta_u eta_v" with s in {+,-}. parse(serialize(g)) == g, and two
// files describing the same graph serialize identically.
std::string to_edge_list(const SignedGraph& g);

}  // namespace signedpinv
