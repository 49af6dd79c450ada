#pragma once
// Text interfaces: the polynomial expression grammar, graph JSON and DOT
// emission, the coloring line format, and the generator table files.
//
// Grammar:  poly := mono ('+' mono)* | '0'
//           mono := '1' | factor ('*' factor)*
//           factor := var | '(' var ('+' var)* ')'
//           var := 'r'digits | 's'digits | 'x'digits | '#'bits
// 'r' are characters, 's' cocharacters, 'x' the table legend (x_k is the
// cocharacter with encoding k); the three letter kinds must not mix.
// Whitespace is insignificant.  '1' is accepted so that every canonical
// serialization, including d output, parses back.

#include <optional>
#include <string>
#include <string_view>

#include "cobord/cobordism.hpp"
#include "cobord/graph.hpp"
#include "cobord/polytope.hpp"

namespace cobord {

// Side to assume when the text determines none ('0', '1', pure-'#').
Polynomial parse_polynomial(std::string_view text, int n,
                            Side fallback = Side::character);

std::string serialize(const BitVec& v, Side side);  // "r1", "(s1+s3)"
std::string serialize(const Monomial& m);
std::string serialize(const Polynomial& p);

// One row per line: "(a; b; c; d; e; l)" for n = 4, "(a; b; c; d; e)" for
// n = 3.  Blank lines are skipped; ParseError carries the 1-based line.
std::vector<TableRow> parse_table(std::string_view text, int n);

// "parts=2,2; (0,0)=#1000; (0,1)=#0100; ..." one colored polytope per line.
std::string serialize_colored_polytope(const ColoredPolytope& cp);
ColoredPolytope parse_colored_polytope(std::string_view line, int n);

// {"n":3,"vertices":[{"id":0},...],"edges":[{"u":0,"v":1,"color":"110"},...]}
std::string graph_to_json(const ColoredGraph& g);
ColoredGraph graph_from_json(std::string_view text);

// Undirected DOT; vertices are labelled by their monomials, edges by the
// color bitstring.
std::string graph_to_dot(const ColoredGraph& g);

}  // namespace cobord
