#pragma once
// Mod 2 GKM graphs: loop-free n-valent multigraphs whose edges carry
// nonzero characters, subject to the two coloring axioms.  Includes the
// constructive polynomial-to-graph algorithm, prime reduction and
// connected sums.

#include <string>
#include <vector>

#include "cobord/algebra.hpp"
#include "cobord/diffop.hpp"

namespace cobord {

struct HalfEdgeRef {
    int vertex = -1;
    int slot = -1;
    friend bool operator==(HalfEdgeRef, HalfEdgeRef) = default;
};

struct GraphEdge {
    int u;
    int v;
    BitVec color;
};

// Each vertex owns exactly n half-edge slots; a perfect matching on the
// slots forms the edges, matched slots carry equal colors, and no slot
// may be matched within its own vertex.
class ColoredGraph {
public:
    // Builds slot structure from an edge list, assigning slots per vertex
    // in edge order.  Throws MalformedGraph on loops, wrong valence, zero
    // or mixed-dimension colors.
    static ColoredGraph from_edges(int dim, int vertex_count, const std::vector<GraphEdge>& edges);

    int dim() const { return dim_; }
    int vertex_count() const { return static_cast<int>(colors_.size()); }
    int edge_count() const { return vertex_count() * dim_ / 2; }
    bool empty() const { return colors_.empty(); }

    const std::vector<BitVec>& colors_at(int v) const {
        return colors_[static_cast<std::size_t>(v)];
    }
    HalfEdgeRef mate(int v, int slot) const {
        return mates_[static_cast<std::size_t>(v)][static_cast<std::size_t>(slot)];
    }

    // Canonical edge list: (min endpoint, max endpoint, color), sorted.
    std::vector<GraphEdge> edges() const;

    Monomial vertex_monomial(int v) const;

private:
    friend ColoredGraph from_polynomial(const Polynomial& g);
    friend ColoredGraph prime_reduce(const ColoredGraph& g);
    friend ColoredGraph connected_sum(const ColoredGraph& g1, int v1, const ColoredGraph& g2,
                                      int v2);
    ColoredGraph() = default;

    // Removes two vertices, gluing their severed half-edges by color;
    // edges joining the pair vanish.
    static ColoredGraph cancel_pair(const ColoredGraph& g, int drop_a, int drop_b);

    int dim_ = 0;
    std::vector<std::vector<BitVec>> colors_;       // [vertex][slot]
    std::vector<std::vector<HalfEdgeRef>> mates_;   // [vertex][slot]
};

struct ValidationReport {
    bool ok = true;
    std::string diagnostic;  // names the first failing vertex or edge
};

// Checks both axioms: the colors at every vertex form a basis, and across
// every edge the two color multisets agree modulo the span of the edge
// color.  Matching structure is checked first (MalformedGraph).
ValidationReport validate(const ColoredGraph& g);

// Sum over vertices of the product of incident colors, mod 2.
Polynomial coloring_polynomial(const ColoredGraph& g);

// Effective direction of the characterisation: from a faithful g with
// d(g*) = 0, vertices are the monomials of g*, slot j of vertex i is
// labelled by the dual monomial with its j-th factor deleted, equal labels
// are paired greedily in ascending (vertex, slot) order, and the slot is
// colored by the character matched to the deleted factor.  Throws
// NotFaithful, BoundaryNonzero.
ColoredGraph from_polynomial(const Polynomial& g);

// Repeatedly cancels vertex pairs with equal color multisets, regluing
// severed half-edges color by color, until all vertex data are distinct
// or the graph is empty.  Preserves the coloring polynomial.
ColoredGraph prime_reduce(const ColoredGraph& g);

// Removes v1 and v2 (which must carry equal color multisets) and glues
// the severed half-edges by color.  Throws MonomialMismatch.
ColoredGraph connected_sum(const ColoredGraph& g1, int v1, const ColoredGraph& g2, int v2);

}  // namespace cobord
