#pragma once
// Combinatorial products of simplices with facet colorings by
// cocharacters: coloring polynomials, products, exhaustive coloring
// enumeration, and the prism chain used to trade one basis monomial for
// another through connected sums.

#include <functional>
#include <utility>
#include <vector>

#include "cobord/algebra.hpp"

namespace cobord {

// Delta^{n_1} x ... x Delta^{n_l}.  Facet f of a part omits vertex f of
// that simplex; a vertex tuple (w_1..w_l) lies on facet (i, f) iff
// f != w_i.  The empty product is a point.
class SimplexProduct {
public:
    SimplexProduct() = default;
    explicit SimplexProduct(std::vector<int> parts);

    struct Facet {
        int part;
        int index;
        friend bool operator==(Facet, Facet) = default;
        friend auto operator<=>(Facet, Facet) = default;
    };

    const std::vector<int>& parts() const { return parts_; }
    int dimension() const { return dimension_; }
    int facet_count() const { return facet_count_; }
    long vertex_count() const { return vertex_count_; }

    // Facets in part-major order; ordinal() is the inverse.
    Facet facet(int ordinal) const;
    int ordinal(Facet f) const;

    // Vertices are indexed 0..vertex_count-1 in mixed-radix order.
    std::vector<int> vertex_tuple(long vertex) const;
    bool incident(long vertex, Facet f) const;
    std::vector<int> incident_facets(long vertex) const;  // ordinals, ascending

private:
    std::vector<int> parts_;
    std::vector<int> facet_offset_;
    int dimension_ = 0;
    int facet_count_ = 0;
    long vertex_count_ = 1;
};

// Facet colors in facet-ordinal order.
struct PolytopeColoring {
    std::vector<BitVec> colors;
};

struct ColoredPolytope {
    SimplexProduct polytope;
    PolytopeColoring coloring;
};

// First vertex whose incident colors are dependent, or -1 when valid.
long first_invalid_vertex(const SimplexProduct& p, const PolytopeColoring& lambda);

// Sum over vertices of the product of incident facet colors (cocharacter
// side).  Throws InvalidColoring naming the first offending vertex.
Polynomial coloring_polynomial(const SimplexProduct& p, const PolytopeColoring& lambda);

Monomial vertex_monomial(const SimplexProduct& p, const PolytopeColoring& lambda, long vertex);

// Concatenates the parts and inherits the facet colors; the combined
// coloring must be valid at every vertex of the product.
ColoredPolytope product_coloring(const SimplexProduct& p1, const PolytopeColoring& l1,
                                 const SimplexProduct& p2, const PolytopeColoring& l2);

// Backtracks over facets in ordinal order, colors tried in increasing
// encoding, pruning as soon as the assigned colors at some vertex become
// dependent.  Requires dimension(p) == n <= 4.
void for_each_coloring(const SimplexProduct& p, int n,
                       const std::function<bool(const PolytopeColoring&)>& visit);

std::vector<PolytopeColoring> enumerate_colorings(const SimplexProduct& p, int n);

// Connected sums act on coloring polynomials as plain Z2 sums.
Polynomial connected_sum_polynomial(const Polynomial& g1, const Polynomial& g2);

// Colored prisms Delta^{n-1} x Delta^1 stepping from basis monomial m1 to
// m2 one factor exchange at a time: each prism has one vertex carrying the
// current monomial and one carrying the next, so consecutive prisms share
// a vertex monomial.  Returns an empty sequence when m1 == m2.  Throws
// NotABasis.
std::vector<ColoredPolytope> prism_path(const Monomial& m1, const Monomial& m2);

}  // namespace cobord
