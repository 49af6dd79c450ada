#pragma once
// The cobordism spaces as GF(2) spans inside the ambient space W_n of
// degree-n basis monomials: dimension computations by two independent
// routes, membership and decomposition, verification of the published
// generator tables, and the modular witness search.

#include <cstdint>
#include <optional>
#include <vector>

#include "cobord/algebra.hpp"
#include "cobord/polytope.hpp"

namespace cobord {

using Row = std::vector<std::uint64_t>;

// All degree-n squarefree cocharacter monomials whose factors form a
// basis, in canonical order.  |W_2| = 3, |W_3| = 28, |W_4| = 840.
class MonomialSpace {
public:
    explicit MonomialSpace(int n);

    int dim() const { return n_; }
    int size() const { return static_cast<int>(basis_.size()); }
    const Monomial& monomial(int i) const { return basis_[static_cast<std::size_t>(i)]; }
    std::optional<int> index_of(const Monomial& m) const;

    // Coordinate row of a polynomial; nullopt when some monomial lies
    // outside the space.  Throws WrongDegree unless homogeneous of
    // degree n (the zero polynomial is fine).
    std::optional<Row> to_row(const Polynomial& p) const;
    Polynomial to_polynomial(const Row& row) const;

    int words() const { return (size() + 63) / 64; }

private:
    int n_;
    std::vector<Monomial> basis_;
    std::vector<int> index_;  // keyed by packed factor encodings
};

// Reduced row-echelon span accumulator; rows are kept fully reduced with
// strictly increasing pivots, so equal subspaces have identical rows.
class SpanBasis {
public:
    explicit SpanBasis(int columns) : columns_(columns) {}

    int columns() const { return columns_; }
    int dimension() const { return static_cast<int>(rows_.size()); }
    const std::vector<Row>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Returns true when the row enlarged the span.
    bool insert(Row row);
    bool contains(Row row) const;
    // Coefficients over the stored rows, or nullopt when outside the span.
    std::optional<std::vector<std::uint8_t>> decompose(Row row) const;

    friend bool operator==(const SpanBasis&, const SpanBasis&) = default;

private:
    int columns_;
    std::vector<Row> rows_;
    std::vector<int> pivots_;
};

// The complete decision procedure: g = 0, or g faithful with d(g*) = 0.
bool is_cobordism_class(const Polynomial& g);

enum class DimMethod { generators, polytopes };

struct DimResult {
    int dimension;
    MonomialSpace space;
    SpanBasis basis;
};

// Computes V_n* for n in {2,3,4} either from the closed-form generator
// family over all ordered bases or from the coloring polynomials of every
// colored product of simplices of total dimension n.  The two spans agree.
DimResult dim_Vn(int n, DimMethod method);

// The generator attached to one ordered basis: d(s1 s2 (s1+s2)) for n=2,
// d(s1 s2 (s1+s2)) d(s3 (s1+s3)) for n=3, and for n=4 the eps in {0,1}
// family d(s1 s2 (s1+s2)) d(s3 s4 (s3+s4+eps*s1)).
Polynomial generator_polynomial(const BitMatrix& basis, int eps = 0);

std::optional<std::vector<std::uint8_t>> decompose(const Polynomial& gstar,
                                                   const MonomialSpace& space,
                                                   const SpanBasis& basis);

struct TableRow {
    std::vector<int> indices;  // 6 legend indices for n=4, 5 for n=3
};

struct TableReport {
    int count = 0;
    bool independent = true;
    std::optional<int> first_dependency;  // 0-based row index
    int span_dim = 0;
    bool matches_dim_vn = false;
    bool rows_in_kernel = true;
    bool rows_faithful_dual = true;
};

// The legend vector x_k: the element of GF(2)^n with encoding k.
BitVec legend_vector(int k, int n);

Polynomial expand_table_row(const TableRow& row, int n);

TableReport verify_table(const std::vector<TableRow>& rows, int n);

// Exhaustive search for a subspace V of dimension n - deg h such that in
// the quotient the factors of every monomial of h stay independent.
// Subspaces are visited in canonical order; returns the first hit.
// Throws DegreeOutOfRange, NotACycle, NotSquarefree.
std::optional<BitMatrix> find_modular_witness(const Polynomial& h, int n);

}  // namespace cobord
