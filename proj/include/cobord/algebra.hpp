#pragma once
// The two graded polynomial algebras over Z2 generated by the nonzero
// characters (Hom(G,Z2)) and cocharacters (Hom(Z2,G)).  One representation
// serves both; a side tag keeps the arithmetic from crossing the pairing.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cobord/gf2.hpp"

namespace cobord {

enum class Side : std::uint8_t { character, cocharacter };

inline Side opposite(Side s) {
    return s == Side::character ? Side::cocharacter : Side::character;
}

// Product of nonzero vectors, kept as a multiset sorted by encoding.  The
// empty product (the constant 1) is allowed; the zero vector is not a
// legal factor.
class Monomial {
public:
    Monomial(Side side, int dim, std::vector<BitVec> factors);

    static Monomial one(Side side, int dim) { return Monomial(side, dim, {}); }

    Side side() const { return side_; }
    int dim() const { return dim_; }
    int degree() const { return static_cast<int>(factors_.size()); }
    const std::vector<BitVec>& factors() const { return factors_; }

    bool squarefree() const;
    // True when the factors are n distinct vectors forming a basis.
    bool factors_form_basis() const;

    Monomial operator*(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial& a, const Monomial& b) {
        return a.factors_ <=> b.factors_;
    }

private:
    Side side_;
    int dim_;
    std::vector<BitVec> factors_;
};

// Z2-linear combination of monomials: a sorted set, since coefficients
// live in Z2.  Addition is symmetric difference.
class Polynomial {
public:
    Polynomial(Side side, int dim) : side_(side), dim_(dim) {}
    Polynomial(Side side, int dim, std::vector<Monomial> monomials);
    /* implicit */ Polynomial(const Monomial& m);

    static Polynomial zero(Side side, int dim) { return Polynomial(side, dim); }
    static Polynomial one(Side side, int dim) { return Monomial::one(side, dim); }

    Side side() const { return side_; }
    int dim() const { return dim_; }
    bool is_zero() const { return monomials_.empty(); }
    std::size_t term_count() const { return monomials_.size(); }
    const std::vector<Monomial>& monomials() const { return monomials_; }

    // Degree shared by all monomials, or nullopt when mixed / zero.
    std::optional<int> homogeneous_degree() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    Side side_;
    int dim_;
    std::vector<Monomial> monomials_;
};

// Homogeneous of degree n, side character, every monomial a basis.
bool is_faithful(const Polynomial& g);

// Monomial-wise dual under the pairing <xi, rho> = rho o xi; works in
// either direction.  Throws NotABasis when the factors are not a basis.
Monomial dual_monomial(const Monomial& m);

// Throws NotFaithful on the character side; on the cocharacter side it
// requires every monomial to be a degree-n basis monomial.
Polynomial dual_polynomial(const Polynomial& g);

// Replaces every degree-one factor v by sigma(v).  Throws SingularMatrix.
Monomial apply_automorphism(const BitMatrix& sigma, const Monomial& m);
Polynomial apply_automorphism(const BitMatrix& sigma, const Polynomial& p);

}  // namespace cobord
