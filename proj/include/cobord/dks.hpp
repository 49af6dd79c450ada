#pragma once
// The integrality side of the tom Dieck--Kosniowski--Stong localization
// theorem: equivariant Euler classes as products of linear forms in
// GF(2)[x_1..x_n], symmetric functions, and exact divisibility of the
// fixed-point sum.

#include <cstdint>
#include <optional>
#include <vector>

#include "cobord/algebra.hpp"

namespace cobord {

// Nonzero character read as the linear form sum_i bits_i * x_i.
struct LinearForm {
    BitVec vec;
    friend bool operator==(LinearForm, LinearForm) = default;
};

// Polynomial in GF(2)[x_1..x_n], n <= 7, exponents < 256.  Terms are the
// packed exponent vectors, kept sorted by (total degree, packed key).
class MultiPoly {
public:
    explicit MultiPoly(int nvars) : nvars_(nvars) {}
    MultiPoly(int nvars, std::vector<std::uint64_t> terms);

    static MultiPoly zero(int nvars) { return MultiPoly(nvars); }
    static MultiPoly one(int nvars) { return MultiPoly(nvars, {0}); }
    static MultiPoly variable(int i, int nvars);  // 1-based
    static MultiPoly from_linear_form(LinearForm f);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<std::uint64_t>& terms() const { return terms_; }
    int total_degree() const;  // -1 for the zero polynomial

    static int exponent(std::uint64_t term, int var);  // 1-based var

    MultiPoly operator+(const MultiPoly& other) const;
    MultiPoly operator*(const MultiPoly& other) const;

    // Exact division by a linear form; nullopt when it does not divide.
    std::optional<MultiPoly> divide_by(LinearForm f) const;

    MultiPoly substitute_variable(int var, const MultiPoly& value) const;

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
    int nvars_;
    std::vector<std::uint64_t> terms_;
};

// Symmetric polynomial in n variables; construction rejects anything not
// fixed by the variable permutations.
class SymmetricFunction {
public:
    static SymmetricFunction elementary(int k, int nvars);
    // Monomial symmetric function of a partition (weakly decreasing,
    // at most nvars parts).
    static SymmetricFunction monomial(const std::vector<int>& partition, int nvars);
    static SymmetricFunction constant_one(int nvars);

    const MultiPoly& poly() const { return poly_; }
    const std::vector<int>& partition() const { return partition_; }

    // Evaluates at the linear forms of one Euler class.
    MultiPoly evaluate(const std::vector<LinearForm>& forms) const;

private:
    SymmetricFunction(MultiPoly p, std::vector<int> partition);
    MultiPoly poly_;
    std::vector<int> partition_;
};

// The factors of a character monomial as linear forms.
std::vector<LinearForm> euler_class(const Monomial& m);

struct LocalizationResult {
    std::optional<MultiPoly> quotient;       // set when the sum is polynomial
    std::optional<LinearForm> blocking_form; // first non-dividing factor otherwise
};

// sum_i f(chi_i) / chi_i: forms the common numerator over prod_i chi_i and
// cancels the linear factors one by one.  Throws NotFaithful.
LocalizationResult localization_sum(const Polynomial& g, const SymmetricFunction& f);

struct DksCheck {
    std::vector<int> partition;
    bool polynomial;
};

struct DksReport {
    int degree_checked;
    std::vector<DksCheck> results;
    bool certified_nonmember;
};

// Runs localization_sum for every monomial symmetric function of degree
// at most max_degree.  A failure certifies non-membership; passing is
// necessary-only evidence.
DksReport check_up_to_degree(const Polynomial& g, int max_degree);

}  // namespace cobord
