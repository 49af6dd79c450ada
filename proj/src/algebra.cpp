#include "cobord/algebra.hpp"

#include <algorithm>

namespace cobord {

Monomial::Monomial(Side side, int dim, std::vector<BitVec> factors)
    : side_(side), dim_(dim), factors_(std::move(factors)) {
    for (const auto& f : factors_) {
        if (f.is_zero()) throw ZeroFactor();
        if (f.dim() != dim_) throw Error("factor dimension differs from monomial dimension");
    }
    std::sort(factors_.begin(), factors_.end());
}

bool Monomial::squarefree() const {
    return std::adjacent_find(factors_.begin(), factors_.end()) == factors_.end();
}

bool Monomial::factors_form_basis() const {
    if (degree() != dim_) return false;
    if (!squarefree()) return false;
    return rank(BitMatrix(factors_)) == dim_;
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (side_ != other.side_) throw SideMismatch();
    if (dim_ != other.dim_) throw Error("multiplying monomials of different dimensions");
    std::vector<BitVec> merged;
    merged.reserve(factors_.size() + other.factors_.size());
    std::merge(factors_.begin(), factors_.end(), other.factors_.begin(), other.factors_.end(),
               std::back_inserter(merged));
    Monomial r(side_, dim_, {});
    r.factors_ = std::move(merged);
    return r;
}

Polynomial::Polynomial(Side side, int dim, std::vector<Monomial> monomials)
    : side_(side), dim_(dim), monomials_(std::move(monomials)) {
    for (const auto& m : monomials_) {
        if (m.side() != side_) throw SideMismatch();
        if (m.dim() != dim_) throw Error("monomial dimension differs from polynomial dimension");
    }
    std::sort(monomials_.begin(), monomials_.end());
    // Z2 coefficients: equal monomials cancel in pairs.
    std::vector<Monomial> reduced;
    reduced.reserve(monomials_.size());
    for (std::size_t i = 0; i < monomials_.size();) {
        std::size_t j = i;
        while (j < monomials_.size() && monomials_[j] == monomials_[i]) ++j;
        if ((j - i) % 2) reduced.push_back(monomials_[i]);
        i = j;
    }
    monomials_ = std::move(reduced);
}

Polynomial::Polynomial(const Monomial& m) : side_(m.side()), dim_(m.dim()), monomials_{m} {}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (monomials_.empty()) return std::nullopt;
    const int d = monomials_.front().degree();
    for (const auto& m : monomials_)
        if (m.degree() != d) return std::nullopt;
    return d;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    if (!is_zero() && !other.is_zero() && side_ != other.side_) throw SideMismatch();
    if (dim_ != other.dim_) throw Error("adding polynomials of different dimensions");
    const Side side = is_zero() ? other.side_ : side_;
    std::vector<Monomial> merged;
    merged.reserve(monomials_.size() + other.monomials_.size());
    merged.insert(merged.end(), monomials_.begin(), monomials_.end());
    merged.insert(merged.end(), other.monomials_.begin(), other.monomials_.end());
    return Polynomial(side, dim_, std::move(merged));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (!is_zero() && !other.is_zero() && side_ != other.side_) throw SideMismatch();
    if (dim_ != other.dim_) throw Error("multiplying polynomials of different dimensions");
    const Side side = is_zero() ? other.side_ : side_;
    std::vector<Monomial> products;
    products.reserve(monomials_.size() * other.monomials_.size());
    for (const auto& a : monomials_)
        for (const auto& b : other.monomials_) products.push_back(a * b);
    return Polynomial(side, dim_, std::move(products));
}

bool is_faithful(const Polynomial& g) {
    if (g.side() != Side::character) return false;
    if (g.is_zero()) return false;
    if (g.homogeneous_degree() != g.dim()) return false;
    for (const auto& m : g.monomials())
        if (!m.factors_form_basis()) return false;
    return true;
}

Monomial dual_monomial(const Monomial& m) {
    if (!m.factors_form_basis()) throw NotABasis();
    const BitMatrix duals = dual_basis(BitMatrix(m.factors()));
    return Monomial(opposite(m.side()), m.dim(), duals.row_data());
}

Polynomial dual_polynomial(const Polynomial& g) {
    if (g.side() == Side::character) {
        if (!is_faithful(g)) throw NotFaithful();
    } else {
        if (g.is_zero() || g.homogeneous_degree() != g.dim()) throw NotFaithful();
    }
    std::vector<Monomial> duals;
    duals.reserve(g.term_count());
    for (const auto& m : g.monomials()) duals.push_back(dual_monomial(m));
    return Polynomial(opposite(g.side()), g.dim(), std::move(duals));
}

Monomial apply_automorphism(const BitMatrix& sigma, const Monomial& m) {
    if (sigma.rows() != m.dim() || sigma.dim() != m.dim() || rank(sigma) != m.dim())
        throw SingularMatrix();
    std::vector<BitVec> mapped;
    mapped.reserve(m.factors().size());
    for (const auto& f : m.factors()) mapped.push_back(apply(sigma, f));
    return Monomial(m.side(), m.dim(), std::move(mapped));
}

Polynomial apply_automorphism(const BitMatrix& sigma, const Polynomial& p) {
    std::vector<Monomial> mapped;
    mapped.reserve(p.term_count());
    for (const auto& m : p.monomials()) mapped.push_back(apply_automorphism(sigma, m));
    return Polynomial(p.side(), p.dim(), std::move(mapped));
}

}  // namespace cobord
