#include "cobord/diffop.hpp"

#include <algorithm>

namespace cobord {

Polynomial d(const Monomial& m) {
    std::vector<Monomial> terms;
    terms.reserve(m.factors().size());
    if (m.degree() == 1) {
        terms.push_back(Monomial::one(m.side(), m.dim()));
        return Polynomial(m.side(), m.dim(), std::move(terms));
    }
    // Positional deletion; deleting either copy of a repeated factor gives
    // the same monomial twice, which then cancels mod 2.
    for (std::size_t j = 0; j < m.factors().size(); ++j) {
        std::vector<BitVec> rest;
        rest.reserve(m.factors().size() - 1);
        for (std::size_t k = 0; k < m.factors().size(); ++k)
            if (k != j) rest.push_back(m.factors()[k]);
        terms.emplace_back(m.side(), m.dim(), std::move(rest));
    }
    return Polynomial(m.side(), m.dim(), std::move(terms));
}

Polynomial d(const Polynomial& p) {
    Polynomial acc = Polynomial::zero(p.side(), p.dim());
    for (const auto& m : p.monomials()) acc = acc + d(m);
    return acc;
}

bool is_squarefree(const Polynomial& p) {
    return std::all_of(p.monomials().begin(), p.monomials().end(),
                       [](const Monomial& m) { return m.squarefree(); });
}

Polynomial find_primitive(const Polynomial& h) {
    if (!is_squarefree(h)) throw NotSquarefree();
    if (h.is_zero()) throw NotACycle();
    if (!d(h).is_zero()) throw NotACycle();

    const int n = h.dim();
    const std::uint32_t limit = 1u << n;

    // Prefer a vector that occurs nowhere in h; then s*h is already
    // squarefree and d(s*h) = h + s*d(h) = h.
    std::uint32_t used = 0;
    for (const auto& m : h.monomials())
        for (const auto& f : m.factors()) used |= 1u << f.encoding();
    std::uint32_t pick = 0;
    for (std::uint32_t v = 1; v < limit; ++v)
        if (!(used & (1u << v))) {
            pick = v;
            break;
        }
    if (pick == 0) pick = 1;  // every vector occurs: fall back, drop the s^2 part

    const BitVec s(pick, n);
    std::vector<Monomial> kept;
    for (const auto& m : h.monomials()) {
        const auto& fs = m.factors();
        if (std::find(fs.begin(), fs.end(), s) == fs.end())
            kept.push_back(m * Monomial(h.side(), n, {s}));
    }
    return Polynomial(h.side(), n, std::move(kept));
}

}  // namespace cobord
