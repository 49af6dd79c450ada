#pragma once
// Shared builders and the n = 3 worked example used across the suites.

#include <algorithm>
#include <initializer_list>
#include <random>
#include <vector>

#include "cobord/algebra.hpp"

namespace fixtures {

using cobord::BitVec;
using cobord::Monomial;
using cobord::Polynomial;
using cobord::Side;

inline Monomial mono(Side side, int n, std::initializer_list<std::uint32_t> encodings) {
    std::vector<BitVec> factors;
    for (std::uint32_t e : encodings) factors.push_back(BitVec(e, n));
    return Monomial(side, n, std::move(factors));
}

inline Polynomial poly(Side side, int n,
                       std::initializer_list<std::initializer_list<std::uint32_t>> monos) {
    std::vector<Monomial> ms;
    for (const auto& m : monos) {
        std::vector<BitVec> factors;
        for (std::uint32_t e : m) factors.push_back(BitVec(e, n));
        ms.emplace_back(side, n, std::move(factors));
    }
    return Polynomial(side, n, std::move(ms));
}

// The six-term faithful polynomial of the n = 3 worked example and its
// printed dual.
inline Polynomial example_g() {
    return poly(Side::character, 3,
                {{1, 2, 4}, {1, 4, 6}, {1, 2, 6}, {1, 5, 3}, {1, 5, 6}, {1, 3, 6}});
}

inline Polynomial example_gstar() {
    return poly(Side::cocharacter, 3,
                {{1, 2, 4}, {1, 2, 6}, {1, 4, 6}, {2, 4, 7}, {2, 6, 7}, {4, 6, 7}});
}

// Uniform random polynomial with the given number of distinct basis
// monomials.
inline Polynomial random_faithful(std::mt19937& rng, int n, int terms) {
    std::vector<Monomial> monos;
    while (static_cast<int>(monos.size()) < terms) {
        std::vector<BitVec> rows;
        for (int i = 0; i < n; ++i)
            rows.push_back(BitVec(rng() % ((1u << n) - 1) + 1, n));
        if (cobord::rank(cobord::BitMatrix(rows)) != n) continue;
        Monomial m(Side::character, n, std::move(rows));
        if (std::find(monos.begin(), monos.end(), m) == monos.end()) monos.push_back(std::move(m));
    }
    return Polynomial(Side::character, n, std::move(monos));
}

// Random polynomial with squarefree monomials of the given degree.
inline Polynomial random_squarefree(std::mt19937& rng, Side side, int n, int degree, int terms) {
    std::vector<Monomial> monos;
    while (static_cast<int>(monos.size()) < terms) {
        std::vector<std::uint32_t> encs;
        while (static_cast<int>(encs.size()) < degree) {
            const std::uint32_t e = rng() % ((1u << n) - 1) + 1;
            if (std::find(encs.begin(), encs.end(), e) == encs.end()) encs.push_back(e);
        }
        std::vector<BitVec> factors;
        for (std::uint32_t e : encs) factors.push_back(BitVec(e, n));
        monos.emplace_back(side, n, std::move(factors));
    }
    return Polynomial(side, n, std::move(monos));
}

// Random mixed-degree polynomial; factors may repeat.
inline Polynomial random_mixed(std::mt19937& rng, Side side, int n, int max_degree, int terms) {
    std::vector<Monomial> monos;
    for (int t = 0; t < terms; ++t) {
        const int degree = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_degree));
        std::vector<BitVec> factors;
        for (int i = 0; i < degree; ++i)
            factors.push_back(BitVec(rng() % ((1u << n) - 1) + 1, n));
        monos.emplace_back(side, n, std::move(factors));
    }
    return Polynomial(side, n, std::move(monos));
}

inline cobord::BitMatrix random_automorphism(std::mt19937& rng, int n) {
    for (;;) {
        std::vector<BitVec> rows;
        for (int i = 0; i < n; ++i)
            rows.push_back(BitVec(rng() % ((1u << n) - 1) + 1, n));
        cobord::BitMatrix m(rows);
        if (cobord::rank(m) == n) return m;
    }
}

}  // namespace fixtures
