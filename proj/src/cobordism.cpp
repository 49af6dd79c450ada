#include "cobord/cobordism.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_set>

#include "cobord/diffop.hpp"

namespace cobord {

namespace {

// Packed key of a degree-n basis monomial, 4 bits per factor encoding.
int pack_key(const std::vector<BitVec>& sorted_factors) {
    int key = 0;
    int shift = 0;
    for (const auto& f : sorted_factors) {
        key |= static_cast<int>(f.encoding()) << shift;
        shift += 4;
    }
    return key;
}

struct RowHash {
    std::size_t operator()(const Row& r) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint64_t w : r) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace

MonomialSpace::MonomialSpace(int n) : n_(n) {
    if (n < 1 || n > 4) throw DimensionTooLarge("monomial space is built for n <= 4");
    index_.assign(1u << (4 * n), -1);
    const std::uint32_t limit = 1u << n;
    std::vector<std::uint32_t> combo;
    auto recurse = [&](auto&& self, std::uint32_t from) -> void {
        if (static_cast<int>(combo.size()) == n) {
            std::vector<BitVec> factors;
            factors.reserve(combo.size());
            for (std::uint32_t e : combo) factors.push_back(BitVec(e, n));
            if (rank(BitMatrix(factors)) == n) {
                index_[static_cast<std::size_t>(pack_key(factors))] =
                    static_cast<int>(basis_.size());
                basis_.emplace_back(Side::cocharacter, n, std::move(factors));
            }
            return;
        }
        for (std::uint32_t e = from; e < limit; ++e) {
            combo.push_back(e);
            self(self, e + 1);
            combo.pop_back();
        }
    };
    recurse(recurse, 1);
}

std::optional<int> MonomialSpace::index_of(const Monomial& m) const {
    if (m.side() != Side::cocharacter || m.dim() != n_ || m.degree() != n_) return std::nullopt;
    const int key = pack_key(m.factors());
    const int idx = index_[static_cast<std::size_t>(key)];
    if (idx < 0) return std::nullopt;
    return idx;
}

std::optional<Row> MonomialSpace::to_row(const Polynomial& p) const {
    if (!p.is_zero() && p.homogeneous_degree() != n_)
        throw WrongDegree("expected a homogeneous polynomial of degree " + std::to_string(n_));
    Row row(static_cast<std::size_t>(words()), 0);
    for (const auto& m : p.monomials()) {
        const auto idx = index_of(m);
        if (!idx) return std::nullopt;
        row[static_cast<std::size_t>(*idx / 64)] ^= 1ull << (*idx % 64);
    }
    return row;
}

Polynomial MonomialSpace::to_polynomial(const Row& row) const {
    std::vector<Monomial> terms;
    for (int i = 0; i < size(); ++i)
        if (row[static_cast<std::size_t>(i / 64)] >> (i % 64) & 1) terms.push_back(basis_[static_cast<std::size_t>(i)]);
    return Polynomial(Side::cocharacter, n_, std::move(terms));
}

namespace {

int row_pivot(const Row& row) {
    for (std::size_t w = 0; w < row.size(); ++w)
        if (row[w]) return static_cast<int>(w * 64) + std::countr_zero(row[w]);
    return -1;
}

void row_xor(Row& a, const Row& b) {
    for (std::size_t w = 0; w < a.size(); ++w) a[w] ^= b[w];
}

}  // namespace

bool SpanBasis::insert(Row row) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const int p = pivots_[i];
        if (row[static_cast<std::size_t>(p / 64)] >> (p % 64) & 1) row_xor(row, rows_[i]);
    }
    const int p = row_pivot(row);
    if (p < 0) return false;
    // Back-substitute into the existing rows, keep pivots increasing.
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i][static_cast<std::size_t>(p / 64)] >> (p % 64) & 1) row_xor(rows_[i], row);
    const auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(row));
    return true;
}

bool SpanBasis::contains(Row row) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const int p = pivots_[i];
        if (row[static_cast<std::size_t>(p / 64)] >> (p % 64) & 1) row_xor(row, rows_[i]);
    }
    return row_pivot(row) < 0;
}

std::optional<std::vector<std::uint8_t>> SpanBasis::decompose(Row row) const {
    std::vector<std::uint8_t> coeffs(rows_.size(), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const int p = pivots_[i];
        if (row[static_cast<std::size_t>(p / 64)] >> (p % 64) & 1) {
            coeffs[i] = 1;
            row_xor(row, rows_[i]);
        }
    }
    if (row_pivot(row) >= 0) return std::nullopt;
    return coeffs;
}

bool is_cobordism_class(const Polynomial& g) {
    if (g.is_zero()) return true;
    if (!is_faithful(g)) return false;
    return d(dual_polynomial(g)).is_zero();
}

Polynomial generator_polynomial(const BitMatrix& basis, int eps) {
    const int n = basis.dim();
    if (basis.rows() != n) throw NotABasis();
    const auto s = [&](int i) { return basis.row(i - 1); };
    const auto mono = [&](std::vector<BitVec> f) {
        return Monomial(Side::cocharacter, n, std::move(f));
    };
    switch (n) {
        case 2:
            return d(mono({s(1), s(2), s(1) + s(2)}));
        case 3:
            return d(mono({s(1), s(2), s(1) + s(2)})) * d(mono({s(3), s(1) + s(3)}));
        case 4: {
            BitVec third = s(3) + s(4);
            if (eps) third = third + s(1);
            return d(mono({s(1), s(2), s(1) + s(2)})) * d(mono({s(3), s(4), third}));
        }
        default:
            throw DimensionTooLarge("generator family is defined for n in {2,3,4}");
    }
}

namespace {

void partitions_of(int n, int max_part, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(n - p, p, cur, out);
        cur.pop_back();
    }
}

SpanBasis span_from_generators(int n, const MonomialSpace& space) {
    SpanBasis span(space.size());
    for_each_ordered_basis(n, [&](const BitMatrix& basis) {
        const int eps_max = n == 4 ? 1 : 0;
        for (int eps = 0; eps <= eps_max; ++eps) {
            const auto row = space.to_row(generator_polynomial(basis, eps));
            span.insert(*row);
        }
        return true;
    });
    return span;
}

SpanBasis span_from_polytopes(int n, const MonomialSpace& space) {
    SpanBasis span(space.size());
    std::vector<std::vector<int>> parts_list;
    std::vector<int> cur;
    partitions_of(n, n, cur, parts_list);

    std::vector<int> key_index(1u << (4 * n), -1);
    for (int i = 0; i < space.size(); ++i)
        key_index[static_cast<std::size_t>(pack_key(space.monomial(i).factors()))] = i;

    std::unordered_set<Row, RowHash> seen;
    Row scratch(static_cast<std::size_t>(space.words()));
    for (const auto& parts : parts_list) {
        const SimplexProduct p(parts);
        std::vector<std::vector<int>> vertex_facets;
        vertex_facets.reserve(static_cast<std::size_t>(p.vertex_count()));
        for (long v = 0; v < p.vertex_count(); ++v) vertex_facets.push_back(p.incident_facets(v));

        for_each_coloring(p, n, [&](const PolytopeColoring& lambda) {
            std::fill(scratch.begin(), scratch.end(), 0);
            for (const auto& facets : vertex_facets) {
                std::uint32_t encs[4];
                for (std::size_t i = 0; i < facets.size(); ++i)
                    encs[i] = lambda.colors[static_cast<std::size_t>(facets[i])].encoding();
                std::sort(encs, encs + facets.size());
                int key = 0;
                for (std::size_t i = 0; i < facets.size(); ++i)
                    key |= static_cast<int>(encs[i]) << (4 * i);
                const int idx = key_index[static_cast<std::size_t>(key)];
                scratch[static_cast<std::size_t>(idx / 64)] ^= 1ull << (idx % 64);
            }
            if (seen.insert(scratch).second) span.insert(scratch);
            return true;
        });
    }
    return span;
}

}  // namespace

DimResult dim_Vn(int n, DimMethod method) {
    if (n < 2 || n > 4) throw DimensionTooLarge("dimension computations cover n in {2,3,4}");
    MonomialSpace space(n);
    SpanBasis span = method == DimMethod::generators ? span_from_generators(n, space)
                                                     : span_from_polytopes(n, space);
    const int dim = span.dimension();
    return {dim, std::move(space), std::move(span)};
}

std::optional<std::vector<std::uint8_t>> decompose(const Polynomial& gstar,
                                                   const MonomialSpace& space,
                                                   const SpanBasis& basis) {
    const auto row = space.to_row(gstar);
    if (!row) return std::nullopt;
    return basis.decompose(*row);
}

BitVec legend_vector(int k, int n) {
    if (k < 1 || k >= (1 << n)) throw Error("legend index out of range");
    return BitVec(static_cast<std::uint32_t>(k), n);
}

Polynomial expand_table_row(const TableRow& row, int n) {
    const std::size_t expected = n == 4 ? 6 : 5;
    if (n != 3 && n != 4) throw DimensionTooLarge("tables exist for n = 3 and n = 4");
    if (row.indices.size() != expected)
        throw Error("table row must have " + std::to_string(expected) + " indices");
    auto x = [&](std::size_t i) { return legend_vector(row.indices[i], n); };
    const Monomial first(Side::cocharacter, n, {x(0), x(1), x(2)});
    const Monomial second = n == 4 ? Monomial(Side::cocharacter, n, {x(3), x(4), x(5)})
                                   : Monomial(Side::cocharacter, n, {x(3), x(4)});
    return d(first) * d(second);
}

TableReport verify_table(const std::vector<TableRow>& rows, int n) {
    TableReport report;
    report.count = static_cast<int>(rows.size());
    const DimResult reference = dim_Vn(n, DimMethod::generators);
    SpanBasis span(reference.space.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Polynomial poly = expand_table_row(rows[i], n);
        if (!d(poly).is_zero()) report.rows_in_kernel = false;
        bool faithful = !poly.is_zero();
        for (const auto& m : poly.monomials())
            if (!m.factors_form_basis()) faithful = false;
        const auto row = reference.space.to_row(poly);
        if (!row || !faithful) {
            report.rows_faithful_dual = false;
            continue;
        }
        if (!span.insert(*row) && report.independent) {
            report.independent = false;
            report.first_dependency = static_cast<int>(i);
        }
    }
    report.span_dim = span.dimension();
    report.matches_dim_vn = span == reference.basis;
    return report;
}

std::optional<BitMatrix> find_modular_witness(const Polynomial& h, int n) {
    if (!is_squarefree(h)) throw NotSquarefree();
    if (h.is_zero() || !d(h).is_zero()) throw NotACycle();
    if (h.dim() != n) throw Error("polynomial dimension differs from the ambient dimension");
    const auto deg = h.homogeneous_degree();
    if (!deg) throw DegreeOutOfRange("witness search needs a homogeneous polynomial");
    if (*deg < 1 || *deg > n - 2)
        throw DegreeOutOfRange("witness search needs 0 < deg h <= n - 2");
    const int k = n - *deg;

    // All k-dimensional subspaces, each keyed by the sorted encodings of
    // its reduced row-echelon basis (pivots eliminated from every other
    // row, so the basis is canonical per subspace).
    auto echelon = [](std::vector<std::uint32_t> rows) {
        std::vector<std::uint32_t> out;
        for (int bit = 31; bit >= 0; --bit) {
            const std::uint32_t mask = 1u << bit;
            auto it = std::find_if(rows.begin(), rows.end(),
                                   [&](std::uint32_t r) { return r & mask; });
            if (it == rows.end()) continue;
            const std::uint32_t piv = *it;
            rows.erase(it);
            for (auto& r : rows)
                if (r & mask) r ^= piv;
            for (auto& r : out)
                if (r & mask) r ^= piv;
            out.push_back(piv);
        }
        std::sort(out.begin(), out.end());
        return out;
    };

    std::map<std::vector<std::uint32_t>, BitMatrix> subspaces;
    const std::uint32_t limit = 1u << n;
    std::vector<std::uint32_t> combo;
    auto collect = [&](auto&& self, std::uint32_t from) -> void {
        if (static_cast<int>(combo.size()) == k) {
            std::vector<BitVec> vecs;
            for (std::uint32_t e : combo) vecs.push_back(BitVec(e, n));
            if (rank(BitMatrix(vecs)) != k) return;
            const std::vector<std::uint32_t> canon = echelon(combo);
            std::vector<BitVec> basis_rows;
            for (std::uint32_t e : canon) basis_rows.push_back(BitVec(e, n));
            subspaces.emplace(canon, BitMatrix(std::move(basis_rows)));
            return;
        }
        for (std::uint32_t e = from; e < limit; ++e) {
            combo.push_back(e);
            self(self, e + 1);
            combo.pop_back();
        }
    };
    collect(collect, 1);

    for (const auto& [key, basis] : subspaces) {
        // Coset representative: knock out the pivot bit of every basis row.
        std::vector<std::pair<std::uint32_t, std::uint32_t>> pivots;
        for (const auto& r : basis.row_data()) {
            const std::uint32_t enc = r.encoding();
            pivots.emplace_back(1u << (31 - std::countl_zero(enc)), enc);
        }
        bool good = true;
        for (const auto& m : h.monomials()) {
            std::vector<BitVec> reduced;
            reduced.reserve(m.factors().size());
            for (BitVec f : m.factors()) {
                std::uint32_t e = f.encoding();
                for (const auto& [mask, r] : pivots)
                    if (e & mask) e ^= r;
                if (e == 0) {
                    good = false;
                    break;
                }
                reduced.push_back(BitVec(e, n));
            }
            if (!good || rank(BitMatrix(reduced)) != *deg) {
                good = false;
                break;
            }
        }
        if (good) return basis;
    }
    return std::nullopt;
}

}  // namespace cobord
