#include "cobord/polytope.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace cobord {

SimplexProduct::SimplexProduct(std::vector<int> parts) : parts_(std::move(parts)) {
    facet_offset_.reserve(parts_.size() + 1);
    facet_offset_.push_back(0);
    for (int ni : parts_) {
        if (ni < 1) throw Error("simplex factors must have positive dimension");
        dimension_ += ni;
        facet_count_ += ni + 1;
        vertex_count_ *= ni + 1;
        facet_offset_.push_back(facet_count_);
    }
}

SimplexProduct::Facet SimplexProduct::facet(int ordinal) const {
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if (ordinal < facet_offset_[i + 1]) return {static_cast<int>(i), ordinal - facet_offset_[i]};
    throw Error("facet ordinal out of range");
}

int SimplexProduct::ordinal(Facet f) const {
    return facet_offset_[static_cast<std::size_t>(f.part)] + f.index;
}

std::vector<int> SimplexProduct::vertex_tuple(long vertex) const {
    std::vector<int> w(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        const int radix = parts_[i] + 1;
        w[i] = static_cast<int>(vertex % radix);
        vertex /= radix;
    }
    return w;
}

bool SimplexProduct::incident(long vertex, Facet f) const {
    return vertex_tuple(vertex)[static_cast<std::size_t>(f.part)] != f.index;
}

std::vector<int> SimplexProduct::incident_facets(long vertex) const {
    const std::vector<int> w = vertex_tuple(vertex);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(dimension_));
    for (std::size_t i = 0; i < parts_.size(); ++i)
        for (int f = 0; f <= parts_[i]; ++f)
            if (f != w[i]) out.push_back(facet_offset_[i] + f);
    return out;
}

long first_invalid_vertex(const SimplexProduct& p, const PolytopeColoring& lambda) {
    if (static_cast<int>(lambda.colors.size()) != p.facet_count())
        throw Error("coloring does not cover every facet");
    for (const auto& c : lambda.colors)
        if (c.is_zero()) throw Error("facet color is zero");
    for (long v = 0; v < p.vertex_count(); ++v) {
        std::vector<BitVec> at;
        at.reserve(static_cast<std::size_t>(p.dimension()));
        for (int f : p.incident_facets(v)) at.push_back(lambda.colors[static_cast<std::size_t>(f)]);
        if (at.empty()) continue;  // the point
        if (rank(BitMatrix(at)) != p.dimension()) return v;
    }
    return -1;
}

Monomial vertex_monomial(const SimplexProduct& p, const PolytopeColoring& lambda, long vertex) {
    std::vector<BitVec> at;
    at.reserve(static_cast<std::size_t>(p.dimension()));
    for (int f : p.incident_facets(vertex))
        at.push_back(lambda.colors[static_cast<std::size_t>(f)]);
    const int dim = lambda.colors.empty() ? 1 : lambda.colors.front().dim();
    const int term_dim = at.empty() ? dim : at.front().dim();
    return Monomial(Side::cocharacter, term_dim, std::move(at));
}

Polynomial coloring_polynomial(const SimplexProduct& p, const PolytopeColoring& lambda) {
    const long bad = first_invalid_vertex(p, lambda);
    if (bad >= 0) throw InvalidColoring("colors dependent at vertex " + std::to_string(bad));
    const int dim = lambda.colors.empty() ? 1 : lambda.colors.front().dim();
    std::vector<Monomial> terms;
    terms.reserve(static_cast<std::size_t>(p.vertex_count()));
    for (long v = 0; v < p.vertex_count(); ++v) terms.push_back(vertex_monomial(p, lambda, v));
    if (terms.empty()) return Polynomial::zero(Side::cocharacter, dim);
    const int term_dim = terms.front().dim();
    return Polynomial(Side::cocharacter, term_dim, std::move(terms));
}

ColoredPolytope product_coloring(const SimplexProduct& p1, const PolytopeColoring& l1,
                                 const SimplexProduct& p2, const PolytopeColoring& l2) {
    std::vector<int> parts = p1.parts();
    parts.insert(parts.end(), p2.parts().begin(), p2.parts().end());
    SimplexProduct p(std::move(parts));
    PolytopeColoring lambda;
    lambda.colors = l1.colors;
    lambda.colors.insert(lambda.colors.end(), l2.colors.begin(), l2.colors.end());
    const long bad = first_invalid_vertex(p, lambda);
    if (bad >= 0)
        throw InvalidColoring("product colors dependent at vertex " + std::to_string(bad));
    return {std::move(p), std::move(lambda)};
}

namespace {

// Span of a set of vectors as a bitmask over all 2^n encodings.
std::uint32_t grow_span(std::uint32_t span_mask, std::uint32_t v) {
    std::uint32_t out = span_mask;
    std::uint32_t rest = span_mask;
    while (rest) {
        const int e = std::countr_zero(rest);
        rest &= rest - 1;
        out |= 1u << (static_cast<std::uint32_t>(e) ^ v);
    }
    return out;
}

struct ColoringSearch {
    const SimplexProduct& p;
    int n;
    std::uint32_t limit;
    std::vector<std::vector<long>> facet_vertices;  // per facet ordinal
    std::vector<std::uint32_t> vertex_span;         // mask of spanned encodings
    PolytopeColoring current;
    const std::function<bool(const PolytopeColoring&)>& visit;
    bool keep_going = true;

    void run(int facet) {
        if (!keep_going) return;
        if (facet == p.facet_count()) {
            keep_going = visit(current);
            return;
        }
        const auto& touched = facet_vertices[static_cast<std::size_t>(facet)];
        for (std::uint32_t c = 1; c < limit && keep_going; ++c) {
            bool ok = true;
            for (long v : touched)
                if (vertex_span[static_cast<std::size_t>(v)] & (1u << c)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            std::vector<std::uint32_t> saved;
            saved.reserve(touched.size());
            for (long v : touched) {
                saved.push_back(vertex_span[static_cast<std::size_t>(v)]);
                vertex_span[static_cast<std::size_t>(v)] =
                    grow_span(vertex_span[static_cast<std::size_t>(v)], c);
            }
            current.colors[static_cast<std::size_t>(facet)] = BitVec(c, n);
            run(facet + 1);
            for (std::size_t i = 0; i < touched.size(); ++i)
                vertex_span[static_cast<std::size_t>(touched[i])] = saved[i];
        }
    }
};

}  // namespace

void for_each_coloring(const SimplexProduct& p, int n,
                       const std::function<bool(const PolytopeColoring&)>& visit) {
    if (p.dimension() != n) throw Error("ambient dimension must equal the polytope dimension");
    if (n < 1 || n > 4) throw DimensionTooLarge("coloring enumeration is capped at n = 4");

    std::vector<std::vector<long>> facet_vertices(static_cast<std::size_t>(p.facet_count()));
    for (long v = 0; v < p.vertex_count(); ++v)
        for (int f : p.incident_facets(v)) facet_vertices[static_cast<std::size_t>(f)].push_back(v);

    ColoringSearch search{p,
                          n,
                          1u << n,
                          std::move(facet_vertices),
                          std::vector<std::uint32_t>(static_cast<std::size_t>(p.vertex_count()), 1u),
                          PolytopeColoring{std::vector<BitVec>(
                              static_cast<std::size_t>(p.facet_count()))},
                          visit};
    search.run(0);
}

std::vector<PolytopeColoring> enumerate_colorings(const SimplexProduct& p, int n) {
    std::vector<PolytopeColoring> out;
    for_each_coloring(p, n, [&](const PolytopeColoring& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

Polynomial connected_sum_polynomial(const Polynomial& g1, const Polynomial& g2) {
    return g1 + g2;
}

std::vector<ColoredPolytope> prism_path(const Monomial& m1, const Monomial& m2) {
    if (!m1.factors_form_basis() || !m2.factors_form_basis()) throw NotABasis();
    if (m1.side() != m2.side() || m1.dim() != m2.dim())
        throw Error("monomials live in different spaces");
    if (m1.side() != Side::cocharacter) throw SideMismatch();
    const int n = m1.dim();

    std::vector<BitVec> current = m1.factors();
    const std::vector<BitVec>& target = m2.factors();
    auto contains = [](const std::vector<BitVec>& set, BitVec v) {
        return std::find(set.begin(), set.end(), v) != set.end();
    };

    std::vector<ColoredPolytope> prisms;
    while (current != target) {
        BitVec out_vec;
        for (const auto& v : current)
            if (!contains(target, v)) {
                out_vec = v;
                break;
            }
        std::vector<BitVec> retained;
        retained.reserve(static_cast<std::size_t>(n - 1));
        for (const auto& v : current)
            if (v != out_vec) retained.push_back(v);

        // Basis exchange: some unused target factor completes the retained
        // set to a basis again.
        BitVec in_vec;
        bool found = false;
        for (const auto& y : target) {
            if (contains(current, y)) continue;
            std::vector<BitVec> candidate = retained;
            candidate.push_back(y);
            if (rank(BitMatrix(candidate)) == n) {
                in_vec = y;
                found = true;
                break;
            }
        }
        if (!found) throw Error("basis exchange failed");

        BitVec sum = BitVec::zero(n);
        for (const auto& r : retained) sum = sum + r;

        std::vector<int> parts;
        if (n >= 2) parts.push_back(n - 1);
        parts.push_back(1);
        SimplexProduct prism{parts};
        PolytopeColoring lambda;
        lambda.colors.reserve(static_cast<std::size_t>(prism.facet_count()));
        if (n >= 2) {
            for (const auto& r : retained) lambda.colors.push_back(r);
            lambda.colors.push_back(sum);
        }
        lambda.colors.push_back(out_vec);
        lambda.colors.push_back(in_vec);
        prisms.push_back({std::move(prism), std::move(lambda)});

        retained.push_back(in_vec);
        std::sort(retained.begin(), retained.end());
        current = std::move(retained);
    }
    return prisms;
}

}  // namespace cobord
