#include "cobord/graph.hpp"

#include <algorithm>
#include <map>

namespace cobord {

namespace {

std::vector<std::uint32_t> sorted_encodings(const std::vector<BitVec>& colors) {
    std::vector<std::uint32_t> enc;
    enc.reserve(colors.size());
    for (const auto& c : colors) enc.push_back(c.encoding());
    std::sort(enc.begin(), enc.end());
    return enc;
}

}  // namespace

ColoredGraph ColoredGraph::from_edges(int dim, int vertex_count,
                                      const std::vector<GraphEdge>& edges) {
    ColoredGraph g;
    g.dim_ = dim;
    g.colors_.resize(static_cast<std::size_t>(vertex_count));
    g.mates_.resize(static_cast<std::size_t>(vertex_count));
    auto add_slot = [&](int v, BitVec color) -> HalfEdgeRef {
        auto& cs = g.colors_[static_cast<std::size_t>(v)];
        if (static_cast<int>(cs.size()) == dim)
            throw MalformedGraph("vertex " + std::to_string(v) + " exceeds valence");
        cs.push_back(color);
        g.mates_[static_cast<std::size_t>(v)].push_back({});
        return {v, static_cast<int>(cs.size()) - 1};
    };
    for (const auto& e : edges) {
        if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
            throw MalformedGraph("edge endpoint out of range");
        if (e.u == e.v) throw MalformedGraph("loop at vertex " + std::to_string(e.u));
        if (e.color.is_zero()) throw MalformedGraph("edge color is zero");
        if (e.color.dim() != dim) throw MalformedGraph("edge color has wrong dimension");
        const HalfEdgeRef a = add_slot(e.u, e.color);
        const HalfEdgeRef b = add_slot(e.v, e.color);
        g.mates_[static_cast<std::size_t>(a.vertex)][static_cast<std::size_t>(a.slot)] = b;
        g.mates_[static_cast<std::size_t>(b.vertex)][static_cast<std::size_t>(b.slot)] = a;
    }
    for (int v = 0; v < vertex_count; ++v)
        if (static_cast<int>(g.colors_[static_cast<std::size_t>(v)].size()) != dim)
            throw MalformedGraph("vertex " + std::to_string(v) + " is not " +
                                 std::to_string(dim) + "-valent");
    return g;
}

std::vector<GraphEdge> ColoredGraph::edges() const {
    std::vector<GraphEdge> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (int v = 0; v < vertex_count(); ++v)
        for (int s = 0; s < dim_; ++s) {
            const HalfEdgeRef m = mate(v, s);
            if (m.vertex > v || (m.vertex == v && m.slot > s))
                out.push_back({v, m.vertex, colors_[static_cast<std::size_t>(v)]
                                                   [static_cast<std::size_t>(s)]});
        }
    std::sort(out.begin(), out.end(), [](const GraphEdge& a, const GraphEdge& b) {
        return std::tie(a.u, a.v, a.color) < std::tie(b.u, b.v, b.color);
    });
    return out;
}

Monomial ColoredGraph::vertex_monomial(int v) const {
    return Monomial(Side::character, dim_, colors_[static_cast<std::size_t>(v)]);
}

ValidationReport validate(const ColoredGraph& g) {
    // Structural sanity first; the builders keep these true, but graphs
    // read back from files go through here as well.
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int s = 0; s < g.dim(); ++s) {
            const HalfEdgeRef m = g.mate(v, s);
            if (m.vertex < 0 || m.vertex >= g.vertex_count() || m.slot < 0 || m.slot >= g.dim())
                throw MalformedGraph("unmatched slot at vertex " + std::to_string(v));
            if (m.vertex == v) throw MalformedGraph("loop at vertex " + std::to_string(v));
            if (g.mate(m.vertex, m.slot) != HalfEdgeRef{v, s})
                throw MalformedGraph("matching is not an involution");
            const BitVec mine = g.colors_at(v)[static_cast<std::size_t>(s)];
            const BitVec theirs = g.colors_at(m.vertex)[static_cast<std::size_t>(m.slot)];
            if (mine.is_zero()) throw MalformedGraph("zero color");
            if (mine != theirs)
                throw MalformedGraph("matched slots disagree on color at vertex " +
                                     std::to_string(v));
        }
    }

    for (int v = 0; v < g.vertex_count(); ++v) {
        if (rank(BitMatrix(g.colors_at(v))) != g.dim()) {
            return {false, "colors at vertex " + std::to_string(v) + " do not form a basis"};
        }
    }

    // Axiom (2): across every edge the color multisets agree after
    // reducing modulo the span of the edge color.
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int s = 0; s < g.dim(); ++s) {
            const HalfEdgeRef m = g.mate(v, s);
            if (m.vertex < v) continue;  // handle each edge once
            const std::uint32_t e = g.colors_at(v)[static_cast<std::size_t>(s)].encoding();
            auto reduced = [e](const std::vector<BitVec>& colors) {
                std::vector<std::uint32_t> reps;
                reps.reserve(colors.size());
                for (const auto& c : colors)
                    reps.push_back(std::min(c.encoding(), c.encoding() ^ e));
                std::sort(reps.begin(), reps.end());
                return reps;
            };
            if (reduced(g.colors_at(v)) != reduced(g.colors_at(m.vertex)))
                return {false, "edge " + std::to_string(v) + "-" + std::to_string(m.vertex) +
                                   " violates the congruence axiom"};
        }
    return {true, ""};
}

Polynomial coloring_polynomial(const ColoredGraph& g) {
    std::vector<Monomial> terms;
    terms.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) terms.push_back(g.vertex_monomial(v));
    return Polynomial(Side::character, g.dim(), std::move(terms));
}

ColoredGraph from_polynomial(const Polynomial& g) {
    if (!is_faithful(g)) throw NotFaithful();
    const int n = g.dim();

    // One vertex per monomial of g*, ordered canonically by the dual.
    struct VertexData {
        Monomial dual;
        BitMatrix chars;  // row j is the character matched to dual factor j
    };
    std::vector<VertexData> verts;
    verts.reserve(g.term_count());
    for (const auto& m : g.monomials()) {
        Monomial dual = dual_monomial(m);
        BitMatrix chars = dual_basis(BitMatrix(dual.factors()));
        verts.push_back({std::move(dual), std::move(chars)});
    }
    std::sort(verts.begin(), verts.end(),
              [](const VertexData& a, const VertexData& b) { return a.dual < b.dual; });

    // Slot (i, j) is labelled by the dual monomial with factor j deleted;
    // d(g*) = 0 says exactly that the labels pair up globally.
    std::map<std::vector<std::uint32_t>, std::vector<HalfEdgeRef>> by_label;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<std::uint32_t> label;
            label.reserve(static_cast<std::size_t>(n - 1));
            for (int k = 0; k < n; ++k)
                if (k != j)
                    label.push_back(
                        verts[i].dual.factors()[static_cast<std::size_t>(k)].encoding());
            by_label[label].push_back({static_cast<int>(i), j});
        }

    ColoredGraph out;
    out.dim_ = n;
    out.colors_.resize(verts.size());
    out.mates_.resize(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        out.colors_[i] = verts[i].chars.row_data();
        out.mates_[i].resize(static_cast<std::size_t>(n));
    }
    for (const auto& [label, slots] : by_label) {
        if (slots.size() % 2) throw BoundaryNonzero();
        for (std::size_t k = 0; k + 1 < slots.size(); k += 2) {
            const HalfEdgeRef a = slots[k], b = slots[k + 1];
            out.mates_[static_cast<std::size_t>(a.vertex)][static_cast<std::size_t>(a.slot)] = b;
            out.mates_[static_cast<std::size_t>(b.vertex)][static_cast<std::size_t>(b.slot)] = a;
        }
    }
    return out;
}

ColoredGraph ColoredGraph::cancel_pair(const ColoredGraph& g, int drop_a, int drop_b) {
    const int n = g.dim();
    std::vector<int> remap(static_cast<std::size_t>(g.vertex_count()), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (v != drop_a && v != drop_b) remap[static_cast<std::size_t>(v)] = next++;

    ColoredGraph out;
    out.dim_ = n;
    out.colors_.resize(static_cast<std::size_t>(next));
    out.mates_.resize(static_cast<std::size_t>(next));
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int w = remap[static_cast<std::size_t>(v)];
        if (w < 0) continue;
        out.colors_[static_cast<std::size_t>(w)] = g.colors_at(v);
        out.mates_[static_cast<std::size_t>(w)].resize(static_cast<std::size_t>(n));
        for (int s = 0; s < n; ++s) {
            const HalfEdgeRef m = g.mate(v, s);
            if (m.vertex != drop_a && m.vertex != drop_b)
                out.mates_[static_cast<std::size_t>(w)][static_cast<std::size_t>(s)] = {
                    remap[static_cast<std::size_t>(m.vertex)], m.slot};
        }
    }

    // Colors at a valid vertex are distinct, so each severed color has at
    // most one dangling end per side; glue matching colors together.
    auto dangling = [&](int dropped) {
        std::map<std::uint32_t, HalfEdgeRef> ends;
        for (int s = 0; s < n; ++s) {
            const HalfEdgeRef m = g.mate(dropped, s);
            if (m.vertex == drop_a || m.vertex == drop_b) continue;  // internal edge
            const std::uint32_t c =
                g.colors_at(dropped)[static_cast<std::size_t>(s)].encoding();
            ends[c] = {remap[static_cast<std::size_t>(m.vertex)], m.slot};
        }
        return ends;
    };
    const auto ends_a = dangling(drop_a);
    const auto ends_b = dangling(drop_b);
    if (ends_a.size() != ends_b.size()) throw MalformedGraph("severed ends do not pair");
    for (const auto& [color, ha] : ends_a) {
        const auto it = ends_b.find(color);
        if (it == ends_b.end()) throw MalformedGraph("severed ends do not pair");
        const HalfEdgeRef hb = it->second;
        if (ha.vertex == hb.vertex) throw MalformedGraph("regluing would create a loop");
        out.mates_[static_cast<std::size_t>(ha.vertex)][static_cast<std::size_t>(ha.slot)] = hb;
        out.mates_[static_cast<std::size_t>(hb.vertex)][static_cast<std::size_t>(hb.slot)] = ha;
    }
    return out;
}

ColoredGraph prime_reduce(const ColoredGraph& g) {
    ColoredGraph cur = g;
    for (;;) {
        std::vector<std::vector<std::uint32_t>> data;
        data.reserve(static_cast<std::size_t>(cur.vertex_count()));
        for (int v = 0; v < cur.vertex_count(); ++v)
            data.push_back(sorted_encodings(cur.colors_at(v)));
        int p = -1, q = -1;
        for (int a = 0; a < cur.vertex_count() && p < 0; ++a)
            for (int b = a + 1; b < cur.vertex_count(); ++b)
                if (data[static_cast<std::size_t>(a)] == data[static_cast<std::size_t>(b)]) {
                    p = a;
                    q = b;
                    break;
                }
        if (p < 0) return cur;
        cur = ColoredGraph::cancel_pair(cur, p, q);
    }
}

ColoredGraph connected_sum(const ColoredGraph& g1, int v1, const ColoredGraph& g2, int v2) {
    if (g1.dim() != g2.dim()) throw Error("connected sum across different dimensions");
    if (sorted_encodings(g1.colors_at(v1)) != sorted_encodings(g2.colors_at(v2)))
        throw MonomialMismatch();

    // Disjoint union with g2's vertices appended, then cancel the pair.
    const int n = g1.dim();
    ColoredGraph both;
    both.dim_ = n;
    both.colors_ = g1.colors_;
    both.mates_ = g1.mates_;
    const int offset = g1.vertex_count();
    for (int v = 0; v < g2.vertex_count(); ++v) {
        both.colors_.push_back(g2.colors_at(v));
        std::vector<HalfEdgeRef> slots(static_cast<std::size_t>(n));
        for (int s = 0; s < n; ++s) {
            const HalfEdgeRef m = g2.mate(v, s);
            slots[static_cast<std::size_t>(s)] = {m.vertex + offset, m.slot};
        }
        both.mates_.push_back(std::move(slots));
    }
    return ColoredGraph::cancel_pair(both, v1, v2 + offset);
}

}  // namespace cobord
