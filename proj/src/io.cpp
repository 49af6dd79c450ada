#include "cobord/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace cobord {

namespace {

// Recursive-descent parser with byte-offset diagnostics.
class PolyParser {
public:
    PolyParser(std::string_view text, int n, Side fallback)
        : text_(text), n_(n), fallback_(fallback) {}

    Polynomial parse() {
        skip_ws();
        if (peek() == '0' && at_end(pos_ + 1)) {
            ++pos_;
            return Polynomial::zero(fallback_, n_);
        }
        std::vector<Monomial> monos;
        monos.push_back(parse_monomial());
        skip_ws();
        while (!at_end(pos_)) {
            expect('+');
            monos.push_back(parse_monomial());
            skip_ws();
        }
        const Side side = seen_side_.value_or(fallback_);
        std::vector<Monomial> retagged;
        retagged.reserve(monos.size());
        for (auto& m : monos) retagged.emplace_back(side, n_, m.factors());
        return Polynomial(side, n_, std::move(retagged));
    }

private:
    std::string_view text_;
    int n_;
    Side fallback_;
    std::size_t pos_ = 0;
    std::optional<Side> seen_side_;
    std::optional<char> seen_kind_;

    bool at_end(std::size_t p) const {
        while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
        return p >= text_.size();
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void expect(char c) {
        skip_ws();
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    Monomial parse_monomial() {
        skip_ws();
        if (peek() == '1') {
            ++pos_;
            return Monomial::one(fallback_, n_);
        }
        std::vector<BitVec> factors;
        factors.push_back(parse_factor());
        skip_ws();
        while (peek() == '*') {
            ++pos_;
            factors.push_back(parse_factor());
            skip_ws();
        }
        return Monomial(seen_side_.value_or(fallback_), n_, std::move(factors));
    }

    BitVec parse_factor() {
        skip_ws();
        if (peek() == '(') {
            ++pos_;
            BitVec sum = parse_var();
            skip_ws();
            while (peek() == '+') {
                ++pos_;
                sum = sum + parse_var();
                skip_ws();
            }
            if (sum.is_zero()) throw ParseError("factor sums to zero", pos_);
            expect(')');
            return sum;
        }
        return parse_var();
    }

    BitVec parse_var() {
        skip_ws();
        const std::size_t start = pos_;
        const char kind = peek();
        if (kind == '#') {
            ++pos_;
            std::string bits;
            while (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1'))
                bits.push_back(text_[pos_++]);
            if (bits.empty()) throw ParseError("expected bits after '#'", pos_);
            if (static_cast<int>(bits.size()) != n_)
                throw ParseError("bitstring length differs from the dimension", start);
            const BitVec v = BitVec::from_bits(bits);
            if (v.is_zero()) throw ParseError("zero vector is not a variable", start);
            return v;
        }
        if (kind != 'r' && kind != 's' && kind != 'x')
            throw ParseError("expected a variable", pos_);
        ++pos_;
        std::size_t digits = 0;
        unsigned long idx = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            idx = idx * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            ++pos_;
            ++digits;
        }
        if (!digits) throw ParseError("expected an index", pos_);

        if (seen_kind_ && *seen_kind_ != kind)
            throw ParseError("variable kinds must not mix", start);
        seen_kind_ = kind;
        const Side side = kind == 'r' ? Side::character : Side::cocharacter;
        if (seen_side_ && *seen_side_ != side)
            throw ParseError("sides must not mix", start);
        seen_side_ = side;

        if (kind == 'x') {
            if (idx < 1 || idx >= (1ul << n_))
                throw ParseError("legend index out of range", start);
            return BitVec(static_cast<std::uint32_t>(idx), n_);
        }
        if (idx < 1 || static_cast<int>(idx) > n_)
            throw ParseError("variable index out of range", start);
        return BitVec::unit(static_cast<int>(idx), n_);
    }
};

char side_letter(Side s) { return s == Side::character ? 'r' : 's'; }

}  // namespace

Polynomial parse_polynomial(std::string_view text, int n, Side fallback) {
    if (n < 1 || n > kMaxDim) throw Error("dimension out of range");
    PolyParser parser(text, n, fallback);
    return parser.parse();
}

std::string serialize(const BitVec& v, Side side) {
    const char letter = side_letter(side);
    std::string out;
    int weight = 0;
    for (int i = 1; i <= v.dim(); ++i)
        if (v.bit(i)) {
            if (weight) out += '+';
            out += letter;
            out += std::to_string(i);
            ++weight;
        }
    if (weight == 0) throw ZeroFactor();
    if (weight > 1) return "(" + out + ")";
    return out;
}

std::string serialize(const Monomial& m) {
    if (m.degree() == 0) return "1";
    std::string out;
    for (std::size_t i = 0; i < m.factors().size(); ++i) {
        if (i) out += '*';
        out += serialize(m.factors()[i], m.side());
    }
    return out;
}

std::string serialize(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.monomials().size(); ++i) {
        if (i) out += '+';
        out += serialize(p.monomials()[i]);
    }
    return out;
}

std::vector<TableRow> parse_table(std::string_view text, int n) {
    if (n != 3 && n != 4) throw Error("tables exist for n = 3 and n = 4");
    const std::size_t expected = n == 4 ? 6 : 5;
    std::vector<TableRow> rows;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        ++line_no;
        pos = eol + 1;

        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) {
            if (eol == text.size()) break;
            continue;
        }

        TableRow row;
        std::size_t i = 0;
        auto skip = [&] {
            while (i < line.size() && (std::isspace(static_cast<unsigned char>(line[i])) ||
                                       line[i] == ';' || line[i] == '(' || line[i] == ')' ||
                                       line[i] == ','))
                ++i;
        };
        skip();
        while (i < line.size()) {
            if (!std::isdigit(static_cast<unsigned char>(line[i])))
                throw ParseError("expected an index", line_no);
            int value = 0;
            while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i])))
                value = value * 10 + (line[i++] - '0');
            if (value < 1 || value >= (1 << n))
                throw ParseError("legend index out of range", line_no);
            row.indices.push_back(value);
            skip();
        }
        if (row.indices.size() != expected)
            throw ParseError("row must list " + std::to_string(expected) + " indices", line_no);
        rows.push_back(std::move(row));
        if (eol == text.size()) break;
    }
    return rows;
}

std::string serialize_colored_polytope(const ColoredPolytope& cp) {
    std::string out = "parts=";
    for (std::size_t i = 0; i < cp.polytope.parts().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(cp.polytope.parts()[i]);
    }
    for (int f = 0; f < cp.polytope.facet_count(); ++f) {
        const auto facet = cp.polytope.facet(f);
        out += "; (" + std::to_string(facet.part) + "," + std::to_string(facet.index) + ")=#";
        out += cp.coloring.colors[static_cast<std::size_t>(f)].to_bits();
    }
    return out;
}

ColoredPolytope parse_colored_polytope(std::string_view line, int n) {
    auto fail = [&](const std::string& what) -> ParseError { return ParseError(what, 1); };
    const std::size_t eq = line.find("parts=");
    if (eq == std::string_view::npos) throw fail("missing parts=");
    std::size_t i = eq + 6;
    std::vector<int> parts;
    while (i < line.size() && line[i] != ';') {
        if (std::isdigit(static_cast<unsigned char>(line[i]))) {
            int v = 0;
            while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i])))
                v = v * 10 + (line[i++] - '0');
            parts.push_back(v);
        } else if (line[i] == ',' || std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        } else {
            throw fail("bad parts list");
        }
    }
    SimplexProduct p(parts);
    std::vector<BitVec> colors(static_cast<std::size_t>(p.facet_count()));
    std::vector<bool> seen(static_cast<std::size_t>(p.facet_count()), false);
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ';' || std::isspace(static_cast<unsigned char>(line[i]))))
            ++i;
        if (i >= line.size()) break;
        if (line[i] != '(') throw fail("expected a facet key");
        ++i;
        auto read_int = [&]() {
            if (i >= line.size() || !std::isdigit(static_cast<unsigned char>(line[i])))
                throw fail("expected a number");
            int v = 0;
            while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i])))
                v = v * 10 + (line[i++] - '0');
            return v;
        };
        const int part = read_int();
        if (i >= line.size() || line[i] != ',') throw fail("expected ','");
        ++i;
        const int index = read_int();
        if (i >= line.size() || line[i] != ')') throw fail("expected ')'");
        ++i;
        if (i >= line.size() || line[i] != '=') throw fail("expected '='");
        ++i;
        if (i >= line.size() || line[i] != '#') throw fail("expected '#'");
        ++i;
        std::string bits;
        while (i < line.size() && (line[i] == '0' || line[i] == '1')) bits.push_back(line[i++]);
        if (static_cast<int>(bits.size()) != n) throw fail("bitstring length differs from n");
        if (part < 0 || part >= static_cast<int>(parts.size()) || index < 0 ||
            index > parts[static_cast<std::size_t>(part)])
            throw fail("facet key out of range");
        const int ordinal = p.ordinal({part, index});
        colors[static_cast<std::size_t>(ordinal)] = BitVec::from_bits(bits);
        seen[static_cast<std::size_t>(ordinal)] = true;
    }
    for (bool s : seen)
        if (!s) throw fail("a facet is missing its color");
    return {std::move(p), PolytopeColoring{std::move(colors)}};
}

std::string graph_to_json(const ColoredGraph& g) {
    nlohmann::json j;
    j["n"] = g.dim();
    j["vertices"] = nlohmann::json::array();
    for (int v = 0; v < g.vertex_count(); ++v) j["vertices"].push_back({{"id", v}});
    j["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges())
        j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"color", e.color.to_bits()}});
    return j.dump(2);
}

ColoredGraph graph_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), static_cast<std::size_t>(e.byte));
    }
    const int n = j.at("n").get<int>();
    const int vcount = static_cast<int>(j.at("vertices").size());
    std::vector<GraphEdge> edges;
    for (const auto& e : j.at("edges"))
        edges.push_back({e.at("u").get<int>(), e.at("v").get<int>(),
                         BitVec::from_bits(e.at("color").get<std::string>())});
    return ColoredGraph::from_edges(n, vcount, edges);
}

std::string graph_to_dot(const ColoredGraph& g) {
    std::ostringstream out;
    out << "graph colored {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "  v" << v << " [label=\"" << serialize(g.vertex_monomial(v)) << "\"];\n";
    for (const auto& e : g.edges())
        out << "  v" << e.u << " -- v" << e.v << " [label=\"" << e.color.to_bits() << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace cobord
