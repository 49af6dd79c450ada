// Command-line frontend: expression parsing, file ingestion, and dispatch
// into the library.  Exit codes: 0 success, 1 a computed verdict is
// negative (not a class, table fails, certified non-member, ...),
// 2 malformed input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cobord/cobordism.hpp"
#include "cobord/diffop.hpp"
#include "cobord/dks.hpp"
#include "cobord/graph.hpp"
#include "cobord/io.hpp"

namespace {

using namespace cobord;

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitInput = 2;

struct Output {
    std::string path;  // empty: stdout
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (text.empty() || text.back() != '\n') std::cout << '\n';
            return;
        }
        std::ofstream out(path);
        if (!out) throw Error("cannot open output file " + path);
        out << text;
        if (text.empty() || text.back() != '\n') out << '\n';
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

DimMethod parse_method(const std::string& name) {
    if (name == "generators") return DimMethod::generators;
    if (name == "polytopes") return DimMethod::polytopes;
    throw Error("unknown method '" + name + "'");
}

int legend_dim(const std::string& legend) {
    if (legend == "n3") return 3;
    if (legend == "n4") return 4;
    throw Error("unknown legend '" + legend + "' (use n3 or n4)");
}

nlohmann::json table_report_json(const TableReport& r) {
    nlohmann::json j;
    j["count"] = r.count;
    j["independent"] = r.independent;
    j["span_dim"] = r.span_dim;
    j["matches_dim_Vn"] = r.matches_dim_vn;
    if (r.first_dependency)
        j["first_dependency"] = *r.first_dependency;
    else
        j["first_dependency"] = nullptr;
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"Equivariant cobordism of 2-torus manifolds from fixed-point data"};
    app.require_subcommand(1);

    int n = 0;
    std::string method = "generators";
    std::string legend;
    std::string format;
    int max_degree = 4;
    Output out;

    std::string poly_text, second_text, file_path;

    auto* dual_cmd = app.add_subcommand("dual", "Dual polynomial of a faithful polynomial");
    dual_cmd->add_option("--n", n, "ambient dimension")->required();
    dual_cmd->add_option("--out", out.path, "write to file");
    dual_cmd->add_option("poly", poly_text, "polynomial expression")->required();

    auto* d_cmd = app.add_subcommand("d", "Apply the deletion operator");
    d_cmd->add_option("--n", n, "ambient dimension")->required();
    d_cmd->add_option("--out", out.path, "write to file");
    d_cmd->add_option("poly", poly_text, "polynomial expression")->required();

    auto* class_cmd = app.add_subcommand("is-class", "Decide membership in Im phi_n");
    class_cmd->add_option("--n", n, "ambient dimension")->required();
    class_cmd->add_option("--out", out.path, "write to file");
    class_cmd->add_option("poly", poly_text, "polynomial expression")->required();

    auto* graph_cmd = app.add_subcommand("graph", "Build the witness colored graph");
    graph_cmd->add_option("--n", n, "ambient dimension")->required();
    graph_cmd->add_option("--format", format, "dot or json")->default_val("json");
    graph_cmd->add_option("--out", out.path, "write to file");
    graph_cmd->add_option("poly", poly_text, "polynomial expression")->required();

    auto* dim_cmd = app.add_subcommand("dim", "Dimension of V_n");
    dim_cmd->add_option("--n", n, "ambient dimension")->required();
    dim_cmd->add_option("--method", method, "generators or polytopes");
    dim_cmd->add_option("--out", out.path, "also write the basis polynomials");

    auto* dec_cmd = app.add_subcommand("decompose", "Coordinates over the V_n* basis");
    dec_cmd->add_option("--n", n, "ambient dimension")->required();
    dec_cmd->add_option("--method", method, "generators or polytopes");
    dec_cmd->add_option("--out", out.path, "write to file");
    dec_cmd->add_option("poly", poly_text, "cocharacter polynomial")->required();

    auto* table_cmd = app.add_subcommand("verify-table", "Verify a generator table file");
    table_cmd->add_option("--legend", legend, "n3 or n4")->required();
    table_cmd->add_option("--out", out.path, "write to file");
    table_cmd->add_option("file", file_path, "table file")->required();

    auto* dks_cmd = app.add_subcommand("check-dks", "Localization integrality up to a degree");
    dks_cmd->add_option("--n", n, "ambient dimension")->required();
    dks_cmd->add_option("--max-degree", max_degree, "largest symmetric-function degree");
    dks_cmd->add_option("--out", out.path, "write to file");
    dks_cmd->add_option("poly", poly_text, "polynomial expression")->required();

    auto* prism_cmd = app.add_subcommand("prism-path", "Prism chain between basis monomials");
    prism_cmd->add_option("--n", n, "ambient dimension")->required();
    prism_cmd->add_option("--format", format, "text or json")->default_val("text");
    prism_cmd->add_option("--out", out.path, "write to file");
    prism_cmd->add_option("from", poly_text, "first monomial")->required();
    prism_cmd->add_option("to", second_text, "second monomial")->required();

    CLI11_PARSE(app, argc, argv);

    if (dual_cmd->parsed()) {
        const Polynomial g = parse_polynomial(poly_text, n, Side::character);
        out.write(serialize(dual_polynomial(g)));
        return kExitOk;
    }

    if (d_cmd->parsed()) {
        const Polynomial p = parse_polynomial(poly_text, n, Side::cocharacter);
        out.write(serialize(d(p)));
        return kExitOk;
    }

    if (class_cmd->parsed()) {
        const Polynomial g = parse_polynomial(poly_text, n, Side::character);
        const bool member = is_cobordism_class(g);
        out.write(member ? "true" : "false");
        return member ? kExitOk : kExitVerdict;
    }

    if (graph_cmd->parsed()) {
        const Polynomial g = parse_polynomial(poly_text, n, Side::character);
        const ColoredGraph graph = from_polynomial(g);
        const auto report = validate(graph);
        if (!report.ok) throw Error("constructed graph failed validation: " + report.diagnostic);
        if (format == "dot")
            out.write(graph_to_dot(graph));
        else if (format == "json")
            out.write(graph_to_json(graph));
        else
            throw Error("unknown format '" + format + "'");
        return kExitOk;
    }

    if (dim_cmd->parsed()) {
        const DimResult result = dim_Vn(n, parse_method(method));
        if (!out.path.empty()) {
            std::string lines;
            for (const auto& row : result.basis.rows())
                lines += serialize(result.space.to_polynomial(row)) + "\n";
            out.write(lines);
        }
        std::cout << result.dimension << "\n";
        return kExitOk;
    }

    if (dec_cmd->parsed()) {
        const Polynomial gstar = parse_polynomial(poly_text, n, Side::cocharacter);
        const DimResult result = dim_Vn(n, parse_method(method));
        const auto coords = decompose(gstar, result.space, result.basis);
        nlohmann::json j;
        j["in_span"] = coords.has_value();
        if (coords) {
            auto arr = nlohmann::json::array();
            for (std::size_t i = 0; i < coords->size(); ++i)
                if ((*coords)[i]) arr.push_back(i);
            j["coords"] = arr;
        } else {
            j["coords"] = nullptr;
        }
        out.write(j.dump(2));
        return coords ? kExitOk : kExitVerdict;
    }

    if (table_cmd->parsed()) {
        const int dim = legend_dim(legend);
        const auto rows = parse_table(read_file(file_path), dim);
        const TableReport report = verify_table(rows, dim);
        out.write(table_report_json(report).dump(2));
        const bool good = report.independent && report.matches_dim_vn && report.rows_in_kernel &&
                          report.rows_faithful_dual;
        return good ? kExitOk : kExitVerdict;
    }

    if (dks_cmd->parsed()) {
        const Polynomial g = parse_polynomial(poly_text, n, Side::character);
        const DksReport report = check_up_to_degree(g, max_degree);
        nlohmann::json j;
        j["degree_checked"] = report.degree_checked;
        j["results"] = nlohmann::json::array();
        for (const auto& r : report.results)
            j["results"].push_back({{"mu", r.partition}, {"polynomial", r.polynomial}});
        j["certified_nonmember"] = report.certified_nonmember;
        out.write(j.dump(2));
        return report.certified_nonmember ? kExitVerdict : kExitOk;
    }

    if (prism_cmd->parsed()) {
        const Polynomial p1 = parse_polynomial(poly_text, n, Side::cocharacter);
        const Polynomial p2 = parse_polynomial(second_text, n, Side::cocharacter);
        if (p1.term_count() != 1 || p2.term_count() != 1)
            throw Error("prism-path expects single monomials");
        const auto prisms = prism_path(p1.monomials()[0], p2.monomials()[0]);
        if (format == "json") {
            auto arr = nlohmann::json::array();
            for (const auto& cp : prisms) {
                nlohmann::json j;
                j["parts"] = cp.polytope.parts();
                auto facets = nlohmann::json::array();
                for (int f = 0; f < cp.polytope.facet_count(); ++f) {
                    const auto facet = cp.polytope.facet(f);
                    facets.push_back({{"part", facet.part},
                                      {"index", facet.index},
                                      {"color", cp.coloring.colors[static_cast<std::size_t>(f)]
                                                    .to_bits()}});
                }
                j["facets"] = facets;
                arr.push_back(j);
            }
            out.write(arr.dump(2));
        } else {
            std::string lines;
            for (const auto& cp : prisms) lines += serialize_colored_polytope(cp) + "\n";
            out.write(lines);
        }
        return kExitOk;
    }

    return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.position << ": " << e.what() << "\n";
        return kExitInput;
    } catch (const NotFaithful& e) {
        std::cerr << e.what() << "\n";
        return kExitVerdict;
    } catch (const BoundaryNonzero& e) {
        std::cerr << e.what() << "\n";
        return kExitVerdict;
    } catch (const NotABasis& e) {
        std::cerr << e.what() << "\n";
        return kExitVerdict;
    } catch (const NotACycle& e) {
        std::cerr << e.what() << "\n";
        return kExitVerdict;
    } catch (const NotSquarefree& e) {
        std::cerr << e.what() << "\n";
        return kExitVerdict;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    }
}
