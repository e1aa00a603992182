#include "sg/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sg/canonical.hpp"
#include "sg/dsverify.hpp"
#include "sg/expr.hpp"
#include "sg/graph6.hpp"
#include "sg/numeric.hpp"
#include "sg/spectrum.hpp"
#include "sg/theorems.hpp"

namespace sg {

namespace {

using Json = nlohmann::ordered_json;

std::optional<MulticoneParams> family_of(const CommandRequest& request) {
    if (request.family) {
        int r, s, t;
        char c1, c2;
        std::istringstream in(*request.family);
        if (!(in >> r >> c1 >> s >> c2 >> t) || c1 != ',' || c2 != ',' || !in.eof() ||
            r < 1 || s < 1 || t < 1)
            throw precondition_error("--family expects r,s,t with positive integers");
        return MulticoneParams{r, s, t};
    }
    if (request.expr) {
        GraphExpr e = parse_graph_expression(*request.expr);
        if (e.kind == GraphExpr::Kind::Multicone)
            return MulticoneParams{e.params[0], e.params[1], e.params[2]};
        if (e.kind == GraphExpr::Kind::Friendship)
            return MulticoneParams{1, e.params[0], 2};
    }
    return std::nullopt;
}

Graph graph_of(const CommandRequest& request) {
    int sources = (request.expr ? 1 : 0) + (request.graph6 ? 1 : 0) +
                  (request.family ? 1 : 0);
    if (sources != 1)
        throw precondition_error("exactly one of --graph, --graph6, --family required");
    if (request.expr)
        return evaluate_expression(parse_graph_expression(*request.expr));
    if (request.graph6) return graph6_decode(*request.graph6);
    auto fam = family_of(request);
    return build_multicone(*fam);
}

Json spectrum_json(const Spectrum& s) {
    Json arr = Json::array();
    for (const auto& e : s.entries()) {
        arr.push_back(Json{{"p", e.value.p()},
                           {"c", e.value.c()},
                           {"d", e.value.d()},
                           {"q", e.value.q()},
                           {"mult", e.multiplicity}});
    }
    return arr;
}

Json ds_report_json(const DSReport& r, bool timing) {
    Json mates = Json::array();
    for (const auto& m : r.mates) mates.push_back(m);
    return Json{{"target", r.target},
                {"kind", matrix_kind_name(r.kind)},
                {"order", r.order},
                {"enumerated", r.enumerated},
                {"mates", mates},
                {"verdict", r.determined ? "determined" : "not-determined"},
                {"seconds", timing ? r.seconds : 0.0}};
}

Json census_json(const CensusReport& r, bool timing) {
    Json classes = Json::array();
    for (const auto& cls : r.nontrivial) {
        Json members = Json::array();
        for (const auto& m : cls.members) members.push_back(m);
        Json coeffs = Json::array();
        for (const auto& c : cls.coeffs) coeffs.push_back(c);
        classes.push_back(Json{{"poly", coeffs}, {"members", members}});
    }
    return Json{{"order", r.order},
                {"kind", matrix_kind_name(r.kind)},
                {"classes", r.total_classes},
                {"nontrivial", classes},
                {"not_determined", r.not_determined},
                {"fraction", std::to_string(r.not_determined) + "/" +
                                 std::to_string(r.total_classes)},
                {"seconds", timing ? r.seconds : 0.0}};
}

int run_spec(const CommandRequest& request, std::ostream& out) {
    Graph g = graph_of(request); // validates that exactly one source is given
    auto fam = family_of(request);
    bool closed_form =
        fam && (request.kind == MatrixKind::Adjacency || request.kind == MatrixKind::Laplacian);
    IntPoly poly = char_poly(g, request.kind);
    auto numeric = numeric_spectrum(g, request.kind, request.tol);

    std::optional<Spectrum> exact;
    if (closed_form)
        exact = (request.kind == MatrixKind::Adjacency)
                    ? multicone_adjacency_spectrum(*fam)
                    : multicone_laplacian_spectrum(*fam);

    if (request.format == "json") {
        Json j{{"order", g.order()},
               {"kind", matrix_kind_name(request.kind)},
               {"poly", poly.to_decimal()}};
        if (exact) j["spectrum"] = spectrum_json(*exact);
        Json nums = Json::array();
        for (double v : numeric) nums.push_back(v);
        j["numeric"] = nums;
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "order: " << g.order() << "  kind: " << matrix_kind_name(request.kind)
        << "\n";
    out << "char poly: " << poly.to_display() << "\n";
    if (exact) out << "spectrum: " << exact->to_text() << "\n";
    out << "numeric:";
    char buf[64];
    for (double v : numeric) {
        std::snprintf(buf, sizeof buf, " %.9f", v);
        out << buf;
    }
    out << "\n";
    return 0;
}

int run_mates(const CommandRequest& request, std::ostream& out) {
    Graph g = graph_of(request);
    DSReport report = verify_ds(g, request.kind, request.connected_only);
    if (request.format == "json") {
        out << ds_report_json(report, request.timing).dump(2) << "\n";
        return 0;
    }
    if (report.mates.empty()) {
        out << "no cospectral mates (" << matrix_kind_name(request.kind) << ", order "
            << report.order << ", " << report.enumerated << " candidates)\n";
    } else {
        out << report.mates.size() << " mate(s):\n";
        for (const auto& m : report.mates) out << "  " << m << "\n";
    }
    return 0;
}

int run_verify_ds(const CommandRequest& request, std::ostream& out) {
    Graph g = graph_of(request);
    DSReport report = verify_ds(g, request.kind, request.connected_only);
    if (request.format == "json") {
        out << ds_report_json(report, request.timing).dump(2) << "\n";
        return 0;
    }
    out << "target " << report.target << " kind " << matrix_kind_name(report.kind)
        << " order " << report.order << ": "
        << (report.determined ? "determined" : "not-determined");
    if (!report.mates.empty()) {
        out << " (mates:";
        for (const auto& m : report.mates) out << " " << m;
        out << ")";
    }
    out << "\n";
    return 0;
}

int run_census(const CommandRequest& request, std::ostream& out) {
    if (request.order < 1)
        throw precondition_error("census requires --order");
    CensusReport report = cospectral_census(request.order, request.kind);
    if (request.format == "json") {
        out << census_json(report, request.timing).dump(2) << "\n";
        return 0;
    }
    out << "order " << report.order << " kind " << matrix_kind_name(report.kind) << ": "
        << report.total_classes << " classes, " << report.nontrivial.size()
        << " nontrivial, fraction " << report.not_determined << "/"
        << report.total_classes << "\n";
    for (const auto& cls : report.nontrivial) {
        out << "  class:";
        for (const auto& m : cls.members) out << " " << m;
        out << "\n";
    }
    return 0;
}

int run_probe(const CommandRequest& request, std::ostream& out) {
    Graph g = graph_of(request);
    DegreeProfile prof = degree_profile(g);
    StructuralProbe probe = structural_probe(g);
    OnePositiveReport onepos = one_positive_eigenvalue_check(g);
    JoinDetectReport join = join_detect_check(g);
    ThreeEigenvalueReport three = three_eigenvalue_check(g, request.tol);
    std::optional<BoundReport> bound;
    if (probe.connected) bound = check_bound(g, request.tol);

    if (request.format == "json") {
        Json j{{"order", g.order()},
               {"edges", g.edge_count()},
               {"degrees", prof.degree_multiset},
               {"regular", prof.regular},
               {"biregular", prof.biregular},
               {"connected", probe.connected},
               {"bipartite", probe.bipartite},
               {"diameter", probe.diameter ? Json(*probe.diameter) : Json("inf")},
               {"is_join", probe.is_join},
               {"complete_multipartite_plus_isolated",
                probe.complete_multipartite_plus_isolated},
               {"parts", probe.part_sizes},
               {"isolated", probe.isolated_count},
               {"one_positive_spectral", onepos.spectral},
               {"one_positive_structural", onepos.structural},
               {"order_is_laplacian_eigenvalue", join.order_is_laplacian_eigenvalue}};
        if (bound) {
            j["bound"] = bound->bound.to_string();
            j["rho"] = bound->rho;
            j["bound_equality"] = bound->equality;
        }
        if (three.applies) {
            j["three_eigenvalue"] = Json{{"diameter_two", three.diameter_two},
                                         {"theta2", three.theta2},
                                         {"theta3", three.theta3}};
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "order " << g.order() << ", edges " << g.edge_count() << ", degrees [";
    for (std::size_t i = 0; i < prof.degree_multiset.size(); ++i)
        out << (i ? " " : "") << prof.degree_multiset[i];
    out << "]\n";
    out << "connected " << probe.connected << ", bipartite " << probe.bipartite
        << ", diameter "
        << (probe.diameter ? std::to_string(*probe.diameter) : std::string("inf"))
        << ", join " << probe.is_join << "\n";
    out << "complete multipartite + isolated: "
        << probe.complete_multipartite_plus_isolated << "\n";
    if (bound)
        out << "spectral radius " << bound->rho << " <= bound "
            << bound->bound.to_string() << (bound->equality ? " (equality)" : "")
            << "\n";
    out << "one positive eigenvalue: spectral " << onepos.spectral << ", structural "
        << onepos.structural << "\n";
    out << "order is a Laplacian eigenvalue: " << join.order_is_laplacian_eigenvalue
        << "\n";
    if (three.applies)
        out << "three distinct eigenvalues: theta2 " << three.theta2 << ", theta3 "
            << three.theta3 << "\n";
    return 0;
}

int run_sweep(const CommandRequest& request, std::ostream& out) {
    if (request.order < 1)
        throw precondition_error("sweep requires --order");
    SweepSummary summary =
        theorem_sweep(request.order, request.format == "json", request.tol);
    if (request.format == "json") {
        Json records = Json::array();
        for (const auto& rec : summary.records) {
            Json item{{"graph6", rec.graph6},
                      {"connected", rec.connected},
                      {"one_positive", rec.one_positive_ok},
                      {"regularity", rec.regularity_ok},
                      {"bipartite_equivalences", rec.bipartite_ok},
                      {"join_eigenvalue", rec.join_flag_ok},
                      {"radius_bound", rec.bound_ok},
                      {"three_eigenvalue", rec.three_eigenvalue_ok},
                      {"rho", rec.rho}};
            if (rec.bound) item["bound"] = *rec.bound;
            if (rec.theta2) item["theta2"] = *rec.theta2;
            if (rec.theta3) item["theta3"] = *rec.theta3;
            records.push_back(std::move(item));
        }
        Json j{{"order", summary.order},
               {"graphs", summary.graphs},
               {"violations", summary.violations},
               {"records", records}};
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "order " << summary.order << ": " << summary.graphs << " graphs, "
        << summary.violations << " violations\n";
    return 0;
}

int run_convert(const CommandRequest& request, std::ostream& out) {
    Graph g = graph_of(request);
    if (request.format == "dot") {
        out << dot_export(g);
        return 0;
    }
    if (request.format == "json") {
        Json j{{"order", g.order()},
               {"edges", g.edge_count()},
               {"graph6", graph6_encode(g)},
               {"canonical", canonical_key(g)}};
        out << j.dump(2) << "\n";
        return 0;
    }
    out << graph6_encode(g) << "\n";
    return 0;
}

} // namespace

int run(const CommandRequest& request, std::ostream& out, std::ostream& err) {
    set_progress_logging(request.progress);
    if (request.format == "dot" && request.subcommand != "convert") {
        err << "dot output is only available for graph payloads (convert)\n";
        return 2;
    }
    try {
        if (request.subcommand == "spec") return run_spec(request, out);
        if (request.subcommand == "mates") return run_mates(request, out);
        if (request.subcommand == "verify-ds") return run_verify_ds(request, out);
        if (request.subcommand == "census") return run_census(request, out);
        if (request.subcommand == "probe") return run_probe(request, out);
        if (request.subcommand == "sweep") return run_sweep(request, out);
        if (request.subcommand == "convert") return run_convert(request, out);
        err << "unknown subcommand: " << request.subcommand << "\n";
        return 2;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const decode_error& e) {
        err << "decode error: " << e.what() << "\n";
        return 1;
    } catch (const capacity_error& e) {
        err << "capacity error: " << e.what() << "\n";
        return 1;
    } catch (const precondition_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact spectral toolkit for multicone-style graph families"};
    app.require_subcommand(1);

    CommandRequest request;
    std::string kind = "adjacency";
    bool json = false, dot = false;

    auto add_common = [&](CLI::App* sub, bool graph_source, bool takes_order) {
        if (graph_source) {
            sub->add_option("--graph", request.expr,
                            "graph expression, e.g. \"K2 v 3*K3\"");
            sub->add_option("--graph6", request.graph6, "graph6 string");
            sub->add_option("--family", request.family, "multicone r,s,t");
        }
        if (takes_order) sub->add_option("--order", request.order, "graph order");
        sub->add_option("--kind", kind, "adjacency | laplacian | signless");
        sub->add_flag("--connected", request.connected_only,
                      "restrict searches to connected graphs");
        sub->add_flag("--json", json, "JSON output");
        sub->add_option("--tol", request.tol, "numeric tolerance");
        sub->add_flag("--timing", request.timing, "include wall-clock seconds");
        sub->add_flag("--progress", request.progress,
                      "log search progress to standard error");
    };

    add_common(app.add_subcommand("spec", "exact and numeric spectrum"), true, false);
    add_common(app.add_subcommand("mates", "cospectral mate search"), true, false);
    add_common(app.add_subcommand("verify-ds", "spectral determination check"), true,
               false);
    add_common(app.add_subcommand("census", "cospectral census of an order"), false,
               true);
    add_common(app.add_subcommand("probe", "structure and theorem probes"), true, false);
    add_common(app.add_subcommand("sweep", "theorem sweep over an order"), false, true);
    auto* convert = app.add_subcommand("convert", "format translation");
    add_common(convert, true, false);
    convert->add_flag("--dot", dot, "DOT output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    request.subcommand = app.get_subcommands().front()->get_name();
    try {
        request.kind = matrix_kind_from_name(kind);
    } catch (const precondition_error& e) {
        err << e.what() << "\n";
        return 2;
    }
    if (json) request.format = "json";
    if (dot) request.format = "dot";
    return run(request, out, err);
}

} // namespace sg
