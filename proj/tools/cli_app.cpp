#include "cli_app.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nestdig/construct.hpp"
#include "nestdig/digraph.hpp"
#include "nestdig/edgelist.hpp"
#include "nestdig/model.hpp"
#include "nestdig/ordering.hpp"
#include "nestdig/pattern.hpp"
#include "nestdig/recognize.hpp"

namespace nestdig::cli {

namespace {

using nlohmann::json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Digraph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open edge list: " + path);
    try {
        return parse_edge_list(in);
    } catch (const EdgeListParseError& e) {
        throw InputError(path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(path + ": " + e.what());
    }
}

IntervalModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open model: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
    try {
        return model_from_json(j);
    } catch (const ModelParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Ordering parse_order(const std::string& spec, int n) {
    std::vector<int> seq;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used;
            int v = std::stoi(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
            seq.push_back(v);
        } catch (const std::exception&) {
            throw InputError("bad order entry: \"" + item + "\"");
        }
    }
    if (static_cast<int>(seq.size()) != n)
        throw InputError("order lists " + std::to_string(seq.size()) +
                         " vertices, digraph has " + std::to_string(n));
    try {
        return Ordering(seq);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

std::string to_internal_class(std::string name) {
    for (char& ch : name)
        if (ch == '-')
            ch = '_';
    return name;
}

json report_to_json(const OrderingReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"rule", v.rule}, {"witness", v.witness}});
    return json{{"ok", r.ok}, {"violations", violations}};
}

json ordering_to_json(const Ordering& ord) { return json(ord.sequence()); }

json certificate_to_json(const Certificate& c) {
    json j;
    j["verdict"] = c.member ? "member" : "non-member";
    j["ordering"] = c.ordering ? ordering_to_json(*c.ordering) : json();
    j["model"] = c.model ? model_to_json(*c.model) : json();
    j["refutation"] = c.refutation;
    return j;
}

int cmd_check_ordering(const std::string& path, const std::string& order_spec,
                       const std::string& cls, std::ostream& out,
                       std::ostream& err) {
    Digraph d = load_edge_list(path);
    Ordering ord = parse_order(order_spec, d.n());
    OrderingReport report;
    if (cls.empty()) {
        try {
            report = check_nest_ordering(d, ord);
        } catch (const NotReflexiveError& e) {
            err << e.what() << "\n";
            out << json{{"ok", false},
                        {"violations", json::array()},
                        {"error", e.what()}}
                << "\n";
            return 1;
        }
    } else {
        report = check_pattern_free(d, ord, catalog_by_class(to_internal_class(cls)));
    }
    out << report_to_json(report) << "\n";
    err << (report.ok ? "ordering ok" : "ordering has violations") << "\n";
    return report.ok ? 0 : 1;
}

int cmd_build_model(const std::string& path, const std::string& order_spec,
                    std::ostream& out, std::ostream& err) {
    Digraph d = load_edge_list(path);
    Ordering ord = parse_order(order_spec, d.n());
    try {
        IntervalModel m = build_model(d, ord);
        out << model_to_json(m) << "\n";
        err << "built nest model for " << d.n() << " vertices\n";
        return 0;
    } catch (const NotNestOrderingError& e) {
        out << json{{"error", "not a nest ordering"},
                    {"report", report_to_json(e.report)}}
            << "\n";
        err << "refused: ordering is not a nest ordering\n";
        return 1;
    } catch (const NotReflexiveError& e) {
        out << json{{"error", e.what()}} << "\n";
        err << "refused: " << e.what() << "\n";
        return 1;
    }
}

int cmd_verify_model(const std::string& model_path, const std::string& against,
                     std::ostream& out, std::ostream& err) {
    IntervalModel m = load_model(model_path);
    Digraph d = load_edge_list(against);
    if (m.n() != d.n())
        throw InputError("model has " + std::to_string(m.n()) +
                         " vertices, digraph has " + std::to_string(d.n()));
    RealizationReport rr = realizes(m, d);
    json mismatches = json::array();
    for (const auto& mm : rr.mismatches)
        mismatches.push_back({{"u", mm.u},
                              {"v", mm.v},
                              {"kind", mm.arc_without_intersection
                                           ? "arc-without-intersection"
                                           : "intersection-without-arc"}});
    json shapes = json::array();
    for (Shape s : shape_of(m))
        shapes.push_back(shape_name(s));
    out << json{{"ok", rr.ok},
                {"mismatches", mismatches},
                {"shapes", shapes},
                {"positive_length", all_positive(m)}}
        << "\n";
    err << (rr.ok ? "model realizes the digraph" : "realization mismatches found")
        << "\n";
    return rr.ok ? 0 : 1;
}

int cmd_extract_ordering(const std::string& model_path, std::ostream& out,
                         std::ostream& err) {
    IntervalModel m = load_model(model_path);
    try {
        ExtractedOrdering ex = extract_ordering(m);
        json points = json::array();
        for (const Rational& p : ex.points)
            points.push_back(p.str());
        out << json{{"ordering", ordering_to_json(ex.ordering)},
                    {"points", points}}
            << "\n";
        return 0;
    } catch (const NotNestModelError& e) {
        out << json{{"error", e.what()}} << "\n";
        err << "refused: " << e.what() << "\n";
        return 1;
    }
}

int cmd_recognize(const std::string& path, std::ostream& out, std::ostream& err) {
    Digraph d = load_edge_list(path);
    Certificate cert = is_interval_nest(d);
    out << certificate_to_json(cert) << "\n";
    err << (cert.member ? "member" : "non-member") << "\n";
    return cert.member ? 0 : 1;
}

int cmd_classify(const std::string& path, std::ostream& out, std::ostream& err) {
    Digraph d = load_edge_list(path);
    ClassReport report = classify(d);
    json classes;
    for (const auto& [cls, adm] : report.classes)
        classes[cls] = {{"admitted", adm.admitted},
                        {"ordering", adm.witness ? ordering_to_json(*adm.witness)
                                                 : json()}};
    out << json{{"classes", classes}} << "\n";
    err << "classified against " << report.classes.size() << " catalogs\n";
    return 0;
}

int cmd_census(int n, bool reflexive, std::ostream& out, std::ostream& err) {
    CensusResult result = census(n, reflexive);
    out << json{{"n", result.n},
                {"reflexive", result.reflexive_only},
                {"total", result.total},
                {"admitted", result.admitted},
                {"nest_agreement", result.nest_agreement}}
        << "\n";
    err << "census over " << result.total << " digraphs\n";
    for (const auto& [cls, count] : result.admitted)
        err << "  " << cls << ": " << count << "\n";
    return 0;
}

int cmd_gen(int n, double p, std::uint64_t seed, bool reflexive,
            std::ostream& out) {
    out << format_edge_list(random_digraph(n, p, seed, reflexive));
    return 0;
}

int cmd_separate(const std::string& from, const std::string& to, int n,
                 std::ostream& out, std::ostream& err) {
    auto d = find_separating_example(to_internal_class(from),
                                     to_internal_class(to), n);
    if (d) {
        out << format_edge_list(*d);
        err << "separating example with " << d->arcs().size() << " arcs\n";
    } else {
        out << "none\n";
        err << "no separating example at n <= " << n << "\n";
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"interval nest digraph toolkit"};
    app.require_subcommand(1);

    std::string edgelist, model_path, order_spec, cls, from_cls, to_cls;
    int n = 4;
    double p = 0.5;
    std::uint64_t seed = 0;
    bool reflexive = false;

    auto* check = app.add_subcommand("check-ordering",
                                     "check an ordering against a class");
    check->add_option("edgelist", edgelist)->required();
    check->add_option("--order", order_spec)->required();
    check->add_option("--class", cls);

    auto* build = app.add_subcommand("build-model",
                                     "construct a nest model from an ordering");
    build->add_option("edgelist", edgelist)->required();
    build->add_option("--order", order_spec)->required();

    auto* verify = app.add_subcommand("verify-model",
                                      "check a model against an edge list");
    verify->add_option("model", model_path)->required();
    verify->add_option("--against", edgelist)->required();

    auto* extract = app.add_subcommand("extract-ordering",
                                       "nest ordering from a nest model");
    extract->add_option("model", model_path)->required();

    auto* recog = app.add_subcommand("recognize",
                                     "certified interval-nest decision");
    recog->add_option("edgelist", edgelist)->required();

    auto* cls_cmd = app.add_subcommand("classify",
                                       "per-class ordering existence report");
    cls_cmd->add_option("edgelist", edgelist)->required();

    auto* census_cmd = app.add_subcommand("census", "exhaustive class counts");
    census_cmd->add_option("--n", n)->required();
    census_cmd->add_flag("--reflexive", reflexive);

    auto* gen = app.add_subcommand("gen", "seeded random digraph");
    gen->add_option("--n", n)->required();
    gen->add_option("--p", p);
    gen->add_option("--seed", seed);
    gen->add_flag("--reflexive", reflexive);

    auto* sep = app.add_subcommand("separate",
                                   "smallest digraph in one class, not another");
    sep->add_option("--from", from_cls)->required();
    sep->add_option("--to", to_cls)->required();
    sep->add_option("--n", n)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        err << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "argument error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*check)
            return cmd_check_ordering(edgelist, order_spec, cls, out, err);
        if (*build)
            return cmd_build_model(edgelist, order_spec, out, err);
        if (*verify)
            return cmd_verify_model(model_path, edgelist, out, err);
        if (*extract)
            return cmd_extract_ordering(model_path, out, err);
        if (*recog)
            return cmd_recognize(edgelist, out, err);
        if (*cls_cmd)
            return cmd_classify(edgelist, out, err);
        if (*census_cmd)
            return cmd_census(n, reflexive, out, err);
        if (*gen)
            return cmd_gen(n, p, seed, reflexive, out);
        if (*sep)
            return cmd_separate(from_cls, to_cls, n, out, err);
    } catch (const BoundError& e) {
        err << "bound exceeded: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace nestdig::cli
