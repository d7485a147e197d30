// annigraph: annihilating-ideal graphs of finite commutative principal
// rings -- build and export AG(R), compute metric dimensions exactly,
// evaluate the closed-form dimension values/bounds, and sweep spec grids
// with every claim cross-checked against independent oracles.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "annigraph/constructions.hpp"
#include "annigraph/formulas.hpp"
#include "annigraph/graph.hpp"
#include "annigraph/metric_dim.hpp"
#include "annigraph/report.hpp"
#include "annigraph/ring.hpp"

namespace {

using namespace annigraph;

struct SpecInput {
    std::string spec_text;
    std::uint64_t modulus = 0;

    RingSpec resolve() const {
        if (!spec_text.empty()) return parse_spec(spec_text);
        return spec_from_modulus(modulus);
    }
};

// --spec 2,1 or --zn 12 (exactly one)
void add_spec_options(CLI::App* cmd, SpecInput& input) {
    auto* group = cmd->add_option_group("ring", "ring selection");
    group->add_option("--spec", input.spec_text,
                      "comma-separated chain-ring orders, e.g. 2,1");
    group->add_option("--zn", input.modulus, "modulus N for the ring Z/N");
    group->require_option(1);
}

std::size_t vertex_cap_from_env(std::size_t fallback) {
    if (const char* env = std::getenv("ANNIGRAPH_VERTEX_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        std::cerr << "warning: ignoring malformed ANNIGRAPH_VERTEX_CAP='"
                  << env << "'\n";
    }
    return fallback;
}

nlohmann::ordered_json bounds_json(const DimBounds& bounds) {
    nlohmann::ordered_json j;
    j["case"] = to_string(bounds.ring_case);
    j["beta"] = bounds.beta;
    j["epsilon"] = bounds.epsilon;
    j["lower"] = bounds.lower;
    j["upper"] = bounds.upper;
    if (bounds.exact) j["exact"] = *bounds.exact;
    return j;
}

std::string ideal_list(const std::vector<IdealVector>& ideals) {
    std::string out = "[";
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        if (i) out += ", ";
        out += to_string(ideals[i]);
    }
    return out + "]";
}

int cmd_info(const SpecInput& input, bool as_json) {
    const RingSpec spec = input.resolve();
    const DimBounds bounds = dim_bounds(spec);
    const std::uint64_t nv = vertex_count(spec);

    if (as_json) {
        nlohmann::ordered_json j;
        j["spec"] = spec.orders;
        j["factors"] = spec.factor_count();
        j["vertices"] = nv;
        j["bounds"] = bounds_json(bounds);
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "spec: " << to_string(spec) << "\n"
              << "factors: " << spec.factor_count()
              << "  fields (beta): " << bounds.beta
              << "  case: " << to_string(bounds.ring_case) << "\n"
              << "vertices: " << nv << "\n";
    if (bounds.exact)
        std::cout << "metric dimension: " << *bounds.exact << " (formula)\n";
    else
        std::cout << "metric dimension: in [" << bounds.lower << ", "
                  << bounds.upper << "] (formula bounds)\n";
    return 0;
}

int cmd_dim(const SpecInput& input, bool exact, bool construct,
            bool certificate, const std::string& oracle,
            std::size_t exact_cap, std::size_t vertex_cap, bool as_json) {
    const RingSpec spec = input.resolve();
    if (certificate) exact = true;

    AnalyzeOptions options;
    options.exact = exact;
    options.vertex_cap = vertex_cap;
    options.want_basis = true;
    options.oracle = oracle == "bfs" ? DistanceOracle::Bfs
                                     : DistanceOracle::ClosedForm;
    if (exact && vertex_count(spec) > exact_cap)
        throw std::length_error(
            "exact search needs at most " + std::to_string(exact_cap) +
            " vertices (got " + std::to_string(vertex_count(spec)) +
            "); raise --exact-cap to override");

    const DimReport report = analyze(spec, options);

    std::optional<ResolvingSetCertificate> cert;
    if (certificate) {
        const AgGraph graph = AgGraph::build(spec, vertex_cap);
        cert = is_resolving(graph, report.basis);
    }

    if (as_json) {
        nlohmann::ordered_json j;
        j["spec"] = spec.orders;
        j["vertices"] = report.vertices;
        j["edges"] = report.edges;
        j["bounds"] = bounds_json(report.bounds);
        if (report.exact_dimension) {
            j["exact_dimension"] = *report.exact_dimension;
            auto& basis = j["basis"] = nlohmann::ordered_json::array();
            for (const auto& b : report.basis) basis.push_back(b.exps);
        }
        if (construct) {
            j["constructed_size"] = report.constructed_size;
            j["constructed_resolves"] = report.constructed_resolves;
        }
        if (cert) j["certificate"] = nlohmann::ordered_json::parse(
            certificate_json(*cert));
        j["verdict"] = to_string(report.verdict);
        std::cout << j.dump(2) << '\n';
        return 0;
    }

    std::cout << "spec: " << to_string(spec)
              << "  case: " << to_string(report.bounds.ring_case)
              << "  vertices: " << report.vertices
              << "  edges: " << report.edges << "\n";
    if (report.bounds.exact)
        std::cout << "formula: exact " << *report.bounds.exact << "\n";
    else
        std::cout << "formula: bounds [" << report.bounds.lower << ", "
                  << report.bounds.upper << "]\n";
    if (construct)
        std::cout << "constructed resolving set: size "
                  << report.constructed_size << ", resolves "
                  << (report.constructed_resolves ? "true" : "false") << "  "
                  << ideal_list(construct_resolving_set(spec)) << "\n";
    if (report.exact_dimension)
        std::cout << "exact dimension: " << *report.exact_dimension
                  << "  basis: " << ideal_list(report.basis) << "\n";
    if (cert) std::cout << "certificate: " << certificate_json(*cert, 2)
                        << "\n";
    std::cout << "verdict: " << to_string(report.verdict) << "\n";
    return report.verdict == Verdict::Mismatch ? 1 : 0;
}

int cmd_graph(const SpecInput& input, const std::string& format,
              const std::string& out_path, std::size_t vertex_cap) {
    const RingSpec spec = input.resolve();
    const AgGraph graph = AgGraph::build(spec, vertex_cap);
    const GraphFormat fmt = format == "dot"   ? GraphFormat::Dot
                            : format == "csv" ? GraphFormat::Csv
                                              : GraphFormat::Json;
    if (out_path.empty()) {
        write_graph(graph, fmt, std::cout);
        return 0;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + out_path);
    write_graph(graph, fmt, os);
    return 0;
}

int cmd_distance(const SpecInput& input, const std::string& m_text,
                 const std::string& l_text) {
    const RingSpec spec = input.resolve();
    const IdealVector m = parse_ideal(spec, m_text);
    const IdealVector l = parse_ideal(spec, l_text);
    for (const IdealVector* ideal : {&m, &l}) {
        if (is_vertex(spec, *ideal)) continue;
        const bool whole_ring = *ideal == IdealVector{std::vector<int>(
                                              spec.orders.size(), 0)};
        throw std::invalid_argument(
            to_string(*ideal) + " is not a vertex: it is the " +
            (whole_ring ? "whole ring, whose annihilator is zero"
                        : "zero ideal, which AG(R) excludes"));
    }
    const int d = distance_closed_form(spec, m, l);
    std::cout << "d(" << to_string(m) << ", " << to_string(l) << ") = " << d
              << "  [" << to_string(distance_branch(spec, m, l)) << "]\n";
    return 0;
}

int cmd_verify(const VerifyOptions& options, const std::string& out_path) {
    const VerifyOutcome outcome = run_verify(options);

    if (out_path.empty()) {
        write_csv(outcome.rows, std::cout, options.timings);
    } else {
        std::ofstream os(out_path, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open " + out_path);
        write_csv(outcome.rows, os, options.timings);
    }

    std::cerr << "grid: " << outcome.tuples_in_grid << " tuples, "
              << outcome.specs_checked << " canonical specs within cap\n"
              << "distance pairs cross-checked: " << outcome.distance_pairs
              << "\nmismatches: " << outcome.failures.size() << "\n";
    for (const auto& failure : outcome.failures)
        std::cerr << "MISMATCH: " << failure << "\n";
    return outcome.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "annihilating-ideal graphs of finite commutative principal rings"};
    app.require_subcommand(1);

    const std::size_t default_cap = vertex_cap_from_env(kDefaultVertexCap);

    // info
    auto* info = app.add_subcommand("info", "ring summary and dimension formula");
    SpecInput info_input;
    add_spec_options(info, info_input);
    bool info_json = false;
    info->add_flag("--json", info_json, "machine-readable output");

    // dim
    auto* dim = app.add_subcommand("dim", "metric dimension of AG(R)");
    SpecInput dim_input;
    add_spec_options(dim, dim_input);
    bool dim_exact = false, dim_construct = false, dim_cert = false,
         dim_json = false;
    std::string dim_oracle = "closed";
    std::size_t exact_cap = 500;
    std::size_t dim_cap = default_cap;
    dim->add_flag("--exact", dim_exact, "run the exact solver");
    dim->add_flag("--construct", dim_construct,
                  "report the constructed resolving set");
    dim->add_flag("--certificate", dim_cert,
                  "emit the basis certificate as JSON (implies --exact)");
    dim->add_option("--oracle", dim_oracle,
                    "distance oracle for the solver: closed or bfs")
        ->check(CLI::IsMember({"closed", "bfs"}));
    dim->add_option("--exact-cap", exact_cap,
                    "largest vertex count accepted by --exact");
    dim->add_option("--vertex-cap", dim_cap, "graph size cap");
    dim->add_flag("--json", dim_json, "machine-readable output");

    // graph
    auto* graph = app.add_subcommand("graph", "export AG(R)");
    SpecInput graph_input;
    add_spec_options(graph, graph_input);
    std::string graph_format, graph_out;
    std::size_t graph_cap = default_cap;
    graph->add_option("--format", graph_format, "dot, csv or json")
        ->required()
        ->check(CLI::IsMember({"dot", "csv", "json"}));
    graph->add_option("--out", graph_out, "output path (default stdout)");
    graph->add_option("--vertex-cap", graph_cap, "graph size cap");

    // distance
    auto* distance =
        app.add_subcommand("distance", "distance between two ideals");
    SpecInput distance_input;
    add_spec_options(distance, distance_input);
    std::string m_text, l_text;
    distance->add_option("--m", m_text, "first ideal, e.g. 0,1")->required();
    distance->add_option("--l", l_text, "second ideal")->required();

    // verify
    auto* verify = app.add_subcommand(
        "verify", "sweep a spec grid and cross-check every claim");
    VerifyOptions verify_options;
    verify_options.vertex_cap = default_cap;
    std::string verify_out;
    verify->add_option("--max-factors", verify_options.max_factors,
                       "largest factor count in the grid");
    verify->add_option("--max-order", verify_options.max_order,
                       "largest chain-ring order in the grid");
    verify->add_option("--max-vertices", verify_options.max_vertices,
                       "skip specs with more vertices than this");
    verify->add_option("--threads", verify_options.threads,
                       "worker threads (output is identical at any count)");
    verify->add_flag("--timings", verify_options.timings,
                     "record wall times in the CSV (breaks byte-for-byte "
                     "reproducibility)");
    verify->add_option("--out", verify_out, "CSV path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (info->parsed()) return cmd_info(info_input, info_json);
        if (dim->parsed())
            return cmd_dim(dim_input, dim_exact, dim_construct, dim_cert,
                           dim_oracle, exact_cap, dim_cap, dim_json);
        if (graph->parsed())
            return cmd_graph(graph_input, graph_format, graph_out, graph_cap);
        if (distance->parsed())
            return cmd_distance(distance_input, m_text, l_text);
        if (verify->parsed()) return cmd_verify(verify_options, verify_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
