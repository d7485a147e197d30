#include "annigraph/report.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "annigraph/constructions.hpp"
#include "annigraph/metric_dim.hpp"

namespace annigraph {

const char* to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::FormulaMatches: return "FormulaMatches";
        case Verdict::WithinBounds: return "WithinBounds";
        case Verdict::Mismatch: return "MISMATCH";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
}

Verdict grade(const DimBounds& bounds, int constructed_size,
              bool constructed_resolves, const std::optional<int>& exact) {
    bool bad = !constructed_resolves ||
               constructed_size != static_cast<int>(bounds.upper);
    if (exact) {
        if (bounds.exact)
            bad |= *exact != *bounds.exact;
        else
            bad |= *exact < bounds.lower || *exact > bounds.upper;
    }
    if (bad) return Verdict::Mismatch;
    return bounds.exact ? Verdict::FormulaMatches : Verdict::WithinBounds;
}

DimReport analyze_graph(const AgGraph& graph, const AnalyzeOptions& options,
                        double build_ms) {
    const RingSpec& spec = graph.spec();
    DimReport report;
    report.spec = spec;
    report.bounds = dim_bounds(spec);
    report.vertices = graph.vertex_count();
    report.edges = graph.edge_count();

    const auto t_build = Clock::now();
    const auto witness = construct_resolving_set(spec);
    const auto cert = is_resolving(graph, witness);
    report.constructed_size = static_cast<int>(witness.size());
    report.constructed_resolves = cert.resolves;
    report.build_ms = build_ms + ms_since(t_build);

    if (options.exact) {
        const auto t_solve = Clock::now();
        const DistanceMatrix dist = options.oracle == DistanceOracle::Bfs
                                        ? graph.bfs_all_pairs()
                                        : graph.distances();
        const MetricDimensionResult result = exact_metric_dimension(dist);
        report.exact_dimension = result.dimension;
        if (options.want_basis)
            for (std::size_t idx : result.basis)
                report.basis.push_back(graph.vertices()[idx]);
        report.solve_ms = ms_since(t_solve);
    }

    report.verdict = grade(report.bounds, report.constructed_size,
                           report.constructed_resolves, report.exact_dimension);
    return report;
}

}  // namespace

DimReport analyze(const RingSpec& spec, const AnalyzeOptions& options) {
    const auto t_build = Clock::now();
    const AgGraph graph = AgGraph::build(spec, options.vertex_cap);
    return analyze_graph(graph, options, ms_since(t_build));
}

namespace {

void grow_grid(std::vector<RingSpec>& out, std::vector<int>& partial,
               std::uint64_t partial_ideals, int remaining, int max_entry,
               std::uint64_t max_vertices) {
    if (remaining == 0) {
        out.push_back(RingSpec{partial});
        return;
    }
    for (int v = 1; v <= max_entry; ++v) {
        std::uint64_t ideals = 0;
        if (__builtin_mul_overflow(partial_ideals,
                                   static_cast<std::uint64_t>(v) + 1, &ideals))
            break;
        // remaining - 1 more entries, each multiplying by at least 2
        bool fits = true;
        std::uint64_t floor_ideals = ideals;
        for (int r = 1; r < remaining && fits; ++r)
            fits = !__builtin_mul_overflow(floor_ideals, 2ull, &floor_ideals);
        if (!fits || floor_ideals - 2 > max_vertices) break;

        partial.push_back(v);
        grow_grid(out, partial, ideals, remaining - 1, v, max_vertices);
        partial.pop_back();
    }
}

}  // namespace

std::vector<RingSpec> sweep_grid(int max_factors, int max_order,
                                 std::uint64_t max_vertices) {
    if (max_factors < 1 || max_order < 1)
        throw std::invalid_argument("sweep grid bounds must be >= 1");
    std::vector<RingSpec> grid;
    std::vector<int> partial;
    for (int len = 1; len <= max_factors; ++len)
        grow_grid(grid, partial, 1, len, max_order, max_vertices);
    return grid;
}

namespace {

// One spec's worth of verification work; failure strings are appended.
DimReport verify_one(const RingSpec& spec, const VerifyOptions& options,
                     std::vector<std::string>& failures,
                     std::uint64_t& pairs_checked) {
    AnalyzeOptions analyze_options;
    analyze_options.exact = true;
    analyze_options.vertex_cap = options.vertex_cap;

    const auto t_build = Clock::now();
    const AgGraph graph = AgGraph::build(spec, options.vertex_cap);
    DimReport report = analyze_graph(graph, analyze_options, ms_since(t_build));

    const DistanceMatrix& closed = graph.distances();
    const DistanceMatrix bfs = graph.bfs_all_pairs();
    const std::size_t n = graph.vertex_count();
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            ++pairs_checked;
            if (closed.at(u, v) == bfs.at(u, v)) continue;
            failures.push_back(
                "spec " + to_string(spec) + ": closed-form distance " +
                std::to_string(closed.at(u, v)) + " != BFS distance " +
                std::to_string(bfs.at(u, v)) + " for " +
                to_string(graph.vertices()[u]) + ", " +
                to_string(graph.vertices()[v]));
        }
    }

    if (report.verdict == Verdict::Mismatch)
        failures.push_back("spec " + to_string(spec) +
                           ": dimension checks failed (constructed size " +
                           std::to_string(report.constructed_size) +
                           ", resolves " +
                           (report.constructed_resolves ? "true" : "false") +
                           ", solver " +
                           (report.exact_dimension
                                ? std::to_string(*report.exact_dimension)
                                : std::string("-")) +
                           ", bounds [" + std::to_string(report.bounds.lower) +
                           "," + std::to_string(report.bounds.upper) + "])");

    if (!options.timings) {
        report.build_ms = 0.0;
        report.solve_ms = 0.0;
    }
    return report;
}

}  // namespace

VerifyOutcome run_verify(const VerifyOptions& options) {
    VerifyOutcome outcome;

    const std::vector<RingSpec> grid =
        sweep_grid(options.max_factors, options.max_order,
                   options.max_vertices);
    outcome.specs_checked = grid.size();
    std::uint64_t tuples = 1;
    for (int len = 1; len <= options.max_factors; ++len) {
        if (__builtin_mul_overflow(tuples,
                                   static_cast<std::uint64_t>(options.max_order),
                                   &tuples) ||
            __builtin_add_overflow(outcome.tuples_in_grid, tuples,
                                   &outcome.tuples_in_grid)) {
            outcome.tuples_in_grid = UINT64_MAX;  // display only
            break;
        }
    }

    outcome.rows.resize(grid.size());
    std::vector<std::vector<std::string>> failures(grid.size());
    std::vector<std::uint64_t> pairs(grid.size(), 0);

    const int threads =
        std::clamp(options.threads, 1,
                   static_cast<int>(std::max(1u,
                                             std::thread::hardware_concurrency())));
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= grid.size()) return;
            try {
                outcome.rows[i] =
                    verify_one(grid[i], options, failures[i], pairs[i]);
            } catch (const std::exception& e) {
                failures[i].push_back("spec " + to_string(grid[i]) + ": " +
                                      e.what());
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (std::size_t i = 0; i < grid.size(); ++i) {
        outcome.distance_pairs += pairs[i];
        for (auto& f : failures[i]) outcome.failures.push_back(std::move(f));
    }
    return outcome;
}

void write_csv(const std::vector<DimReport>& rows, std::ostream& os,
               bool with_timings) {
    os << "spec,beta,case,vertices,edges,lower,upper,exact,constructed_size,"
          "constructed_resolves,verdict,ms_build,ms_solve\n";
    for (const auto& row : rows) {
        os << '"' << to_string(row.spec) << '"' << ',' << row.bounds.beta
           << ',' << to_string(row.bounds.ring_case) << ',' << row.vertices
           << ',' << row.edges << ',' << row.bounds.lower << ','
           << row.bounds.upper << ',';
        if (row.exact_dimension) os << *row.exact_dimension;
        os << ',' << row.constructed_size << ','
           << (row.constructed_resolves ? "true" : "false") << ','
           << to_string(row.verdict) << ',';
        if (with_timings)
            os << std::llround(row.build_ms) << ','
               << std::llround(row.solve_ms);
        else
            os << "0,0";
        os << '\n';
    }
    if (!os) throw std::runtime_error("failed to write CSV output");
}

}  // namespace annigraph
