#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "annigraph/formulas.hpp"
#include "annigraph/graph.hpp"
#include "annigraph/ring.hpp"

namespace annigraph {

enum class Verdict {
    FormulaMatches,  // exact formula case, all checks agree
    WithinBounds,    // bounds-only case, solver value contained
    Mismatch,        // some theorem check failed (an implementation bug)
};
const char* to_string(Verdict verdict);

enum class DistanceOracle { ClosedForm, Bfs };

/// Everything the harness knows about one ring spec.
struct DimReport {
    RingSpec spec;
    std::uint64_t vertices = 0;
    std::uint64_t edges = 0;
    DimBounds bounds;
    std::optional<int> exact_dimension;  // from the solver, when run
    std::vector<IdealVector> basis;
    int constructed_size = 0;
    bool constructed_resolves = false;
    Verdict verdict = Verdict::WithinBounds;
    double build_ms = 0.0;
    double solve_ms = 0.0;
};

struct AnalyzeOptions {
    bool exact = true;
    std::size_t vertex_cap = kDefaultVertexCap;
    DistanceOracle oracle = DistanceOracle::ClosedForm;
    bool want_basis = false;
};

/// Builds the graph, evaluates the formula, checks the constructed resolving
/// set, optionally runs the exact solver (no formula hints are passed to it,
/// so the two routes stay independent), and grades the row.
DimReport analyze(const RingSpec& spec, const AnalyzeOptions& options);

/// Canonical sweep grid: all order multisets with at most max_factors
/// factors, each order <= max_order and vertex count <= max_vertices,
/// as non-increasing tuples in (length, lexicographic) order.
std::vector<RingSpec> sweep_grid(int max_factors, int max_order,
                                 std::uint64_t max_vertices);

struct VerifyOptions {
    int max_factors = 3;
    int max_order = 3;
    std::uint64_t max_vertices = 200;
    int threads = 1;
    bool timings = false;  // off keeps the CSV byte-identical across runs
    std::size_t vertex_cap = kDefaultVertexCap;
};

struct VerifyOutcome {
    std::vector<DimReport> rows;          // canonical grid order
    std::vector<std::string> failures;    // empty iff everything agreed
    std::uint64_t tuples_in_grid = 0;     // ordered tuples before dedup
    std::uint64_t specs_checked = 0;
    std::uint64_t distance_pairs = 0;     // closed form vs BFS comparisons

    bool ok() const { return failures.empty(); }
};

/// For every spec in the grid: closed-form distances must equal BFS
/// distances on all pairs, the constructed set must resolve with the
/// formula's cardinality, and the solver value must match the exact formula
/// (one or two factors) or land within the bounds (three or more). Rows are
/// produced in canonical grid order regardless of thread count.
VerifyOutcome run_verify(const VerifyOptions& options);

/// Stable schema: spec,beta,case,vertices,edges,lower,upper,exact,
/// constructed_size,constructed_resolves,verdict,ms_build,ms_solve.
/// Timing columns are written as 0 unless with_timings is set.
void write_csv(const std::vector<DimReport>& rows, std::ostream& os,
               bool with_timings = false);

}  // namespace annigraph
