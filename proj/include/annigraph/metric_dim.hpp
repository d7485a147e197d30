#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "annigraph/graph.hpp"
#include "annigraph/ring.hpp"

namespace annigraph {

/// r(v|W): the vector of distances from v to each vertex of the ordered
/// witness set W. Contains a 0 exactly when v is in W.
using Representation = std::vector<int>;

/// Witness set plus the full representation table over all vertices; the set
/// resolves the graph iff all representations are pairwise distinct.
struct ResolvingSetCertificate {
    std::vector<IdealVector> witness;
    std::vector<std::pair<IdealVector, Representation>> table;  // lex order
    bool resolves = false;
};

/// Serializes a certificate as {"witness": [...], "table": {...},
/// "resolves": bool}; indent < 0 gives a compact single line.
std::string certificate_json(const ResolvingSetCertificate& cert,
                             int indent = -1);

/// Partition of the vertices into twin classes: u, v share a class iff
/// d(u,x) = d(v,x) for every vertex x outside {u,v}. Any resolving set must
/// contain all but at most one member of each class.
struct TwinPartition {
    std::vector<std::vector<std::size_t>> classes;  // ordered by least member

    std::size_t forced_count() const;  // sum of (|class| - 1)
};

Representation representation(const AgGraph& graph, const IdealVector& v,
                              const std::vector<IdealVector>& witness);

/// Builds the certificate for a witness set. Throws std::domain_error for
/// non-vertices and std::invalid_argument for duplicates in W.
ResolvingSetCertificate is_resolving(const AgGraph& graph,
                                     const std::vector<IdealVector>& witness);

TwinPartition twin_partition(const DistanceMatrix& dist);
TwinPartition twin_partition(const AgGraph& graph);

struct MetricDimensionResult {
    int dimension = 0;
    std::vector<std::size_t> basis;  // indices, ascending
};

struct GraphMetricDimension {
    int dimension = 0;
    std::vector<IdealVector> basis;
};

/// Exact metric dimension of the graph behind a distance table, plus the
/// lexicographically smallest basis of that size.
///
/// Resolving sets are exactly the hitting sets of the family
/// D(u,v) = {w : d(u,w) != d(v,w)} over all vertex pairs, so the search
/// branches on the unresolved pair with the fewest remaining candidates.
/// Cardinalities are tried in ascending order starting from
/// max(lower_hint, twin-forced count); the basis is then rebuilt
/// lexicographically, so results do not depend on search order.
/// upper_hint < 0 means |V|. Hints must bracket the true value.
MetricDimensionResult exact_metric_dimension(const DistanceMatrix& dist,
                                             int lower_hint = 0,
                                             int upper_hint = -1);

GraphMetricDimension exact_metric_dimension(const AgGraph& graph,
                                            int lower_hint = 0,
                                            int upper_hint = -1);

}  // namespace annigraph
