#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <vector>

#include "annigraph/bitset.hpp"
#include "annigraph/ring.hpp"

namespace annigraph {

inline constexpr std::size_t kDefaultVertexCap = 100000;
inline constexpr int kUnreachableDistance = -1;

/// All-pairs distance table packed two bits per entry (every AG(R) in scope
/// has diameter at most 3). Rows are word-aligned so whole rows can be
/// compared with word operations.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n)
        : n_(n), wpr_((2 * n + 63) / 64), words_(n * wpr_, 0) {}

    std::size_t size() const { return n_; }

    int at(std::size_t u, std::size_t v) const {
        return static_cast<int>(
            (words_[u * wpr_ + (v >> 5)] >> ((v & 31) * 2)) & 3);
    }

    void set(std::size_t u, std::size_t v, int d) {
        auto& w = words_[u * wpr_ + (v >> 5)];
        const unsigned shift = (v & 31) * 2;
        w = (w & ~(3ull << shift)) |
            (static_cast<std::uint64_t>(d & 3) << shift);
    }

    /// True iff rows u and v agree on every column except u and v
    /// themselves (the twin-vertex test).
    bool rows_equal_ignoring(std::size_t u, std::size_t v) const;

private:
    std::size_t n_ = 0;
    std::size_t wpr_ = 0;  // words per row
    std::vector<std::uint64_t> words_;
};

/// Which case of the distance computation applied.
enum class DistanceBranch {
    Equal,             // d = 0
    ProductZero,       // d = 1, the ideals annihilate each other
    NoCommonNeighbor,  // d = 3, no third ideal annihilates both
    CommonNeighbor,    // d = 2
};
const char* to_string(DistanceBranch branch);

/// Edge test: M != L and the product ideal is zero, i.e. m_k + l_k >= n_k
/// in every component. Inputs must be vertices.
bool adjacent(const RingSpec& spec, const IdealVector& m, const IdealVector& l);

/// Distance in AG(R) straight from the exponent tuples, no traversal:
/// 0 if equal, 1 if adjacent, 3 if min(m_s, l_s) = 0 for every component
/// and some component has both m_k < n_k and l_k < n_k, else 2.
int distance_closed_form(const RingSpec& spec, const IdealVector& m,
                         const IdealVector& l);
DistanceBranch distance_branch(const RingSpec& spec, const IdealVector& m,
                               const IdealVector& l);

/// The annihilating-ideal graph AG(R). Immutable after build; the all-pairs
/// distance cache fills once on first request and is then shared read-only.
class AgGraph {
public:
    static AgGraph build(const RingSpec& spec,
                         std::size_t vertex_cap = kDefaultVertexCap);

    const RingSpec& spec() const { return spec_; }
    const std::vector<IdealVector>& vertices() const { return vertices_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_; }

    /// Index of a vertex in the lexicographic vertex order; throws
    /// std::domain_error if the ideal is not a vertex.
    std::size_t index_of(const IdealVector& ideal) const;

    bool adjacent_idx(std::size_t u, std::size_t v) const {
        return (adj_[u * words_per_row_ + (v >> 6)] >> (v & 63)) & 1;
    }

    /// N[v] = {v} union {u : uv edge}, in lexicographic order.
    std::vector<IdealVector> closed_neighborhood(const IdealVector& v) const;

    /// All-pairs distances by the closed form; computed once, then cached.
    const DistanceMatrix& distances() const;

    /// All-pairs distances by breadth-first search, recomputed on demand.
    /// Kept as an independent check of the closed form.
    DistanceMatrix bfs_all_pairs() const;

    /// Single-pair BFS distance; kUnreachableDistance if no path.
    int distance_bfs(const IdealVector& m, const IdealVector& l) const;
    int distance_bfs_idx(std::size_t source, std::size_t target) const;

private:
    AgGraph() = default;

    RingSpec spec_;
    std::vector<IdealVector> vertices_;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> adj_;
    std::size_t edges_ = 0;

    mutable std::unique_ptr<std::once_flag> dist_once_ =
        std::make_unique<std::once_flag>();
    mutable std::unique_ptr<DistanceMatrix> dist_;
};

enum class GraphFormat { Dot, Csv, Json };

/// DOT: undirected graph with "(m_1,...,m_n)" vertex labels.
/// CSV: header-less edge list "u,v" with u < v (lexicographic indices).
/// JSON: {"spec": [...], "vertices": [[...]], "edges": [[u,v]]}.
void write_graph(const AgGraph& graph, GraphFormat format, std::ostream& os);

}  // namespace annigraph
