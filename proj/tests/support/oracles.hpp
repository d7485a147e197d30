#pragma once

// Test-only reference implementations. These stay deliberately naive and
// independent of the library's search and pruning code paths so that the
// two routes can disagree when one of them is wrong.

#include <array>
#include <cstdint>
#include <vector>

#include "annigraph/graph.hpp"
#include "annigraph/ring.hpp"

namespace testsupport {

// Annihilator by lattice scan: collect every ideal K with I*K = 0
// (componentwise m_i + k_i >= n_i) and return the largest one under
// containment, i.e. the componentwise exponent minimum of the collection.
inline annigraph::IdealVector bruteforce_annihilator(
    const annigraph::RingSpec& spec, const annigraph::IdealVector& ideal) {
    const std::size_t n = spec.orders.size();
    std::vector<int> exps(n, 0);
    std::vector<int> best(spec.orders);  // zero ideal annihilates everything
    while (true) {
        bool kills = true;
        for (std::size_t i = 0; i < n && kills; ++i)
            kills = ideal.exps[i] + exps[i] >= spec.orders[i];
        if (kills)
            for (std::size_t i = 0; i < n; ++i)
                best[i] = std::min(best[i], exps[i]);

        std::size_t i = n;
        while (true) {
            if (i == 0) return annigraph::IdealVector{best};
            --i;
            if (exps[i] < spec.orders[i]) {
                ++exps[i];
                break;
            }
            exps[i] = 0;
        }
    }
}

struct BruteforceDim {
    int dimension = 0;
    std::vector<std::size_t> basis;
};

// Metric dimension by flat enumeration: all subsets in ascending
// cardinality and lexicographic order, no twin forcing, no branching, no
// bounds. First subset whose representations are pairwise distinct wins.
inline BruteforceDim unpruned_metric_dimension(
    const annigraph::DistanceMatrix& dist) {
    const std::size_t n = dist.size();
    if (n <= 1) return {};

    // open-addressed signature table, reset by epoch stamping
    static constexpr std::size_t kSlots = 2048;
    std::array<std::uint64_t, kSlots> keys{};
    std::array<std::uint32_t, kSlots> stamps{};
    std::uint32_t epoch = 0;

    std::vector<std::size_t> comb;
    for (std::size_t k = 1; k <= n; ++k) {
        comb.resize(k);
        for (std::size_t i = 0; i < k; ++i) comb[i] = i;
        while (true) {
            ++epoch;
            bool distinct = true;
            for (std::size_t v = 0; v < n && distinct; ++v) {
                std::uint64_t sig = 0;
                for (std::size_t i = 0; i < k; ++i)
                    sig |= static_cast<std::uint64_t>(dist.at(v, comb[i]))
                           << (2 * i);
                std::size_t slot = (sig * 0x9e3779b97f4a7c15ull) >> 53;
                while (true) {
                    if (stamps[slot] != epoch) {
                        stamps[slot] = epoch;
                        keys[slot] = sig;
                        break;
                    }
                    if (keys[slot] == sig) {
                        distinct = false;
                        break;
                    }
                    slot = (slot + 1) % kSlots;
                }
            }
            if (distinct) return {static_cast<int>(k), comb};

            // next k-combination in lexicographic order
            std::size_t i = k;
            while (i > 0 && comb[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++comb[i - 1];
            for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return {static_cast<int>(n), {}};  // unreachable: the full set resolves
}

// Degree-based path test: connected, |E| = |V| - 1, max degree 2.
inline bool is_path(const annigraph::AgGraph& graph) {
    const std::size_t n = graph.vertex_count();
    if (n == 0) return false;
    if (graph.edge_count() != n - 1) return false;
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t degree = 0;
        for (std::size_t u = 0; u < n; ++u) degree += graph.adjacent_idx(v, u);
        if (degree > 2) return false;
    }
    for (std::size_t v = 1; v < n; ++v)
        if (graph.distance_bfs_idx(0, v) == annigraph::kUnreachableDistance)
            return false;
    return true;
}

}  // namespace testsupport
