#include "annigraph/metric_dim.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "annigraph/bitset.hpp"

namespace annigraph {

std::size_t TwinPartition::forced_count() const {
    std::size_t forced = 0;
    for (const auto& cls : classes) forced += cls.size() - 1;
    return forced;
}

Representation representation(const AgGraph& graph, const IdealVector& v,
                              const std::vector<IdealVector>& witness) {
    const std::size_t vi = graph.index_of(v);
    const DistanceMatrix& dist = graph.distances();
    Representation rep;
    rep.reserve(witness.size());
    for (const auto& w : witness) rep.push_back(dist.at(vi, graph.index_of(w)));
    return rep;
}

ResolvingSetCertificate is_resolving(const AgGraph& graph,
                                     const std::vector<IdealVector>& witness) {
    std::vector<std::size_t> widx;
    widx.reserve(witness.size());
    for (const auto& w : witness) widx.push_back(graph.index_of(w));

    std::set<std::size_t> seen(widx.begin(), widx.end());
    if (seen.size() != widx.size())
        throw std::invalid_argument("duplicate vertex in witness set");

    ResolvingSetCertificate cert;
    cert.witness = witness;
    const DistanceMatrix& dist = graph.distances();
    std::set<Representation> reps;
    cert.resolves = true;
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        Representation rep;
        rep.reserve(widx.size());
        for (std::size_t w : widx) rep.push_back(dist.at(v, w));
        if (!reps.insert(rep).second) cert.resolves = false;
        cert.table.emplace_back(graph.vertices()[v], std::move(rep));
    }
    return cert;
}

std::string certificate_json(const ResolvingSetCertificate& cert, int indent) {
    nlohmann::ordered_json j;
    auto& witness = j["witness"] = nlohmann::ordered_json::array();
    for (const auto& w : cert.witness) witness.push_back(w.exps);
    auto& table = j["table"] = nlohmann::ordered_json::object();
    for (const auto& [vertex, rep] : cert.table)
        table[to_string(vertex)] = rep;
    j["resolves"] = cert.resolves;
    return j.dump(indent);
}

TwinPartition twin_partition(const DistanceMatrix& dist) {
    const std::size_t n = dist.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&parent](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (dist.rows_equal_ignoring(i, j)) parent[find(j)] = find(i);

    TwinPartition out;
    std::vector<std::size_t> class_of(n, SIZE_MAX);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = find(i);
        if (class_of[root] == SIZE_MAX) {
            class_of[root] = out.classes.size();
            out.classes.emplace_back();
        }
        out.classes[class_of[root]].push_back(i);
    }
    return out;
}

TwinPartition twin_partition(const AgGraph& graph) {
    return twin_partition(graph.distances());
}

namespace {

// Resolving sets are the hitting sets of the pair family
//   D(u,v) = {w : d(u,w) != d(v,w)}   (u and v always belong to D(u,v)),
// so existence of a resolving set of a given size is decided by a
// branch-and-bound over that family: pick the unresolved pair with the
// fewest remaining candidate witnesses and branch on each candidate.
// After a candidate branch fails, the candidate is dropped from the sibling
// branches, which keeps the branches disjoint. Twin pairs (D = {u,v}) need
// no special handling; they are simply the tightest pairs.
class SubsetSearch {
public:
    explicit SubsetSearch(const DistanceMatrix& dist) : n_(dist.size()) {
        masks_.reserve(n_ * (n_ - 1) / 2);
        for (std::size_t u = 0; u < n_; ++u) {
            for (std::size_t v = u + 1; v < n_; ++v) {
                Bitset mask(n_);
                for (std::size_t w = 0; w < n_; ++w)
                    if (dist.at(u, w) != dist.at(v, w)) mask.set(w);
                masks_.push_back(std::move(mask));
            }
        }
    }

    // Is there a resolving set of size exactly k that contains `prefix` and
    // whose remaining members all have index >= min_free?
    bool feasible(int k, const std::vector<std::size_t>& prefix,
                  std::size_t min_free) {
        const int budget = k - static_cast<int>(prefix.size());
        if (budget < 0) return false;

        allowed_ = Bitset(n_);
        for (std::size_t i = min_free; i < n_; ++i) allowed_.set(i);
        for (std::size_t p : prefix) allowed_.reset(p);

        Bitset prefix_mask(n_);
        for (std::size_t p : prefix) prefix_mask.set(p);
        std::vector<std::uint32_t> uncovered;
        uncovered.reserve(masks_.size());
        for (std::uint32_t idx = 0; idx < masks_.size(); ++idx)
            if (!masks_[idx].intersects(prefix_mask)) uncovered.push_back(idx);

        scratch_.assign(budget + 1, Scratch{{}, Bitset(n_), Bitset(n_), {}});
        return recurse(budget, uncovered, 0);
    }

private:
    bool recurse(int budget, const std::vector<std::uint32_t>& uncovered,
                 int depth) {
        if (uncovered.empty())
            return static_cast<std::size_t>(budget) <= allowed_.count();

        // One pass finds the unresolved pair with the fewest remaining
        // candidates and greedily packs pairwise-disjoint candidate sets;
        // each packed pair needs its own witness, so the packing size is a
        // lower bound on the budget still required.
        Scratch& scratch = scratch_[depth];
        std::size_t best = SIZE_MAX;
        std::size_t best_count = SIZE_MAX;
        Bitset& packed = scratch.packed;
        packed.clear();
        int packing = 0;
        for (std::uint32_t idx : uncovered) {
            const std::size_t c = masks_[idx].count_and(allowed_);
            if (c == 0) return false;  // nothing left can split this pair
            if (c < best_count) {
                best_count = c;
                best = idx;
            }
            if (!masks_[idx].intersects(packed)) {
                if (++packing > budget) return false;
                packed.or_and(masks_[idx], allowed_);
            }
        }
        if (budget == 0) return false;

        Bitset& candidates = scratch.candidates;
        candidates.assign_and(masks_[best], allowed_);
        auto& tried = scratch.tried;
        tried.clear();
        bool found = false;
        for (std::size_t w = candidates.next(0); w < n_;
             w = candidates.next(w + 1)) {
            allowed_.reset(w);
            auto& next_uncovered = scratch.next_uncovered;
            next_uncovered.clear();
            for (std::uint32_t idx : uncovered)
                if (!masks_[idx].test(w)) next_uncovered.push_back(idx);
            if (recurse(budget - 1, next_uncovered, depth + 1)) {
                found = true;
                break;
            }
            tried.push_back(w);  // stays excluded for the sibling branches
        }
        if (!found)
            for (std::size_t w : tried) allowed_.set(w);
        return found;
    }

    struct Scratch {
        std::vector<std::uint32_t> next_uncovered;
        Bitset packed;
        Bitset candidates;
        std::vector<std::size_t> tried;
    };

    std::size_t n_;
    std::vector<Bitset> masks_;
    Bitset allowed_;
    std::vector<Scratch> scratch_;
};

// Smallest k with k + 3^k >= n: representations of non-witness vertices
// take values in {1,2,3}^k, so k witnesses tell apart at most 3^k + k
// vertices.
int information_lower_bound(std::size_t n) {
    int k = 0;
    std::uint64_t pow3 = 1;
    while (pow3 + static_cast<std::uint64_t>(k) < n) {
        ++k;
        if (pow3 <= UINT64_MAX / 3) pow3 *= 3;
    }
    return k;
}

}  // namespace

MetricDimensionResult exact_metric_dimension(const DistanceMatrix& dist,
                                             int lower_hint, int upper_hint) {
    const std::size_t n = dist.size();
    if (upper_hint < 0) upper_hint = static_cast<int>(n);
    if (lower_hint < 0 || lower_hint > upper_hint ||
        upper_hint > static_cast<int>(n))
        throw std::invalid_argument("inconsistent metric-dimension hints");

    if (n <= 1) return {0, {}};

    SubsetSearch search(dist);

    int start = std::max(lower_hint, 1);
    start = std::max(start,
                     static_cast<int>(twin_partition(dist).forced_count()));
    start = std::max(start, information_lower_bound(n));

    for (int k = start; k <= upper_hint; ++k) {
        if (!search.feasible(k, {}, 0)) continue;

        // rebuild the lexicographically smallest basis of size k
        MetricDimensionResult result;
        result.dimension = k;
        std::size_t from = 0;
        for (int pos = 0; pos < k; ++pos) {
            bool extended = false;
            for (std::size_t c = from;
                 c + static_cast<std::size_t>(k - pos - 1) < n; ++c) {
                result.basis.push_back(c);
                if (search.feasible(k, result.basis, c + 1)) {
                    from = c + 1;
                    extended = true;
                    break;
                }
                result.basis.pop_back();
            }
            if (!extended)
                throw std::logic_error("basis reconstruction failed");
        }
        return result;
    }
    throw std::runtime_error(
        "no resolving set of size <= " + std::to_string(upper_hint) +
        " (upper hint too small)");
}

GraphMetricDimension exact_metric_dimension(const AgGraph& graph,
                                            int lower_hint, int upper_hint) {
    const MetricDimensionResult raw =
        exact_metric_dimension(graph.distances(), lower_hint, upper_hint);
    GraphMetricDimension out;
    out.dimension = raw.dimension;
    out.basis.reserve(raw.basis.size());
    for (std::size_t idx : raw.basis) out.basis.push_back(graph.vertices()[idx]);
    return out;
}

}  // namespace annigraph
