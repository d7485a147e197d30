#include "annigraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <queue>
#include <stdexcept>

#include <json.hpp>

namespace annigraph {

bool DistanceMatrix::rows_equal_ignoring(std::size_t u, std::size_t v) const {
    const std::uint64_t* ru = words_.data() + u * wpr_;
    const std::uint64_t* rv = words_.data() + v * wpr_;
    for (std::size_t k = 0; k < wpr_; ++k) {
        std::uint64_t diff = ru[k] ^ rv[k];
        if ((u >> 5) == k) diff &= ~(3ull << ((u & 31) * 2));
        if ((v >> 5) == k) diff &= ~(3ull << ((v & 31) * 2));
        if (diff) return false;
    }
    return true;
}

const char* to_string(DistanceBranch branch) {
    switch (branch) {
        case DistanceBranch::Equal: return "equal";
        case DistanceBranch::ProductZero: return "product-zero";
        case DistanceBranch::NoCommonNeighbor: return "no-common-neighbor";
        case DistanceBranch::CommonNeighbor: return "common-neighbor";
    }
    return "?";
}

namespace {

void require_vertex(const RingSpec& spec, const IdealVector& ideal) {
    if (!is_vertex(spec, ideal))
        throw std::domain_error("not a vertex of AG(R): " + to_string(ideal));
}

bool adjacent_unchecked(const RingSpec& spec, const IdealVector& m,
                        const IdealVector& l) {
    if (m == l) return false;
    for (std::size_t k = 0; k < spec.orders.size(); ++k)
        if (m.exps[k] + l.exps[k] < spec.orders[k]) return false;
    return true;
}

DistanceBranch branch_unchecked(const RingSpec& spec, const IdealVector& m,
                                const IdealVector& l) {
    if (m == l) return DistanceBranch::Equal;
    if (adjacent_unchecked(spec, m, l)) return DistanceBranch::ProductZero;

    bool every_min_zero = true;   // one of the two projects onto the whole factor
    bool some_both_nonzero = false;  // neither projects onto the zero ideal
    for (std::size_t k = 0; k < spec.orders.size(); ++k) {
        every_min_zero &= std::min(m.exps[k], l.exps[k]) == 0;
        some_both_nonzero |=
            m.exps[k] < spec.orders[k] && l.exps[k] < spec.orders[k];
    }
    if (every_min_zero && some_both_nonzero)
        return DistanceBranch::NoCommonNeighbor;
    return DistanceBranch::CommonNeighbor;
}

int distance_unchecked(const RingSpec& spec, const IdealVector& m,
                       const IdealVector& l) {
    switch (branch_unchecked(spec, m, l)) {
        case DistanceBranch::Equal: return 0;
        case DistanceBranch::ProductZero: return 1;
        case DistanceBranch::NoCommonNeighbor: return 3;
        case DistanceBranch::CommonNeighbor: return 2;
    }
    return 2;
}

}  // namespace

bool adjacent(const RingSpec& spec, const IdealVector& m,
              const IdealVector& l) {
    require_vertex(spec, m);
    require_vertex(spec, l);
    return adjacent_unchecked(spec, m, l);
}

int distance_closed_form(const RingSpec& spec, const IdealVector& m,
                         const IdealVector& l) {
    require_vertex(spec, m);
    require_vertex(spec, l);
    return distance_unchecked(spec, m, l);
}

DistanceBranch distance_branch(const RingSpec& spec, const IdealVector& m,
                               const IdealVector& l) {
    require_vertex(spec, m);
    require_vertex(spec, l);
    return branch_unchecked(spec, m, l);
}

AgGraph AgGraph::build(const RingSpec& spec, std::size_t vertex_cap) {
    const std::uint64_t count = annigraph::vertex_count(spec);
    if (count > vertex_cap)
        throw std::length_error("graph would have " + std::to_string(count) +
                                " vertices, above the cap of " +
                                std::to_string(vertex_cap));

    AgGraph g;
    g.spec_ = spec;
    g.vertices_ = enumerate_vertices(spec);

    const std::size_t n = g.vertices_.size();
    g.words_per_row_ = (n + 63) / 64;
    g.adj_.assign(n * g.words_per_row_, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!adjacent_unchecked(spec, g.vertices_[i], g.vertices_[j]))
                continue;
            g.adj_[i * g.words_per_row_ + (j >> 6)] |= 1ull << (j & 63);
            g.adj_[j * g.words_per_row_ + (i >> 6)] |= 1ull << (i & 63);
            ++g.edges_;
        }
    }
    return g;
}

std::size_t AgGraph::index_of(const IdealVector& ideal) const {
    const auto it =
        std::lower_bound(vertices_.begin(), vertices_.end(), ideal);
    if (it == vertices_.end() || *it != ideal)
        throw std::domain_error("not a vertex of AG(R): " + to_string(ideal));
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<IdealVector> AgGraph::closed_neighborhood(
    const IdealVector& v) const {
    const std::size_t vi = index_of(v);
    std::vector<IdealVector> out;
    for (std::size_t u = 0; u < vertices_.size(); ++u)
        if (u == vi || adjacent_idx(vi, u)) out.push_back(vertices_[u]);
    return out;
}

const DistanceMatrix& AgGraph::distances() const {
    std::call_once(*dist_once_, [this] {
        const std::size_t n = vertices_.size();
        auto m = std::make_unique<DistanceMatrix>(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const int d =
                    distance_unchecked(spec_, vertices_[i], vertices_[j]);
                m->set(i, j, d);
                m->set(j, i, d);
            }
        }
        dist_ = std::move(m);
    });
    return *dist_;
}

DistanceMatrix AgGraph::bfs_all_pairs() const {
    const std::size_t n = vertices_.size();
    DistanceMatrix out(n);
    std::vector<int> dist(n);
    std::vector<std::size_t> queue(n);
    for (std::size_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), kUnreachableDistance);
        dist[s] = 0;
        std::size_t head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            const std::size_t u = queue[head++];
            for (std::size_t k = 0; k < words_per_row_; ++k) {
                std::uint64_t w = adj_[u * words_per_row_ + k];
                while (w) {
                    const std::size_t v =
                        (k << 6) + std::countr_zero(w);
                    w &= w - 1;
                    if (dist[v] != kUnreachableDistance) continue;
                    dist[v] = dist[u] + 1;
                    queue[tail++] = v;
                }
            }
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (dist[v] < 0 || dist[v] > 3)
                throw std::logic_error(
                    "AG(R) invariant violated: BFS distance outside 0..3");
            out.set(s, v, dist[v]);
        }
    }
    return out;
}

int AgGraph::distance_bfs_idx(std::size_t source, std::size_t target) const {
    if (source == target) return 0;
    const std::size_t n = vertices_.size();
    std::vector<int> dist(n, kUnreachableDistance);
    std::queue<std::size_t> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop();
        for (std::size_t k = 0; k < words_per_row_; ++k) {
            std::uint64_t w = adj_[u * words_per_row_ + k];
            while (w) {
                const std::size_t v = (k << 6) + std::countr_zero(w);
                w &= w - 1;
                if (dist[v] != kUnreachableDistance) continue;
                dist[v] = dist[u] + 1;
                if (v == target) return dist[v];
                queue.push(v);
            }
        }
    }
    return kUnreachableDistance;
}

int AgGraph::distance_bfs(const IdealVector& m, const IdealVector& l) const {
    return distance_bfs_idx(index_of(m), index_of(l));
}

namespace {

void write_dot(const AgGraph& g, std::ostream& os) {
    os << "graph ag {\n";
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        os << "  " << i << " [label=\"" << to_string(g.vertices()[i])
           << "\"];\n";
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t j = i + 1; j < g.vertex_count(); ++j)
            if (g.adjacent_idx(i, j)) os << "  " << i << " -- " << j << ";\n";
    os << "}\n";
}

void write_csv(const AgGraph& g, std::ostream& os) {
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t j = i + 1; j < g.vertex_count(); ++j)
            if (g.adjacent_idx(i, j)) os << i << ',' << j << '\n';
}

void write_json(const AgGraph& g, std::ostream& os) {
    nlohmann::ordered_json j;
    j["spec"] = g.spec().orders;
    auto& verts = j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : g.vertices()) verts.push_back(v.exps);
    auto& edges = j["edges"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t k = i + 1; k < g.vertex_count(); ++k)
            if (g.adjacent_idx(i, k)) edges.push_back({i, k});
    os << j.dump() << '\n';
}

}  // namespace

void write_graph(const AgGraph& graph, GraphFormat format, std::ostream& os) {
    switch (format) {
        case GraphFormat::Dot: write_dot(graph, os); break;
        case GraphFormat::Csv: write_csv(graph, os); break;
        case GraphFormat::Json: write_json(graph, os); break;
    }
    if (!os) throw std::runtime_error("failed to write graph output");
}

}  // namespace annigraph
