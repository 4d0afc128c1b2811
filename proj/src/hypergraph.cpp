#include "zhash/hypergraph.hpp"

#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>
#include <queue>

namespace zhash {

LabeledHypergraph::LabeledHypergraph(unsigned d, std::uint64_t m) : d_(d), m_(m) {
    if (d_ < 2) throw ParameterError("hypergraph: d must be >= 2");
    if (m_ < 1) throw ParameterError("hypergraph: m must be >= 1");
    if (static_cast<unsigned __int128>(d_) * m_ >= std::numeric_limits<VertexId>::max()) {
        throw ParameterError("hypergraph: d * m exceeds the 32-bit vertex space");
    }
}

LabeledHypergraph LabeledHypergraph::from_edges(
    unsigned d, std::uint64_t m, const std::vector<std::vector<std::uint64_t>>& edges) {
    LabeledHypergraph g(d, m);
    for (const auto& e : edges) g.add_edge(e);
    return g;
}

void LabeledHypergraph::add_edge(std::span<const std::uint64_t> local_vertices) {
    if (local_vertices.size() != d_) throw InputError("add_edge: edge must have d vertices");
    for (unsigned i = 0; i < d_; ++i) {
        if (local_vertices[i] >= m_) throw InputError("add_edge: vertex id out of range");
        verts_.push_back(static_cast<VertexId>(i * m_ + local_vertices[i]));
    }
    if (!labels_.empty()) labels_.push_back(static_cast<std::uint32_t>(edge_count()));
}

LabeledHypergraph::Incidence LabeledHypergraph::incidence() const {
    Incidence inc;
    const std::size_t nv = vertex_space();
    inc.offsets.assign(nv + 1, 0);
    for (VertexId v : verts_) ++inc.offsets[v + 1];
    for (std::size_t v = 0; v < nv; ++v) inc.offsets[v + 1] += inc.offsets[v];
    inc.edges.resize(verts_.size());
    std::vector<std::uint32_t> fill(inc.offsets.begin(), inc.offsets.end() - 1);
    const auto n = static_cast<EdgeId>(edge_count());
    for (EdgeId e = 0; e < n; ++e) {
        for (VertexId v : edge(e)) inc.edges[fill[v]++] = e;
    }
    return inc;
}

LabeledHypergraph LabeledHypergraph::subgraph(std::span<const EdgeId> edges) const {
    LabeledHypergraph sub(d_, m_);
    sub.verts_.reserve(edges.size() * d_);
    sub.labels_.reserve(edges.size());
    for (EdgeId e : edges) {
        auto vs = edge(e);
        sub.verts_.insert(sub.verts_.end(), vs.begin(), vs.end());
        sub.labels_.push_back(label(e));
        if (!keys_.empty()) sub.keys_.push_back(keys_[e]);
    }
    return sub;
}

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), VertexId{0});
    }
    VertexId find(VertexId v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }
    void unite(VertexId a, VertexId b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<VertexId> parent_;
};

}  // namespace

ComponentAnalysis components(const LabeledHypergraph& g) {
    const auto n = static_cast<EdgeId>(g.edge_count());
    const std::size_t nv = g.vertex_space();
    ComponentAnalysis out;
    out.edge_component.assign(n, -1);
    out.vertex_component.assign(nv, -1);

    DisjointSets sets(nv);
    std::vector<std::uint32_t> degree(nv, 0);
    for (EdgeId e = 0; e < n; ++e) {
        auto vs = g.edge(e);
        for (VertexId v : vs) {
            ++degree[v];
            sets.unite(vs[0], v);
        }
    }

    // Root -> component index, assigned in order of first edge.
    std::vector<std::int32_t> index_of_root(nv, -1);
    for (EdgeId e = 0; e < n; ++e) {
        const VertexId root = sets.find(g.edge(e)[0]);
        if (index_of_root[root] < 0) {
            index_of_root[root] = static_cast<std::int32_t>(out.components.size());
            out.components.emplace_back();
        }
        const std::int32_t ci = index_of_root[root];
        out.edge_component[e] = ci;
        auto& comp = out.components[static_cast<std::size_t>(ci)];
        ++comp.edge_count;
        bool leaf = false;
        for (VertexId v : g.edge(e)) leaf = leaf || degree[v] == 1;
        if (leaf) ++comp.leaf_edge_count;
    }
    for (VertexId v = 0; v < nv; ++v) {
        if (degree[v] == 0) continue;
        const std::int32_t ci = index_of_root[sets.find(v)];
        out.vertex_component[v] = ci;
        ++out.components[static_cast<std::size_t>(ci)].vertex_count;
    }
    const auto d = static_cast<std::int64_t>(g.d());
    for (auto& comp : out.components) {
        const auto e = static_cast<std::int64_t>(comp.edge_count);
        const auto v = static_cast<std::int64_t>(comp.vertex_count);
        // bi(H) has e + v vertices and d * e edges.
        comp.cyclomatic = (d - 1) * e - v + 1;
        comp.is_cyclic = comp.cyclomatic >= 1;
        comp.is_complex = (d - 1) * e > v;
    }
    return out;
}

std::int64_t cyclomatic_number(const LabeledHypergraph& g) {
    std::int64_t total = 0;
    for (const auto& comp : components(g).components) total += comp.cyclomatic;
    return total;
}

std::int64_t excess(const LabeledHypergraph& g) {
    if (g.d() != 2) throw UnsupportedError("excess: defined for graphs (d = 2) only");
    std::int64_t ex = 0;
    for (const auto& comp : components(g).components) {
        if (comp.is_cyclic) ex += comp.cyclomatic - 1;
    }
    return ex;
}

PeelResult peel_2core(const LabeledHypergraph& g) {
    const auto n = static_cast<EdgeId>(g.edge_count());
    const auto inc = g.incidence();
    const std::size_t nv = g.vertex_space();

    std::vector<std::uint32_t> degree(nv);
    for (VertexId v = 0; v < nv; ++v) degree[v] = inc.degree(v);
    std::vector<char> alive(n, 1);

    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
    for (VertexId v = 0; v < nv; ++v) {
        if (degree[v] == 1) leaves.push(v);
    }

    PeelResult out;
    out.order.reserve(n);
    while (!leaves.empty()) {
        const VertexId v = leaves.top();
        leaves.pop();
        if (degree[v] != 1) continue;
        EdgeId victim = n;
        for (EdgeId e : inc.of(v)) {
            if (alive[e]) {
                victim = e;
                break;
            }
        }
        alive[victim] = 0;
        out.order.push_back({victim, v});
        for (VertexId u : g.edge(victim)) {
            if (--degree[u] == 1) leaves.push(u);
        }
    }
    for (EdgeId e = 0; e < n; ++e) {
        if (alive[e]) out.residual.push_back(e);
    }
    return out;
}

namespace {

// d == 2: every residual component must be a cycle (edges == vertices with
// all degrees 2); orient each edge to the next vertex around the cycle.
bool orient_cycles(const LabeledHypergraph& g, std::span<const EdgeId> residual,
                   std::vector<VertexId>& assignment) {
    const std::size_t nv = g.vertex_space();
    std::vector<std::uint32_t> degree(nv, 0);
    for (EdgeId e : residual) {
        for (VertexId v : g.edge(e)) ++degree[v];
    }
    for (EdgeId e : residual) {
        for (VertexId v : g.edge(e)) {
            if (degree[v] != 2) return false;  // a vertex of degree >= 3 means e > v
        }
    }
    // Both residual edges at each vertex.
    std::vector<EdgeId> slot(2 * nv, std::numeric_limits<EdgeId>::max());
    for (EdgeId e : residual) {
        for (VertexId v : g.edge(e)) {
            auto& s = slot[2 * v];
            (s == std::numeric_limits<EdgeId>::max() ? s : slot[2 * v + 1]) = e;
        }
    }
    constexpr VertexId kUnset = std::numeric_limits<VertexId>::max();
    for (EdgeId start : residual) {
        if (assignment[start] != kUnset) continue;
        EdgeId e = start;
        VertexId head = g.edge(e)[1];
        while (assignment[e] == kUnset) {
            assignment[e] = head;
            const EdgeId next = slot[2 * head] == e ? slot[2 * head + 1] : slot[2 * head];
            auto vs = g.edge(next);
            head = vs[0] == head ? vs[1] : vs[0];
            e = next;
        }
    }
    return true;
}

// d >= 3: shortest augmenting paths (BFS) between residual edges and their
// vertices. Vertices already claimed by peeled edges are never in the core.
bool orient_core_by_augmentation(const LabeledHypergraph& g, std::span<const EdgeId> residual,
                                 std::vector<VertexId>& assignment) {
    constexpr VertexId kNone = std::numeric_limits<VertexId>::max();
    const std::size_t nv = g.vertex_space();
    std::vector<EdgeId> owner(nv, std::numeric_limits<EdgeId>::max());
    constexpr EdgeId kFree = std::numeric_limits<EdgeId>::max();

    std::vector<std::uint32_t> seen(g.edge_count(), 0);
    std::vector<EdgeId> parent_edge(nv);  // edge that reached vertex v
    std::uint32_t stamp = 0;
    std::deque<EdgeId> queue;

    for (EdgeId root : residual) {
        ++stamp;
        queue.clear();
        queue.push_back(root);
        seen[root] = stamp;
        VertexId target = kNone;
        while (!queue.empty() && target == kNone) {
            const EdgeId e = queue.front();
            queue.pop_front();
            for (VertexId v : g.edge(e)) {
                if (v == assignment[e]) continue;
                const EdgeId occ = owner[v];
                if (occ == kFree) {
                    parent_edge[v] = e;
                    target = v;
                    break;
                }
                if (seen[occ] != stamp) {
                    seen[occ] = stamp;
                    parent_edge[v] = e;
                    queue.push_back(occ);
                }
            }
        }
        if (target == kNone) return false;
        // Shift ownership back along the path.
        VertexId v = target;
        while (true) {
            const EdgeId e = parent_edge[v];
            const VertexId prev = assignment[e];
            assignment[e] = v;
            owner[v] = e;
            if (e == root) break;
            v = prev;
        }
    }
    return true;
}

}  // namespace

std::optional<std::vector<VertexId>> one_orientation(const LabeledHypergraph& g) {
    constexpr VertexId kUnset = std::numeric_limits<VertexId>::max();
    std::vector<VertexId> assignment(g.edge_count(), kUnset);
    const PeelResult peel = peel_2core(g);
    for (const auto& step : peel.order) assignment[step.edge] = step.vertex;
    if (peel.residual.empty()) return assignment;
    const bool ok = g.d() == 2 ? orient_cycles(g, peel.residual, assignment)
                               : orient_core_by_augmentation(g, peel.residual, assignment);
    if (!ok) return std::nullopt;
    return assignment;
}

Obstructions detect_obstructions(const LabeledHypergraph& g) {
    Obstructions out;
    for (const auto& comp : components(g).components) {
        out.has_mog = out.has_mog || comp.cyclomatic >= 2;
        out.has_complex = out.has_complex || comp.is_complex;
    }
    return out;
}

void write_edge_list(std::ostream& os, const LabeledHypergraph& g) {
    const auto n = static_cast<EdgeId>(g.edge_count());
    for (EdgeId e = 0; e < n; ++e) {
        os << g.label(e);
        for (VertexId v : g.edge(e)) os << ' ' << g.local_of(v);
        os << '\n';
    }
}

}  // namespace zhash
