#pragma once

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zhash/error.hpp"
#include "zhash/hasher.hpp"
#include "zhash/poly_hash.hpp"

namespace zhash {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// The d-partite multi-hypergraph G(S, h): one edge (h_1(x), ..., h_d(x)) per
/// key. Tuple position i holds a vertex of copy i of [m]; globally that vertex
/// is i * m + h_i(x). Edge e carries label e + 1 (its rank in sorted S).
class LabeledHypergraph {
public:
    LabeledHypergraph(unsigned d, std::uint64_t m);

    /// Edges given as per-part local vertex ids; labels follow input order.
    static LabeledHypergraph from_edges(unsigned d, std::uint64_t m,
                                        const std::vector<std::vector<std::uint64_t>>& edges);

    [[nodiscard]] unsigned d() const noexcept { return d_; }
    [[nodiscard]] std::uint64_t m() const noexcept { return m_; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return verts_.size() / d_; }
    [[nodiscard]] std::size_t vertex_space() const noexcept { return d_ * m_; }

    /// Global vertex ids of edge e.
    [[nodiscard]] std::span<const VertexId> edge(EdgeId e) const noexcept {
        return {verts_.data() + static_cast<std::size_t>(e) * d_, d_};
    }
    [[nodiscard]] std::uint32_t label(EdgeId e) const noexcept {
        return labels_.empty() ? e + 1 : labels_[e];
    }

    /// Keys in label order; empty for graphs built from raw edges.
    [[nodiscard]] std::span<const Key> keys() const noexcept { return keys_; }

    [[nodiscard]] unsigned part_of(VertexId v) const noexcept { return static_cast<unsigned>(v / m_); }
    [[nodiscard]] std::uint64_t local_of(VertexId v) const noexcept { return v % m_; }

    void add_edge(std::span<const std::uint64_t> local_vertices);

    /// CSR incidence lists over the global vertex space.
    struct Incidence {
        std::vector<std::uint32_t> offsets;  // size vertex_space + 1
        std::vector<EdgeId> edges;
        [[nodiscard]] std::span<const EdgeId> of(VertexId v) const noexcept {
            return {edges.data() + offsets[v], offsets[v + 1] - offsets[v]};
        }
        [[nodiscard]] std::uint32_t degree(VertexId v) const noexcept {
            return offsets[v + 1] - offsets[v];
        }
    };
    [[nodiscard]] Incidence incidence() const;

    /// Sub-hypergraph on a subset of edges; labels and keys are kept.
    [[nodiscard]] LabeledHypergraph subgraph(std::span<const EdgeId> edges) const;

private:
    template <HashSequence H>
    friend LabeledHypergraph build(const H& hasher, std::span<const Key> keys);

    unsigned d_;
    std::uint64_t m_;
    std::vector<VertexId> verts_;
    std::vector<Key> keys_;
    std::vector<std::uint32_t> labels_;  // only set for subgraphs
};

/// Builds G(S, h). Keys are sorted first so edge labels are ranks in S.
/// Throws InputError on duplicate keys.
template <HashSequence H>
LabeledHypergraph build(const H& hasher, std::span<const Key> keys) {
    LabeledHypergraph g(hasher.d(), hasher.range());
    g.keys_.assign(keys.begin(), keys.end());
    std::sort(g.keys_.begin(), g.keys_.end());
    if (std::adjacent_find(g.keys_.begin(), g.keys_.end()) != g.keys_.end()) {
        throw InputError("build: duplicate key in S");
    }
    std::vector<std::uint64_t> hv(hasher.d());
    g.verts_.reserve(g.keys_.size() * hasher.d());
    for (Key x : g.keys_) {
        hasher.eval(x, hv);
        for (unsigned i = 0; i < hasher.d(); ++i) {
            g.verts_.push_back(static_cast<VertexId>(i * g.m_ + hv[i]));
        }
    }
    return g;
}

struct ComponentSummary {
    std::uint64_t vertex_count = 0;
    std::uint64_t edge_count = 0;
    std::int64_t cyclomatic = 0;  // of the bipartite representation
    bool is_cyclic = false;
    bool is_complex = false;
    std::uint64_t leaf_edge_count = 0;  // edges holding a degree-1 vertex
};

struct ComponentAnalysis {
    std::vector<ComponentSummary> components;  // ordered by smallest edge id
    std::vector<std::int32_t> edge_component;
    std::vector<std::int32_t> vertex_component;  // -1 for isolated vertices
};

/// Connected components via the bipartite representation. Isolated vertices
/// are ignored.
ComponentAnalysis components(const LabeledHypergraph& g);

/// Sum over components of the cyclomatic number, sum of gamma.
std::int64_t cyclomatic_number(const LabeledHypergraph& g);

/// ex(G) = gamma(G) - number of cyclic components. Graphs only (d == 2);
/// throws UnsupportedError otherwise.
std::int64_t excess(const LabeledHypergraph& g);

struct PeelStep {
    EdgeId edge;
    VertexId vertex;  // the degree-1 vertex the edge was peeled at
};

struct PeelResult {
    std::vector<PeelStep> order;
    std::vector<EdgeId> residual;  // the 2-core, ascending edge ids

    [[nodiscard]] bool core_empty() const noexcept { return residual.empty(); }
};

/// Repeatedly removes an edge at a degree-1 vertex, smallest global vertex
/// id first.
PeelResult peel_2core(const LabeledHypergraph& g);

/// Injective edge -> incident vertex map (global ids), or nullopt if none
/// exists. Peels first; for d == 2 the leftover cycles are oriented around,
/// for d >= 3 the leftover core is resolved by augmenting paths.
std::optional<std::vector<VertexId>> one_orientation(const LabeledHypergraph& g);

struct Obstructions {
    bool has_mog = false;      // some component with gamma >= 2
    bool has_complex = false;  // some component with (d-1) e > v
};

Obstructions detect_obstructions(const LabeledHypergraph& g);

/// One edge per line: "label v_1 ... v_d" with per-part vertex ids.
void write_edge_list(std::ostream& os, const LabeledHypergraph& g);

}  // namespace zhash
