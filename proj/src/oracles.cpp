#include "zhash/oracles.hpp"

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <deque>
#include <functional>
#include <limits>
#include <map>

namespace zhash::oracles {

namespace {

using boost::multiprecision::cpp_int;

void require_small(const LabeledHypergraph& g, std::size_t limit) {
    if (g.edge_count() > limit) throw OracleRefusal("oracle: input exceeds budget");
}

// Per-component (edges, vertices) of the subgraph given by mask, via a plain
// label-propagation flood fill.
std::vector<std::int64_t> component_cyclomatics(const LabeledHypergraph& g, std::uint32_t mask) {
    const std::size_t n = g.edge_count();
    std::map<VertexId, VertexId> comp;
    for (std::size_t e = 0; e < n; ++e) {
        if (((mask >> e) & 1U) == 0) continue;
        for (VertexId v : g.edge(static_cast<EdgeId>(e))) comp[v] = v;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t e = 0; e < n; ++e) {
            if (((mask >> e) & 1U) == 0) continue;
            auto vs = g.edge(static_cast<EdgeId>(e));
            VertexId low = comp[vs[0]];
            for (VertexId v : vs) low = std::min(low, comp[v]);
            for (VertexId v : vs) {
                if (comp[v] != low) {
                    comp[v] = low;
                    changed = true;
                }
            }
        }
    }
    std::map<VertexId, std::pair<std::int64_t, std::int64_t>> counts;  // root -> (e, v)
    for (const auto& [v, root] : comp) ++counts[root].second;
    for (std::size_t e = 0; e < n; ++e) {
        if (((mask >> e) & 1U) == 0) continue;
        ++counts[comp[g.edge(static_cast<EdgeId>(e))[0]]].first;
    }
    std::vector<std::int64_t> out;
    const auto d = static_cast<std::int64_t>(g.d());
    for (const auto& [root, ev] : counts) out.push_back((d - 1) * ev.first - ev.second + 1);
    return out;
}

}  // namespace

std::int64_t excess_bruteforce(const LabeledHypergraph& g) {
    require_small(g, OracleBudget::max_edges);
    const std::size_t n = g.edge_count();
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::int64_t best = static_cast<std::int64_t>(n);
    for (std::uint32_t keep = 0; keep <= full; ++keep) {
        const auto removed = static_cast<std::int64_t>(n) - std::popcount(keep);
        if (removed >= best) continue;
        const auto gammas = component_cyclomatics(g, keep);
        if (std::all_of(gammas.begin(), gammas.end(), [](std::int64_t x) { return x <= 1; })) {
            best = removed;
        }
    }
    return best;
}

bool has_mog_bruteforce(const LabeledHypergraph& g) {
    require_small(g, OracleBudget::max_edges);
    const std::size_t n = g.edge_count();
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    for (std::uint32_t keep = 1; keep <= full && keep != 0; ++keep) {
        for (auto gamma : component_cyclomatics(g, keep)) {
            if (gamma >= 2) return true;
        }
    }
    return false;
}

bool orientability_matching(const LabeledHypergraph& g) {
    require_small(g, OracleBudget::max_matching_edges);
    const std::size_t n = g.edge_count();
    std::map<VertexId, std::size_t> match_of;  // vertex -> edge
    std::vector<char> visited;
    std::function<bool(std::size_t)> try_edge = [&](std::size_t e) -> bool {
        for (VertexId v : g.edge(static_cast<EdgeId>(e))) {
            if (visited[v]) continue;
            visited[v] = 1;
            auto it = match_of.find(v);
            if (it == match_of.end() || try_edge(it->second)) {
                match_of[v] = e;
                return true;
            }
        }
        return false;
    };
    for (std::size_t e = 0; e < n; ++e) {
        visited.assign(g.vertex_space(), 0);
        if (!try_edge(e)) return false;
    }
    return true;
}

std::vector<EdgeId> two_core_rescan(const LabeledHypergraph& g) {
    const std::size_t n = g.edge_count();
    std::vector<char> alive(n, 1);
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<VertexId, int> degree;
        for (std::size_t e = 0; e < n; ++e) {
            if (!alive[e]) continue;
            for (VertexId v : g.edge(static_cast<EdgeId>(e))) ++degree[v];
        }
        for (std::size_t e = 0; e < n; ++e) {
            if (!alive[e]) continue;
            for (VertexId v : g.edge(static_cast<EdgeId>(e))) {
                if (degree[v] == 1) {
                    alive[e] = 0;
                    changed = true;
                    break;
                }
            }
            if (changed) break;
        }
    }
    std::vector<EdgeId> out;
    for (std::size_t e = 0; e < n; ++e) {
        if (alive[e]) out.push_back(static_cast<EdgeId>(e));
    }
    return out;
}

std::uint64_t poly_eval_wide(std::span<const std::uint64_t> coefficients, Key x,
                             std::uint64_t range) {
    cpp_int sum = 0;
    cpp_int power = 1;
    for (auto a : coefficients) {
        sum += cpp_int(a) * power;
        power *= x;
    }
    const cpp_int reduced = (sum % cpp_int(kPrime)) % cpp_int(range);
    return reduced.convert_to<std::uint64_t>();
}

std::vector<std::uint64_t> z_eval_direct(const ZFamily& fam, Key x) {
    const auto& p = fam.params();
    std::vector<std::uint64_t> out(p.d);
    for (unsigned i = 0; i < p.d; ++i) {
        cpp_int total = poly_eval_wide(fam.f()[i].coefficients(), x, p.m);
        for (unsigned j = 0; j < p.c; ++j) {
            const std::uint64_t gv = poly_eval_wide(fam.g()[j].coefficients(), x, p.ell);
            total += fam.z(i)[j * p.ell + gv];
        }
        out[i] = static_cast<std::uint64_t>(total % p.m);
    }
    return out;
}

std::uint64_t deficiency_recount(const ZFamily& fam, std::span<const Key> keys) {
    std::uint64_t best = fam.params().k();
    for (const auto& gj : fam.g()) {
        std::set<std::uint64_t> values;
        for (Key x : keys) values.insert(poly_eval_wide(gj.coefficients(), x, gj.range()));
        best = std::max<std::uint64_t>(best, values.size());
    }
    return keys.size() > best ? keys.size() - best : 0;
}

std::uint64_t uniform_eval_direct(const UniformSimDS& ds, Key x) {
    const ZFamily& fam = ds.family();
    const auto hv = z_eval_direct(fam, x);
    std::uint64_t value = ds.t1()[hv[0]] ^ ds.t2()[hv[1]];
    const auto f = ds.f_parts();
    value ^= poly_eval_wide(f[0].coefficients(), x, f[0].range());
    if (f.size() == 2) value ^= poly_eval_wide(f[1].coefficients(), x, f[1].range()) << 32;
    for (unsigned j = 0; j < fam.params().c; ++j) {
        const auto& gj = fam.g()[j];
        value ^= ds.y(j)[poly_eval_wide(gj.coefficients(), x, gj.range())];
    }
    const unsigned w = ds.width();
    return w >= 64 ? value : value & ((std::uint64_t{1} << w) - 1);
}

std::vector<std::uint32_t> free_distances(const GCuckooTable& table) {
    const unsigned d = table.d();
    const std::uint64_t m = table.m();
    const std::size_t cells = d * m;
    constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
    // Reverse adjacency: for an occupied cell u with occupant x, u -> v for
    // every other choice v of x.
    std::vector<std::vector<std::size_t>> reverse(cells);
    std::vector<std::uint64_t> hv(d);
    for (unsigned j = 0; j < d; ++j) {
        for (std::uint64_t i = 0; i < m; ++i) {
            const auto& occ = table.occupant(j, i);
            if (!occ) continue;
            table.choices(*occ, hv);
            for (unsigned jj = 0; jj < d; ++jj) {
                if (jj != j) reverse[jj * m + hv[jj]].push_back(j * m + i);
            }
        }
    }
    std::vector<std::uint32_t> dist(cells, kInf);
    std::deque<std::size_t> queue;
    for (unsigned j = 0; j < d; ++j) {
        for (std::uint64_t i = 0; i < m; ++i) {
            if (!table.occupant(j, i)) {
                dist[j * m + i] = 0;
                queue.push_back(j * m + i);
            }
        }
    }
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t u : reverse[v]) {
            if (dist[u] == kInf) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

bool ShadowDictionary::insert(Key x) {
    if (keys_.size() >= OracleBudget::max_keys && !contains(x)) {
        throw OracleRefusal("shadow dictionary: budget exceeded");
    }
    return keys_.insert(x).second;
}

bool ShadowDictionary::remove(Key x) { return keys_.erase(x) != 0; }

}  // namespace zhash::oracles
