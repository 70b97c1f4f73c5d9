#include "mfdlog/stratify.hpp"

#include <algorithm>
#include <numeric>

namespace mfdlog {
namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void merge(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

/// Solve constraints level(u) == level(v) (merged upfront) and
/// level(u) + w <= level(v), w in {0,1}. Returns the pointwise smallest
/// solution, or nullopt when a cycle contains a strict edge.
std::optional<std::vector<int>> solve_levels(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& equalities,
    const std::vector<std::tuple<std::size_t, std::size_t, int>>& edges) {
    UnionFind uf(n);
    for (auto [a, b] : equalities) uf.merge(a, b);

    // compact representative indexing
    std::vector<std::size_t> rep(n);
    std::vector<std::size_t> comp(n, 0);
    std::size_t m = 0;
    std::vector<std::size_t> root_of;
    for (std::size_t i = 0; i < n; ++i) rep[i] = uf.find(i);
    {
        std::vector<std::size_t> seen(n, SIZE_MAX);
        for (std::size_t i = 0; i < n; ++i) {
            if (seen[rep[i]] == SIZE_MAX) {
                seen[rep[i]] = m++;
                root_of.push_back(rep[i]);
            }
            comp[i] = seen[rep[i]];
        }
    }

    struct Edge {
        std::size_t to;
        int w;
    };
    std::vector<std::vector<Edge>> adj(m), radj(m);
    std::vector<std::tuple<std::size_t, std::size_t, int>> cedges;
    for (auto [u, v, w] : edges) {
        std::size_t cu = comp[u], cv = comp[v];
        if (cu == cv) {
            if (w > 0) return std::nullopt;  // strict self-dependency
            continue;
        }
        adj[cu].push_back({cv, w});
        radj[cv].push_back({cu, w});
        cedges.emplace_back(cu, cv, w);
    }

    // Kosaraju: SCCs come out in topological order of the condensation.
    std::vector<std::size_t> order;
    order.reserve(m);
    std::vector<char> visited(m, 0);
    for (std::size_t s = 0; s < m; ++s) {
        if (visited[s]) continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
        visited[s] = 1;
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            if (idx < adj[v].size()) {
                std::size_t next = adj[v][idx++].to;
                if (!visited[next]) {
                    visited[next] = 1;
                    stack.push_back({next, 0});
                }
            } else {
                order.push_back(v);
                stack.pop_back();
            }
        }
    }
    std::vector<std::size_t> scc(m, SIZE_MAX);
    std::size_t scc_count = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (scc[*it] != SIZE_MAX) continue;
        std::vector<std::size_t> stack{*it};
        scc[*it] = scc_count;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (const auto& e : radj[v])
                if (scc[e.to] == SIZE_MAX) {
                    scc[e.to] = scc_count;
                    stack.push_back(e.to);
                }
        }
        ++scc_count;
    }

    std::vector<int> scc_level(scc_count, 0);
    for (auto [cu, cv, w] : cedges)
        if (scc[cu] == scc[cv] && w > 0) return std::nullopt;
    // scc ids increase along the topological order, so one forward sweep
    // computes the longest-path levels.
    std::vector<std::vector<std::pair<std::size_t, int>>> scc_adj(scc_count);
    for (auto [cu, cv, w] : cedges)
        if (scc[cu] != scc[cv]) scc_adj[scc[cu]].push_back({scc[cv], w});
    for (std::size_t s = 0; s < scc_count; ++s)
        for (auto [t, w] : scc_adj[s]) scc_level[t] = std::max(scc_level[t], scc_level[s] + w);

    std::vector<int> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = scc_level[scc[comp[i]]];
    return out;
}

std::string predicate_of(const std::string& printed_atom) {
    auto pos = printed_atom.find('(');
    return pos == std::string::npos ? printed_atom : printed_atom.substr(0, pos);
}

std::optional<StratumMap> try_granularity(const GroundProgram& g, bool predicate_level) {
    std::size_t atom_n = g.atom_count();
    std::vector<std::size_t> node_of(atom_n);
    std::size_t n;
    if (predicate_level) {
        std::map<std::string, std::size_t> pred_ix;
        for (AtomId a = 0; a < atom_n; ++a) {
            auto [it, _] = pred_ix.emplace(predicate_of(g.name(a)), pred_ix.size());
            node_of[a] = it->second;
        }
        n = pred_ix.size();
    } else {
        for (AtomId a = 0; a < atom_n; ++a) node_of[a] = a;
        n = atom_n;
    }

    std::vector<std::pair<std::size_t, std::size_t>> eqs;
    std::vector<std::tuple<std::size_t, std::size_t, int>> les;
    for (const auto& r : g.rules) {
        if (r.head.empty()) continue;  // denials impose no head-level constraint
        std::size_t h0 = node_of[r.head[0]];
        for (std::size_t i = 1; i < r.head.size(); ++i) eqs.push_back({node_of[r.head[i]], h0});
        for (AtomId b : r.body_pos) les.emplace_back(node_of[b], h0, 0);
        for (AtomId c : r.body_neg) les.emplace_back(node_of[c], h0, 1);
    }

    auto levels = solve_levels(n, eqs, les);
    if (!levels) return std::nullopt;

    StratumMap s;
    s.level.resize(atom_n);
    for (AtomId a = 0; a < atom_n; ++a) {
        s.level[a] = (*levels)[node_of[a]];
        s.max_level = std::max(s.max_level, s.level[a]);
    }
    if (!stratification_valid(g, s)) return std::nullopt;
    return s;
}

}  // namespace

bool stratification_valid(const GroundProgram& g, const StratumMap& s) {
    for (const auto& r : g.rules) {
        if (!r.head.empty()) {
            int l = s.level[r.head[0]];
            for (AtomId h : r.head)
                if (s.level[h] != l) return false;
            for (AtomId b : r.body_pos)
                if (s.level[b] > l) return false;
            for (AtomId c : r.body_neg)
                if (s.level[c] >= l) return false;
        } else {
            int l = 0;
            for (AtomId b : r.body_pos) l = std::max(l, s.level[b]);
            for (AtomId c : r.body_neg) l = std::max(l, s.level[c]);
            for (AtomId c : r.body_neg)
                if (s.level[c] >= l) return false;
        }
    }
    return true;
}

std::optional<StratumMap> stratify(const GroundProgram& g) {
    if (auto fast = try_granularity(g, true)) return fast;
    return try_granularity(g, false);
}

}  // namespace mfdlog
