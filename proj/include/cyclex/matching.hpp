#ifndef CYCLEX_MATCHING_HPP
#define CYCLEX_MATCHING_HPP

#include <unordered_map>
#include <vector>

#include "cyclex/graph.hpp"

namespace cyclex {

// Memoized exhaustive matchability checks against one host graph. All queries
// are phrased as "does the subgraph induced on `alive` have a perfect
// matching". Parallel edges are irrelevant here, so only neighbor masks are
// used.
class MatchabilityOracle {
public:
    explicit MatchabilityOracle(const Graph& g) : n_(g.n()) {
        adj_.reserve(n_);
        for (VertexId v = 0; v < n_; ++v) adj_.push_back(g.adj_mask(v));
    }

    bool matchable(VertexMask alive) {
        if (alive == 0) return true;
        if (mask_count(alive) % 2) return false;
        auto it = memo_.find(alive);
        if (it != memo_.end()) return it->second;
        VertexId v = pick_min_degree(alive);
        bool ok = false;
        VertexMask cands = adj_[v] & alive;
        while (cands && !ok) {
            VertexId u = mask_first(cands);
            cands &= cands - 1;
            ok = matchable(alive & ~vbit(v) & ~vbit(u));
        }
        memo_[alive] = ok;
        return ok;
    }

private:
    VertexId pick_min_degree(VertexMask alive) const {
        VertexId best = -1;
        int bd = 65;
        VertexMask todo = alive;
        while (todo) {
            VertexId v = mask_first(todo);
            todo &= todo - 1;
            int d = mask_count(adj_[v] & alive);
            if (d < bd) {
                bd = d;
                best = v;
                if (d <= 1) break;
            }
        }
        return best;
    }

    int n_;
    std::vector<VertexMask> adj_;
    std::unordered_map<VertexMask, bool> memo_;
};

inline bool is_matchable(const Graph& g) {
    if (g.n() == 0) return true;  // empty graph counts as matchable
    if (g.n() % 2) return false;
    MatchabilityOracle o(g);
    return o.matchable(full_mask(g.n()));
}

// The enumerated perfect matchings of one graph, as edge-id sets, with a
// fingerprint tying them to that graph.
struct PerfectMatchingSet {
    std::vector<std::vector<EdgeId>> matchings;
    std::uint64_t graph_fingerprint = 0;

    bool empty() const { return matchings.empty(); }
    size_t size() const { return matchings.size(); }
};

inline PerfectMatchingSet enumerate_perfect_matchings(const Graph& g) {
    require_desk_cap(g.n(), "enumerate_perfect_matchings");
    PerfectMatchingSet out;
    out.graph_fingerprint = g.fingerprint();
    if (g.n() % 2) return out;
    std::vector<EdgeId> cur;
    VertexMask all = full_mask(g.n());

    // Branch on the lowest uncovered vertex; edge ids tried in adjacency
    // order, so parallel edges yield distinct matchings.
    auto rec = [&](auto&& self, VertexMask covered) -> void {
        if (covered == all) {
            out.matchings.push_back(cur);
            std::sort(out.matchings.back().begin(), out.matchings.back().end());
            return;
        }
        VertexId v = mask_first(~covered & all);
        for (const auto& h : g.adj(v)) {
            if (mask_has(covered, h.to)) continue;
            cur.push_back(h.e);
            self(self, covered | vbit(v) | vbit(h.to));
            cur.pop_back();
        }
    };
    if (g.n() > 0) rec(rec, 0);
    std::sort(out.matchings.begin(), out.matchings.end());
    return out;
}

// Connected, at least 2 vertices, and every edge lies in some perfect matching.
inline bool is_matching_covered(const Graph& g) {
    if (g.n() < 2 || g.n() % 2) return false;
    if (!is_connected(g)) return false;
    MatchabilityOracle o(g);
    VertexMask all = full_mask(g.n());
    if (!o.matchable(all)) return false;
    for (EdgeId e : g.edge_ids()) {
        auto [u, v] = g.ends(e);
        if (!o.matchable(all & ~vbit(u) & ~vbit(v))) return false;
    }
    return true;
}

// A vertex set H is conformal iff G - H is matchable.
inline bool is_conformal_subgraph(const Graph& g, VertexMask h) {
    MatchabilityOracle o(g);
    return o.matchable(full_mask(g.n()) & ~h);
}

}  // namespace cyclex

#endif
