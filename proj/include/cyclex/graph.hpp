#ifndef CYCLEX_GRAPH_HPP
#define CYCLEX_GRAPH_HPP

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "cyclex/core.hpp"

namespace cyclex {

// Loopless undirected multigraph with dense vertex ids and stable edge ids.
// Edge slots are tombstoned on deletion and never reused, so contractions,
// reduction traces and certificates can keep referring to surviving edges.
class Graph {
public:
    struct Half {
        EdgeId e;
        VertexId to;
    };

    Graph() = default;
    explicit Graph(int n) : adj_(n) {
        if (n < 0 || n > 64) throw PreconditionError("Graph: vertex count must be in [0,64]");
    }

    int n() const { return (int)adj_.size(); }
    int m() const { return live_; }
    int edge_slots() const { return (int)eu_.size(); }

    EdgeId add_edge(VertexId u, VertexId v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw PreconditionError("add_edge: loops are not allowed");
        EdgeId e = (EdgeId)eu_.size();
        eu_.push_back(u);
        ev_.push_back(v);
        alive_.push_back(1);
        adj_[u].push_back({e, v});
        adj_[v].push_back({e, u});
        ++live_;
        return e;
    }

    void remove_edge(EdgeId e) {
        check_edge(e);
        alive_[e] = 0;
        drop_half(adj_[eu_[e]], e);
        drop_half(adj_[ev_[e]], e);
        --live_;
    }

    bool edge_alive(EdgeId e) const {
        return e >= 0 && e < (int)alive_.size() && alive_[e];
    }
    std::pair<VertexId, VertexId> ends(EdgeId e) const {
        check_edge(e);
        return {eu_[e], ev_[e]};
    }
    VertexId other_end(EdgeId e, VertexId v) const {
        check_edge(e);
        if (eu_[e] == v) return ev_[e];
        if (ev_[e] == v) return eu_[e];
        throw PreconditionError("other_end: vertex not an endpoint");
    }
    bool incident(EdgeId e, VertexId v) const {
        check_edge(e);
        return eu_[e] == v || ev_[e] == v;
    }

    const std::vector<Half>& adj(VertexId v) const {
        check_vertex(v);
        return adj_[v];
    }
    int degree(VertexId v) const { return (int)adj(v).size(); }

    int multiplicity(VertexId u, VertexId v) const {
        int c = 0;
        for (const Half& h : adj(u))
            if (h.to == v) ++c;
        return c;
    }
    // Some live edge joining u and v, or -1.
    EdgeId find_edge(VertexId u, VertexId v) const {
        for (const Half& h : adj(u))
            if (h.to == v) return h.e;
        return -1;
    }

    std::vector<EdgeId> edge_ids() const {
        std::vector<EdgeId> out;
        out.reserve(live_);
        for (EdgeId e = 0; e < (int)alive_.size(); ++e)
            if (alive_[e]) out.push_back(e);
        return out;
    }

    // Neighbor bitmask over vertices (multiplicity collapsed).
    VertexMask adj_mask(VertexId v) const {
        VertexMask m = 0;
        for (const Half& h : adj(v)) m |= vbit(h.to);
        return m;
    }

    bool is_simple() const {
        for (VertexId v = 0; v < n(); ++v) {
            VertexMask seen = 0;
            for (const Half& h : adj_[v]) {
                if (mask_has(seen, h.to)) return false;
                seen |= vbit(h.to);
            }
        }
        return true;
    }

    int min_degree() const {
        int d = n() == 0 ? 0 : degree(0);
        for (VertexId v = 1; v < n(); ++v) d = std::min(d, degree(v));
        return d;
    }
    int max_degree() const {
        int d = 0;
        for (VertexId v = 0; v < n(); ++v) d = std::max(d, degree(v));
        return d;
    }

    // Structural fingerprint: FNV-1a over n and the live (id,u,v) triples.
    std::uint64_t fingerprint() const {
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&h](std::uint64_t x) {
            h ^= x;
            h *= 1099511628211ull;
        };
        mix((std::uint64_t)n());
        for (EdgeId e = 0; e < (int)alive_.size(); ++e)
            if (alive_[e]) {
                mix((std::uint64_t)e);
                mix((std::uint64_t)std::min(eu_[e], ev_[e]));
                mix((std::uint64_t)std::max(eu_[e], ev_[e]));
            }
        return h;
    }

private:
    void check_vertex(VertexId v) const {
        if (v < 0 || v >= n()) throw PreconditionError("vertex id out of range");
    }
    void check_edge(EdgeId e) const {
        if (!edge_alive(e)) throw PreconditionError("edge id dead or out of range");
    }
    static void drop_half(std::vector<Half>& halves, EdgeId e) {
        for (size_t i = 0; i < halves.size(); ++i)
            if (halves[i].e == e) {
                halves.erase(halves.begin() + i);
                return;
            }
    }

    std::vector<std::vector<Half>> adj_;
    std::vector<VertexId> eu_, ev_;
    std::vector<char> alive_;
    int live_ = 0;
};

// A cut given by one shore; edge_set is exactly the set of live edges with one
// end in the shore.
struct Cut {
    VertexMask shore = 0;
    std::vector<EdgeId> edge_set;
};

inline Cut make_cut(const Graph& g, VertexMask shore) {
    if (shore == 0 || shore == full_mask(g.n()) || (shore & ~full_mask(g.n())))
        throw PreconditionError("make_cut: shore must be nonempty and proper");
    Cut c;
    c.shore = shore;
    for (EdgeId e : g.edge_ids()) {
        auto [u, v] = g.ends(e);
        if (mask_has(shore, u) != mask_has(shore, v)) c.edge_set.push_back(e);
    }
    return c;
}

// ---- basic traversals ----

inline VertexMask component_of(const Graph& g, VertexId start, VertexMask allowed) {
    VertexMask seen = vbit(start);
    std::vector<VertexId> stack{start};
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (const auto& h : g.adj(v)) {
            if (mask_has(allowed, h.to) && !mask_has(seen, h.to)) {
                seen |= vbit(h.to);
                stack.push_back(h.to);
            }
        }
    }
    return seen;
}

inline bool is_connected(const Graph& g) {
    if (g.n() == 0) return false;
    return component_of(g, 0, full_mask(g.n())) == full_mask(g.n());
}

// Components of the subgraph induced on `allowed`, as vertex masks.
inline std::vector<VertexMask> components(const Graph& g, VertexMask allowed) {
    std::vector<VertexMask> out;
    VertexMask todo = allowed;
    while (todo) {
        VertexId s = mask_first(todo);
        VertexMask c = component_of(g, s, allowed);
        out.push_back(c);
        todo &= ~c;
    }
    return out;
}

// 2-coloring; returns false iff some cycle is odd. Color classes via `side`.
inline bool is_bipartite(const Graph& g, VertexMask* side = nullptr) {
    std::vector<int> color(g.n(), -1);
    VertexMask a = 0;
    for (VertexId s = 0; s < g.n(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        a |= vbit(s);
        std::vector<VertexId> stack{s};
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (const auto& h : g.adj(v)) {
                if (color[h.to] == -1) {
                    color[h.to] = 1 - color[v];
                    if (color[h.to] == 0) a |= vbit(h.to);
                    stack.push_back(h.to);
                } else if (color[h.to] == color[v]) {
                    return false;
                }
            }
        }
    }
    if (side) *side = a;
    return true;
}

// True iff g is connected, has more than k vertices, and no set of fewer than
// k vertices disconnects it. Brute force over removal sets; desk scale only.
inline bool is_k_connected(const Graph& g, int k) {
    if (g.n() <= k) return false;
    if (!is_connected(g)) return false;
    if (k <= 1) return true;
    std::vector<VertexId> del;
    // all removal sets of size < k
    std::vector<int> idx(k - 1, 0);
    auto survives = [&](VertexMask removed) {
        VertexMask allowed = full_mask(g.n()) & ~removed;
        if (allowed == 0) return true;
        return component_of(g, mask_first(allowed), allowed) == allowed;
    };
    // sizes 1 .. k-1
    for (int sz = 1; sz < k; ++sz) {
        std::vector<int> c(sz);
        std::iota(c.begin(), c.end(), 0);
        while (true) {
            VertexMask rm = 0;
            for (int x : c) rm |= vbit(x);
            if (!survives(rm)) return false;
            int i = sz - 1;
            while (i >= 0 && c[i] == g.n() - sz + i) --i;
            if (i < 0) break;
            ++c[i];
            for (int j = i + 1; j < sz; ++j) c[j] = c[j - 1] + 1;
        }
    }
    return true;
}

// ---- derived graphs ----

// Subgraph on the vertices of `keep`, retaining exactly the live edges with
// both ends kept. Vertices are renumbered densely in ascending order; edge ids
// are NOT preserved (fresh graph). Optional maps report old->new vertex ids
// and new-edge -> old-edge ids.
inline Graph induced_subgraph(const Graph& g, VertexMask keep,
                              std::vector<VertexId>* vmap_out = nullptr,
                              std::vector<EdgeId>* emap_out = nullptr) {
    std::vector<VertexId> vmap(g.n(), -1);
    int t = 0;
    for (VertexId v = 0; v < g.n(); ++v)
        if (mask_has(keep, v)) vmap[v] = t++;
    Graph out(t);
    std::vector<EdgeId> emap;
    for (EdgeId e : g.edge_ids()) {
        auto [u, v] = g.ends(e);
        if (vmap[u] >= 0 && vmap[v] >= 0) {
            out.add_edge(vmap[u], vmap[v]);
            emap.push_back(e);
        }
    }
    if (vmap_out) *vmap_out = vmap;
    if (emap_out) *emap_out = emap;
    return out;
}

// Subgraph with given vertices and a chosen subset of their edges.
inline Graph edge_subgraph(const Graph& g, VertexMask keep, const std::vector<EdgeId>& edges,
                           std::vector<VertexId>* vmap_out = nullptr) {
    std::vector<VertexId> vmap(g.n(), -1);
    int t = 0;
    for (VertexId v = 0; v < g.n(); ++v)
        if (mask_has(keep, v)) vmap[v] = t++;
    Graph out(t);
    for (EdgeId e : edges) {
        auto [u, v] = g.ends(e);
        if (vmap[u] < 0 || vmap[v] < 0) throw PreconditionError("edge_subgraph: edge leaves vertex set");
        out.add_edge(vmap[u], vmap[v]);
    }
    if (vmap_out) *vmap_out = vmap;
    return out;
}

// G/X: shrink the shore X to a single vertex. Edges inside X disappear, edges
// of the cut keep their ids and run to the contraction vertex, all other edges
// keep both ends. Surviving vertices are renumbered densely in ascending
// order; the contraction vertex gets the last id. Edge slots (ids) are shared
// with g: slot i of the result is live iff slot i of g is live and not inside X.
inline Graph contract_shore(const Graph& g, VertexMask shore,
                            std::vector<VertexId>* vmap_out = nullptr,
                            VertexId* contraction_vertex = nullptr) {
    if (shore == 0 || (shore & ~full_mask(g.n())) || shore == full_mask(g.n()))
        throw PreconditionError("contract_shore: shore must be nonempty and proper");
    std::vector<VertexId> vmap(g.n(), -1);
    int t = 0;
    for (VertexId v = 0; v < g.n(); ++v)
        if (!mask_has(shore, v)) vmap[v] = t++;
    VertexId x = t;
    for (VertexId v = 0; v < g.n(); ++v)
        if (mask_has(shore, v)) vmap[v] = x;
    Graph out(t + 1);
    // Replay slots in id order so ids line up; dead/contracted slots become
    // dead slots of the result too.
    auto dead_slot = [&out, x]() {
        EdgeId id = out.add_edge(0, x);  // 0 != x since the complement is nonempty
        out.remove_edge(id);
    };
    for (EdgeId e = 0; e < g.edge_slots(); ++e) {
        if (!g.edge_alive(e)) {
            dead_slot();
            continue;
        }
        auto [u, v] = g.ends(e);
        VertexId a = vmap[u], b = vmap[v];
        if (a == b) {  // edge inside the shore: would be a loop, drop it
            dead_slot();
            continue;
        }
        out.add_edge(a, b);
    }
    if (vmap_out) *vmap_out = vmap;
    if (contraction_vertex) *contraction_vertex = x;
    return out;
}

// Fresh copy with dead slots squeezed out (edge ids renumbered 0..m-1).
inline Graph compacted(const Graph& g, std::vector<EdgeId>* emap_out = nullptr) {
    Graph out(g.n());
    std::vector<EdgeId> emap;
    for (EdgeId e : g.edge_ids()) {
        auto [u, v] = g.ends(e);
        out.add_edge(u, v);
        emap.push_back(e);
    }
    if (emap_out) *emap_out = emap;
    return out;
}

// Underlying simple graph (one edge per adjacent pair), fresh ids.
inline Graph underlying_simple(const Graph& g) {
    Graph out(g.n());
    for (VertexId u = 0; u < g.n(); ++u) {
        VertexMask seen = 0;
        for (const auto& h : g.adj(u)) {
            if (h.to > u && !mask_has(seen, h.to)) {
                out.add_edge(u, h.to);
                seen |= vbit(h.to);
            }
        }
    }
    return out;
}

}  // namespace cyclex

#endif
