#ifndef CYCLEX_CYCLES_HPP
#define CYCLEX_CYCLES_HPP

#include <algorithm>
#include <optional>
#include <variant>
#include <vector>

#include "cyclex/matching.hpp"

namespace cyclex {

// A simple cycle, stored as a closed vertex sequence plus the edge ids used
// between consecutive vertices (edges[i] joins vertices[i] and vertices[i+1],
// edges.back() closes the cycle). Length 2 means a pair of parallel edges.
struct CycleWitness {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    int length() const { return (int)edges.size(); }
    bool even() const { return length() % 2 == 0; }
    VertexMask vertex_mask() const {
        VertexMask m = 0;
        for (VertexId v : vertices) m |= vbit(v);
        return m;
    }
    bool contains_edge(EdgeId e) const {
        return std::find(edges.begin(), edges.end(), e) != edges.end();
    }
};

// Structural validity against a host graph.
inline bool cycle_valid(const Graph& g, const CycleWitness& c) {
    size_t k = c.vertices.size();
    if (k < 2 || c.edges.size() != k) return false;
    VertexMask seen = 0;
    for (VertexId v : c.vertices) {
        if (v < 0 || v >= g.n() || mask_has(seen, v)) return false;
        seen |= vbit(v);
    }
    BitRow used;
    for (size_t i = 0; i < k; ++i) {
        EdgeId e = c.edges[i];
        if (!g.edge_alive(e) || used.test(e)) return false;
        used.set(e);
        VertexId a = c.vertices[i], b = c.vertices[(i + 1) % k];
        auto [u, v] = g.ends(e);
        if (!((u == a && v == b) || (u == b && v == a))) return false;
    }
    return true;
}

namespace detail {

// Rotate/reflect so the minimum vertex comes first and the successor is the
// smaller of its two cycle neighbors; ties (only possible for 2-cycles) are
// broken by edge ids.
inline void canonicalize_cycle(CycleWitness& c) {
    size_t k = c.vertices.size();
    if (k == 2) {
        if (c.vertices[0] > c.vertices[1]) std::swap(c.vertices[0], c.vertices[1]);
        if (c.edges[0] > c.edges[1]) std::swap(c.edges[0], c.edges[1]);
        return;
    }
    size_t p = std::min_element(c.vertices.begin(), c.vertices.end()) - c.vertices.begin();
    std::vector<VertexId> vs(k);
    std::vector<EdgeId> es(k);
    VertexId next = c.vertices[(p + 1) % k];
    VertexId prev = c.vertices[(p + k - 1) % k];
    bool forward = next < prev;
    for (size_t i = 0; i < k; ++i) {
        if (forward) {
            vs[i] = c.vertices[(p + i) % k];
            es[i] = c.edges[(p + i) % k];
        } else {
            vs[i] = c.vertices[(p + k - i) % k];
            es[i] = c.edges[(p + k - i - 1 + k) % k];
        }
    }
    c.vertices = vs;
    c.edges = es;
}

// Lexicographic by sorted vertex set, then rotation-minimal sequence, then
// edge ids (edge ids only matter between parallel copies).
inline bool cycle_key_less(const CycleWitness& a, const CycleWitness& b) {
    auto sa = a.vertices, sb = b.vertices;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return sa < sb;
    if (a.vertices != b.vertices) return a.vertices < b.vertices;
    return a.edges < b.edges;
}

}  // namespace detail

struct CycleEnumOptions {
    long cycle_cap = 1000000;
    bool even_only = false;
};

// All simple cycles (2-cycles from parallel edge pairs included), each once,
// sorted by (length, sorted vertex set, rotation-minimal sequence, edge ids).
inline std::vector<CycleWitness> enumerate_cycles(const Graph& g, CycleEnumOptions opt = {}) {
    require_desk_cap(g.n(), "enumerate_cycles");
    std::vector<CycleWitness> out;
    auto push = [&](CycleWitness c) {
        detail::canonicalize_cycle(c);
        out.push_back(std::move(c));
        if ((long)out.size() > opt.cycle_cap)
            throw CapExceeded("enumerate_cycles: cycle cap exceeded");
    };

    // 2-cycles: unordered pairs of parallel edges.
    for (VertexId u = 0; u < g.n(); ++u) {
        for (const auto& h1 : g.adj(u)) {
            if (h1.to <= u) continue;
            for (const auto& h2 : g.adj(u)) {
                if (h2.to == h1.to && h2.e > h1.e) push({{u, h1.to}, {h1.e, h2.e}});
            }
        }
    }

    // Longer cycles: DFS from each anchor a, interior vertices > a, counted
    // once by requiring second vertex < last vertex.
    std::vector<VertexId> vpath;
    std::vector<EdgeId> epath;
    VertexMask onpath = 0;
    auto dfs = [&](auto&& self, VertexId a, VertexId v) -> void {
        for (const auto& h : g.adj(v)) {
            if (h.to == a) {
                if (vpath.size() >= 3 && vpath[1] < v) {
                    if (!opt.even_only || vpath.size() % 2 == 0) {
                        CycleWitness c;
                        c.vertices = vpath;
                        c.edges = epath;
                        c.edges.push_back(h.e);
                        push(std::move(c));
                    }
                }
                continue;
            }
            if (h.to < a || mask_has(onpath, h.to)) continue;
            vpath.push_back(h.to);
            epath.push_back(h.e);
            onpath |= vbit(h.to);
            self(self, a, h.to);
            onpath &= ~vbit(h.to);
            epath.pop_back();
            vpath.pop_back();
        }
    };
    for (VertexId a = 0; a < g.n(); ++a) {
        vpath = {a};
        epath.clear();
        onpath = vbit(a);
        dfs(dfs, a, a);
    }
    std::sort(out.begin(), out.end(), detail::cycle_key_less);
    return out;
}

inline std::vector<CycleWitness> enumerate_even_cycles(const Graph& g, CycleEnumOptions opt = {}) {
    opt.even_only = true;
    return enumerate_cycles(g, opt);
}

inline bool is_conformal_cycle(const Graph& g, const CycleWitness& c, MatchabilityOracle& o) {
    return o.matchable(full_mask(g.n()) & ~c.vertex_mask());
}

// Oracle verdict: either every even cycle is conformal, or the first
// non-conformal even cycle in enumeration order.
struct OracleVerdict {
    bool cycle_extendable = false;
    std::optional<CycleWitness> witness;  // set iff not cycle-extendable
};

inline OracleVerdict brute_force_cycle_extendable(const Graph& g, CycleEnumOptions opt = {}) {
    if (!is_matching_covered(g))
        throw PreconditionError("brute_force_cycle_extendable: input not matching covered");
    MatchabilityOracle o(g);
    for (const CycleWitness& c : enumerate_even_cycles(g, opt)) {
        if (!is_conformal_cycle(g, c, o)) return {false, c};
    }
    return {true, std::nullopt};
}

inline long count_nonconformal_even_cycles(const Graph& g, CycleEnumOptions opt = {}) {
    if (!is_matching_covered(g))
        throw PreconditionError("count_nonconformal_even_cycles: input not matching covered");
    MatchabilityOracle o(g);
    long bad = 0;
    for (const CycleWitness& c : enumerate_even_cycles(g, opt))
        if (!is_conformal_cycle(g, c, o)) ++bad;
    return bad;
}

// First conformal cycle through both edges, in enumeration order. Existence
// is guaranteed for matching covered inputs with distinct edges.
inline std::optional<CycleWitness> conformal_cycle_through(const Graph& g, EdgeId e, EdgeId f,
                                                           CycleEnumOptions opt = {}) {
    if (e == f) throw PreconditionError("conformal_cycle_through: edges must differ");
    MatchabilityOracle o(g);
    for (const CycleWitness& c : enumerate_even_cycles(g, opt)) {
        if (c.contains_edge(e) && c.contains_edge(f) && is_conformal_cycle(g, c, o)) return c;
    }
    return std::nullopt;
}

}  // namespace cyclex

#endif
