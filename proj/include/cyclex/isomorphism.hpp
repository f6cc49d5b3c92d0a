#ifndef CYCLEX_ISOMORPHISM_HPP
#define CYCLEX_ISOMORPHISM_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "cyclex/graph.hpp"

namespace cyclex {

namespace detail {

// Multiplicity matrix, row-major, entries clipped at 255.
inline std::vector<std::uint8_t> mult_matrix(const Graph& g) {
    int n = g.n();
    std::vector<std::uint8_t> m(n * n, 0);
    for (EdgeId e : g.edge_ids()) {
        auto [u, v] = g.ends(e);
        if (m[u * n + v] < 255) {
            ++m[u * n + v];
            ++m[v * n + u];
        }
    }
    return m;
}

// Iterated neighborhood refinement. Colors are small ints; the signature of a
// color is isomorphism-invariant (built from sorted neighbor data), so color
// values are comparable across graphs.
inline std::vector<int> refine_colors(const Graph& g, const std::vector<std::uint8_t>& mm) {
    int n = g.n();
    std::vector<int> color(n, 0);
    for (int round = 0; round < n; ++round) {
        // signature: (old color, sorted list of (multiplicity, neighbor color))
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<std::pair<int, int>> nb;
            for (int u = 0; u < n; ++u)
                if (mm[v * n + u]) nb.push_back({mm[v * n + u], color[u]});
            std::sort(nb.begin(), nb.end());
            sig[v].push_back(color[v]);
            for (auto& p : nb) {
                sig[v].push_back(p.first);
                sig[v].push_back(p.second);
            }
        }
        std::map<std::vector<int>, int> order;
        for (int v = 0; v < n; ++v) order[sig[v]] = 0;
        int next = 0;
        for (auto& kv : order) kv.second = next++;
        std::vector<int> nc(n);
        for (int v = 0; v < n; ++v) nc[v] = order[sig[v]];
        if (nc == color) break;
        color = nc;
    }
    return color;
}

struct CanonSearch {
    int n;
    const std::vector<std::uint8_t>& mm;
    const std::vector<int>& color;
    std::vector<int> best;      // best key so far
    std::vector<int> cur;       // current partial key
    std::vector<int> perm;      // perm[t] = vertex placed at position t
    std::vector<char> used;
    bool have_best = false;

    CanonSearch(int n_, const std::vector<std::uint8_t>& mm_, const std::vector<int>& color_)
        : n(n_), mm(mm_), color(color_), used(n_, 0) {}

    // key layout per position t: color[v], mm[v][perm[0]], ..., mm[v][perm[t-1]]
    void place(int t) {
        if (t == n) {
            best = cur;
            have_best = true;
            return;
        }
        // candidates: unused vertices of minimal color
        int cmin = -1;
        for (int v = 0; v < n; ++v)
            if (!used[v] && (cmin == -1 || color[v] < cmin)) cmin = color[v];
        for (int v = 0; v < n; ++v) {
            if (used[v] || color[v] != cmin) continue;
            size_t mark = cur.size();
            cur.push_back(color[v]);
            for (int i = 0; i < t; ++i) cur.push_back(mm[v * n + perm[i]]);
            int cmp = 0;  // -1 better, 0 tie, 1 worse vs best prefix
            if (have_best) {
                for (size_t i = mark; i < cur.size() && cmp == 0; ++i)
                    cmp = cur[i] < best[i] ? -1 : (cur[i] > best[i] ? 1 : 0);
            } else {
                cmp = -1;
            }
            if (cmp <= 0) {
                if (cmp < 0) have_best = false;  // strictly better prefix: rebuild
                used[v] = 1;
                perm.push_back(v);
                place(t + 1);
                perm.pop_back();
                used[v] = 0;
            }
            cur.resize(mark);
        }
    }
};

}  // namespace detail

// Canonical key of a multigraph: identical keys iff the graphs are isomorphic
// (as multigraphs). Exponential in the worst case; intended for n <= 64 with
// desk-scale use.
inline std::vector<int> canonical_key(const Graph& g) {
    if (g.n() > 64) throw CapExceeded("canonical_key: more than 64 vertices");
    if (g.n() == 0) return {};
    auto mm = detail::mult_matrix(g);
    auto color = detail::refine_colors(g, mm);
    detail::CanonSearch s(g.n(), mm, color);
    s.place(0);
    std::vector<int> key;
    key.push_back(g.n());
    key.insert(key.end(), s.best.begin(), s.best.end());
    return key;
}

// Edge-multiplicity-preserving isomorphism test.
inline bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.n() != h.n() || g.m() != h.m()) return false;
    if (g.n() > 64 || h.n() > 64) throw CapExceeded("is_isomorphic: more than 64 vertices");
    std::vector<int> dg, dh;
    for (int v = 0; v < g.n(); ++v) dg.push_back(g.degree(v));
    for (int v = 0; v < h.n(); ++v) dh.push_back(h.degree(v));
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    return canonical_key(g) == canonical_key(h);
}

// Girth of the underlying simple graph (length of a shortest cycle), or 0 for
// forests. BFS from every vertex.
inline int simple_girth(const Graph& g) {
    Graph s = underlying_simple(g);
    int best = 0;
    for (VertexId r = 0; r < s.n(); ++r) {
        std::vector<int> dist(s.n(), -1), par(s.n(), -1);
        dist[r] = 0;
        std::vector<VertexId> q{r};
        for (size_t qi = 0; qi < q.size(); ++qi) {
            VertexId v = q[qi];
            for (const auto& h : s.adj(v)) {
                if (dist[h.to] == -1) {
                    dist[h.to] = dist[v] + 1;
                    par[h.to] = v;
                    q.push_back(h.to);
                } else if (h.to != par[v]) {
                    int len = dist[v] + dist[h.to] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

inline bool is_petersen_up_to_multiplicities(const Graph& g) {
    if (g.n() != 10) return false;
    Graph s = underlying_simple(g);
    if (s.m() != 15 || s.min_degree() != 3 || s.max_degree() != 3) return false;
    if (simple_girth(s) != 5) return false;
    // cheap invariants already pin it down among cubic graphs, but confirm
    return is_isomorphic(s, [] {
        Graph p(10);
        for (int i = 0; i < 5; ++i) {
            p.add_edge(i, (i + 1) % 5);
            p.add_edge(5 + i, 5 + (i + 2) % 5);
            p.add_edge(i, 5 + i);
        }
        return p;
    }());
}

}  // namespace cyclex

#endif
