#ifndef CYCLEX_IO_HPP
#define CYCLEX_IO_HPP

#include <cctype>
#include <sstream>
#include <string>

#include "cyclex/graph.hpp"

namespace cyclex {

// Edge-list format: first non-comment line "n m", then m lines "u v".
// '#' starts a comment, whitespace separated, decimal ids in [0,n).
inline Graph parse_edgelist(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long n = -1, m = -1;
    long seen = 0;
    Graph g;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string extra;
        if (n < 0) {
            if (!(ls >> n >> m) || (ls >> extra))
                throw ParseError("edge list: expected header \"n m\" at line " + std::to_string(lineno));
            if (n < 0 || n > 64 || m < 0)
                throw ParseError("edge list: bad header values at line " + std::to_string(lineno));
            g = Graph((int)n);
            continue;
        }
        long u, v;
        if (!(ls >> u >> v) || (ls >> extra))
            throw ParseError("edge list: malformed edge at line " + std::to_string(lineno));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge list: vertex out of range at line " + std::to_string(lineno));
        if (u == v) throw ParseError("edge list: loop at line " + std::to_string(lineno));
        if (seen >= m) throw ParseError("edge list: more than m edges");
        g.add_edge((VertexId)u, (VertexId)v);
        ++seen;
    }
    if (n < 0) throw ParseError("edge list: empty input");
    if (seen != m) throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(seen));
    return g;
}

inline std::string emit_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (EdgeId e : g.edge_ids()) {
        auto [u, v] = g.ends(e);
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

// graph6 (simple graphs only). Accepts the optional ">>graph6<<" header.
inline Graph parse_graph6(const std::string& text_in) {
    std::string text = text_in;
    // strip whitespace/newline
    while (!text.empty() && std::isspace((unsigned char)text.back())) text.pop_back();
    size_t pos = 0;
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    const std::string header = ">>graph6<<";
    if (text.compare(pos, header.size(), header) == 0) pos += header.size();
    if (pos >= text.size()) throw ParseError("graph6: empty input");

    auto val = [&](size_t i) -> int {
        unsigned char c = (unsigned char)text[i];
        if (c < 63 || c > 126) throw ParseError("graph6: invalid character");
        return c - 63;
    };

    long n;
    if (val(pos) < 63) {
        n = val(pos);
        ++pos;
    } else {
        // 126 prefix: 18-bit or 36-bit size; only small graphs are supported here
        if (pos + 3 >= text.size()) throw ParseError("graph6: truncated size");
        n = ((long)val(pos + 1) << 12) | ((long)val(pos + 2) << 6) | val(pos + 3);
        pos += 4;
    }
    if (n > 64) throw ParseError("graph6: more than 64 vertices unsupported");
    Graph g((int)n);
    long bits = n * (n - 1) / 2;
    long need = (bits + 5) / 6;
    if ((long)(text.size() - pos) != need) throw ParseError("graph6: length mismatch");
    long bit = 0;
    for (long k = 0; k < need; ++k) {
        int x = val(pos + k);
        for (int b = 5; b >= 0; --b, ++bit) {
            if (bit >= bits) break;
            if ((x >> b) & 1) {
                // bit index -> column-major upper triangle: (0,1),(0,2),(1,2),(0,3)...
                long idx = bit;
                long col = 1;
                while (idx >= col) {
                    idx -= col;
                    ++col;
                }
                g.add_edge((VertexId)idx, (VertexId)col);
            }
        }
    }
    return g;
}

inline std::string emit_graph6(const Graph& g) {
    if (!g.is_simple()) throw PreconditionError("graph6: multigraphs cannot be encoded");
    int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back((char)(n + 63));
    } else {
        out.push_back((char)126);
        out.push_back((char)(((n >> 12) & 63) + 63));
        out.push_back((char)(((n >> 6) & 63) + 63));
        out.push_back((char)((n & 63) + 63));
    }
    int acc = 0, nb = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.find_edge(row, col) >= 0 ? 1 : 0);
            if (++nb == 6) {
                out.push_back((char)(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb > 0) out.push_back((char)((acc << (6 - nb)) + 63));
    return out;
}

// DOT export; highlighted edges/vertices get a distinct style.
inline std::string to_dot(const Graph& g, const std::vector<EdgeId>& highlight_edges = {},
                          VertexMask highlight_vertices = 0) {
    BitRow he;
    for (EdgeId e : highlight_edges) he.set(e);
    std::ostringstream out;
    out << "graph G {\n  node [shape=circle];\n";
    for (VertexId v = 0; v < g.n(); ++v) {
        out << "  " << v;
        if (mask_has(highlight_vertices, v)) out << " [style=filled, fillcolor=lightblue]";
        out << ";\n";
    }
    for (EdgeId e : g.edge_ids()) {
        auto [u, v] = g.ends(e);
        out << "  " << u << " -- " << v;
        if (he.test(e)) out << " [color=red, penwidth=2.0]";
        out << ";  // e" << e << "\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace cyclex

#endif
