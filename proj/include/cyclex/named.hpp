#ifndef CYCLEX_NAMED_HPP
#define CYCLEX_NAMED_HPP

#include "cyclex/graph.hpp"

namespace cyclex {
namespace named {

inline Graph k2() {
    Graph g(2);
    g.add_edge(0, 1);
    return g;
}

inline Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

// Hub n-1 joined to the rim cycle 0..n-2.
inline Graph wheel_on(int rim) {
    Graph g(rim + 1);
    for (int i = 0; i < rim; ++i) {
        g.add_edge(i, (i + 1) % rim);
        g.add_edge(i, rim);
    }
    return g;
}

// Two k-cycles 0..k-1 and k..2k-1 plus rungs i -- k+i.
inline Graph prism_on(int k) {
    Graph g(2 * k);
    for (int i = 0; i < k; ++i) {
        g.add_edge(i, (i + 1) % k);
        g.add_edge(k + i, k + (i + 1) % k);
        g.add_edge(i, k + i);
    }
    return g;
}

inline Graph cube() {
    // vertices = 3-bit strings, edges between strings at Hamming distance 1
    Graph g(8);
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if (v < (v ^ (1 << b))) g.add_edge(v, v ^ (1 << b));
    return g;
}

inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

// The bicorn: hexagon 0..5 with a long chord path, 8 vertices, 12 edges.
// Vertices 0..5 are the hexagon 0-1-2-3-4-5-0; 6 and 7 hang below; edge 1--4
// is the unique removable edge.
inline Graph bicorn_r8() {
    Graph g(8);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 0);
    g.add_edge(5, 6);  // left horn
    g.add_edge(6, 7);
    g.add_edge(7, 2);  // right horn
    g.add_edge(6, 0);
    g.add_edge(3, 7);
    g.add_edge(1, 4);  // the removable edge
    return g;
}

// Bicorn minus its removable edge (8 vertices, 11 edges).
inline Graph r8_minus() {
    Graph g = bicorn_r8();
    g.remove_edge(g.find_edge(1, 4));
    return compacted(g);
}

// The tricorn: central vertex 0 joined to one corner of each of three
// triangles, triangles linked in a cycle. 10 vertices, cubic.
inline Graph tricorn_r10() {
    Graph g(10);
    // triangle corners: (1,2,3) attach to center 0; triangle i has extra
    // vertices 2i+4 and 2i+5
    for (int i = 0; i < 3; ++i) {
        int a = 1 + i, b = 4 + 2 * i, c = 5 + 2 * i;
        g.add_edge(a, b);
        g.add_edge(a, c);
        g.add_edge(b, c);
        g.add_edge(0, a);
    }
    // link the triangles: 5-6, 7-8, 9-4
    g.add_edge(5, 6);
    g.add_edge(7, 8);
    g.add_edge(9, 4);
    return g;
}

// Wheel on a 5-rim minus one spoke (6 vertices, 9 edges).
inline Graph w5_minus() {
    Graph g = wheel_on(5);
    g.remove_edge(g.find_edge(0, 5));
    return compacted(g);
}

// K3,3 with two of its vertices (one per side) blown up into triangles:
// 10 vertices, cubic, decomposes into two K4 bricks and a K3,3 brace.
inline Graph k33_two_triangles() {
    Graph g(10);
    // triangle A: 0,1,2  triangle B: 3,4,5  plain vertices: 6,7,8 one side, 9 other
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 3);
    // K3,3 sides {A, B, 9} x {6, 7, 8}
    g.add_edge(0, 6);
    g.add_edge(1, 7);
    g.add_edge(2, 8);
    g.add_edge(3, 6);
    g.add_edge(4, 7);
    g.add_edge(5, 8);
    g.add_edge(9, 6);
    g.add_edge(9, 7);
    g.add_edge(9, 8);
    return g;
}

}  // namespace named
}  // namespace cyclex

#endif
