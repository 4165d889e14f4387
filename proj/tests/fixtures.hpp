#pragma once

#include <vector>

#include "regtri/graph.hpp"
#include "regtri/rng.hpp"

namespace fixtures {

inline regtri::Graph cycle(int n) {
    regtri::Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline regtri::Graph path(int n) {
    regtri::Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline regtri::Graph complete(int n) {
    regtri::Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline regtri::Graph complete_bipartite(int a, int b) {
    regtri::Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline regtri::Graph petersen() {
    regtri::Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

// Balanced blow-up of C5: five parts of size m, consecutive parts joined
// completely. 2m-regular on 5m vertices, triangle-free.
inline regtri::Graph c5_blowup(int m) {
    regtri::Graph g(5 * m);
    for (int part = 0; part < 5; ++part)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) g.add_edge(part * m + i, ((part + 1) % 5) * m + j);
    return g;
}

inline regtri::Graph gnp(int n, double p, std::uint64_t seed) {
    regtri::Rng rng(seed);
    regtri::Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform01() < p) g.add_edge(i, j);
    return g;
}

}  // namespace fixtures
