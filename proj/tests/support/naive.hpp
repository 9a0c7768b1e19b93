#pragma once

// Naive reference implementations, kept independent of the library's
// worklist/bitset paths: every round scans all vertex triples.

#include <vector>

#include "ccg/graph.hpp"
#include "ccg/vertex_set.hpp"

namespace naive {

inline bool is_centre(const ccg::OrientedGraph& g, int u, int c, int w) {
    return u != c && c != w && g.has_arc(u, c) && g.has_arc(c, w);
}

inline bool is_centre(const ccg::TwoEdgeColouredGraph& g, int u, int c, int w) {
    if (u == c || c == w) return false;
    auto a = g.edge_colour(u, c), b = g.edge_colour(c, w);
    return a && b && *a != *b;
}

template <class G>
ccg::VertexSet centres(const G& g, const ccg::VertexSet& s) {
    ccg::VertexSet out(g.n());
    for (int c = 0; c < g.n(); ++c)
        for (int u = 0; u < g.n(); ++u)
            for (int w = 0; w < g.n(); ++w)
                if (s.test(u) && s.test(w) && is_centre(g, u, c, w)) out.set(c);
    return out;
}

template <class G>
std::vector<ccg::VertexSet> hull_layers(const G& g, const ccg::VertexSet& s) {
    std::vector<ccg::VertexSet> layers{s};
    for (;;) {
        ccg::VertexSet next = layers.back();
        next |= centres(g, layers.back());
        if (next == layers.back()) return layers;
        layers.push_back(next);
    }
}

template <class G>
ccg::VertexSet hull(const G& g, const ccg::VertexSet& s) {
    return hull_layers(g, s).back();
}

inline ccg::VertexSet hull(const ccg::MixedGraph& g, const ccg::VertexSet& s) {
    return std::visit([&](const auto& h) { return hull(h, s); }, g);
}

template <class G>
bool is_complete_convex(const G& g) {
    const ccg::VertexSet all = ccg::VertexSet::full(g.n());
    bool any_edge = false;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            bool adjacent = false;
            if constexpr (std::is_same_v<G, ccg::OrientedGraph>)
                adjacent = g.has_arc(u, v) || g.has_arc(v, u);
            else
                adjacent = g.edge_colour(u, v).has_value();
            if (!adjacent) continue;
            any_edge = true;
            if (hull(g, ccg::VertexSet::of(g.n(), {u, v})) != all) return false;
        }
    return any_edge;
}

}  // namespace naive
