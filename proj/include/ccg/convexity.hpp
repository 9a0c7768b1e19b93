#pragma once

#include <stdexcept>
#include <vector>

#include "ccg/graph.hpp"
#include "ccg/vertex_set.hpp"

namespace ccg {

// Hull closure sequence S_0 c S_1 c ... : strictly growing layers, the last
// one is the hull.
struct HullTrace {
    std::vector<VertexSet> layers;
    const VertexSet& hull() const { return layers.back(); }
};

namespace detail {

// Both graph variants share one centre test. A vertex c is the centre of a
// relevant 2-path with ends in S exactly when rows_a[c] and rows_b[c] both
// meet S:
//   oriented:            rows_a = in-neighbours, rows_b = out-neighbours
//   two-edge-coloured:   rows_a = red-neighbours, rows_b = blue-neighbours
// The two ends are automatically distinct from c (no loops) and from each
// other (a digon / doubly-coloured edge cannot exist).

inline void check_bound(const VertexSet& s, int n, const char* what) {
    if (s.universe_size() != n)
        throw std::invalid_argument(std::string(what) + ": vertex set not bound to this graph");
}

inline VertexSet centres(const std::vector<VertexSet>& rows_a, const std::vector<VertexSet>& rows_b,
                         const VertexSet& s) {
    const int n = int(rows_a.size());
    VertexSet out(n);
    for (int c = 0; c < n; ++c)
        if (rows_a[c].intersects(s) && rows_b[c].intersects(s)) out.set(c);
    return out;
}

// Worklist form of the fixpoint: a vertex can first become a centre only once
// it has a neighbour among the newly added vertices, so each round inspects
// the frontier's neighbourhood instead of every vertex. Rounds evaluate the
// centre condition against the layer as it stood at the start of the round,
// which keeps the layer boundaries identical to the naive iteration.
inline VertexSet hull_fixpoint(const std::vector<VertexSet>& rows_a, const std::vector<VertexSet>& rows_b,
                               const VertexSet& seed, std::vector<VertexSet>* layers = nullptr) {
    const int n = int(rows_a.size());
    VertexSet cur = seed;
    VertexSet frontier = seed;
    VertexSet cand(n), added(n);
    if (layers) layers->push_back(cur);
    for (;;) {
        cand.clear();
        frontier.for_each([&](int v) {
            cand |= rows_a[v];
            cand |= rows_b[v];
        });
        cand.and_not(cur);
        added.clear();
        bool grew = false;
        cand.for_each([&](int c) {
            if (rows_a[c].intersects(cur) && rows_b[c].intersects(cur)) {
                added.set(c);
                grew = true;
            }
        });
        if (!grew) break;
        cur |= added;
        frontier = added;
        if (layers) layers->push_back(cur);
    }
    return cur;
}

inline void build_rows(const OrientedGraph& g, std::vector<VertexSet>& a, std::vector<VertexSet>& b) {
    a.clear();
    b.clear();
    a.reserve(g.n());
    b.reserve(g.n());
    for (int v = 0; v < g.n(); ++v) {
        a.push_back(g.in(v));
        b.push_back(g.out(v));
    }
}

inline void build_rows(const TwoEdgeColouredGraph& g, std::vector<VertexSet>& a, std::vector<VertexSet>& b) {
    a.clear();
    b.clear();
    a.reserve(g.n());
    b.reserve(g.n());
    for (int v = 0; v < g.n(); ++v) {
        a.push_back(g.red(v));
        b.push_back(g.blue(v));
    }
}

}  // namespace detail

// --- two_path_centres -------------------------------------------------------
// Vertices that are the centre of a 2-dipath (oriented) or alternating 2-path
// (two-edge-coloured) whose ends lie in s. Members of s may appear in the
// result; the hull union makes that harmless.

inline VertexSet two_path_centres(const OrientedGraph& g, const VertexSet& s) {
    detail::check_bound(s, g.n(), "two_path_centres");
    VertexSet out(g.n());
    for (int c = 0; c < g.n(); ++c)
        if (g.in(c).intersects(s) && g.out(c).intersects(s)) out.set(c);
    return out;
}

inline VertexSet two_path_centres(const TwoEdgeColouredGraph& g, const VertexSet& s) {
    detail::check_bound(s, g.n(), "two_path_centres");
    VertexSet out(g.n());
    for (int c = 0; c < g.n(); ++c)
        if (g.red(c).intersects(s) && g.blue(c).intersects(s)) out.set(c);
    return out;
}

inline VertexSet two_path_centres(const MixedGraph& g, const VertexSet& s) {
    return std::visit([&](const auto& h) { return two_path_centres(h, s); }, g);
}

// --- convex_hull -------------------------------------------------------------

inline HullTrace convex_hull(const OrientedGraph& g, const VertexSet& s) {
    detail::check_bound(s, g.n(), "convex_hull");
    HullTrace t;
    VertexSet cur = s;
    t.layers.push_back(cur);
    for (;;) {
        VertexSet next = cur;
        next |= two_path_centres(g, cur);
        if (next == cur) break;
        cur = next;
        t.layers.push_back(cur);
    }
    return t;
}

inline HullTrace convex_hull(const TwoEdgeColouredGraph& g, const VertexSet& s) {
    detail::check_bound(s, g.n(), "convex_hull");
    HullTrace t;
    VertexSet cur = s;
    t.layers.push_back(cur);
    for (;;) {
        VertexSet next = cur;
        next |= two_path_centres(g, cur);
        if (next == cur) break;
        cur = next;
        t.layers.push_back(cur);
    }
    return t;
}

inline HullTrace convex_hull(const MixedGraph& g, const VertexSet& s) {
    return std::visit([&](const auto& h) { return convex_hull(h, s); }, g);
}

// hull without the trace, on the worklist fast path
inline VertexSet hull_set(const OrientedGraph& g, const VertexSet& s) {
    detail::check_bound(s, g.n(), "hull_set");
    std::vector<VertexSet> a, b;
    detail::build_rows(g, a, b);
    return detail::hull_fixpoint(a, b, s);
}

inline VertexSet hull_set(const TwoEdgeColouredGraph& g, const VertexSet& s) {
    detail::check_bound(s, g.n(), "hull_set");
    std::vector<VertexSet> a, b;
    detail::build_rows(g, a, b);
    return detail::hull_fixpoint(a, b, s);
}

inline VertexSet hull_set(const MixedGraph& g, const VertexSet& s) {
    return std::visit([&](const auto& h) { return hull_set(h, s); }, g);
}

// --- is_convex ----------------------------------------------------------------

inline bool is_convex(const OrientedGraph& g, const VertexSet& s) {
    detail::check_bound(s, g.n(), "is_convex");
    return two_path_centres(g, s).is_subset_of(s);
}

inline bool is_convex(const TwoEdgeColouredGraph& g, const VertexSet& s) {
    detail::check_bound(s, g.n(), "is_convex");
    return two_path_centres(g, s).is_subset_of(s);
}

inline bool is_convex(const MixedGraph& g, const VertexSet& s) {
    return std::visit([&](const auto& h) { return is_convex(h, s); }, g);
}

// --- is_complete_convex --------------------------------------------------------

struct CompleteConvexResult {
    bool complete = false;
    Edge failing_edge;       // meaningful only when !complete
    VertexSet failing_hull;  // hull of the failing edge
};

namespace detail {

template <class G>
CompleteConvexResult complete_convex_impl(const G& g, const std::vector<Edge>& edges) {
    if (edges.empty()) throw std::invalid_argument("is_complete_convex: edgeless input");
    const VertexSet all = VertexSet::full(g.n());
    std::vector<VertexSet> a, b;
    build_rows(g, a, b);
    for (const Edge& e : edges) {
        VertexSet h = hull_fixpoint(a, b, VertexSet::of(g.n(), {e.u, e.v}));
        if (h != all) return {false, e, h};
    }
    return {true, Edge{}, all};
}

}  // namespace detail

inline CompleteConvexResult complete_convex_witness(const OrientedGraph& g) {
    std::vector<Edge> edges;
    edges.reserve(g.arcs().size());
    for (const Arc& a : g.arcs()) edges.emplace_back(a.tail, a.head);
    return detail::complete_convex_impl(g, edges);
}

inline CompleteConvexResult complete_convex_witness(const TwoEdgeColouredGraph& g) {
    return detail::complete_convex_impl(g, g.all_edges());
}

inline CompleteConvexResult complete_convex_witness(const MixedGraph& g) {
    return std::visit([&](const auto& h) { return complete_convex_witness(h); }, g);
}

inline bool is_complete_convex(const OrientedGraph& g) { return complete_convex_witness(g).complete; }
inline bool is_complete_convex(const TwoEdgeColouredGraph& g) { return complete_convex_witness(g).complete; }
inline bool is_complete_convex(const MixedGraph& g) { return complete_convex_witness(g).complete; }

}  // namespace ccg
