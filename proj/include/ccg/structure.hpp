#pragma once

#include <array>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "ccg/convexity.hpp"
#include "ccg/enumerate.hpp"
#include "ccg/graph.hpp"

namespace ccg {

// --- arc / edge edits -----------------------------------------------------------

inline OrientedGraph reverse_arc(const OrientedGraph& g, Arc a) {
    OrientedGraph r = g;
    r.remove_arc(a.tail, a.head);
    r.add_arc(a.head, a.tail);
    return r;
}

inline OrientedGraph delete_arc(const OrientedGraph& g, Arc a) {
    OrientedGraph r = g;
    r.remove_arc(a.tail, a.head);
    return r;
}

// true when u and v are the ends of a 2-dipath, in either traversal order
inline bool joined_by_two_dipath(const OrientedGraph& g, int u, int v) {
    return g.out(u).intersects(g.in(v)) || g.out(v).intersects(g.in(u));
}

struct AddArcResult {
    OrientedGraph graph;
    // when true the new arc's ends were already joined by a 2-dipath, so
    // adding either direction preserves complete convexity
    bool dipath_ends = false;
};

inline AddArcResult add_arc(const OrientedGraph& g, int u, int v) {
    detail::check_vertex(u, g.n(), "add_arc");
    detail::check_vertex(v, g.n(), "add_arc");
    detail::check_distinct(u, v, "add_arc");
    if (g.has_arc(u, v) || g.has_arc(v, u))
        throw std::invalid_argument("add_arc: edge already present");
    AddArcResult r{g, joined_by_two_dipath(g, u, v)};
    r.graph.add_arc(u, v);
    return r;
}

// new vertex n with arcs head->n and n->tail, completing a directed 3-cycle
// through the given arc
inline OrientedGraph add_degree2_vertex(const OrientedGraph& g, Arc a) {
    if (!g.has_arc(a.tail, a.head)) throw std::invalid_argument("add_degree2_vertex: arc absent");
    OrientedGraph r(g.n() + 1);
    for (const Arc& b : g.arcs()) r.add_arc(b.tail, b.head);
    r.add_arc(a.head, g.n());
    r.add_arc(g.n(), a.tail);
    return r;
}

inline OrientedGraph remove_vertex(const OrientedGraph& g, int v) {
    detail::check_vertex(v, g.n(), "remove_vertex");
    OrientedGraph r(g.n() - 1);
    auto map = [&](int w) { return w < v ? w : w - 1; };
    for (const Arc& a : g.arcs())
        if (a.tail != v && a.head != v) r.add_arc(map(a.tail), map(a.head));
    return r;
}

inline SimpleGraph remove_vertex(const SimpleGraph& g, int v) {
    detail::check_vertex(v, g.n(), "remove_vertex");
    SimpleGraph r(g.n() - 1);
    auto map = [&](int w) { return w < v ? w : w - 1; };
    for (const Edge& e : g.edges())
        if (e.u != v && e.v != v) r.add_edge(map(e.u), map(e.v));
    return r;
}

inline TwoEdgeColouredGraph remove_vertex(const TwoEdgeColouredGraph& g, int v) {
    detail::check_vertex(v, g.n(), "remove_vertex");
    TwoEdgeColouredGraph r(g.n() - 1);
    auto map = [&](int w) { return w < v ? w : w - 1; };
    for (const Edge& e : g.red_edges())
        if (e.u != v && e.v != v) r.add_edge(map(e.u), map(e.v), Colour::Red);
    for (const Edge& e : g.blue_edges())
        if (e.u != v && e.v != v) r.add_edge(map(e.u), map(e.v), Colour::Blue);
    return r;
}

inline TwoEdgeColouredGraph flip_edge_colour(const TwoEdgeColouredGraph& g, Edge e) {
    auto c = g.edge_colour(e.u, e.v);
    if (!c) throw std::invalid_argument("flip_edge_colour: edge absent");
    TwoEdgeColouredGraph r = g;
    r.remove_edge(e.u, e.v);
    r.add_edge(e.u, e.v, other(*c));
    return r;
}

inline TwoEdgeColouredGraph delete_edge(const TwoEdgeColouredGraph& g, Edge e) {
    TwoEdgeColouredGraph r = g;
    r.remove_edge(e.u, e.v);
    return r;
}

inline TwoEdgeColouredGraph add_coloured_edge(const TwoEdgeColouredGraph& g, int u, int v, Colour c) {
    if (g.edge_colour(u, v)) throw std::invalid_argument("add_coloured_edge: edge already present");
    TwoEdgeColouredGraph r = g;
    r.add_edge(u, v, c);
    return r;
}

inline bool joined_by_alternating_path(const TwoEdgeColouredGraph& g, int u, int v) {
    return g.red(u).intersects(g.blue(v)) || g.blue(u).intersects(g.red(v));
}

// --- identification -----------------------------------------------------------------

// Disjoint union with tail(a)=tail(b) and head(a)=head(b) merged. Vertices of
// g keep their ids; the remaining vertices of h follow in increasing order.
inline OrientedGraph identify_arcs(const OrientedGraph& g, Arc a, const OrientedGraph& h, Arc b) {
    if (!g.has_arc(a.tail, a.head)) throw std::invalid_argument("identify_arcs: arc absent from first graph");
    if (!h.has_arc(b.tail, b.head)) throw std::invalid_argument("identify_arcs: arc absent from second graph");
    OrientedGraph r(g.n() + h.n() - 2);
    for (const Arc& x : g.arcs()) r.add_arc(x.tail, x.head);
    std::vector<int> map(h.n(), -1);
    map[b.tail] = a.tail;
    map[b.head] = a.head;
    int next = g.n();
    for (int v = 0; v < h.n(); ++v)
        if (map[v] < 0) map[v] = next++;
    for (const Arc& x : h.arcs()) {
        if (x == b) continue;
        r.add_arc(map[x.tail], map[x.head]);
    }
    return r;
}

inline TwoEdgeColouredGraph identify_edges(const TwoEdgeColouredGraph& g, Edge a, const TwoEdgeColouredGraph& h,
                                           Edge b) {
    auto ca = g.edge_colour(a.u, a.v);
    auto cb = h.edge_colour(b.u, b.v);
    if (!ca) throw std::invalid_argument("identify_edges: edge absent from first graph");
    if (!cb) throw std::invalid_argument("identify_edges: edge absent from second graph");
    if (*ca != *cb) throw std::invalid_argument("identify_edges: colour mismatch");
    TwoEdgeColouredGraph r(g.n() + h.n() - 2);
    for (const Edge& e : g.red_edges()) r.add_edge(e.u, e.v, Colour::Red);
    for (const Edge& e : g.blue_edges()) r.add_edge(e.u, e.v, Colour::Blue);
    std::vector<int> map(h.n(), -1);
    map[b.u] = a.u;
    map[b.v] = a.v;
    int next = g.n();
    for (int v = 0; v < h.n(); ++v)
        if (map[v] < 0) map[v] = next++;
    for (const Edge& e : h.red_edges())
        if (!(e == b)) r.add_edge(map[e.u], map[e.v], Colour::Red);
    for (const Edge& e : h.blue_edges())
        if (!(e == b)) r.add_edge(map[e.u], map[e.v], Colour::Blue);
    return r;
}

// --- 2-tree machinery ------------------------------------------------------------------

// order[0] order[1] is the base edge; vertex order[i] (i >= 2) attaches to
// the adjacent pair attachments[i-2]
struct TwoTreeOrdering {
    std::vector<int> order;
    std::vector<Edge> attachments;
};

// Greedy simplicial-pair elimination. For 2-trees any elimination choice
// works, so the greedy run is complete: it reaches K_2 exactly when the graph
// is a 2-tree.
inline std::optional<TwoTreeOrdering> recognize_two_tree(const SimpleGraph& g) {
    const int n = g.n();
    if (n < 2 || !is_connected(g)) return std::nullopt;
    if (g.edge_count() != 2 * n - 3) return std::nullopt;

    std::vector<VertexSet> adj;
    adj.reserve(n);
    for (int v = 0; v < n; ++v) adj.push_back(g.neighbours(v));
    VertexSet alive = VertexSet::full(n);

    std::vector<int> elim;
    std::vector<Edge> attach;
    for (int remaining = n; remaining > 2; --remaining) {
        int pick = -1;
        Edge pair;
        for (int v = 0; v < n && pick < 0; ++v) {
            if (!alive.test(v) || adj[v].count() != 2) continue;
            auto nb = adj[v].to_vector();
            if (adj[nb[0]].test(nb[1])) {
                pick = v;
                pair = Edge(nb[0], nb[1]);
            }
        }
        if (pick < 0) return std::nullopt;
        elim.push_back(pick);
        attach.push_back(pair);
        alive.reset(pick);
        adj[pick].for_each([&](int w) { adj[w].reset(pick); });
        adj[pick].clear();
    }
    auto base = alive.to_vector();
    if (!adj[base[0]].test(base[1])) return std::nullopt;

    TwoTreeOrdering out;
    out.order = {base[0], base[1]};
    for (int i = int(elim.size()) - 1; i >= 0; --i) {
        out.order.push_back(elim[i]);
        out.attachments.push_back(attach[i]);
    }
    return out;
}

inline std::vector<std::array<int, 3>> triangles(const SimpleGraph& g) {
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b) {
            if (!g.has_edge(a, b)) continue;
            for (int c = b + 1; c < g.n(); ++c)
                if (g.has_edge(a, c) && g.has_edge(b, c)) out.push_back({a, b, c});
        }
    return out;
}

inline bool is_directed_triangle(const OrientedGraph& g, int a, int b, int c) {
    return (g.has_arc(a, b) && g.has_arc(b, c) && g.has_arc(c, a)) ||
           (g.has_arc(a, c) && g.has_arc(c, b) && g.has_arc(b, a));
}

// For an orientation of a 2-tree, complete convexity is equivalent to every
// triangle being a directed 3-cycle; this checks the triangle side.
inline bool check_2tree_orientation(const OrientedGraph& g) {
    SimpleGraph u = g.underlying();
    if (!recognize_two_tree(u)) throw std::invalid_argument("check_2tree_orientation: underlying graph not a 2-tree");
    for (const auto& t : triangles(u))
        if (!is_directed_triangle(g, t[0], t[1], t[2])) return false;
    return true;
}

// All 2-trees on 2..max_n vertices, one representative per isomorphism
// class, grown by attaching a new vertex to every edge of every smaller
// class.
inline std::vector<SimpleGraph> two_tree_classes(int max_n) {
    std::vector<SimpleGraph> out;
    if (max_n < 2) return out;
    SimpleGraph k2(2);
    k2.add_edge(0, 1);
    out.push_back(k2);
    std::vector<SimpleGraph> level{k2};
    for (int n = 3; n <= max_n; ++n) {
        std::set<std::vector<uint8_t>> seen;
        std::vector<SimpleGraph> next;
        for (const SimpleGraph& g : level) {
            for (const Edge& e : g.edges()) {
                SimpleGraph h(g.n() + 1);
                for (const Edge& f : g.edges()) h.add_edge(f.u, f.v);
                h.add_edge(e.u, g.n());
                h.add_edge(e.v, g.n());
                if (seen.insert(canonical_key(h)).second) next.push_back(h);
            }
        }
        for (const SimpleGraph& g : next) out.push_back(g);
        level = std::move(next);
    }
    return out;
}

// tree-width <= 2 test at desk scale: spanning subgraph of some 2-tree,
// decided by trying all edge completions
inline bool has_tree_width_at_most_two(const SimpleGraph& g) {
    const int n = g.n();
    if (n <= 2) return true;
    if (g.edge_count() > 2 * n - 3) return false;
    // add the missing edges in every way that reaches the 2-tree edge count
    std::vector<Edge> missing;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) missing.emplace_back(u, v);
    const int need = 2 * n - 3 - g.edge_count();
    std::vector<int> idx(need);
    std::function<bool(int, int)> choose = [&](int at, int from) -> bool {
        if (at == need) {
            SimpleGraph h(n);
            for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
            for (int i = 0; i < need; ++i) h.add_edge(missing[idx[i]].u, missing[idx[i]].v);
            return recognize_two_tree(h).has_value();
        }
        for (int i = from; i < int(missing.size()); ++i) {
            idx[at] = i;
            if (choose(at + 1, i + 1)) return true;
        }
        return false;
    };
    return choose(0, 0);
}

}  // namespace ccg
