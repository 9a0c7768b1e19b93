#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ccg/vertex_set.hpp"

namespace ccg {

enum class GraphKind { Graph, Oriented, TwoEdgeColoured };

enum class Colour : uint8_t { Red, Blue };

inline Colour other(Colour c) { return c == Colour::Red ? Colour::Blue : Colour::Red; }
inline char colour_letter(Colour c) { return c == Colour::Red ? 'r' : 'b'; }

// ordered pair tail -> head
struct Arc {
    int tail = 0;
    int head = 0;
    bool operator==(const Arc& o) const { return tail == o.tail && head == o.head; }
    bool operator<(const Arc& o) const { return tail != o.tail ? tail < o.tail : head < o.head; }
};

// unordered pair, stored with u < v
struct Edge {
    int u = 0;
    int v = 0;
    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}
    bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
    bool operator<(const Edge& o) const { return u != o.u ? u < o.u : v < o.v; }
};

namespace detail {
inline void check_vertex(int v, int n, const char* what) {
    if (v < 0 || v >= n)
        throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) + " out of range");
}
inline void check_distinct(int u, int v, const char* what) {
    if (u == v) throw std::invalid_argument(std::string(what) + ": self-loop at vertex " + std::to_string(u));
}
}  // namespace detail

// Simple graph: no loops, no parallel edges.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : n_(n), adj_(n, VertexSet(n)) {
        if (n < 0) throw std::invalid_argument("SimpleGraph: negative order");
    }

    int n() const { return n_; }

    void add_edge(int u, int v) {
        detail::check_vertex(u, n_, "add_edge");
        detail::check_vertex(v, n_, "add_edge");
        detail::check_distinct(u, v, "add_edge");
        if (adj_[u].test(v))
            throw std::invalid_argument("add_edge: duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        adj_[u].set(v);
        adj_[v].set(u);
        Edge e(u, v);
        edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
    }

    bool has_edge(int u, int v) const {
        detail::check_vertex(u, n_, "has_edge");
        detail::check_vertex(v, n_, "has_edge");
        return u != v && adj_[u].test(v);
    }

    const std::vector<Edge>& edges() const { return edges_; }
    const VertexSet& neighbours(int v) const {
        detail::check_vertex(v, n_, "neighbours");
        return adj_[v];
    }
    int degree(int v) const { return neighbours(v).count(); }
    int edge_count() const { return int(edges_.size()); }

    bool operator==(const SimpleGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<VertexSet> adj_;
};

// Oriented graph: antisymmetric loop-free digraph.
class OrientedGraph {
public:
    OrientedGraph() = default;
    explicit OrientedGraph(int n) : n_(n), out_(n, VertexSet(n)), in_(n, VertexSet(n)) {
        if (n < 0) throw std::invalid_argument("OrientedGraph: negative order");
    }

    int n() const { return n_; }

    void add_arc(int tail, int head) {
        detail::check_vertex(tail, n_, "add_arc");
        detail::check_vertex(head, n_, "add_arc");
        detail::check_distinct(tail, head, "add_arc");
        if (out_[tail].test(head))
            throw std::invalid_argument("add_arc: duplicate arc " + std::to_string(tail) + " " + std::to_string(head));
        if (out_[head].test(tail))
            throw std::invalid_argument("add_arc: digon " + std::to_string(tail) + " " + std::to_string(head) +
                                        " violates antisymmetry");
        out_[tail].set(head);
        in_[head].set(tail);
        Arc a{tail, head};
        arcs_.insert(std::lower_bound(arcs_.begin(), arcs_.end(), a), a);
    }

    void remove_arc(int tail, int head) {
        if (!has_arc(tail, head))
            throw std::invalid_argument("remove_arc: arc " + std::to_string(tail) + " " + std::to_string(head) +
                                        " absent");
        out_[tail].reset(head);
        in_[head].reset(tail);
        Arc a{tail, head};
        arcs_.erase(std::lower_bound(arcs_.begin(), arcs_.end(), a));
    }

    bool has_arc(int tail, int head) const {
        detail::check_vertex(tail, n_, "has_arc");
        detail::check_vertex(head, n_, "has_arc");
        return tail != head && out_[tail].test(head);
    }

    const std::vector<Arc>& arcs() const { return arcs_; }
    const VertexSet& out(int v) const {
        detail::check_vertex(v, n_, "out");
        return out_[v];
    }
    const VertexSet& in(int v) const {
        detail::check_vertex(v, n_, "in");
        return in_[v];
    }
    int arc_count() const { return int(arcs_.size()); }

    SimpleGraph underlying() const {
        SimpleGraph g(n_);
        for (const Arc& a : arcs_) g.add_edge(a.tail, a.head);
        return g;
    }

    bool operator==(const OrientedGraph& o) const { return n_ == o.n_ && arcs_ == o.arcs_; }

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<VertexSet> out_, in_;
};

// 2-edge-coloured graph: each edge red or blue, never both.
class TwoEdgeColouredGraph {
public:
    TwoEdgeColouredGraph() = default;
    explicit TwoEdgeColouredGraph(int n) : n_(n), red_(n, VertexSet(n)), blue_(n, VertexSet(n)) {
        if (n < 0) throw std::invalid_argument("TwoEdgeColouredGraph: negative order");
    }

    int n() const { return n_; }

    void add_edge(int u, int v, Colour c) {
        detail::check_vertex(u, n_, "add_edge");
        detail::check_vertex(v, n_, "add_edge");
        detail::check_distinct(u, v, "add_edge");
        if (red_[u].test(v) || blue_[u].test(v))
            throw std::invalid_argument("add_edge: duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        rows(c)[u].set(v);
        rows(c)[v].set(u);
        auto& list = c == Colour::Red ? red_edges_ : blue_edges_;
        Edge e(u, v);
        list.insert(std::lower_bound(list.begin(), list.end(), e), e);
    }

    void remove_edge(int u, int v) {
        auto c = edge_colour(u, v);
        if (!c)
            throw std::invalid_argument("remove_edge: edge " + std::to_string(u) + " " + std::to_string(v) +
                                        " absent");
        rows(*c)[u].reset(v);
        rows(*c)[v].reset(u);
        auto& list = *c == Colour::Red ? red_edges_ : blue_edges_;
        Edge e(u, v);
        list.erase(std::lower_bound(list.begin(), list.end(), e));
    }

    std::optional<Colour> edge_colour(int u, int v) const {
        detail::check_vertex(u, n_, "edge_colour");
        detail::check_vertex(v, n_, "edge_colour");
        if (u == v) return std::nullopt;
        if (red_[u].test(v)) return Colour::Red;
        if (blue_[u].test(v)) return Colour::Blue;
        return std::nullopt;
    }

    const std::vector<Edge>& red_edges() const { return red_edges_; }
    const std::vector<Edge>& blue_edges() const { return blue_edges_; }

    std::vector<Edge> all_edges() const {
        std::vector<Edge> out;
        out.reserve(red_edges_.size() + blue_edges_.size());
        std::merge(red_edges_.begin(), red_edges_.end(), blue_edges_.begin(), blue_edges_.end(),
                   std::back_inserter(out));
        return out;
    }

    const VertexSet& red(int v) const {
        detail::check_vertex(v, n_, "red");
        return red_[v];
    }
    const VertexSet& blue(int v) const {
        detail::check_vertex(v, n_, "blue");
        return blue_[v];
    }
    int edge_count() const { return int(red_edges_.size() + blue_edges_.size()); }

    SimpleGraph underlying() const {
        SimpleGraph g(n_);
        for (const Edge& e : red_edges_) g.add_edge(e.u, e.v);
        for (const Edge& e : blue_edges_) g.add_edge(e.u, e.v);
        return g;
    }

    bool operator==(const TwoEdgeColouredGraph& o) const {
        return n_ == o.n_ && red_edges_ == o.red_edges_ && blue_edges_ == o.blue_edges_;
    }

private:
    std::vector<VertexSet>& rows(Colour c) { return c == Colour::Red ? red_ : blue_; }

    int n_ = 0;
    std::vector<Edge> red_edges_, blue_edges_;
    std::vector<VertexSet> red_, blue_;
};

// Exactly one of the two variants.
using MixedGraph = std::variant<OrientedGraph, TwoEdgeColouredGraph>;

inline int graph_order(const MixedGraph& g) {
    return std::visit([](const auto& h) { return h.n(); }, g);
}

inline GraphKind kind_of(const MixedGraph& g) {
    return std::holds_alternative<OrientedGraph>(g) ? GraphKind::Oriented : GraphKind::TwoEdgeColoured;
}

inline SimpleGraph underlying(const MixedGraph& g) {
    return std::visit([](const auto& h) { return h.underlying(); }, g);
}

inline std::vector<Edge> underlying_edges(const MixedGraph& g) {
    if (const auto* o = std::get_if<OrientedGraph>(&g)) {
        std::vector<Edge> out;
        out.reserve(o->arcs().size());
        for (const Arc& a : o->arcs()) out.emplace_back(a.tail, a.head);
        std::sort(out.begin(), out.end());
        return out;
    }
    return std::get<TwoEdgeColouredGraph>(g).all_edges();
}

inline int edge_count(const MixedGraph& g) {
    return std::visit([](const auto& h) -> int {
        if constexpr (std::is_same_v<std::decay_t<decltype(h)>, OrientedGraph>)
            return h.arc_count();
        else
            return h.edge_count();
    }, g);
}

// Homomorphism codomain with an implicit loop (of each colour, in the
// two-edge-coloured case) at every vertex. The base graph holds only the
// arcs/edges between distinct vertices.
struct ReflexiveTarget {
    MixedGraph base;
    int n() const { return graph_order(base); }
};

// underlying connectivity, ignoring orientation and colour
inline bool is_connected(const SimpleGraph& g) {
    if (g.n() <= 1) return true;
    VertexSet seen(g.n());
    VertexSet frontier(g.n());
    seen.set(0);
    frontier.set(0);
    while (frontier.any()) {
        VertexSet next(g.n());
        frontier.for_each([&](int v) { next |= g.neighbours(v); });
        next.and_not(seen);
        seen |= next;
        frontier = next;
    }
    return seen.count() == g.n();
}

inline bool is_connected(const OrientedGraph& g) { return is_connected(g.underlying()); }
inline bool is_connected(const TwoEdgeColouredGraph& g) { return is_connected(g.underlying()); }
inline bool is_connected(const MixedGraph& g) { return is_connected(underlying(g)); }

inline OrientedGraph reverse_all_arcs(const OrientedGraph& g) {
    OrientedGraph r(g.n());
    for (const Arc& a : g.arcs()) r.add_arc(a.head, a.tail);
    return r;
}

inline TwoEdgeColouredGraph swap_colours(const TwoEdgeColouredGraph& g) {
    TwoEdgeColouredGraph r(g.n());
    for (const Edge& e : g.red_edges()) r.add_edge(e.u, e.v, Colour::Blue);
    for (const Edge& e : g.blue_edges()) r.add_edge(e.u, e.v, Colour::Red);
    return r;
}

}  // namespace ccg
