#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ccg/convexity.hpp"
#include "ccg/enumerate.hpp"
#include "ccg/graph.hpp"

namespace ccg {

// Vertex map from a source graph into a target. The source and target are
// passed alongside wherever they are needed; the map itself is plain data.
struct Homomorphism {
    std::vector<int> image;
};

enum class HomClass { Trivial, Improper, Proper };

enum class HomSearchMode { Any, NonTrivial, Proper };

// Target of a homomorphism search: either reflexive (implicit loops) or a
// plain irreflexive mixed graph.
struct Target {
    MixedGraph graph;
    bool reflexive = false;

    static Target reflexive_of(MixedGraph g) { return Target{std::move(g), true}; }
    static Target irreflexive_of(MixedGraph g) { return Target{std::move(g), false}; }
    static Target of(const ReflexiveTarget& t) { return Target{t.base, true}; }
    int n() const { return graph_order(graph); }
};

namespace detail {

struct TargetTables {
    int n = 0;
    bool reflexive = false;
    // oriented: allowed[0][a] = heads reachable from a, allowed[1][a] = tails into a
    // 2ec:      allowed[0][a] = red partners of a, allowed[1][a] = blue partners
    std::vector<VertexSet> fwd, bwd;

    static TargetTables build(const Target& t) {
        TargetTables tt;
        tt.n = t.n();
        tt.reflexive = t.reflexive;
        tt.fwd.assign(tt.n, VertexSet(tt.n));
        tt.bwd.assign(tt.n, VertexSet(tt.n));
        if (const auto* o = std::get_if<OrientedGraph>(&t.graph)) {
            for (int v = 0; v < tt.n; ++v) {
                tt.fwd[v] = o->out(v);
                tt.bwd[v] = o->in(v);
            }
        } else {
            const auto& c = std::get<TwoEdgeColouredGraph>(t.graph);
            for (int v = 0; v < tt.n; ++v) {
                tt.fwd[v] = c.red(v);
                tt.bwd[v] = c.blue(v);
            }
        }
        if (t.reflexive)
            for (int v = 0; v < tt.n; ++v) {
                tt.fwd[v].set(v);
                tt.bwd[v].set(v);
            }
        return tt;
    }
};

// source constraints as (vertex, other, relation) triples:
// oriented: relation 0 = arc v->other, 1 = arc other->v
// 2ec:      relation 0 = red edge, 1 = blue edge
struct SourceView {
    int n = 0;
    GraphKind kind = GraphKind::Oriented;
    struct Constraint {
        int other;
        int rel;
    };
    std::vector<std::vector<Constraint>> at;  // per vertex
    std::vector<std::pair<int, int>> loopable_pairs;  // adjacent pairs (any relation)

    static SourceView build(const MixedGraph& g) {
        SourceView sv;
        sv.n = graph_order(g);
        sv.kind = kind_of(g);
        sv.at.assign(sv.n, {});
        if (const auto* o = std::get_if<OrientedGraph>(&g)) {
            for (const Arc& a : o->arcs()) {
                sv.at[a.tail].push_back({a.head, 0});
                sv.at[a.head].push_back({a.tail, 1});
                sv.loopable_pairs.emplace_back(a.tail, a.head);
            }
        } else {
            const auto& c = std::get<TwoEdgeColouredGraph>(g);
            for (const Edge& e : c.red_edges()) {
                sv.at[e.u].push_back({e.v, 0});
                sv.at[e.v].push_back({e.u, 0});
                sv.loopable_pairs.emplace_back(e.u, e.v);
            }
            for (const Edge& e : c.blue_edges()) {
                sv.at[e.u].push_back({e.v, 1});
                sv.at[e.v].push_back({e.u, 1});
                sv.loopable_pairs.emplace_back(e.u, e.v);
            }
        }
        return sv;
    }
};

// breadth-first order from a maximum-degree root; ties to the lowest index
inline std::vector<int> bfs_order(const SourceView& sv) {
    std::vector<int> order;
    std::vector<char> seen(sv.n, 0);
    while (int(order.size()) < sv.n) {
        int root = -1;
        for (int v = 0; v < sv.n; ++v)
            if (!seen[v] && (root < 0 || sv.at[v].size() > sv.at[root].size())) root = v;
        std::vector<int> queue{root};
        seen[root] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            order.push_back(v);
            std::vector<int> nbrs;
            for (const auto& c : sv.at[v])
                if (!seen[c.other]) nbrs.push_back(c.other);
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
            for (int w : nbrs) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    return order;
}

}  // namespace detail

// --- is_homomorphism / classify ------------------------------------------------

inline bool is_homomorphism(const MixedGraph& src, const Target& tgt, const Homomorphism& h) {
    if (kind_of(src) != kind_of(tgt.graph)) return false;
    const int n = graph_order(src);
    if (int(h.image.size()) != n) return false;
    const int tn = tgt.n();
    for (int v = 0; v < n; ++v)
        if (h.image[v] < 0 || h.image[v] >= tn) return false;
    if (const auto* o = std::get_if<OrientedGraph>(&src)) {
        const auto& t = std::get<OrientedGraph>(tgt.graph);
        for (const Arc& a : o->arcs()) {
            int x = h.image[a.tail], y = h.image[a.head];
            if (x == y ? !tgt.reflexive : !t.has_arc(x, y)) return false;
        }
    } else {
        const auto& s = std::get<TwoEdgeColouredGraph>(src);
        const auto& t = std::get<TwoEdgeColouredGraph>(tgt.graph);
        for (const Edge& e : s.red_edges()) {
            int x = h.image[e.u], y = h.image[e.v];
            if (x == y ? !tgt.reflexive : t.edge_colour(x, y) != Colour::Red) return false;
        }
        for (const Edge& e : s.blue_edges()) {
            int x = h.image[e.u], y = h.image[e.v];
            if (x == y ? !tgt.reflexive : t.edge_colour(x, y) != Colour::Blue) return false;
        }
    }
    return true;
}

// trivial: every arc/edge on the same loop; improper: some but not defining-all
// on loops; proper: none. Only meaningful for reflexive targets.
inline HomClass classify(const MixedGraph& src, const ReflexiveTarget& tgt, const Homomorphism& h) {
    Target t = Target::of(tgt);
    if (!is_homomorphism(src, t, h)) throw std::invalid_argument("classify: not a homomorphism");
    std::vector<std::pair<int, int>> pairs = detail::SourceView::build(src).loopable_pairs;
    int loops = 0;
    int loop_vertex = -1;
    bool same_loop = true;
    for (auto [u, v] : pairs) {
        if (h.image[u] == h.image[v]) {
            ++loops;
            if (loop_vertex < 0)
                loop_vertex = h.image[u];
            else if (loop_vertex != h.image[u])
                same_loop = false;
        }
    }
    if (loops == 0) return HomClass::Proper;
    if (loops == int(pairs.size()) && same_loop) return HomClass::Trivial;
    return HomClass::Improper;
}

// --- backtracking search ---------------------------------------------------------

// Deterministic backtracking over a breadth-first vertex order with
// arc-consistency against already-assigned neighbours. Absence is a value,
// not an error.
inline std::optional<Homomorphism> find_homomorphism(const MixedGraph& src, const Target& tgt,
                                                     HomSearchMode mode = HomSearchMode::Any) {
    if (kind_of(src) != kind_of(tgt.graph))
        throw std::invalid_argument("find_homomorphism: source and target kinds differ");
    if (!tgt.reflexive && mode != HomSearchMode::Proper) mode = HomSearchMode::Proper;

    const auto sv = detail::SourceView::build(src);
    const auto tt = detail::TargetTables::build(tgt);
    const auto order = detail::bfs_order(sv);
    const int n = sv.n;
    const bool forbid_loops = (mode == HomSearchMode::Proper);

    std::vector<int> image(n, -1);
    std::optional<Homomorphism> found;

    auto candidates_for = [&](int v) {
        VertexSet cand = VertexSet::full(tt.n);
        for (const auto& c : sv.at[v]) {
            if (image[c.other] < 0) continue;
            int w = image[c.other];
            // oriented rel 0: v->other needs image[v] in bwd-compatible set of w
            // (tails into w); rel 1: other->v needs heads out of w. 2ec rel 0/1
            // pick the red/blue partner row directly.
            VertexSet allowed(tt.n);
            if (sv.kind == GraphKind::Oriented)
                allowed = (c.rel == 0) ? tt.bwd[w] : tt.fwd[w];
            else
                allowed = (c.rel == 0) ? tt.fwd[w] : tt.bwd[w];
            if (forbid_loops) allowed.reset(w);
            cand &= allowed;
        }
        return cand;
    };

    auto leaf_ok = [&]() {
        if (mode == HomSearchMode::Any || mode == HomSearchMode::Proper) return true;
        // NonTrivial: reject the all-on-one-loop maps
        bool all_loops = true;
        int loop_vertex = -1;
        bool same = true;
        for (auto [u, v] : sv.loopable_pairs) {
            if (image[u] != image[v]) {
                all_loops = false;
                break;
            }
            if (loop_vertex < 0)
                loop_vertex = image[u];
            else if (loop_vertex != image[u])
                same = false;
        }
        if (sv.loopable_pairs.empty()) return true;  // arcless source: vacuously proper
        return !(all_loops && same);
    };

    std::function<bool(size_t)> go = [&](size_t idx) -> bool {
        if (idx == order.size()) {
            if (!leaf_ok()) return false;
            found = Homomorphism{image};
            return true;
        }
        int v = order[idx];
        VertexSet cand = candidates_for(v);
        bool done = false;
        cand.for_each([&](int t) {
            if (done) return;
            image[v] = t;
            if (go(idx + 1)) done = true;
            image[v] = -1;
        });
        return done;
    };

    go(0);
    return found;
}

// --- quotient witness --------------------------------------------------------------

struct QuotientWitness {
    ReflexiveTarget target;
    Homomorphism map;
};

// Contracts a convex set with an internal arc/edge to one vertex. The merged
// vertex has image 0; the remaining vertices follow in increasing order.
// Convexity of s guarantees an oriented target stays antisymmetric and a
// coloured target never inherits both colours on one pair.
inline QuotientWitness quotient_by_convex(const MixedGraph& g, const VertexSet& s) {
    const int n = graph_order(g);
    detail::check_bound(s, n, "quotient_by_convex");
    if (!is_convex(g, s)) throw std::invalid_argument("quotient_by_convex: set not convex");
    if (s.count() == n) throw std::invalid_argument("quotient_by_convex: set is the whole vertex set");

    std::vector<int> image(n, -1);
    int next = 1;
    for (int v = 0; v < n; ++v) image[v] = s.test(v) ? 0 : next++;

    bool internal = false;
    for (const Edge& e : underlying_edges(g))
        if (s.test(e.u) && s.test(e.v)) internal = true;
    if (!internal) throw std::invalid_argument("quotient_by_convex: set has no internal edge");

    MixedGraph base;
    if (const auto* o = std::get_if<OrientedGraph>(&g)) {
        OrientedGraph t(next);
        for (const Arc& a : o->arcs()) {
            int x = image[a.tail], y = image[a.head];
            if (x != y && !t.has_arc(x, y)) t.add_arc(x, y);  // digon would throw; convexity forbids it
        }
        base = std::move(t);
    } else {
        const auto& c = std::get<TwoEdgeColouredGraph>(g);
        TwoEdgeColouredGraph t(next);
        for (const Edge& e : c.red_edges()) {
            int x = image[e.u], y = image[e.v];
            if (x != y && t.edge_colour(x, y) != Colour::Red) t.add_edge(x, y, Colour::Red);
        }
        for (const Edge& e : c.blue_edges()) {
            int x = image[e.u], y = image[e.v];
            if (x != y && t.edge_colour(x, y) != Colour::Blue) t.add_edge(x, y, Colour::Blue);
        }
        base = std::move(t);
    }
    return QuotientWitness{ReflexiveTarget{std::move(base)}, Homomorphism{std::move(image)}};
}

// Improper-homomorphism witness, built iff the graph is not complete convex.
inline std::optional<QuotientWitness> admits_improper(const MixedGraph& g) {
    if (edge_count(g) == 0) throw std::invalid_argument("admits_improper: edgeless input");
    if (!is_connected(g)) throw std::invalid_argument("admits_improper: disconnected input");
    auto cc = complete_convex_witness(g);
    if (cc.complete) return std::nullopt;
    return quotient_by_convex(g, cc.failing_hull);
}

// --- chromatic numbers ---------------------------------------------------------------

struct ChromaticWitness {
    int k = 0;
    OrientedGraph tournament;
    Homomorphism map;
};

constexpr int kChromaticLimit = kTournamentLimit;

// least k with a homomorphism into some irreflexive k-tournament
inline ChromaticWitness oriented_chromatic_witness(const OrientedGraph& g, int limit = kChromaticLimit) {
    for (int k = 1; k <= limit; ++k) {
        for (const OrientedGraph& t : enumerate_tournaments(k, /*iso_reduce=*/true, limit)) {
            auto h = find_homomorphism(MixedGraph(g), Target::irreflexive_of(MixedGraph(t)), HomSearchMode::Proper);
            if (h) return {k, t, *h};
        }
    }
    throw std::invalid_argument("oriented_chromatic_number: size limit exceeded");
}

inline int oriented_chromatic_number(const OrientedGraph& g, int limit = kChromaticLimit) {
    return oriented_chromatic_witness(g, limit).k;
}

// least k with a non-trivial homomorphism into some reflexive k-tournament
inline ChromaticWitness simple_chromatic_witness(const OrientedGraph& g, int limit = kChromaticLimit) {
    for (int k = 1; k <= limit; ++k) {
        for (const OrientedGraph& t : enumerate_tournaments(k, /*iso_reduce=*/true, limit)) {
            auto h = find_homomorphism(MixedGraph(g), Target::reflexive_of(MixedGraph(t)),
                                       HomSearchMode::NonTrivial);
            if (h) return {k, t, *h};
        }
    }
    throw std::invalid_argument("simple_chromatic_number: size limit exceeded");
}

inline int simple_chromatic_number(const OrientedGraph& g, int limit = kChromaticLimit) {
    return simple_chromatic_witness(g, limit).k;
}

}  // namespace ccg
