#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "ccg/graph.hpp"

namespace ccg {

// --- orientations and colourings of a fixed underlying graph ----------------
// Bit i of the index controls edge i (in the graph's sorted edge order):
// 0 = arc u->v / red, 1 = arc v->u / blue. Index ranges over [0, 2^|E|), so
// streams may be split by index range for parallel consumption.

inline uint64_t orientation_count(const SimpleGraph& g) {
    if (g.edge_count() >= 63) throw std::invalid_argument("orientation_count: too many edges");
    return uint64_t(1) << g.edge_count();
}

inline OrientedGraph orientation_from_mask(const SimpleGraph& g, uint64_t mask) {
    OrientedGraph o(g.n());
    const auto& es = g.edges();
    for (size_t i = 0; i < es.size(); ++i) {
        if ((mask >> i) & 1)
            o.add_arc(es[i].v, es[i].u);
        else
            o.add_arc(es[i].u, es[i].v);
    }
    return o;
}

inline TwoEdgeColouredGraph colouring_from_mask(const SimpleGraph& g, uint64_t mask) {
    TwoEdgeColouredGraph c(g.n());
    const auto& es = g.edges();
    for (size_t i = 0; i < es.size(); ++i)
        c.add_edge(es[i].u, es[i].v, ((mask >> i) & 1) ? Colour::Blue : Colour::Red);
    return c;
}

template <class F>
void for_each_orientation(const SimpleGraph& g, F&& f) {
    const uint64_t total = orientation_count(g);
    for (uint64_t m = 0; m < total; ++m) f(orientation_from_mask(g, m));
}

template <class F>
void for_each_colouring(const SimpleGraph& g, F&& f) {
    const uint64_t total = orientation_count(g);
    for (uint64_t m = 0; m < total; ++m) f(colouring_from_mask(g, m));
}

// --- labelled graph enumeration ----------------------------------------------

namespace detail {

inline std::vector<Edge> pair_order(int n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

}  // namespace detail

constexpr int kEnumerationLimit = 7;

inline SimpleGraph graph_from_mask(int n, uint64_t mask) {
    SimpleGraph g(n);
    auto pairs = detail::pair_order(n);
    for (size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1) g.add_edge(pairs[i].u, pairs[i].v);
    return g;
}

// Every connected simple graph on n labelled vertices, exactly once.
template <class F>
void for_each_connected_graph(int n, F&& f, int limit = kEnumerationLimit) {
    if (n < 1 || n > limit) throw std::invalid_argument("for_each_connected_graph: n out of range");
    const int pairs = n * (n - 1) / 2;
    for (uint64_t mask = 0; mask < (uint64_t(1) << pairs); ++mask) {
        SimpleGraph g = graph_from_mask(n, mask);
        if (is_connected(g)) f(g);
    }
}

// Every oriented graph on n labelled vertices: each vertex pair independently
// carries no arc, u->v, or v->u.
template <class F>
void for_each_oriented_graph(int n, bool connected_only, F&& f, int limit = kEnumerationLimit) {
    if (n < 1 || n > limit) throw std::invalid_argument("for_each_oriented_graph: n out of range");
    auto pairs = detail::pair_order(n);
    std::vector<int> trit(pairs.size(), 0);
    for (;;) {
        OrientedGraph g(n);
        for (size_t i = 0; i < pairs.size(); ++i) {
            if (trit[i] == 1) g.add_arc(pairs[i].u, pairs[i].v);
            if (trit[i] == 2) g.add_arc(pairs[i].v, pairs[i].u);
        }
        if (!connected_only || is_connected(g)) f(g);
        size_t i = 0;
        while (i < trit.size() && trit[i] == 2) trit[i++] = 0;
        if (i == trit.size()) break;
        ++trit[i];
    }
}

template <class F>
void for_each_two_edge_coloured_graph(int n, bool connected_only, F&& f, int limit = kEnumerationLimit) {
    if (n < 1 || n > limit) throw std::invalid_argument("for_each_two_edge_coloured_graph: n out of range");
    auto pairs = detail::pair_order(n);
    std::vector<int> trit(pairs.size(), 0);
    for (;;) {
        TwoEdgeColouredGraph g(n);
        for (size_t i = 0; i < pairs.size(); ++i) {
            if (trit[i] == 1) g.add_edge(pairs[i].u, pairs[i].v, Colour::Red);
            if (trit[i] == 2) g.add_edge(pairs[i].u, pairs[i].v, Colour::Blue);
        }
        if (!connected_only || is_connected(g)) f(g);
        size_t i = 0;
        while (i < trit.size() && trit[i] == 2) trit[i++] = 0;
        if (i == trit.size()) break;
        ++trit[i];
    }
}

// --- canonical forms ----------------------------------------------------------
// Minimum adjacency encoding over vertex permutations; permutations are
// restricted to those preserving the degree sequence, which prunes most of
// the factorial at these sizes.

namespace detail {

template <class Encode>
std::vector<uint8_t> min_permuted_encoding(int n, const std::vector<int>& degree_key, Encode&& encode) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        return degree_key[a] != degree_key[b] ? degree_key[a] < degree_key[b] : a < b;
    });
    std::vector<uint8_t> best;
    do {
        bool order_ok = true;
        for (int i = 0; i + 1 < n && order_ok; ++i)
            if (degree_key[perm[i]] > degree_key[perm[i + 1]]) order_ok = false;
        if (!order_ok) continue;
        std::vector<uint8_t> enc = encode(perm);
        if (best.empty() || enc < best) best = std::move(enc);
    } while (std::next_permutation(perm.begin(), perm.end(), [&](int a, int b) {
        return degree_key[a] != degree_key[b] ? degree_key[a] < degree_key[b] : a < b;
    }));
    return best;
}

}  // namespace detail

inline std::vector<uint8_t> canonical_key(const SimpleGraph& g) {
    const int n = g.n();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    return detail::min_permuted_encoding(n, deg, [&](const std::vector<int>& perm) {
        std::vector<uint8_t> enc;
        enc.reserve(size_t(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) enc.push_back(g.has_edge(perm[i], perm[j]) ? 1 : 0);
        return enc;
    });
}

inline std::vector<uint8_t> canonical_key(const OrientedGraph& g) {
    const int n = g.n();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.out(v).count() * 64 + g.in(v).count();
    return detail::min_permuted_encoding(n, deg, [&](const std::vector<int>& perm) {
        std::vector<uint8_t> enc;
        enc.reserve(size_t(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) enc.push_back(g.has_arc(perm[i], perm[j]) ? 1 : 0);
        return enc;
    });
}

inline std::vector<uint8_t> canonical_key(const TwoEdgeColouredGraph& g) {
    const int n = g.n();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.red(v).count() * 64 + g.blue(v).count();
    return detail::min_permuted_encoding(n, deg, [&](const std::vector<int>& perm) {
        std::vector<uint8_t> enc;
        enc.reserve(size_t(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                auto c = g.edge_colour(perm[i], perm[j]);
                enc.push_back(!c ? 0 : (*c == Colour::Red ? 1 : 2));
            }
        return enc;
    });
}

// One representative per isomorphism class.
inline std::vector<SimpleGraph> connected_graph_classes(int n, int limit = kEnumerationLimit) {
    std::set<std::vector<uint8_t>> seen;
    std::vector<SimpleGraph> out;
    for_each_connected_graph(n, [&](const SimpleGraph& g) {
        if (seen.insert(canonical_key(g)).second) out.push_back(g);
    }, limit);
    return out;
}

// --- tournaments ---------------------------------------------------------------

constexpr int kTournamentLimit = 5;

inline bool is_tournament(const OrientedGraph& g) {
    return g.arc_count() == g.n() * (g.n() - 1) / 2;
}

inline std::vector<OrientedGraph> enumerate_tournaments(int k, bool iso_reduce = false,
                                                        int limit = kTournamentLimit) {
    if (k < 1 || k > limit) throw std::invalid_argument("enumerate_tournaments: k out of range");
    SimpleGraph complete(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) complete.add_edge(u, v);
    std::vector<OrientedGraph> out;
    std::set<std::vector<uint8_t>> seen;
    for_each_orientation(complete, [&](const OrientedGraph& t) {
        if (iso_reduce && !seen.insert(canonical_key(t)).second) return;
        out.push_back(t);
    });
    return out;
}

}  // namespace ccg
