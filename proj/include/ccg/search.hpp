#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ccg/convexity.hpp"
#include "ccg/enumerate.hpp"
#include "ccg/graph.hpp"

namespace ccg {

enum class SearchOutcome { Found, CertifiedNone, Indeterminate };

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::Indeterminate;
    std::optional<MixedGraph> witness;
    uint64_t scanned = 0;
};

struct SearchOptions {
    bool exhaustive = true;
    uint64_t budget = 0;  // candidate limit in budgeted mode
    int threads = 1;
    int exhaustive_edge_limit = 28;
};

namespace detail {

// Scratch completion of a fixed underlying graph: row bitsets keyed by the
// centre test (in/out or red/blue), updated one edge at a time along a
// Gray-code walk. Mask bit i = 0 orients edge i u->v / colours it red.
struct CompletionScratch {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<VertexSet> rows_a, rows_b;  // oriented: in/out; 2ec: red/blue
    GraphKind kind = GraphKind::Oriented;

    CompletionScratch(const SimpleGraph& g, GraphKind k)
        : n(g.n()), edges(g.edges()), rows_a(g.n(), VertexSet(g.n())), rows_b(g.n(), VertexSet(g.n())), kind(k) {}

    void apply_bit(size_t i, bool bit) {
        const auto [u, v] = edges[i];
        if (kind == GraphKind::Oriented) {
            // bit 0: u->v, so rows_a (in) at v gains u and rows_b (out) at u gains v
            int tail = bit ? v : u, head = bit ? u : v;
            rows_a[head].set(tail);
            rows_b[tail].set(head);
        } else {
            // bit 0: red edge
            auto& rows = bit ? rows_b : rows_a;
            rows[u].set(v);
            rows[v].set(u);
        }
    }

    void clear_bit(size_t i, bool bit) {
        const auto [u, v] = edges[i];
        if (kind == GraphKind::Oriented) {
            int tail = bit ? v : u, head = bit ? u : v;
            rows_a[head].reset(tail);
            rows_b[tail].reset(head);
        } else {
            auto& rows = bit ? rows_b : rows_a;
            rows[u].reset(v);
            rows[v].reset(u);
        }
    }

    void load_mask(uint64_t mask) {
        for (auto& r : rows_a) r.clear();
        for (auto& r : rows_b) r.clear();
        for (size_t i = 0; i < edges.size(); ++i) apply_bit(i, (mask >> i) & 1);
    }

    void flip_bit(size_t i, uint64_t old_mask) {
        bool old_bit = (old_mask >> i) & 1;
        clear_bit(i, old_bit);
        apply_bit(i, !old_bit);
    }

    MixedGraph materialize(uint64_t mask) const {
        if (kind == GraphKind::Oriented) {
            OrientedGraph g(n);
            for (size_t i = 0; i < edges.size(); ++i) {
                bool bit = (mask >> i) & 1;
                g.add_arc(bit ? edges[i].v : edges[i].u, bit ? edges[i].u : edges[i].v);
            }
            return g;
        }
        TwoEdgeColouredGraph g(n);
        for (size_t i = 0; i < edges.size(); ++i)
            g.add_edge(edges[i].u, edges[i].v, ((mask >> i) & 1) ? Colour::Blue : Colour::Red);
        return g;
    }
};

// Complete-convexity check with early exit. Starts with the edge that failed
// for the previous candidate; failures cluster there.
struct CcChecker {
    VertexSet full;
    size_t last_fail = 0;

    explicit CcChecker(int n) : full(VertexSet::full(n)) {}

    bool check(const CompletionScratch& s) {
        const size_t m = s.edges.size();
        if (last_fail < m && !edge_hull_full(s, last_fail)) return false;
        for (size_t i = 0; i < m; ++i) {
            if (i == last_fail) continue;
            if (!edge_hull_full(s, i)) {
                last_fail = i;
                return false;
            }
        }
        return true;
    }

private:
    bool edge_hull_full(const CompletionScratch& s, size_t i) {
        VertexSet seed(s.n);
        seed.set(s.edges[i].u);
        seed.set(s.edges[i].v);
        return hull_fixpoint(s.rows_a, s.rows_b, seed) == full;
    }
};

// Gray-code walk over completion indices [begin, end): candidate i carries
// mask gray(i) << 1, bit 0 staying pinned by the symmetry break. visit
// returning true stops the walk, as does poll (checked every few thousand
// candidates). Returns the number of candidates inspected.
template <class Visit, class Poll>
uint64_t scan_gray(const SimpleGraph& g, GraphKind kind, uint64_t begin, uint64_t end, Visit&& visit, Poll&& poll) {
    CompletionScratch scratch(g, kind);
    CcChecker checker(g.n());
    auto gray = [](uint64_t i) { return i ^ (i >> 1); };
    uint64_t mask = gray(begin) << 1;
    scratch.load_mask(mask);
    for (uint64_t i = begin; i < end; ++i) {
        if ((i & 0x1FFF) == 0 && poll()) return i - begin;
        if (checker.check(scratch) && visit(mask, i)) return i - begin + 1;
        uint64_t ni = i + 1;
        if (ni < end) {
            size_t flip = size_t(std::countr_zero(ni)) + 1;  // bit 0 is pinned
            scratch.flip_bit(flip, mask);
            mask ^= uint64_t(1) << flip;
        }
    }
    return end - begin;
}

}  // namespace detail

// Exhaustive or budgeted search for a complete-convex orientation /
// 2-edge-colouring of an underlying graph. The first edge's direction
// (colour) is pinned; the converse (colour swap) of any witness is a
// witness, so nothing is lost. Certified absence is only reported by the
// exhaustive mode. The witness is the one with the smallest completion
// index, independent of the thread count.
inline SearchResult search_cc(const SimpleGraph& g, GraphKind kind, const SearchOptions& opt = {}) {
    if (kind == GraphKind::Graph) throw std::invalid_argument("search_cc: pick oriented or 2ec");
    if (g.edge_count() == 0) throw std::invalid_argument("search_cc: edgeless input");
    const int m = g.edge_count();
    if (opt.exhaustive && m > opt.exhaustive_edge_limit)
        throw std::invalid_argument("search_cc: edge count over the exhaustive limit");

    const uint64_t space = uint64_t(1) << (m - 1);
    const uint64_t total = opt.exhaustive ? space : std::min(space, opt.budget);
    const int threads = std::max(1, opt.threads);
    const uint64_t chunk = (total + threads - 1) / threads;

    struct Hit {
        uint64_t index;
        uint64_t mask;
    };
    std::vector<std::optional<Hit>> found(threads);
    std::vector<uint64_t> scanned(threads, 0);
    std::atomic<uint64_t> best_index{~uint64_t(0)};

    auto run = [&](int t) {
        const uint64_t b = std::min(total, t * chunk), e = std::min(total, (t + 1) * chunk);
        scanned[t] = detail::scan_gray(
            g, kind, b, e,
            [&](uint64_t mask, uint64_t i) {
                found[t] = Hit{i, mask};
                uint64_t cur = best_index.load();
                while (i < cur && !best_index.compare_exchange_weak(cur, i)) {
                }
                return true;  // first hit in this chunk is its best
            },
            [&]() { return best_index.load() < b; });
    };

    if (threads == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(run, t);
        for (auto& th : pool) th.join();
    }

    SearchResult res;
    for (auto c : scanned) res.scanned += c;
    const Hit* best = nullptr;
    for (int t = 0; t < threads; ++t)
        if (found[t] && (!best || found[t]->index < best->index)) best = &*found[t];
    if (best) {
        detail::CompletionScratch scratch(g, kind);
        res.outcome = SearchOutcome::Found;
        res.witness = scratch.materialize(best->mask);
        return res;
    }
    res.outcome = opt.exhaustive ? SearchOutcome::CertifiedNone : SearchOutcome::Indeterminate;
    return res;
}

// Every complete-convex completion: the pinned-bit scan results plus their
// converses / colour swaps. Sorted by mask; deterministic for any thread
// count.
inline std::vector<MixedGraph> search_cc_all(const SimpleGraph& g, GraphKind kind, int threads = 1,
                                             int edge_limit = 28) {
    if (kind == GraphKind::Graph) throw std::invalid_argument("search_cc_all: pick oriented or 2ec");
    if (g.edge_count() == 0) throw std::invalid_argument("search_cc_all: edgeless input");
    const int m = g.edge_count();
    if (m > edge_limit) throw std::invalid_argument("search_cc_all: edge count over the exhaustive limit");

    const uint64_t space = uint64_t(1) << (m - 1);
    threads = std::max(1, threads);
    const uint64_t chunk = (space + threads - 1) / threads;
    std::vector<std::vector<uint64_t>> hits(threads);

    auto run = [&](int t) {
        const uint64_t b = std::min(space, t * chunk), e = std::min(space, (t + 1) * chunk);
        detail::scan_gray(
            g, kind, b, e,
            [&](uint64_t mask, uint64_t) {
                hits[t].push_back(mask);
                return false;
            },
            []() { return false; });
    };

    if (threads == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(run, t);
        for (auto& th : pool) th.join();
    }

    std::vector<uint64_t> masks;
    for (auto& h : hits) masks.insert(masks.end(), h.begin(), h.end());
    const uint64_t all_bits = (uint64_t(1) << m) - 1;  // m <= edge_limit < 64
    const size_t pinned = masks.size();
    for (size_t i = 0; i < pinned; ++i) masks.push_back(masks[i] ^ all_bits);
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

    detail::CompletionScratch scratch(g, kind);
    std::vector<MixedGraph> out;
    out.reserve(masks.size());
    for (uint64_t mask : masks) out.push_back(scratch.materialize(mask));
    return out;
}

}  // namespace ccg
