#pragma once

#include <cstdint>
#include <fstream>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "ccg/convexity.hpp"
#include "ccg/enumerate.hpp"
#include "ccg/graph.hpp"
#include "ccg/homomorphism.hpp"
#include "ccg/io.hpp"
#include "ccg/search.hpp"
#include "ccg/structure.hpp"

namespace ccg {

struct VerifyOptions {
    int max_n = 5;     // exhaustive bound; the sampled phase covers 6..max_n
    uint64_t seed = 1;
    std::string only;  // run a single check id; empty = all
    int threads = 1;
    long long random_samples = 15000;  // per randomized check, when max_n >= 6
    std::string counterexample_dir = ".";
    bool write_counterexamples = true;
    bool mutant_skip_triangle_check = false;  // harness self-test hook
};

struct TheoremResult {
    std::string id;
    bool pass = true;
    long long instances = 0;   // instances inspected
    long long applicable = 0;  // instances where the premise held
    std::string counterexample_path;
    std::string detail;
};

struct VerifyReport {
    uint64_t seed = 0;
    int max_n = 0;
    std::vector<TheoremResult> results;

    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
};

inline const std::vector<std::string>& verify_check_ids() {
    static const std::vector<std::string> ids = {
        "arc-identify",    "edge-identify",      "degree2-triangle", "degree2-delete",
        "reverse-delete",  "dipath-add-arc",     "two-tree-orient",  "min-degree-three",
        "sparse-2ec",      "tree-width-two-2ec", "flip-delete-2ec",  "alt-path-add-edge",
        "improper-iff-cc", "hull-collapse",      "quotient-antisym", "cc-chromatic-eq",
        "forest-simple-chromatic", "max-degree-two", "two-tree-proper-c3"};
    return ids;
}

inline std::string render_report(const VerifyReport& rep) {
    std::string out = "# seed " + std::to_string(rep.seed) + " max-n " + std::to_string(rep.max_n) + "\n";
    for (const auto& r : rep.results) {
        out += r.id;
        if (r.pass) {
            out += " PASS instances=" + std::to_string(r.instances);
        } else {
            out += " FAIL counterexample=" + (r.counterexample_path.empty() ? "-" : r.counterexample_path);
            if (!r.detail.empty()) out += " (" + r.detail + ")";
        }
        out += "\n";
    }
    return out;
}

namespace detail {

// Per-order lookup tables of complete convexity over every labelled graph on
// n vertices, indexed by the trit vector over the vertex pairs (0 none,
// 1 u->v / red, 2 v->u / blue). -1 marks edgeless entries.
struct CcTables {
    int n = 0;
    std::vector<Edge> pairs;
    std::vector<uint64_t> p3;
    std::vector<int8_t> oriented, coloured;

    explicit CcTables(int n_) : n(n_), pairs(pair_order(n_)) {
        p3.resize(pairs.size() + 1);
        p3[0] = 1;
        for (size_t i = 0; i < pairs.size(); ++i) p3[i + 1] = p3[i] * 3;
        oriented.assign(p3.back(), -1);
        coloured.assign(p3.back(), -1);
        std::vector<int> trit(pairs.size(), 0);
        uint64_t index = 0;
        for (;;) {
            OrientedGraph og(n);
            TwoEdgeColouredGraph cg(n);
            int edges = 0;
            for (size_t i = 0; i < pairs.size(); ++i) {
                if (trit[i] == 0) continue;
                ++edges;
                if (trit[i] == 1) {
                    og.add_arc(pairs[i].u, pairs[i].v);
                    cg.add_edge(pairs[i].u, pairs[i].v, Colour::Red);
                } else {
                    og.add_arc(pairs[i].v, pairs[i].u);
                    cg.add_edge(pairs[i].u, pairs[i].v, Colour::Blue);
                }
            }
            if (edges > 0) {
                oriented[index] = is_complete_convex(og) ? 1 : 0;
                coloured[index] = is_complete_convex(cg) ? 1 : 0;
            }
            size_t i = 0;
            while (i < trit.size() && trit[i] == 2) {
                index -= 2 * p3[i];
                trit[i++] = 0;
            }
            if (i == trit.size()) break;
            ++trit[i];
            index += p3[i];
        }
    }

    uint64_t index_of(const OrientedGraph& g) const {
        uint64_t idx = 0;
        for (size_t i = 0; i < pairs.size(); ++i) {
            if (g.has_arc(pairs[i].u, pairs[i].v))
                idx += p3[i];
            else if (g.has_arc(pairs[i].v, pairs[i].u))
                idx += 2 * p3[i];
        }
        return idx;
    }

    uint64_t index_of(const TwoEdgeColouredGraph& g) const {
        uint64_t idx = 0;
        for (size_t i = 0; i < pairs.size(); ++i) {
            auto c = g.edge_colour(pairs[i].u, pairs[i].v);
            if (c == Colour::Red)
                idx += p3[i];
            else if (c == Colour::Blue)
                idx += 2 * p3[i];
        }
        return idx;
    }

    bool cc(const OrientedGraph& g) const { return oriented[index_of(g)] == 1; }
    bool cc(const TwoEdgeColouredGraph& g) const { return coloured[index_of(g)] == 1; }
};

template <class F>
void for_each_trit_graph(int n, F&& f) {
    auto pairs = pair_order(n);
    std::vector<int> trit(pairs.size(), 0);
    for (;;) {
        f(trit, pairs);
        size_t i = 0;
        while (i < trit.size() && trit[i] == 2) trit[i++] = 0;
        if (i == trit.size()) break;
        ++trit[i];
    }
}

inline OrientedGraph oriented_from_trits(int n, const std::vector<int>& trit, const std::vector<Edge>& pairs) {
    OrientedGraph g(n);
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (trit[i] == 1) g.add_arc(pairs[i].u, pairs[i].v);
        if (trit[i] == 2) g.add_arc(pairs[i].v, pairs[i].u);
    }
    return g;
}

inline TwoEdgeColouredGraph coloured_from_trits(int n, const std::vector<int>& trit, const std::vector<Edge>& pairs) {
    TwoEdgeColouredGraph g(n);
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (trit[i] == 1) g.add_edge(pairs[i].u, pairs[i].v, Colour::Red);
        if (trit[i] == 2) g.add_edge(pairs[i].u, pairs[i].v, Colour::Blue);
    }
    return g;
}

inline SimpleGraph path_graph(int n) {
    SimpleGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline SimpleGraph cycle_graph(int n) {
    SimpleGraph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

// trees by leaf attachment, one representative per isomorphism class
inline std::vector<SimpleGraph> tree_classes(int max_n) {
    std::vector<SimpleGraph> out;
    if (max_n < 2) return out;
    SimpleGraph k2(2);
    k2.add_edge(0, 1);
    out.push_back(k2);
    std::vector<SimpleGraph> level{k2};
    for (int n = 3; n <= max_n; ++n) {
        std::set<std::vector<uint8_t>> seen;
        std::vector<SimpleGraph> next;
        for (const SimpleGraph& g : level)
            for (int v = 0; v < g.n(); ++v) {
                SimpleGraph h(g.n() + 1);
                for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
                h.add_edge(v, g.n());
                if (seen.insert(canonical_key(h)).second) next.push_back(h);
            }
        for (const SimpleGraph& g : next) out.push_back(g);
        level = std::move(next);
    }
    return out;
}

struct VerifyContext {
    const VerifyOptions& opt;
    std::vector<std::unique_ptr<CcTables>> tables;  // by order; null below 2
    // connected complete-convex graphs, labelled, per order
    std::vector<std::vector<OrientedGraph>> cc_oriented;
    std::vector<std::vector<TwoEdgeColouredGraph>> cc_coloured;

    explicit VerifyContext(const VerifyOptions& o) : opt(o) {
        const int table_n = std::min(opt.max_n, 5);
        tables.resize(table_n + 1);
        cc_oriented.resize(table_n + 1);
        cc_coloured.resize(table_n + 1);
        for (int n = 2; n <= table_n; ++n) {
            tables[n] = std::make_unique<CcTables>(n);
            for_each_trit_graph(n, [&](const std::vector<int>& trit, const std::vector<Edge>& pairs) {
                OrientedGraph og = oriented_from_trits(n, trit, pairs);
                if (og.arc_count() == 0 || !is_connected(og)) return;
                if (tables[n]->cc(og)) cc_oriented[n].push_back(og);
                TwoEdgeColouredGraph cg = coloured_from_trits(n, trit, pairs);
                if (tables[n]->cc(cg)) cc_coloured[n].push_back(cg);
            });
        }
    }

    int table_n() const { return int(tables.size()) - 1; }
    bool sampled_phase() const { return opt.max_n >= 6 && opt.random_samples > 0; }

    std::mt19937_64 rng_for(const std::string& id) const {
        std::seed_seq seq{opt.seed, uint64_t(std::hash<std::string>{}(id))};
        return std::mt19937_64(seq);
    }
};

template <class G>
std::string write_counterexample(const VerifyOptions& opt, const std::string& id, const G& g) {
    if (!opt.write_counterexamples) return "-";
    std::string ext = ".g";
    if constexpr (std::is_same_v<G, OrientedGraph>)
        ext = ".og";
    else if constexpr (std::is_same_v<G, TwoEdgeColouredGraph>)
        ext = ".2ec";
    else if constexpr (std::is_same_v<G, MixedGraph>)
        ext = kind_of(g) == GraphKind::Oriented ? ".og" : ".2ec";
    std::string path = opt.counterexample_dir + "/counterexample-" + id + ext;
    std::ofstream out(path);
    out << serialize_graph(g);
    return path;
}

template <class G>
void fail_with(TheoremResult& r, const VerifyOptions& opt, const G& g, const std::string& detail) {
    if (!r.pass) return;  // keep the first counterexample
    r.pass = false;
    r.detail = detail;
    r.counterexample_path = write_counterexample(opt, r.id, g);
}

// conclusion side of the preservation statements; edgeless results cannot be
// evaluated (only the two-vertex degenerate cases reach this)
inline bool cc_or_empty(const OrientedGraph& g) { return g.arc_count() == 0 || is_complete_convex(g); }
inline bool cc_or_empty(const TwoEdgeColouredGraph& g) { return g.edge_count() == 0 || is_complete_convex(g); }

// --- seeded sample generators for the 6..max_n phase ---------------------------

inline int pick(std::mt19937_64& rng, int n) { return int(rng() % uint64_t(n)); }

inline SimpleGraph random_connected_graph(std::mt19937_64& rng, int n) {
    const int pairs = n * (n - 1) / 2;
    for (;;) {
        uint64_t mask = rng() & ((uint64_t(1) << pairs) - 1);
        SimpleGraph g = graph_from_mask(n, mask);
        if (g.edge_count() > 0 && is_connected(g)) return g;
    }
}

inline OrientedGraph random_oriented_uniform(std::mt19937_64& rng, int n) {
    SimpleGraph g = random_connected_graph(rng, n);
    return orientation_from_mask(g, rng() & (orientation_count(g) - 1));
}

inline TwoEdgeColouredGraph random_coloured_uniform(std::mt19937_64& rng, int n) {
    SimpleGraph g = random_connected_graph(rng, n);
    return colouring_from_mask(g, rng() & (orientation_count(g) - 1));
}

// Likely-complete-convex oriented sample: grown from the small catalogue by
// the convexity-preserving edits, so the preservation checks see a rich
// supply of premise-true instances. The premise is always recomputed.
inline OrientedGraph random_oriented_grown(const VerifyContext& cx, std::mt19937_64& rng, int target) {
    std::vector<int> sizes;
    for (int k = 3; k <= cx.table_n(); ++k)
        if (!cx.cc_oriented[k].empty()) sizes.push_back(k);
    if (sizes.empty()) return random_oriented_uniform(rng, target);
    int k0 = sizes[pick(rng, int(sizes.size()))];
    OrientedGraph g = cx.cc_oriented[k0][pick(rng, int(cx.cc_oriented[k0].size()))];
    while (g.n() < target) {
        bool glued = false;
        if (rng() & 1) {
            std::vector<int> fits;
            for (int k : sizes)
                if (g.n() + k - 2 <= target) fits.push_back(k);
            if (!fits.empty()) {
                int k = fits[pick(rng, int(fits.size()))];
                const auto& h = cx.cc_oriented[k][pick(rng, int(cx.cc_oriented[k].size()))];
                Arc a = g.arcs()[pick(rng, g.arc_count())];
                Arc b = h.arcs()[pick(rng, h.arc_count())];
                g = identify_arcs(g, a, h, b);
                glued = true;
            }
        }
        if (!glued) g = add_degree2_vertex(g, g.arcs()[pick(rng, g.arc_count())]);
    }
    for (int round = 0; round < 2; ++round) {
        if (rng() & 1) continue;
        std::vector<std::pair<int, int>> cand;
        for (int u = 0; u < g.n(); ++u)
            for (int v = u + 1; v < g.n(); ++v)
                if (!g.has_arc(u, v) && !g.has_arc(v, u) && joined_by_two_dipath(g, u, v)) cand.emplace_back(u, v);
        if (cand.empty()) break;
        auto [u, v] = cand[pick(rng, int(cand.size()))];
        g = ((rng() & 1) ? add_arc(g, u, v) : add_arc(g, v, u)).graph;
    }
    return g;
}

inline TwoEdgeColouredGraph random_coloured_grown(const VerifyContext& cx, std::mt19937_64& rng, int target) {
    std::vector<int> sizes;
    for (int k = 3; k <= cx.table_n(); ++k)
        if (!cx.cc_coloured[k].empty()) sizes.push_back(k);
    if (sizes.empty()) return random_coloured_uniform(rng, target);
    int k0 = sizes[pick(rng, int(sizes.size()))];
    TwoEdgeColouredGraph g = cx.cc_coloured[k0][pick(rng, int(cx.cc_coloured[k0].size()))];
    for (int guard = 0; g.n() < target && guard < 32; ++guard) {
        std::vector<int> fits;
        for (int k : sizes)
            if (g.n() + k - 2 <= target) fits.push_back(k);
        if (fits.empty()) break;
        int k = fits[pick(rng, int(fits.size()))];
        const auto& h = cx.cc_coloured[k][pick(rng, int(cx.cc_coloured[k].size()))];
        auto g_edges = g.all_edges();
        auto h_edges = h.all_edges();
        Edge a = g_edges[pick(rng, int(g_edges.size()))];
        Edge b = h_edges[pick(rng, int(h_edges.size()))];
        if (g.edge_colour(a.u, a.v) != h.edge_colour(b.u, b.v)) continue;
        g = identify_edges(g, a, h, b);
    }
    if (g.n() != target) return random_coloured_uniform(rng, target);
    for (int round = 0; round < 2; ++round) {
        if (rng() & 1) continue;
        std::vector<std::pair<int, int>> cand;
        for (int u = 0; u < g.n(); ++u)
            for (int v = u + 1; v < g.n(); ++v)
                if (!g.edge_colour(u, v) && joined_by_alternating_path(g, u, v)) cand.emplace_back(u, v);
        if (cand.empty()) break;
        auto [u, v] = cand[pick(rng, int(cand.size()))];
        g = add_coloured_edge(g, u, v, (rng() & 1) ? Colour::Red : Colour::Blue);
    }
    return g;
}

inline OrientedGraph sample_oriented(const VerifyContext& cx, std::mt19937_64& rng, int n) {
    return (rng() & 1) ? random_oriented_grown(cx, rng, n) : random_oriented_uniform(rng, n);
}

inline TwoEdgeColouredGraph sample_coloured(const VerifyContext& cx, std::mt19937_64& rng, int n) {
    return (rng() & 1) ? random_coloured_grown(cx, rng, n) : random_coloured_uniform(rng, n);
}

}  // namespace detail

// --- the verification suite ---------------------------------------------------------

inline VerifyReport verify_suite(const VerifyOptions& opt) {
    if (opt.max_n < 2 || opt.max_n > 7) throw std::invalid_argument("verify_suite: max-n must be in 2..7");
    {
        bool known = opt.only.empty();
        for (const auto& id : verify_check_ids())
            if (id == opt.only) known = true;
        if (!known) throw std::invalid_argument("verify_suite: unknown check id '" + opt.only + "'");
    }

    detail::VerifyContext cx(opt);
    VerifyReport rep;
    rep.seed = opt.seed;
    rep.max_n = opt.max_n;

    auto run = [&](const std::string& id, auto&& body) {
        if (!opt.only.empty() && opt.only != id) return;
        TheoremResult r;
        r.id = id;
        body(r);
        rep.results.push_back(std::move(r));
    };

    const int tn = cx.table_n();

    // identification of two complete-convex graphs along an arc stays
    // complete convex
    run("arc-identify", [&](TheoremResult& r) {
        const int cap = std::min(tn, 4);
        for (int n1 = 2; n1 <= cap; ++n1)
            for (int n2 = 2; n2 <= cap; ++n2)
                for (const auto& g : cx.cc_oriented[n1])
                    for (const auto& h : cx.cc_oriented[n2])
                        for (const Arc& a : g.arcs())
                            for (const Arc& b : h.arcs()) {
                                ++r.instances;
                                ++r.applicable;
                                OrientedGraph j = identify_arcs(g, a, h, b);
                                if (!is_complete_convex(j))
                                    detail::fail_with(r, opt, j, "identified graph not complete convex");
                            }
        if (cx.sampled_phase()) {
            auto rng = cx.rng_for(r.id);
            for (long long i = 0; i < opt.random_samples && r.pass; ++i) {
                int n = 6 + detail::pick(rng, opt.max_n - 5);
                std::vector<std::pair<int, int>> splits;
                for (int n1 = 3; n1 <= tn; ++n1) {
                    int n2 = n + 2 - n1;
                    if (n2 >= 3 && n2 <= tn && !cx.cc_oriented[n1].empty() && !cx.cc_oriented[n2].empty())
                        splits.emplace_back(n1, n2);
                }
                if (splits.empty()) break;
                auto [n1, n2] = splits[detail::pick(rng, int(splits.size()))];
                const auto& g = cx.cc_oriented[n1][detail::pick(rng, int(cx.cc_oriented[n1].size()))];
                const auto& h = cx.cc_oriented[n2][detail::pick(rng, int(cx.cc_oriented[n2].size()))];
                Arc a = g.arcs()[detail::pick(rng, g.arc_count())];
                Arc b = h.arcs()[detail::pick(rng, h.arc_count())];
                ++r.instances;
                ++r.applicable;
                OrientedGraph j = identify_arcs(g, a, h, b);
                if (!is_complete_convex(j)) detail::fail_with(r, opt, j, "identified graph not complete convex");
            }
        }
    });

    // the two-edge-coloured analogue glues equally coloured edges
    run("edge-identify", [&](TheoremResult& r) {
        const int cap = std::min(tn, 4);
        for (int n1 = 2; n1 <= cap; ++n1)
            for (int n2 = 2; n2 <= cap; ++n2)
                for (const auto& g : cx.cc_coloured[n1])
                    for (const auto& h : cx.cc_coloured[n2])
                        for (const Edge& a : g.all_edges())
                            for (const Edge& b : h.all_edges()) {
                                ++r.instances;
                                if (g.edge_colour(a.u, a.v) != h.edge_colour(b.u, b.v)) continue;
                                ++r.applicable;
                                TwoEdgeColouredGraph j = identify_edges(g, a, h, b);
                                if (!is_complete_convex(j))
                                    detail::fail_with(r, opt, j, "identified graph not complete convex");
                            }
        if (cx.sampled_phase()) {
            auto rng = cx.rng_for(r.id);
            for (long long i = 0; i < opt.random_samples && r.pass; ++i) {
                int n = 6 + detail::pick(rng, opt.max_n - 5);
                std::vector<std::pair<int, int>> splits;
                for (int n1 = 3; n1 <= tn; ++n1) {
                    int n2 = n + 2 - n1;
                    if (n2 >= 3 && n2 <= tn && !cx.cc_coloured[n1].empty() && !cx.cc_coloured[n2].empty())
                        splits.emplace_back(n1, n2);
                }
                if (splits.empty()) break;
                auto [n1, n2] = splits[detail::pick(rng, int(splits.size()))];
                const auto& g = cx.cc_coloured[n1][detail::pick(rng, int(cx.cc_coloured[n1].size()))];
                const auto& h = cx.cc_coloured[n2][detail::pick(rng, int(cx.cc_coloured[n2].size()))];
                auto ge = g.all_edges();
                auto he = h.all_edges();
                Edge a = ge[detail::pick(rng, int(ge.size()))];
                Edge b = he[detail::pick(rng, int(he.size()))];
                ++r.instances;
                if (g.edge_colour(a.u, a.v) != h.edge_colour(b.u, b.v)) continue;
                ++r.applicable;
                TwoEdgeColouredGraph j = identify_edges(g, a, h, b);
                if (!is_complete_convex(j)) detail::fail_with(r, opt, j, "identified graph not complete convex");
            }
        }
    });

    // every degree-2 vertex of a complete-convex oriented graph lies in a
    // directed 3-cycle
    run("degree2-triangle", [&](TheoremResult& r) {
        auto inspect = [&](const OrientedGraph& g, bool cc) {
            ++r.instances;
            if (!cc) return;
            SimpleGraph u = g.underlying();
            for (int v = 0; v < g.n(); ++v) {
                if (u.degree(v) != 2) continue;
                ++r.applicable;
                auto nb = u.neighbours(v).to_vector();
                if (!(u.has_edge(nb[0], nb[1]) && is_directed_triangle(g, v, nb[0], nb[1])))
                    detail::fail_with(r, opt, g,
                                      "degree-2 vertex " + std::to_string(v) + " not in a directed 3-cycle");
            }
        };
        for (int n = 2; n <= tn; ++n)
            detail::for_each_trit_graph(n, [&](const std::vector<int>& t, const std::vector<Edge>& p) {
                OrientedGraph g = detail::oriented_from_trits(n, t, p);
                if (g.arc_count() == 0 || !is_connected(g)) return;
                inspect(g, cx.tables[n]->cc(g));
            });
        if (cx.sampled_phase()) {
            auto rng = cx.rng_for(r.id);
            for (long long i = 0; i < opt.random_samples && r.pass; ++i) {
                OrientedGraph g = detail::sample_oriented(cx, rng, 6 + detail::pick(rng, opt.max_n - 5));
                inspect(g, is_complete_convex(g));
            }
        }
    });

    // removing a degree-2 vertex of a complete-convex oriented graph keeps it
    // complete convex
    run("degree2-delete", [&](TheoremResult& r) {
        auto inspect = [&](const OrientedGraph& g, bool cc) {
            ++r.instances;
            if (!cc) return;
            SimpleGraph u = g.underlying();
            for (int v = 0; v < g.n(); ++v) {
                if (u.degree(v) != 2) continue;
                ++r.applicable;
                if (!detail::cc_or_empty(remove_vertex(g, v)))
                    detail::fail_with(r, opt, g, "deleting degree-2 vertex " + std::to_string(v) + " breaks it");
            }
        };
        for (int n = 3; n <= tn; ++n)
            detail::for_each_trit_graph(n, [&](const std::vector<int>& t, const std::vector<Edge>& p) {
                OrientedGraph g = detail::oriented_from_trits(n, t, p);
                if (g.arc_count() == 0 || !is_connected(g)) return;
                inspect(g, cx.tables[n]->cc(g));
            });
        if (cx.sampled_phase()) {
            auto rng = cx.rng_for(r.id);
            for (long long i = 0; i < opt.random_samples && r.pass; ++i) {
                OrientedGraph g = detail::sample_oriented(cx, rng, 6 + detail::pick(rng, opt.max_n - 5));
                inspect(g, is_complete_convex(g));
            }
        }
    });

    // if both a graph and its single-arc reversal are complete convex, the
    // graph without that arc is complete convex
    run("reverse-delete", [&](TheoremResult& r) {
        for (int n = 2; n <= tn; ++n)
            detail::for_each_trit_graph(n, [&](const std::vector<int>& t, const std::vector<Edge>& p) {
                OrientedGraph g = detail::oriented_from_trits(n, t, p);
                if (g.arc_count() == 0 || !is_connected(g)) return;
                ++r.instances;
                if (!cx.tables[n]->cc(g)) return;
                for (const Arc& a : g.arcs()) {
                    if (!cx.tables[n]->cc(reverse_arc(g, a))) continue;
                    ++r.applicable;
                    OrientedGraph d = delete_arc(g, a);
                    if (d.arc_count() > 0 && !cx.tables[n]->cc(d))
                        detail::fail_with(r, opt, g, "deleting reversible arc breaks complete convexity");
                }
            });
        if (cx.sampled_phase()) {
            auto rng = cx.rng_for(r.id);
            for (long long i = 0; i < opt.random_samples && r.pass; ++i) {
                OrientedGraph g = detail::sample_oriented(cx, rng, 6 + detail::pick(rng, opt.max_n - 5));
                ++r.instances;
                if (!is_complete_convex(g)) continue;
                for (const Arc& a : g.arcs()) {
                    if (!is_complete_convex(reverse_arc(g, a))) continue;
                    ++r.applicable;
                    if (!detail::cc_or_empty(delete_arc(g, a)))
                        detail::fail_with(r, opt, g, "deleting reversible arc breaks complete convexity");
                }
            }
        }
    });

    // adding an arc (either way) between 2-dipath ends of a complete-convex
    // graph keeps it complete convex
    run("dipath-add-arc", [&](TheoremResult& r) {
        for (int n = 2; n <= tn; ++n)
            detail::for_each_trit_graph(n, [&](const std::vector<int>& t, const std::vector<Edge>& p) {
                OrientedGraph g = detail::oriented_from_trits(n, t, p);
                if (g.arc_count() == 0 || !is_connected(g)) return;
                ++r.instances;
                if (!cx.tables[n]->cc(g)) return;
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v) {
                        if (g.has_arc(u, v) || g.has_arc(v, u) || !joined_by_two_dipath(g, u, v)) continue;
                        ++r.applicable;
                        if (!cx.tables[n]->cc(add_arc(g, u, v).graph) || !cx.tables[n]->cc(add_arc(g, v, u).graph))
                            detail::fail_with(r, opt, g, "adding an arc between 2-dipath ends breaks it");
                    }
            });
        if (cx.sampled_phase()) {
            auto rng = cx.rng_for(r.id);
            for (long long i = 0; i < opt.random_samples && r.pass; ++i) {
                OrientedGraph g = detail::sample_oriented(cx, rng, 6 + detail::pick(rng, opt.max_n - 5));
                ++r.instances;
                if (!is_complete_convex(g)) continue;
                for (int u = 0; u < g.n(); ++u)
                    for (int v = u + 1; v < g.n(); ++v) {
                        if (g.has_arc(u, v) || g.has_arc(v, u) || !joined_by_two_dipath(g, u, v)) continue;
                        ++r.applicable;
                        if (!is_complete_convex(add_arc(g, u, v).graph) ||
                            !is_complete_convex(add_arc(g, v, u).graph))
                            detail::fail_with(r, opt, g, "adding an arc between 2-dipath ends breaks it");
                    }
            }
        }
    });

    // an orientation of a 2-tree is complete convex exactly when every
    // triangle is a directed 3-cycle
    run("two-tree-orient", [&](TheoremResult& r) {
        for (const SimpleGraph& t : two_tree_classes(std::min(opt.max_n, 7))) {
            for_each_orientation(t, [&](const OrientedGraph& g) {
                ++r.instances;
                ++r.applicable;
                bool lhs = is_complete_convex(g);
                bool rhs = opt.mutant_skip_triangle_check ? true : check_2tree_orientation(g);
                if (lhs != rhs)
                    detail::fail_with(r, opt, g,
                                      lhs ? "complete convex but has a non-cyclic triangle"
                                          : "all triangles cyclic but not complete convex");
            });
        }
    });

    // a complete-convex two-edge-coloured graph is a monochromatic K_2 or has
    // minimum degree 3
    run("min-degree-three", [&](TheoremResult& r) {
        auto inspect = [&](const TwoEdgeColouredGraph& g, bool cc) {
            ++r.instances;
            if (!cc) return;
            ++r.applicable;
            if (g.n() == 2) return;  // monochromatic K_2
            SimpleGraph u = g.underlying();
            for (int v = 0; v < g.n(); ++v)
                if (u.degree(v) < 3) {
                    detail::fail_with(r, opt, g, "complete convex with a vertex of degree < 3");
                    return;
                }
        };
        for (int n = 2; n <= tn; ++n)
            detail::for_each_trit_graph(n, [&](const std::vector<int>& t, const std::vector<Edge>& p) {
                TwoEdgeColouredGraph g = detail::coloured_from_trits(n, t, p);
                if (g.edge_count() == 0 || !is_connected(g)) return;
                inspect(g, cx.tables[n]->cc(g));
            });
        if (cx.sampled_phase()) {
            auto rng = cx.rng_for(r.id);
            for (long long i = 0; i < opt.random_samples && r.pass; ++i) {
                TwoEdgeColouredGraph g = detail::sample_coloured(cx, rng, 6 + detail::pick(rng, opt.max_n - 5));
                inspect(g, is_complete_convex(g));
            }
        }
    });

    // no connected graph with at most 2n-3 edges underlies a complete-convex
    // colouring (n >= 3)
    run("sparse-2ec", [&](TheoremResult& r) {
        for (int n = 3; n <= std::min(opt.max_n, 6); ++n)
            for_each_connected_graph(n, [&](const SimpleGraph& g) {
                if (g.edge_count() > 2 * n - 3) return;
                SearchOptions so;
                so.threads = opt.threads;
                SearchResult res = search_cc(g, GraphKind::TwoEdgeColoured, so);
                r.instances += int64_t(res.scanned);
                r.applicable += int64_t(res.scanned);
                if (res.outcome != SearchOutcome::CertifiedNone)
                    detail::fail_with(r, opt, *res.witness, "sparse graph with a complete-convex colouring");
            });
    });

    // no tree-width-2 graph underlies a complete-convex colouring: all
    // connected spanning subgraphs of the 2-trees
    run("tree-width-two-2ec", [&](TheoremResult& r) {
        for (const SimpleGraph& t : two_tree_classes(std::min(opt.max_n, 6))) {
            if (t.n() < 3) continue;
            const auto& edges = t.edges();
            for (uint64_t sub = 0; sub < (uint64_t(1) << edges.size()); ++sub) {
                SimpleGraph g(t.n());
                for (size_t i = 0; i < edges.size(); ++i)
                    if ((sub >> i) & 1) g.add_edge(edges[i].u, edges[i].v);
                if (g.edge_count() == 0 || !is_connected(g)) continue;
                SearchOptions so;
                so.threads = opt.threads;
                SearchResult res = search_cc(g, GraphKind::TwoEdgeColoured, so);
                r.instances += int64_t(res.scanned);
                r.applicable += int64_t(res.scanned);
                if (res.outcome != SearchOutcome::CertifiedNone)
                    detail::fail_with(r, opt, *res.witness, "tree-width-2 graph with a complete-convex colouring");
            }
        }
    });

    // if recolouring an edge keeps a colouring complete convex, deleting the
    // edge does too
    run("flip-delete-2ec", [&](TheoremResult& r) {
        for (int n = 2; n <= tn; ++n)
            detail::for_each_trit_graph(n, [&](const std::vector<int>& t, const std::vector<Edge>& p) {
                TwoEdgeColouredGraph g = detail::coloured_from_trits(n, t, p);
                if (g.edge_count() == 0 || !is_connected(g)) return;
                ++r.instances;
                if (!cx.tables[n]->cc(g)) return;
                for (const Edge& e : g.all_edges()) {
                    if (!cx.tables[n]->cc(flip_edge_colour(g, e))) continue;
                    ++r.applicable;
                    TwoEdgeColouredGraph d = delete_edge(g, e);
                    if (d.edge_count() > 0 && !cx.tables[n]->cc(d))
                        detail::fail_with(r, opt, g, "deleting a recolourable edge breaks complete convexity");
                }
            });
        if (cx.sampled_phase()) {
            auto rng = cx.rng_for(r.id);
            for (long long i = 0; i < opt.random_samples && r.pass; ++i) {
                TwoEdgeColouredGraph g = detail::sample_coloured(cx, rng, 6 + detail::pick(rng, opt.max_n - 5));
                ++r.instances;
                if (!is_complete_convex(g)) continue;
                for (const Edge& e : g.all_edges()) {
                    if (!is_complete_convex(flip_edge_colour(g, e))) continue;
                    ++r.applicable;
                    if (!detail::cc_or_empty(delete_edge(g, e)))
                        detail::fail_with(r, opt, g, "deleting a recolourable edge breaks complete convexity");
                }
            }
        }
    });

    // adding an edge of either colour between alternating-2-path ends of a
    // complete-convex colouring keeps it complete convex
    run("alt-path-add-edge", [&](TheoremResult& r) {
        for (int n = 2; n <= tn; ++n)
            detail::for_each_trit_graph(n, [&](const std::vector<int>& t, const std::vector<Edge>& p) {
                TwoEdgeColouredGraph g = detail::coloured_from_trits(n, t, p);
                if (g.edge_count() == 0 || !is_connected(g)) return;
                ++r.instances;
                if (!cx.tables[n]->cc(g)) return;
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v) {
                        if (g.edge_colour(u, v) || !joined_by_alternating_path(g, u, v)) continue;
                        ++r.applicable;
                        if (!cx.tables[n]->cc(add_coloured_edge(g, u, v, Colour::Red)) ||
                            !cx.tables[n]->cc(add_coloured_edge(g, u, v, Colour::Blue)))
                            detail::fail_with(r, opt, g, "adding an edge between alternating ends breaks it");
                    }
            });
        if (cx.sampled_phase()) {
            auto rng = cx.rng_for(r.id);
            for (long long i = 0; i < opt.random_samples && r.pass; ++i) {
                TwoEdgeColouredGraph g = detail::sample_coloured(cx, rng, 6 + detail::pick(rng, opt.max_n - 5));
                ++r.instances;
                if (!is_complete_convex(g)) continue;
                for (int u = 0; u < g.n(); ++u)
                    for (int v = u + 1; v < g.n(); ++v) {
                        if (g.edge_colour(u, v) || !joined_by_alternating_path(g, u, v)) continue;
                        ++r.applicable;
                        if (!is_complete_convex(add_coloured_edge(g, u, v, Colour::Red)) ||
                            !is_complete_convex(add_coloured_edge(g, u, v, Colour::Blue)))
                            detail::fail_with(r, opt, g, "adding an edge between alternating ends breaks it");
                    }
            }
        }
    });

    // a graph admits an improper homomorphism exactly when it is not complete
    // convex, and the constructed witness is improper
    run("improper-iff-cc", [&](TheoremResult& r) {
        for (int n = 2; n <= std::min(tn, 5); ++n)
            detail::for_each_trit_graph(n, [&](const std::vector<int>& t, const std::vector<Edge>& p) {
                OrientedGraph og = detail::oriented_from_trits(n, t, p);
                if (og.arc_count() == 0 || !is_connected(og)) return;
                for (int kind = 0; kind < 2; ++kind) {
                    MixedGraph g = kind == 0 ? MixedGraph(og) : MixedGraph(detail::coloured_from_trits(n, t, p));
                    ++r.instances;
                    ++r.applicable;
                    bool cc = kind == 0 ? cx.tables[n]->cc(og)
                                        : cx.tables[n]->cc(std::get<TwoEdgeColouredGraph>(g));
                    auto wit = admits_improper(g);
                    if (wit.has_value() == cc) {
                        detail::fail_with(r, opt, g, "witness existence disagrees with complete convexity");
                        return;
                    }
                    if (wit && classify(g, wit->target, wit->map) != HomClass::Improper) {
                        detail::fail_with(r, opt, g, "constructed witness is not improper");
                        return;
                    }
                }
            });
    });

    // when a homomorphism to a reflexive target collapses an arc, it collapses
    // the whole hull of that arc
    run("hull-collapse", [&](TheoremResult& r) {
        for (int n = 2; n <= std::min(tn, 4); ++n) {
            std::vector<MixedGraph> sources;
            detail::for_each_trit_graph(n, [&](const std::vector<int>& t, const std::vector<Edge>& p) {
                OrientedGraph og = detail::oriented_from_trits(n, t, p);
                if (og.arc_count() == 0 || !is_connected(og)) return;
                sources.push_back(og);
                sources.push_back(detail::coloured_from_trits(n, t, p));
            });
            std::vector<Target> targets;
            for (int k = 1; k <= 3; ++k)
                detail::for_each_trit_graph(k, [&](const std::vector<int>& t, const std::vector<Edge>& p) {
                    targets.push_back(Target::reflexive_of(detail::oriented_from_trits(k, t, p)));
                    targets.push_back(Target::reflexive_of(detail::coloured_from_trits(k, t, p)));
                });
            for (const MixedGraph& g : sources) {
                auto edges = underlying_edges(g);
                for (const Target& tgt : targets) {
                    if (kind_of(g) != kind_of(tgt.graph)) continue;
                    const int k = tgt.n();
                    std::vector<int> img(n, 0);
                    for (;;) {
                        Homomorphism h{img};
                        if (is_homomorphism(g, tgt, h)) {
                            ++r.instances;
                            for (const Edge& e : edges) {
                                if (img[e.u] != img[e.v]) continue;
                                ++r.applicable;
                                VertexSet hull = hull_set(g, VertexSet::of(n, {e.u, e.v}));
                                bool ok = true;
                                hull.for_each([&](int x) { ok = ok && img[x] == img[e.u]; });
                                if (!ok)
                                    detail::fail_with(r, opt, g, "hull of a collapsed edge maps to two vertices");
                            }
                        }
                        int i = 0;
                        while (i < n && img[i] == k - 1) img[i++] = 0;
                        if (i == n) break;
                        ++img[i];
                    }
                }
            }
        }
    });

    // contracting a convex set never produces a digon or doubly coloured pair,
    // and the quotient map is a homomorphism
    run("quotient-antisym", [&](TheoremResult& r) {
        for (int n = 2; n <= std::min(tn, 5); ++n)
            detail::for_each_trit_graph(n, [&](const std::vector<int>& t, const std::vector<Edge>& p) {
                OrientedGraph og = detail::oriented_from_trits(n, t, p);
                TwoEdgeColouredGraph cg = detail::coloured_from_trits(n, t, p);
                for (int kind = 0; kind < 2; ++kind) {
                    MixedGraph g = kind == 0 ? MixedGraph(og) : MixedGraph(cg);
                    if (edge_count(g) == 0) continue;
                    auto edges = underlying_edges(g);
                    for (uint64_t sub = 1; sub + 1 < (uint64_t(1) << n); ++sub) {
                        VertexSet s(n);
                        for (int v = 0; v < n; ++v)
                            if ((sub >> v) & 1) s.set(v);
                        if (!is_convex(g, s)) continue;
                        bool internal = false;
                        for (const Edge& e : edges)
                            if (s.test(e.u) && s.test(e.v)) internal = true;
                        if (!internal) continue;
                        ++r.instances;
                        ++r.applicable;
                        try {
                            auto q = quotient_by_convex(g, s);
                            if (!is_homomorphism(g, Target::of(q.target), q.map))
                                detail::fail_with(r, opt, g, "quotient map is not a homomorphism");
                        } catch (const std::exception& e) {
                            detail::fail_with(r, opt, g, std::string("quotient construction failed: ") + e.what());
                        }
                    }
                }
            });
    });

    // complete-convex oriented graphs have equal chromatic and simple
    // chromatic numbers
    run("cc-chromatic-eq", [&](TheoremResult& r) {
        for (int n = 2; n <= std::min(tn, 5); ++n)
            for (const OrientedGraph& g : cx.cc_oriented[n]) {
                ++r.instances;
                ++r.applicable;
                if (oriented_chromatic_number(g) != simple_chromatic_number(g))
                    detail::fail_with(r, opt, g, "chromatic numbers differ on a complete-convex graph");
            }
    });

    // oriented forests have simple chromatic number 2
    run("forest-simple-chromatic", [&](TheoremResult& r) {
        for (const SimpleGraph& t : detail::tree_classes(opt.max_n))
            for_each_orientation(t, [&](const OrientedGraph& g) {
                ++r.instances;
                ++r.applicable;
                if (simple_chromatic_number(g) != 2)
                    detail::fail_with(r, opt, g, "oriented tree with simple chromatic number != 2");
            });
    });

    // among connected graphs of maximum degree 2, the complete-convex
    // orientations are exactly the single arc and the directed 3-cycle
    run("max-degree-two", [&](TheoremResult& r) {
        auto inspect = [&](const SimpleGraph& u, bool cycle) {
            for_each_orientation(u, [&](const OrientedGraph& g) {
                ++r.instances;
                ++r.applicable;
                bool expected = (!cycle && u.n() == 2) ||
                                (cycle && u.n() == 3 && is_directed_triangle(g, 0, 1, 2));
                if (is_complete_convex(g) != expected)
                    detail::fail_with(r, opt, g, "max-degree-2 classification mismatch");
            });
        };
        for (int n = 2; n <= opt.max_n; ++n) inspect(detail::path_graph(n), false);
        for (int n = 3; n <= opt.max_n; ++n) inspect(detail::cycle_graph(n), true);
    });

    // every complete-convex orientation of a 2-tree maps properly onto the
    // directed 3-cycle
    run("two-tree-proper-c3", [&](TheoremResult& r) {
        OrientedGraph c3(3);
        c3.add_arc(0, 1);
        c3.add_arc(1, 2);
        c3.add_arc(2, 0);
        for (const SimpleGraph& t : two_tree_classes(std::min(opt.max_n, 7)))
            for_each_orientation(t, [&](const OrientedGraph& g) {
                ++r.instances;
                if (!is_complete_convex(g)) return;
                ++r.applicable;
                auto h = find_homomorphism(MixedGraph(g), Target::irreflexive_of(MixedGraph(c3)),
                                           HomSearchMode::Proper);
                if (!h) detail::fail_with(r, opt, g, "complete-convex 2-tree orientation with no map to the 3-cycle");
            });
    });

    return rep;
}

}  // namespace ccg
