#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccg/convexity.hpp"
#include "ccg/graph.hpp"
#include "ccg/io.hpp"
#include "ccg/nae.hpp"

namespace ccg {

enum class GadgetVariant { TwoEdgeColoured, Oriented };

// Vertex roles inside a gadget graph. Role text in files:
//   b        shared hub vertex
//   x3       variable 3
//   x3c2     occurrence of variable 3 in clause 2 (primes: p, pp suffixes)
//   g2       clause vertex of clause 2 (oriented variant only)
struct GadgetRole {
    enum Kind { Hub, Variable, Occurrence, ClauseVertex } kind = Hub;
    int var = 0;     // 1-based (Variable, Occurrence)
    int clause = 0;  // 1-based (Occurrence, ClauseVertex)
    int prime = 0;   // 0, 1, 2 (Occurrence)

    std::string to_string() const {
        switch (kind) {
            case Hub: return "b";
            case Variable: return "x" + std::to_string(var);
            case ClauseVertex: return "g" + std::to_string(clause);
            case Occurrence:
                return "x" + std::to_string(var) + "c" + std::to_string(clause) +
                       (prime == 1 ? "p" : prime == 2 ? "pp" : "");
        }
        return "";
    }

    static GadgetRole parse(const std::string& s) {
        GadgetRole r;
        if (s == "b") return r;
        auto num = [&](size_t& i) {
            size_t start = i;
            while (i < s.size() && isdigit(uint8_t(s[i]))) ++i;
            if (i == start) throw std::invalid_argument("bad role '" + s + "'");
            return std::stoi(s.substr(start, i - start));
        };
        size_t i = 1;
        if (s[0] == 'g') {
            r.kind = ClauseVertex;
            r.clause = num(i);
        } else if (s[0] == 'x') {
            r.var = num(i);
            if (i == s.size()) {
                r.kind = Variable;
            } else {
                if (s[i] != 'c') throw std::invalid_argument("bad role '" + s + "'");
                ++i;
                r.kind = Occurrence;
                r.clause = num(i);
                std::string rest = s.substr(i);
                if (rest == "")
                    r.prime = 0;
                else if (rest == "p")
                    r.prime = 1;
                else if (rest == "pp")
                    r.prime = 2;
                else
                    throw std::invalid_argument("bad role '" + s + "'");
            }
        } else {
            throw std::invalid_argument("bad role '" + s + "'");
        }
        if (i > s.size()) throw std::invalid_argument("bad role '" + s + "'");
        return r;
    }
};

// The reduction graph for an instance: the per-clause literal gadgets glued
// on the shared hub vertex and the shared variable vertices, plus the clause
// triangles (and clause vertices in the oriented variant).
struct LabelledGadgetGraph {
    GadgetVariant variant = GadgetVariant::TwoEdgeColoured;
    NAEInstance instance;
    SimpleGraph graph;
    std::vector<GadgetRole> roles;  // per vertex

    int hub = 0;
    std::vector<int> variable_vertex;                    // 1-based variable -> vertex
    // occurrence_vertex[f][slot][prime]; slot is the literal position 0..2
    std::vector<std::array<std::array<int, 3>, 3>> occurrence_vertex;
    std::vector<int> clause_vertex;                      // oriented variant only

    std::vector<std::pair<int, std::string>> label_lines() const {
        std::vector<std::pair<int, std::string>> out;
        for (int v = 0; v < graph.n(); ++v) out.emplace_back(v, roles[v].to_string());
        return out;
    }
};

// Layout: hub, then the variable vertices, then per clause the occurrence
// vertices slot by slot (plain, prime, double prime), then the clause vertex
// in the oriented variant.
inline LabelledGadgetGraph build_gadget(const NAEInstance& y, GadgetVariant variant) {
    validate_nae(y);
    LabelledGadgetGraph g;
    g.variant = variant;
    g.instance = y;
    const int primes = variant == GadgetVariant::TwoEdgeColoured ? 3 : 2;
    const int clause_count = int(y.clauses.size());
    int n = 1 + y.variable_count + clause_count * 3 * primes +
            (variant == GadgetVariant::Oriented ? clause_count : 0);

    g.graph = SimpleGraph(n);
    g.roles.assign(n, GadgetRole{});
    g.hub = 0;
    g.variable_vertex.assign(y.variable_count + 1, -1);
    int next = 1;
    for (int v = 1; v <= y.variable_count; ++v) {
        g.variable_vertex[v] = next;
        g.roles[next] = GadgetRole{GadgetRole::Variable, v, 0, 0};
        ++next;
    }
    g.occurrence_vertex.assign(clause_count, {});
    g.clause_vertex.assign(clause_count, -1);
    for (int f = 0; f < clause_count; ++f) {
        for (int slot = 0; slot < 3; ++slot) {
            int var = y.clauses[f].vars[slot];
            for (int p = 0; p < primes; ++p) {
                g.occurrence_vertex[f][slot][p] = next;
                g.roles[next] = GadgetRole{GadgetRole::Occurrence, var, f + 1, p};
                ++next;
            }
            if (primes == 2) g.occurrence_vertex[f][slot][2] = -1;
        }
        if (variant == GadgetVariant::Oriented) {
            g.clause_vertex[f] = next;
            g.roles[next] = GadgetRole{GadgetRole::ClauseVertex, 0, f + 1, 0};
            ++next;
        }
    }

    // shared variable-hub edges
    for (int v = 1; v <= y.variable_count; ++v) g.graph.add_edge(g.variable_vertex[v], g.hub);

    for (int f = 0; f < clause_count; ++f) {
        for (int slot = 0; slot < 3; ++slot) {
            const int x = g.variable_vertex[y.clauses[f].vars[slot]];
            const int xf = g.occurrence_vertex[f][slot][0];
            const int xfp = g.occurrence_vertex[f][slot][1];
            g.graph.add_edge(xf, g.hub);
            g.graph.add_edge(xfp, g.hub);
            g.graph.add_edge(x, xfp);
            g.graph.add_edge(xf, xfp);
            if (variant == GadgetVariant::TwoEdgeColoured) {
                const int xfpp = g.occurrence_vertex[f][slot][2];
                g.graph.add_edge(xfpp, g.hub);
                g.graph.add_edge(x, xfpp);
                g.graph.add_edge(xf, xfpp);
            }
        }
        // clause triangle on the plain occurrence vertices
        const int u = g.occurrence_vertex[f][0][0];
        const int v = g.occurrence_vertex[f][1][0];
        const int w = g.occurrence_vertex[f][2][0];
        g.graph.add_edge(u, v);
        g.graph.add_edge(v, w);
        g.graph.add_edge(u, w);
        if (variant == GadgetVariant::Oriented) {
            g.graph.add_edge(g.clause_vertex[f], u);
            g.graph.add_edge(g.clause_vertex[f], v);
            g.graph.add_edge(g.clause_vertex[f], w);
        }
    }
    return g;
}

namespace detail {

// clause slot whose value differs from the other two
inline int minority_slot(const NAEClause& c, const Assignment& s) {
    int a = s.values[c.vars[0] - 1], b = s.values[c.vars[1] - 1], d = s.values[c.vars[2] - 1];
    if (a + b + d == 0 || a + b + d == 3)
        throw std::invalid_argument("assignment not NAE-satisfying: clause sees one value");
    if (b == d) return 0;
    if (a == d) return 1;
    return 2;
}

}  // namespace detail

// Colours every edge of the two-edge-coloured gadget from an NAE-satisfying
// assignment; the result is complete convex.
inline TwoEdgeColouredGraph colour_gadget(const LabelledGadgetGraph& g, const Assignment& s) {
    if (g.variant != GadgetVariant::TwoEdgeColoured)
        throw std::invalid_argument("colour_gadget: gadget is not the two-edge-coloured variant");
    if (int(s.values.size()) != g.instance.variable_count)
        throw std::invalid_argument("colour_gadget: assignment length mismatch");
    if (!nae_satisfies(g.instance, s)) throw std::invalid_argument("colour_gadget: assignment not NAE-satisfying");

    TwoEdgeColouredGraph out(g.graph.n());
    // variable-hub edges: red encodes value 1
    for (int v = 1; v <= g.instance.variable_count; ++v)
        out.add_edge(g.variable_vertex[v], g.hub, s.values[v - 1] ? Colour::Red : Colour::Blue);

    for (size_t f = 0; f < g.instance.clauses.size(); ++f) {
        for (int slot = 0; slot < 3; ++slot) {
            const int var = g.instance.clauses[f].vars[slot];
            const Colour hi = s.values[var - 1] ? Colour::Red : Colour::Blue;  // colour of the value-1 group
            const Colour lo = other(hi);
            const int x = g.variable_vertex[var];
            const int xf = g.occurrence_vertex[f][slot][0];
            const int xfp = g.occurrence_vertex[f][slot][1];
            const int xfpp = g.occurrence_vertex[f][slot][2];
            out.add_edge(xf, g.hub, hi);
            out.add_edge(x, xfpp, hi);
            out.add_edge(xf, xfp, hi);
            out.add_edge(xfp, g.hub, lo);
            out.add_edge(xfp, x, lo);
            out.add_edge(xfpp, g.hub, lo);
            out.add_edge(xf, xfpp, lo);
        }
        // triangle: the minority literal takes the u slot, the other two
        // follow cyclically
        const int m = detail::minority_slot(g.instance.clauses[f], s);
        const int u = g.occurrence_vertex[f][m][0];
        const int v = g.occurrence_vertex[f][(m + 1) % 3][0];
        const int w = g.occurrence_vertex[f][(m + 2) % 3][0];
        const bool minority_value = s.values[g.instance.clauses[f].vars[m] - 1];
        // minority 0: u_g w_g, w_g v_g blue and u_g v_g red; minority 1 swaps
        const Colour pair_colour = minority_value ? Colour::Red : Colour::Blue;
        out.add_edge(u, w, pair_colour);
        out.add_edge(w, v, pair_colour);
        out.add_edge(u, v, other(pair_colour));
    }
    return out;
}

// Orients every edge of the oriented gadget from an NAE-satisfying
// assignment; the result is complete convex.
inline OrientedGraph orient_gadget(const LabelledGadgetGraph& g, const Assignment& s) {
    if (g.variant != GadgetVariant::Oriented)
        throw std::invalid_argument("orient_gadget: gadget is not the oriented variant");
    if (int(s.values.size()) != g.instance.variable_count)
        throw std::invalid_argument("orient_gadget: assignment length mismatch");
    if (!nae_satisfies(g.instance, s)) throw std::invalid_argument("orient_gadget: assignment not NAE-satisfying");

    OrientedGraph out(g.graph.n());
    // variable-hub edges: hub -> x encodes value 1
    for (int v = 1; v <= g.instance.variable_count; ++v) {
        if (s.values[v - 1])
            out.add_arc(g.hub, g.variable_vertex[v]);
        else
            out.add_arc(g.variable_vertex[v], g.hub);
    }

    for (size_t f = 0; f < g.instance.clauses.size(); ++f) {
        for (int slot = 0; slot < 3; ++slot) {
            const int var = g.instance.clauses[f].vars[slot];
            const bool one = s.values[var - 1];
            const int x = g.variable_vertex[var];
            const int xf = g.occurrence_vertex[f][slot][0];
            const int xfp = g.occurrence_vertex[f][slot][1];
            if (one) {
                out.add_arc(x, xfp);
                out.add_arc(xf, xfp);
                out.add_arc(g.hub, xf);
                out.add_arc(xfp, g.hub);
            } else {
                out.add_arc(xfp, x);
                out.add_arc(xfp, xf);
                out.add_arc(xf, g.hub);
                out.add_arc(g.hub, xfp);
            }
        }
        const int m = detail::minority_slot(g.instance.clauses[f], s);
        const int u = g.occurrence_vertex[f][m][0];
        const int v = g.occurrence_vertex[f][(m + 1) % 3][0];
        const int w = g.occurrence_vertex[f][(m + 2) % 3][0];
        const int cv = g.clause_vertex[f];
        const bool minority_value = s.values[g.instance.clauses[f].vars[m] - 1];
        if (!minority_value) {
            // minority 0: w_g -> v_g, u_g -> g, and u_g v_g g w_g a directed 4-cycle
            out.add_arc(w, v);
            out.add_arc(u, cv);
            out.add_arc(u, v);
            out.add_arc(v, cv);
            out.add_arc(cv, w);
            out.add_arc(w, u);
        } else {
            // minority 1: the full reversal
            out.add_arc(v, w);
            out.add_arc(cv, u);
            out.add_arc(v, u);
            out.add_arc(cv, v);
            out.add_arc(w, cv);
            out.add_arc(u, w);
        }
    }
    return out;
}

// spec-shaped conveniences
inline TwoEdgeColouredGraph colouring_from_assignment(const NAEInstance& y, const Assignment& s) {
    return colour_gadget(build_gadget(y, GadgetVariant::TwoEdgeColoured), s);
}
inline OrientedGraph orientation_from_assignment(const NAEInstance& y, const Assignment& s) {
    return orient_gadget(build_gadget(y, GadgetVariant::Oriented), s);
}

// Reads the assignment bits off the variable-hub edges; no convexity or
// satisfiability validation.
inline Assignment decode_bits(const LabelledGadgetGraph& g, const MixedGraph& coloured) {
    if (underlying(coloured) != g.graph)
        throw std::invalid_argument("decode_assignment: graph does not match the gadget labels");
    if ((kind_of(coloured) == GraphKind::Oriented) != (g.variant == GadgetVariant::Oriented))
        throw std::invalid_argument("decode_assignment: graph kind does not match the gadget variant");
    Assignment a;
    a.values.assign(g.instance.variable_count, 0);
    if (const auto* c = std::get_if<TwoEdgeColouredGraph>(&coloured)) {
        for (int v = 1; v <= g.instance.variable_count; ++v)
            a.values[v - 1] = c->edge_colour(g.variable_vertex[v], g.hub) == Colour::Red;
    } else {
        const auto& o = std::get<OrientedGraph>(coloured);
        for (int v = 1; v <= g.instance.variable_count; ++v)
            a.values[v - 1] = o.has_arc(g.hub, g.variable_vertex[v]);
    }
    return a;
}

// Reads the assignment off a complete-convex coloured/oriented gadget. The
// decoded assignment is NAE-satisfying by the biconditional; both facts are
// checked.
inline Assignment decode_assignment(const LabelledGadgetGraph& g, const MixedGraph& coloured) {
    Assignment a = decode_bits(g, coloured);
    if (!is_complete_convex(coloured))
        throw std::invalid_argument("decode_assignment: graph is not complete convex");
    if (!nae_satisfies(g.instance, a))
        throw std::invalid_argument("decode_assignment: decoded assignment is not NAE-satisfying");
    return a;
}

// Rebuilds the labelled gadget from a parsed graph file's role labels and
// validates that the stored graph is exactly the construction.
inline LabelledGadgetGraph gadget_from_labels(const SimpleGraph& graph,
                                              const std::vector<std::pair<int, std::string>>& labels,
                                              GadgetVariant variant) {
    if (int(labels.size()) != graph.n())
        throw std::invalid_argument("gadget labels: expected one label per vertex");
    std::vector<GadgetRole> roles(graph.n());
    std::vector<char> seen(graph.n(), 0);
    for (const auto& [v, text] : labels) {
        if (v < 0 || v >= graph.n() || seen[v]) throw std::invalid_argument("gadget labels: bad vertex");
        roles[v] = GadgetRole::parse(text);
        seen[v] = 1;
    }

    // reconstruct the instance from the occurrence roles
    int variable_count = 0;
    int clause_count = 0;
    for (const auto& r : roles) {
        if (r.kind == GadgetRole::Variable) variable_count = std::max(variable_count, r.var);
        if (r.kind == GadgetRole::Occurrence) clause_count = std::max(clause_count, r.clause);
    }
    std::vector<std::vector<int>> clause_vars(clause_count);
    for (const auto& r : roles)
        if (r.kind == GadgetRole::Occurrence && r.prime == 0) clause_vars[r.clause - 1].push_back(r.var);
    NAEInstance y;
    y.variable_count = variable_count;
    for (auto& vars : clause_vars) {
        if (vars.size() != 3) throw std::invalid_argument("gadget labels: clause without three literals");
        y.clauses.push_back(NAEClause{{vars[0], vars[1], vars[2]}});
    }

    LabelledGadgetGraph expect = build_gadget(y, variant);
    // map expected vertices to actual ones through the roles
    std::map<std::string, int> actual;
    for (int v = 0; v < graph.n(); ++v) {
        if (!actual.emplace(roles[v].to_string(), v).second)
            throw std::invalid_argument("gadget labels: duplicate role");
    }
    std::vector<int> to_actual(expect.graph.n(), -1);
    for (int v = 0; v < expect.graph.n(); ++v) {
        auto it = actual.find(expect.roles[v].to_string());
        if (it == actual.end()) throw std::invalid_argument("gadget labels: missing role");
        to_actual[v] = it->second;
    }
    if (expect.graph.edge_count() != graph.edge_count())
        throw std::invalid_argument("gadget labels: edge count mismatch");
    for (const Edge& e : expect.graph.edges())
        if (!graph.has_edge(to_actual[e.u], to_actual[e.v]))
            throw std::invalid_argument("gadget labels: graph does not match the gadget construction");

    // re-express the gadget on the actual vertex numbering
    LabelledGadgetGraph out;
    out.variant = variant;
    out.instance = y;
    out.graph = graph;
    out.roles = roles;
    out.hub = to_actual[expect.hub];
    out.variable_vertex.assign(variable_count + 1, -1);
    for (int v = 1; v <= variable_count; ++v) out.variable_vertex[v] = to_actual[expect.variable_vertex[v]];
    out.occurrence_vertex.assign(clause_count, {});
    out.clause_vertex.assign(clause_count, -1);
    for (int f = 0; f < clause_count; ++f) {
        for (int slot = 0; slot < 3; ++slot)
            for (int p = 0; p < 3; ++p) {
                int ev = expect.occurrence_vertex[f][slot][p];
                out.occurrence_vertex[f][slot][p] = ev < 0 ? -1 : to_actual[ev];
            }
        if (variant == GadgetVariant::Oriented) out.clause_vertex[f] = to_actual[expect.clause_vertex[f]];
    }
    return out;
}

}  // namespace ccg
