#pragma once

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ccg/graph.hpp"

namespace ccg {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// One parsed graph file. Plain files carry just the graph; gadget files add
// "# label <vertex> <role>" comments and witness files add "map <src> <dst>"
// lines after the edges.
struct GraphFile {
    std::variant<SimpleGraph, OrientedGraph, TwoEdgeColouredGraph> graph;
    std::vector<std::pair<int, std::string>> labels;  // vertex -> role text
    std::vector<std::pair<int, int>> maps;            // src -> dst

    GraphKind kind() const { return GraphKind(graph.index() == 0 ? 0 : graph.index() == 1 ? 1 : 2); }
    int n() const {
        return std::visit([](const auto& g) { return g.n(); }, graph);
    }
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline int parse_int(const std::string& tok, int line, const char* what) {
    int value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
    return value;
}

}  // namespace detail

inline GraphFile parse_graph_file(const std::string& text) {
    GraphFile out;
    GraphKind kind = GraphKind::Graph;
    bool have_kind = false, have_n = false;
    int n = 0;
    SimpleGraph sg;
    OrientedGraph og;
    TwoEdgeColouredGraph cg;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool seen_map = false;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        auto toks = detail::split_ws(raw);
        if (toks.empty()) continue;
        if (toks[0][0] == '#') {
            // "# label <vertex> <role>" comments carry gadget roles
            if (toks.size() >= 4 && toks[1] == "label") {
                if (!have_n) throw ParseError(lineno, "label before vertex count");
                int v = detail::parse_int(toks[2], lineno, "vertex");
                if (v < 0 || v >= n) throw ParseError(lineno, "label vertex out of range");
                out.labels.emplace_back(v, toks[3]);
            }
            continue;
        }
        if (!have_kind) {
            if (toks.size() != 2 || toks[0] != "kind")
                throw ParseError(lineno, "expected 'kind oriented|2ec|graph'");
            if (toks[1] == "oriented")
                kind = GraphKind::Oriented;
            else if (toks[1] == "2ec")
                kind = GraphKind::TwoEdgeColoured;
            else if (toks[1] == "graph")
                kind = GraphKind::Graph;
            else
                throw ParseError(lineno, "unknown kind '" + toks[1] + "'");
            have_kind = true;
            continue;
        }
        if (!have_n) {
            if (toks.size() != 2 || toks[0] != "n") throw ParseError(lineno, "expected 'n <count>'");
            n = detail::parse_int(toks[1], lineno, "vertex count");
            if (n < 0) throw ParseError(lineno, "negative vertex count");
            switch (kind) {
                case GraphKind::Graph: sg = SimpleGraph(n); break;
                case GraphKind::Oriented: og = OrientedGraph(n); break;
                case GraphKind::TwoEdgeColoured: cg = TwoEdgeColouredGraph(n); break;
            }
            have_n = true;
            continue;
        }
        try {
            if (toks[0] == "map") {
                if (toks.size() != 3) throw ParseError(lineno, "expected 'map <src> <dst>'");
                out.maps.emplace_back(detail::parse_int(toks[1], lineno, "vertex"),
                                      detail::parse_int(toks[2], lineno, "vertex"));
                seen_map = true;
                continue;
            }
            if (seen_map) throw ParseError(lineno, "edge after map lines");
            if (kind == GraphKind::Oriented) {
                if (toks.size() != 3 || toks[0] != "arc") throw ParseError(lineno, "expected 'arc <u> <v>'");
                og.add_arc(detail::parse_int(toks[1], lineno, "vertex"), detail::parse_int(toks[2], lineno, "vertex"));
            } else if (kind == GraphKind::TwoEdgeColoured) {
                if (toks.size() != 4 || toks[0] != "edge") throw ParseError(lineno, "expected 'edge <u> <v> <r|b>'");
                Colour c;
                if (toks[3] == "r")
                    c = Colour::Red;
                else if (toks[3] == "b")
                    c = Colour::Blue;
                else
                    throw ParseError(lineno, "colour must be 'r' or 'b'");
                cg.add_edge(detail::parse_int(toks[1], lineno, "vertex"), detail::parse_int(toks[2], lineno, "vertex"),
                            c);
            } else {
                if (toks.size() != 3 || toks[0] != "edge") throw ParseError(lineno, "expected 'edge <u> <v>'");
                sg.add_edge(detail::parse_int(toks[1], lineno, "vertex"), detail::parse_int(toks[2], lineno, "vertex"));
            }
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (!have_kind) throw ParseError(lineno, "missing 'kind' line");
    if (!have_n) throw ParseError(lineno, "missing 'n' line");
    switch (kind) {
        case GraphKind::Graph: out.graph = std::move(sg); break;
        case GraphKind::Oriented: out.graph = std::move(og); break;
        case GraphKind::TwoEdgeColoured: out.graph = std::move(cg); break;
    }
    return out;
}

inline SimpleGraph parse_simple_graph(const std::string& text) {
    auto f = parse_graph_file(text);
    if (auto* g = std::get_if<SimpleGraph>(&f.graph)) return *g;
    throw ParseError(1, "expected kind graph");
}

inline MixedGraph parse_mixed_graph(const std::string& text) {
    auto f = parse_graph_file(text);
    if (auto* g = std::get_if<OrientedGraph>(&f.graph)) return MixedGraph(std::move(*g));
    if (auto* g = std::get_if<TwoEdgeColouredGraph>(&f.graph)) return MixedGraph(std::move(*g));
    throw ParseError(1, "expected kind oriented or 2ec");
}

// Canonical form: header, sorted labels, sorted edge lists, then map lines.
inline std::string serialize_graph(const SimpleGraph& g,
                                   const std::vector<std::pair<int, std::string>>& labels = {}) {
    std::string s = "kind graph\nn " + std::to_string(g.n()) + "\n";
    for (const auto& [v, role] : labels) s += "# label " + std::to_string(v) + " " + role + "\n";
    for (const Edge& e : g.edges()) s += "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return s;
}

inline std::string serialize_graph(const OrientedGraph& g,
                                   const std::vector<std::pair<int, std::string>>& labels = {}) {
    std::string s = "kind oriented\nn " + std::to_string(g.n()) + "\n";
    for (const auto& [v, role] : labels) s += "# label " + std::to_string(v) + " " + role + "\n";
    for (const Arc& a : g.arcs()) s += "arc " + std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
    return s;
}

inline std::string serialize_graph(const TwoEdgeColouredGraph& g,
                                   const std::vector<std::pair<int, std::string>>& labels = {}) {
    std::string s = "kind 2ec\nn " + std::to_string(g.n()) + "\n";
    for (const auto& [v, role] : labels) s += "# label " + std::to_string(v) + " " + role + "\n";
    std::vector<std::pair<Edge, Colour>> edges;
    for (const Edge& e : g.red_edges()) edges.emplace_back(e, Colour::Red);
    for (const Edge& e : g.blue_edges()) edges.emplace_back(e, Colour::Blue);
    std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [e, c] : edges)
        s += "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " " + colour_letter(c) + "\n";
    return s;
}

inline std::string serialize_graph(const MixedGraph& g,
                                   const std::vector<std::pair<int, std::string>>& labels = {}) {
    return std::visit([&](const auto& h) { return serialize_graph(h, labels); }, g);
}

}  // namespace ccg
