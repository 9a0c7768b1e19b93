// ccgraph: hulls, complete-convexity checks, improper-homomorphism
// witnesses, chromatic numbers, the NAE3SAT gadget pipeline, and the theorem
// verification suite, over the graph file formats described in the README.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccg/convexity.hpp"
#include "ccg/enumerate.hpp"
#include "ccg/gadget.hpp"
#include "ccg/graph.hpp"
#include "ccg/homomorphism.hpp"
#include "ccg/io.hpp"
#include "ccg/nae.hpp"
#include "ccg/search.hpp"
#include "ccg/structure.hpp"
#include "ccg/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json envelope(const std::string& command) {
    return json{{"command", command}, {"result", nullptr}, {"witness", nullptr},
                {"instances", nullptr}, {"seed", nullptr}};
}

struct Output {
    bool as_json = false;
    json body;

    explicit Output(const std::string& command) : body(envelope(command)) {}

    int finish(int code, const std::string& plain) const {
        if (as_json)
            std::cout << body.dump() << "\n";
        else
            std::cout << plain;
        return code;
    }
};

json vertex_list(const ccg::VertexSet& s) {
    json a = json::array();
    s.for_each([&](int v) { a.push_back(v); });
    return a;
}

json map_json(const ccg::Homomorphism& h) {
    json a = json::array();
    for (size_t v = 0; v < h.image.size(); ++v) a.push_back(json::array({int(v), h.image[v]}));
    return a;
}

std::string map_lines(const ccg::Homomorphism& h) {
    std::string s;
    for (size_t v = 0; v < h.image.size(); ++v)
        s += "map " + std::to_string(v) + " " + std::to_string(h.image[v]) + "\n";
    return s;
}

std::vector<int> parse_vertex_list(const std::string& text) {
    std::vector<int> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

ccg::GadgetVariant parse_variant(const std::string& v) {
    if (v == "2ec") return ccg::GadgetVariant::TwoEdgeColoured;
    if (v == "orient") return ccg::GadgetVariant::Oriented;
    throw std::runtime_error("variant must be '2ec' or 'orient'");
}

int default_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : int(n);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"convexity and improper homomorphisms of oriented and 2-edge-coloured graphs"};
    app.require_subcommand(1);

    std::string file, set_arg, variant_arg = "2ec", assign_arg, only_arg, out_dir = ".";
    std::string format;
    bool as_json = false, exhaustive = false;
    uint64_t budget = 0, seed = 1;
    int max_n = 5, threads = default_threads();
    long long samples = 15000;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", as_json, "emit a single JSON object");
        cmd->add_option("--format", format, "output format: plain or json")
            ->check(CLI::IsMember({"plain", "json"}));
    };

    auto* hull = app.add_subcommand("hull", "convex hull layers of a vertex set");
    hull->add_option("file", file, "graph file ('-' for stdin)")->required();
    hull->add_option("--set", set_arg, "comma-separated seed vertices")->required();
    add_common(hull);

    auto* check = app.add_subcommand("check", "decide complete convexity");
    check->add_option("file", file)->required();
    add_common(check);

    auto* witness = app.add_subcommand("witness", "improper homomorphism witness, if any");
    witness->add_option("file", file)->required();
    add_common(witness);

    auto* chromatic = app.add_subcommand("chromatic", "oriented chromatic number");
    chromatic->add_option("file", file)->required();
    add_common(chromatic);

    auto* simple_chromatic = app.add_subcommand("simple-chromatic", "simple chromatic number");
    simple_chromatic->add_option("file", file)->required();
    add_common(simple_chromatic);

    auto* reduce = app.add_subcommand("reduce", "build the gadget graph of an NAE instance");
    reduce->add_option("file", file)->required();
    reduce->add_option("--variant", variant_arg, "2ec or orient")->required();
    add_common(reduce);

    auto* encode = app.add_subcommand("encode", "colour/orient the gadget from an assignment");
    encode->add_option("file", file)->required();
    encode->add_option("--variant", variant_arg, "2ec or orient")->required();
    encode->add_option("--assign", assign_arg, "assignment bitstring, variable 1 first")->required();
    add_common(encode);

    auto* decode = app.add_subcommand("decode", "read the assignment off a coloured/oriented gadget");
    decode->add_option("file", file)->required();
    add_common(decode);

    auto* solve = app.add_subcommand("solve-nae", "brute-force an NAE instance");
    solve->add_option("file", file)->required();
    add_common(solve);

    auto* search = app.add_subcommand("search-cc", "search for a complete-convex completion");
    search->add_option("file", file)->required();
    search->add_option("--variant", variant_arg, "2ec or orient")->required();
    search->add_flag("--exhaustive", exhaustive, "certify absence by scanning the whole space");
    search->add_option("--budget", budget, "candidate limit for the budgeted mode");
    search->add_option("--threads", threads, "worker threads");
    add_common(search);

    auto* verify = app.add_subcommand("verify", "run the theorem verification suite");
    verify->add_option("--max-n", max_n, "exhaustive bound (2..7)");
    verify->add_option("--seed", seed, "seed for the sampled phase");
    verify->add_option("--only", only_arg, "run a single check id");
    verify->add_option("--threads", threads, "worker threads");
    verify->add_option("--samples", samples, "random samples per check on 6..max-n");
    verify->add_option("--out-dir", out_dir, "directory for counterexample files");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (format == "json") as_json = true;

        if (hull->parsed()) {
            Output out("hull");
            out.as_json = as_json;
            ccg::MixedGraph g = ccg::parse_mixed_graph(read_input(file));
            ccg::VertexSet s(ccg::graph_order(g));
            for (int v : parse_vertex_list(set_arg)) s.set(v);
            ccg::HullTrace t = ccg::convex_hull(g, s);
            std::string plain;
            json layers = json::array();
            for (size_t i = 0; i < t.layers.size(); ++i) {
                plain += "layer " + std::to_string(i) + ": " + t.layers[i].to_string() + "\n";
                layers.push_back(vertex_list(t.layers[i]));
            }
            out.body["result"] = json{{"layers", layers}, {"hull", vertex_list(t.hull())}};
            return out.finish(kExitYes, plain);
        }

        if (check->parsed()) {
            Output out("check");
            out.as_json = as_json;
            ccg::MixedGraph g = ccg::parse_mixed_graph(read_input(file));
            auto res = ccg::complete_convex_witness(g);
            out.body["result"] = res.complete;
            if (res.complete) return out.finish(kExitYes, "complete-convex: yes\n");
            out.body["witness"] = json{{"edge", json::array({res.failing_edge.u, res.failing_edge.v})},
                                       {"hull", vertex_list(res.failing_hull)}};
            return out.finish(kExitNo, "complete-convex: no (edge " + std::to_string(res.failing_edge.u) + " " +
                                           std::to_string(res.failing_edge.v) +
                                           ": hull = " + res.failing_hull.to_string() + ")\n");
        }

        if (witness->parsed()) {
            Output out("witness");
            out.as_json = as_json;
            ccg::MixedGraph g = ccg::parse_mixed_graph(read_input(file));
            auto wit = ccg::admits_improper(g);
            out.body["result"] = wit.has_value();
            if (!wit) return out.finish(kExitNo, "none (complete convex)\n");
            std::string text = ccg::serialize_graph(wit->target.base) + map_lines(wit->map);
            out.body["witness"] = json{{"graph", ccg::serialize_graph(wit->target.base)}, {"map", map_json(wit->map)}};
            return out.finish(kExitYes, text);
        }

        if (chromatic->parsed() || simple_chromatic->parsed()) {
            const bool simple = simple_chromatic->parsed();
            Output out(simple ? "simple-chromatic" : "chromatic");
            out.as_json = as_json;
            ccg::MixedGraph g = ccg::parse_mixed_graph(read_input(file));
            const auto* og = std::get_if<ccg::OrientedGraph>(&g);
            if (!og) throw std::runtime_error("chromatic numbers are defined for oriented graphs");
            ccg::ChromaticWitness w =
                simple ? ccg::simple_chromatic_witness(*og) : ccg::oriented_chromatic_witness(*og);
            out.body["result"] = w.k;
            out.body["witness"] =
                json{{"graph", ccg::serialize_graph(w.tournament)}, {"map", map_json(w.map)}};
            std::string plain = "chi = " + std::to_string(w.k) + "\n" + ccg::serialize_graph(w.tournament) +
                                map_lines(w.map);
            return out.finish(kExitYes, plain);
        }

        if (reduce->parsed()) {
            Output out("reduce");
            out.as_json = as_json;
            ccg::NAEInstance y = ccg::parse_nae(read_input(file));
            auto gadget = ccg::build_gadget(y, parse_variant(variant_arg));
            std::string text = ccg::serialize_graph(gadget.graph, gadget.label_lines());
            out.body["result"] = text;
            return out.finish(kExitYes, text);
        }

        if (encode->parsed()) {
            Output out("encode");
            out.as_json = as_json;
            ccg::NAEInstance y = ccg::parse_nae(read_input(file));
            ccg::Assignment a = ccg::Assignment::from_string(assign_arg);
            auto variant = parse_variant(variant_arg);
            auto gadget = ccg::build_gadget(y, variant);
            std::string text;
            if (variant == ccg::GadgetVariant::TwoEdgeColoured)
                text = ccg::serialize_graph(ccg::colour_gadget(gadget, a), gadget.label_lines());
            else
                text = ccg::serialize_graph(ccg::orient_gadget(gadget, a), gadget.label_lines());
            out.body["result"] = text;
            return out.finish(kExitYes, text);
        }

        if (decode->parsed()) {
            Output out("decode");
            out.as_json = as_json;
            ccg::GraphFile f = ccg::parse_graph_file(read_input(file));
            ccg::MixedGraph g;
            ccg::GadgetVariant variant;
            if (auto* o = std::get_if<ccg::OrientedGraph>(&f.graph)) {
                g = *o;
                variant = ccg::GadgetVariant::Oriented;
            } else if (auto* c = std::get_if<ccg::TwoEdgeColouredGraph>(&f.graph)) {
                g = *c;
                variant = ccg::GadgetVariant::TwoEdgeColoured;
            } else {
                throw std::runtime_error("decode: expected an oriented or 2ec gadget file");
            }
            auto gadget = ccg::gadget_from_labels(ccg::underlying(g), f.labels, variant);
            ccg::Assignment a = ccg::decode_assignment(gadget, g);
            out.body["result"] = a.to_string();
            return out.finish(kExitYes, a.to_string() + "\n");
        }

        if (solve->parsed()) {
            Output out("solve-nae");
            out.as_json = as_json;
            ccg::NAEInstance y = ccg::parse_nae(read_input(file));
            auto a = ccg::nae_solve(y);
            if (!a) return out.finish(kExitNo, "unsatisfiable\n");
            out.body["result"] = a->to_string();
            return out.finish(kExitYes, a->to_string() + "\n");
        }

        if (search->parsed()) {
            Output out("search-cc");
            out.as_json = as_json;
            ccg::SimpleGraph g = ccg::parse_simple_graph(read_input(file));
            ccg::SearchOptions so;
            so.exhaustive = exhaustive || budget == 0;
            so.budget = budget;
            so.threads = threads;
            auto kind = parse_variant(variant_arg) == ccg::GadgetVariant::Oriented
                            ? ccg::GraphKind::Oriented
                            : ccg::GraphKind::TwoEdgeColoured;
            ccg::SearchResult res = ccg::search_cc(g, kind, so);
            out.body["instances"] = res.scanned;
            switch (res.outcome) {
                case ccg::SearchOutcome::Found: {
                    out.body["result"] = "found";
                    out.body["witness"] = ccg::serialize_graph(*res.witness);
                    return out.finish(kExitYes, ccg::serialize_graph(*res.witness));
                }
                case ccg::SearchOutcome::CertifiedNone:
                    out.body["result"] = "none";
                    return out.finish(kExitNo, "none (certified)\n");
                default:
                    out.body["result"] = "indeterminate";
                    return out.finish(kExitNo, "indeterminate (budget exhausted)\n");
            }
        }

        if (verify->parsed()) {
            Output out("verify");
            out.as_json = as_json;
            ccg::VerifyOptions vo;
            vo.max_n = max_n;
            vo.seed = seed;
            vo.only = only_arg;
            vo.threads = threads;
            vo.random_samples = samples;
            vo.counterexample_dir = out_dir;
            ccg::VerifyReport rep = ccg::verify_suite(vo);
            long long total = 0;
            json checks = json::array();
            for (const auto& r : rep.results) {
                total += r.instances;
                checks.push_back(json{{"id", r.id},
                                      {"pass", r.pass},
                                      {"instances", r.instances},
                                      {"applicable", r.applicable},
                                      {"counterexample", r.counterexample_path},
                                      {"detail", r.detail}});
            }
            out.body["result"] = rep.all_pass() ? "pass" : "fail";
            out.body["instances"] = total;
            out.body["seed"] = rep.seed;
            out.body["checks"] = checks;
            return out.finish(rep.all_pass() ? kExitYes : kExitNo, ccg::render_report(rep));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
