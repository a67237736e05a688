// Command-line front end. Exit codes: 0 = yes / valid, 1 = no / invalid, 2 = input or usage error.
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptg/chordal.hpp"
#include "ptg/hardness.hpp"
#include "ptg/oracle.hpp"
#include "ptg/representation.hpp"
#include "ptg/solver.hpp"
#include "ptg/structure.hpp"
#include "ptg/template.hpp"
#include "suite.hpp"

namespace {

using namespace ptg;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kInputError = 2;

// Raised for unreadable files; reported like parse errors.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

// Runs a loader and prefixes any parse error with the file name.
template <class F>
auto load(const std::string& path, F&& parse) {
    std::string text = read_file(path);
    try {
        return parse(text);
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(path + ": " + e.what());
    }
}

Graph load_graph(const std::string& path) { return load(path, [](const std::string& t) { return parse_edge_list(t); }); }
HostTree load_tree(const std::string& path) { return load(path, [](const std::string& t) { return HostTree(parse_host(t)); }); }
HeightOnePoset load_poset(const std::string& path) { return load(path, [](const std::string& t) { return parse_poset(t); }); }

std::string violation_json(const Verdict& v) {
    nlohmann::ordered_json j;
    j["ok"] = v.ok;
    if (v.violation) {
        j["violation"]["condition"] = v.violation->condition;
        j["violation"]["detail"] = v.violation->detail;
        j["violation"]["a"] = v.violation->a;
        j["violation"]["b"] = v.violation->b;
    }
    return j.dump(2);
}

std::string no_json() { return R"({"answer": "no"})"; }

struct RecognizeArgs {
    std::string graph, tree, dump_templates;
    bool json = false, dot = false;
    std::string seed_order = "deterministic";
    int budget = 12;
};

int emit_rep(const Graph& g, const Representation& r, const RecognizeArgs& a) {
    std::cout << (a.dot ? representation_to_dot(g, r) : representation_to_json(g, r)) << '\n';
    return kYes;
}

int cmd_recognize(const RecognizeArgs& a) {
    Graph g = load_graph(a.graph);
    HostTree t = load_tree(a.tree);
    if (!a.dump_templates.empty()) {
        nlohmann::json all = nlohmann::json::array();
        if (is_chordal(g).chordal && is_connected(g) && g.n() > 0 && t.n() > 1) {
            auto d = chains(g);
            enumerate_templates(g, t, d, [&](const Template& tpl) {
                all.push_back(nlohmann::json::parse(template_to_json(g, d, tpl)));
                return true;
            });
        }
        write_file(a.dump_templates, all.dump(2) + "\n");
    }
    auto r = recognize(g, t);
    if (!r) {
        if (a.json) std::cout << no_json() << '\n';
        std::cerr << "no: the graph is not a proper T-graph for this tree\n";
        return kNo;
    }
    return emit_rep(g, *r, a);
}

int cmd_oracle(const RecognizeArgs& a) {
    Graph g = load_graph(a.graph);
    HostTree t = load_tree(a.tree);
    if (g.n() == 0 || !is_connected(g)) throw InputError("the oracle needs a connected graph");
    std::optional<Representation> r;
    if (is_chordal(g).chordal) r = oracle_recognize(g, t, a.budget);
    if (!r) {
        if (a.json) std::cout << no_json() << '\n';
        std::cerr << "no: no compact representation on a re-subdivision of the tree\n";
        return kNo;
    }
    return emit_rep(g, *r, a);
}

struct VerifyArgs {
    std::string graph, rep, tree, mode = "proper";
    bool json = false;
};

int cmd_verify(const VerifyArgs& a) {
    Graph g = load_graph(a.graph);
    Representation r = load(a.rep, [&](const std::string& t) { return representation_from_json(g, t); });
    Verdict v = a.mode == "compact" ? verify_compact(g, r) : verify_proper(g, r);
    if (v && !a.tree.empty() && !is_re_subdivision(r.host, load_tree(a.tree))) {
        v.ok = false;
        v.violation = Violation{"host", "host is not a re-subdivision of the tree", -1, -1};
    }
    if (a.json) std::cout << violation_json(v) << '\n';
    if (!v) std::cerr << "invalid: " << describe(*v.violation) << '\n';
    return v ? kYes : kNo;
}

int cmd_chains(const std::string& graph) {
    Graph g = load_graph(graph);
    if (g.n() == 0 || !is_connected(g) || !is_chordal(g).chordal) throw InputError("chains need a connected chordal graph");
    std::cout << chains_to_json(g, chains(g)) << '\n';
    return kYes;
}

int cmd_leafage(const std::string& graph, int max_leaves) {
    Graph g = load_graph(graph);
    if (!is_chordal(g).chordal) throw InputError("proper leafage needs a chordal graph");
    auto l = proper_leafage(g, max_leaves);
    nlohmann::ordered_json j;
    j["leaves"] = l.leaves;
    j["resolved"] = l.resolved;
    if (l.resolved) {
        j["witness"]["nodes"] = l.witness.n();
        j["witness"]["edges"] = nlohmann::json::array();
        for (const auto& e : l.witness.edges()) j["witness"]["edges"].push_back({e.u, e.v});
    }
    std::cout << j.dump(2) << '\n';
    return l.resolved ? kYes : kNo;
}

struct GadgetArgs {
    std::string poset, certificate, rep, graph_out;
    bool dot = false;
};

std::optional<Certificate3> certificate_for(const HeightOnePoset& p, const std::string& path) {
    if (!path.empty()) return load(path, [&](const std::string& t) { return certificate_from_json(p, t); });
    if (p.size() > 6) throw InputError("posets with more than 6 elements need --certificate");
    return find_certificate(p);
}

int cmd_gadget_build(const GadgetArgs& a) {
    auto p = load_poset(a.poset);
    auto gd = gadget_graph(p);
    if (!a.graph_out.empty()) write_file(a.graph_out, write_edge_list(gd.graph));
    auto cert = certificate_for(p, a.certificate);
    if (!cert || !check_certificate(p, *cert)) {
        std::cerr << "no: no valid interval-dimension-3 certificate\n";
        return kNo;
    }
    auto r = d_representation_from_certificate(p, *cert);
    std::cout << (a.dot ? representation_to_dot(gd.graph, r) : representation_to_json(gd.graph, r)) << '\n';
    return kYes;
}

int cmd_gadget_certify(const GadgetArgs& a) {
    auto p = load_poset(a.poset);
    if (!a.certificate.empty()) {
        auto c = load(a.certificate, [&](const std::string& t) { return certificate_from_json(p, t); });
        bool ok = check_certificate(p, c);
        std::cout << (ok ? R"({"valid": true})" : R"({"valid": false})") << '\n';
        return ok ? kYes : kNo;
    }
    auto c = certificate_for(p, "");
    if (!c) {
        std::cerr << "no: interval dimension exceeds 3\n";
        return kNo;
    }
    std::cout << certificate_to_json(p, *c) << '\n';
    return kYes;
}

int cmd_gadget_extract(const GadgetArgs& a) {
    auto p = load_poset(a.poset);
    auto gd = gadget_graph(p);
    auto r = load(a.rep, [&](const std::string& t) { return representation_from_json(gd.graph, t); });
    try {
        std::cout << certificate_to_json(p, interval_orders_from_representation(p, r)) << '\n';
    } catch (const NotAGadgetRepresentation& e) {
        std::cerr << "invalid: " << e.what() << '\n';
        return kNo;
    }
    return kYes;
}

struct GenArgs {
    std::string kind = "chordal", tree, rep_out;
    int n = 8;
    double density = 0.5;
    std::uint64_t seed = 0;
};

int cmd_gen(const GenArgs& a) {
    if (a.kind == "chordal") {
        std::cout << write_edge_list(gen_chordal(a.n, a.density, a.seed));
        return kYes;
    }
    if (a.tree.empty()) throw InputError("planted instances need --tree");
    auto pl = gen_planted(load_tree(a.tree), a.n, a.seed);
    std::cout << write_edge_list(pl.graph);
    if (!a.rep_out.empty()) write_file(a.rep_out, representation_to_json(pl.graph, pl.rep) + "\n");
    return kYes;
}

int cmd_corpus(std::vector<int> only, int jobs, bool json) {
    suite::Options opt;
    opt.jobs = jobs;
    opt.only = std::move(only);
    for (int id : opt.only)
        if (id < 1 || id > suite::criterion_count()) throw InputError("unknown criterion " + std::to_string(id));
    nlohmann::json out = nlohmann::json::array();
    bool ok = true;
    suite::run_all(opt, [&](const suite::CriterionResult& r) {
        ok = ok && r.pass;
        if (json) out.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
        else std::cout << suite::format(r) << std::endl;
    });
    if (json) std::cout << out.dump(2) << '\n';
    return ok ? kYes : kNo;
}

int default_jobs() {
    if (const char* env = std::getenv("PTG_JOBS")) return std::max(1, std::atoi(env));
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Proper T-graph recognition and the D-graph hardness gadget"};
    app.require_subcommand(1);

    RecognizeArgs rec;
    auto add_recognize_flags = [&](CLI::App* sub) {
        sub->add_option("--graph", rec.graph, "edge-list file")->required();
        sub->add_option("--tree", rec.tree, "host tree file ('n m' then edges)")->required();
        auto* j = sub->add_flag("--json", rec.json, "JSON output (default)");
        sub->add_flag("--dot", rec.dot, "Graphviz DOT output")->excludes(j);
        sub->add_option("--seed-order", rec.seed_order, "tie-breaking mode")->check(CLI::IsMember({"deterministic"}));
    };
    auto* recognize_cmd = app.add_subcommand("recognize", "decide whether the graph is a proper T-graph");
    add_recognize_flags(recognize_cmd);
    recognize_cmd->add_option("--dump-templates", rec.dump_templates, "write every enumerated template as JSON to this file");
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force compact representation search");
    add_recognize_flags(oracle_cmd);
    oracle_cmd->add_option("--budget", rec.budget, "host node budget")->check(CLI::Range(1, 40));

    VerifyArgs ver;
    auto* verify_cmd = app.add_subcommand("verify", "check a representation against a graph");
    verify_cmd->add_option("--graph", ver.graph, "edge-list file")->required();
    verify_cmd->add_option("--rep", ver.rep, "representation JSON")->required();
    verify_cmd->add_option("--mode", ver.mode, "proper or compact")->check(CLI::IsMember({"proper", "compact"}));
    verify_cmd->add_option("--tree", ver.tree, "also require the host to be a re-subdivision of this tree");
    verify_cmd->add_flag("--json", ver.json, "JSON verdict on stdout");

    std::string chains_graph;
    auto* chains_cmd = app.add_subcommand("chains", "surrounded-clique chains of a connected chordal graph");
    chains_cmd->add_option("--graph", chains_graph, "edge-list file")->required();
    chains_cmd->add_flag("--json", "JSON output (the only format)");

    std::string leafage_graph;
    int max_leaves = -1;
    auto* leafage_cmd = app.add_subcommand("leafage", "proper leafage with a witness tree");
    leafage_cmd->add_option("--graph", leafage_graph, "edge-list file")->required();
    leafage_cmd->add_option("--max-leaves", max_leaves, "give up beyond this many leaves");
    leafage_cmd->add_flag("--json", "JSON output (the only format)");

    GadgetArgs gad;
    auto* gadget_cmd = app.add_subcommand("gadget", "hardness gadget for height-one posets");
    gadget_cmd->require_subcommand(1);
    auto* build_cmd = gadget_cmd->add_subcommand("build", "proper D-representation of the gadget graph");
    build_cmd->add_option("--poset", gad.poset, "poset file")->required();
    build_cmd->add_option("--certificate", gad.certificate, "certificate JSON (searched when omitted)");
    build_cmd->add_option("--graph-out", gad.graph_out, "write the gadget graph as an edge list");
    build_cmd->add_flag("--dot", gad.dot, "Graphviz DOT output");
    build_cmd->add_flag("--json", "JSON output (default)");
    auto* certify_cmd = gadget_cmd->add_subcommand("certify", "check or search a three-interval-order certificate");
    certify_cmd->add_option("--poset", gad.poset, "poset file")->required();
    certify_cmd->add_option("--certificate", gad.certificate, "certificate JSON to check");
    certify_cmd->add_flag("--json", "JSON output (the only format)");
    auto* extract_cmd = gadget_cmd->add_subcommand("extract", "interval orders from a D-representation");
    extract_cmd->add_option("--poset", gad.poset, "poset file")->required();
    extract_cmd->add_option("--rep", gad.rep, "representation JSON of the gadget graph")->required();
    extract_cmd->add_flag("--json", "JSON output (the only format)");

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "seeded instance generators");
    gen_cmd->add_option("--kind", gen.kind, "chordal or planted")->check(CLI::IsMember({"chordal", "planted"}));
    gen_cmd->add_option("--n", gen.n, "vertex count")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--density", gen.density, "subtree density for chordal graphs")->check(CLI::Range(0.01, 1.0));
    gen_cmd->add_option("--seed", gen.seed, "64-bit seed");
    gen_cmd->add_option("--tree", gen.tree, "host tree for planted instances");
    gen_cmd->add_option("--rep-out", gen.rep_out, "write the planted representation JSON here");

    std::vector<int> criteria;
    int jobs = default_jobs();
    bool corpus_json = false;
    auto* corpus_cmd = app.add_subcommand("corpus", "run the acceptance suite");
    corpus_cmd->add_option("--criterion", criteria, "run only these criteria (1-based)");
    corpus_cmd->add_option("--jobs", jobs, "worker threads (default from PTG_JOBS)")->check(CLI::PositiveNumber);
    corpus_cmd->add_flag("--json", corpus_json, "JSON results");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*recognize_cmd) return cmd_recognize(rec);
        if (*oracle_cmd) return cmd_oracle(rec);
        if (*verify_cmd) return cmd_verify(ver);
        if (*chains_cmd) return cmd_chains(chains_graph);
        if (*leafage_cmd) return cmd_leafage(leafage_graph, max_leaves);
        if (*build_cmd) return cmd_gadget_build(gad);
        if (*certify_cmd) return cmd_gadget_certify(gad);
        if (*extract_cmd) return cmd_gadget_extract(gad);
        if (*gen_cmd) return cmd_gen(gen);
        if (*corpus_cmd) return cmd_corpus(criteria, jobs, corpus_json);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
