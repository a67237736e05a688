#include "suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "ptg/chordal.hpp"
#include "ptg/hardness.hpp"
#include "ptg/oracle.hpp"
#include "ptg/solver.hpp"
#include "ptg/structure.hpp"
#include "ptg/template.hpp"

namespace ptg::suite {

namespace {

// Pinned sizes and tolerances.
constexpr int kCorpusMaxVertices = 7;
constexpr int kCorpusMaxTreeNodes = 5;
constexpr int kOracleBudget = 12;
constexpr std::size_t kRepsPerInstance = 16;
constexpr int kPlantedRoundTrip = 500;
constexpr int kPlantedPotential = 200;
constexpr int kPosetMaxElements = 5;
constexpr int kDHostMaxNodes = 14;
constexpr double kMaxScalingSlope = 3.5;
constexpr int kAllowedFailures = 0;

std::size_t idx(int x) { return static_cast<std::size_t>(x); }

template <class F>
void parallel_for(std::size_t count, int jobs, F&& f) {
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < count;) f(i);
        });
    for (auto& t : pool) t.join();
}

struct Instance {
    std::size_t graph;
    std::size_t tree;
};

// The exhaustive desk corpus and everything the oracle finds on it, computed once.
struct Corpus {
    std::vector<Graph> graphs;
    std::vector<HostTree> trees;
    std::vector<Instance> instances;
    std::vector<std::optional<Representation>> solver;  // per instance
    std::vector<std::optional<Representation>> oracle;  // per instance
    std::vector<std::vector<Representation>> all_reps;  // per instance, up to kRepsPerInstance
    std::vector<ChainDecomposition> chains;             // per graph
};

Corpus& corpus(int jobs) {
    static Corpus c;
    static bool ready = false;
    if (ready) return c;
    c.graphs = chordal_corpus(kCorpusMaxVertices);
    for (int k = 1; k <= kCorpusMaxTreeNodes; ++k)
        for (auto& t : all_trees(k)) c.trees.push_back(t);
    for (std::size_t g = 0; g < c.graphs.size(); ++g)
        for (std::size_t t = 0; t < c.trees.size(); ++t) c.instances.push_back({g, t});
    c.solver.resize(c.instances.size());
    c.oracle.resize(c.instances.size());
    c.all_reps.resize(c.instances.size());
    c.chains.resize(c.graphs.size());
    parallel_for(c.graphs.size(), jobs, [&](std::size_t g) { c.chains[g] = chains(c.graphs[g]); });
    parallel_for(c.instances.size(), jobs, [&](std::size_t i) {
        const auto& g = c.graphs[c.instances[i].graph];
        const auto& t = c.trees[c.instances[i].tree];
        c.solver[i] = recognize(g, t);
        c.oracle[i] = oracle_recognize(g, t, kOracleBudget);
        c.all_reps[i] = oracle_all_compact(g, t, kOracleBudget, kRepsPerInstance);
    });
    ready = true;
    return c;
}

std::string count_line(const std::string& what, long total, long bad, const std::string& bad_name) {
    std::ostringstream out;
    out << total << ' ' << what << ", " << bad << ' ' << bad_name;
    return out.str();
}

// Criterion 1.
CriterionResult oracle_equivalence(const Options& opt) {
    auto& c = corpus(opt.jobs);
    long disagree = 0, invalid = 0, yes = 0;
    for (std::size_t i = 0; i < c.instances.size(); ++i) {
        const auto& g = c.graphs[c.instances[i].graph];
        const auto& t = c.trees[c.instances[i].tree];
        if (c.solver[i].has_value() != c.oracle[i].has_value()) ++disagree;
        if (c.solver[i]) {
            ++yes;
            if (!verify_proper(g, *c.solver[i]) || !is_re_subdivision(c.solver[i]->host, t)) ++invalid;
        }
    }
    CriterionResult r;
    r.pass = disagree + invalid <= kAllowedFailures;
    r.detail = count_line("instances (" + std::to_string(yes) + " yes)", static_cast<long>(c.instances.size()), disagree, "disagreements") +
               ", " + std::to_string(invalid) + " invalid outputs";
    return r;
}

// Criterion 2.
CriterionResult round_trip(const Options& opt) {
    auto& c = corpus(opt.jobs);
    long checked = 0, bad = 0;
    for (std::size_t i = 0; i < c.instances.size(); ++i) {
        const auto& g = c.graphs[c.instances[i].graph];
        const auto& t = c.trees[c.instances[i].tree];
        for (const auto& rep : c.all_reps[i]) {
            ++checked;
            auto p = proper_from_compact(g, rep);
            if (!verify_proper(g, p) || !is_re_subdivision(p.host, t)) ++bad;
        }
    }
    std::vector<HostTree> trees;
    for (int k = 2; k <= 6; ++k)
        for (auto& t : all_trees(k)) trees.push_back(t);
    long planted = 0, planted_bad = 0, skipped = 0;
    for (std::uint64_t seed = 0; planted < kPlantedRoundTrip && seed < 4 * kPlantedRoundTrip; ++seed) {
        const auto& t = trees[seed % trees.size()];
        int n = 3 + static_cast<int>(seed % 12);
        Planted pl;
        try {
            pl = gen_planted(t, n, seed);
        } catch (const GenerationFailed&) {
            ++skipped;
            continue;
        }
        ++planted;
        auto cr = compact_from_proper(pl.graph, pl.rep);
        if (!verify_compact(pl.graph, cr) || !is_re_subdivision(cr.host, t)) ++planted_bad;
    }
    CriterionResult r;
    r.pass = bad + planted_bad <= kAllowedFailures && planted == kPlantedRoundTrip;
    r.detail = count_line("oracle compact reps", checked, bad, "proper failures") + "; " +
               count_line("planted proper reps", planted, planted_bad, "compact failures") + " (" + std::to_string(skipped) +
               " generator retries)";
    return r;
}

// Criterion 3.
CriterionResult structural_bounds(const Options& opt) {
    auto& c = corpus(opt.jobs);
    long reps = 0, k_bad = 0, s_bad = 0;
    for (std::size_t i = 0; i < c.instances.size(); ++i) {
        const auto& g = c.graphs[c.instances[i].graph];
        const auto& t = c.trees[c.instances[i].tree];
        if (c.all_reps[i].empty()) continue;
        long e = t.m();
        if (static_cast<long>(c.chains[c.instances[i].graph].not_surrounded.size()) > e * e + 1) ++s_bad;
        for (const auto& rep : c.all_reps[i]) {
            ++reps;
            auto vx = rep.node_sets();
            for (Node y = 0; y < rep.host.n(); ++y)
                if (!vx[idx(y)].empty() && static_cast<int>(components_K(g, rep, y).size()) > t.n()) ++k_bad;
        }
    }
    CriterionResult r;
    r.pass = k_bad + s_bad <= kAllowedFailures;
    r.detail = count_line("compact reps", reps, k_bad, "|K(y)| > |V(T)| violations") + ", " + std::to_string(s_bad) +
               " not-surrounded bound violations";
    return r;
}

// Criterion 4.
CriterionResult guard_characterization(const Options& opt) {
    auto& c = corpus(opt.jobs);
    long cliques = 0, bad = 0;
    for (std::size_t gi = 0; gi < c.graphs.size(); ++gi) {
        const auto& g = c.graphs[gi];
        const auto& cl = c.chains[gi].cliques;
        for (int y = 0; y < static_cast<int>(cl.size()); ++y) {
            ++cliques;
            auto gd = guards(g, cl, y);
            std::set<std::pair<int, int>> expect;
            for (int l : gd.L)
                for (int rr : gd.R) {
                    expect.insert({l, rr});
                    expect.insert({rr, l});
                }
            if (expect != oracle_surrounding_pairs(g, cl, y)) ++bad;
        }
    }
    CriterionResult r;
    r.pass = bad <= kAllowedFailures;
    r.detail = count_line("cliques", cliques, bad, "mismatches");
    return r;
}

// Criterion 5.
CriterionResult chain_laws(const Options& opt) {
    auto& c = corpus(opt.jobs);
    long partition_bad = 0, terminal_bad = 0, overlap_bad = 0, neighbor_bad = 0, layout_bad = 0, neighbor_checks = 0;
    for (std::size_t gi = 0; gi < c.graphs.size(); ++gi) {
        const auto& d = c.chains[gi];
        int k = static_cast<int>(d.cliques.size());
        std::vector<int> seen(idx(k), 0);
        for (int y : d.not_surrounded) ++seen[idx(y)];
        for (const auto& ch : d.chains)
            for (int y : ch.inner) ++seen[idx(y)];
        if (std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; })) ++partition_bad;
        for (const auto& ch : d.chains)
            for (int side = 0; side < 2; ++side) {
                auto kind = side == 0 ? ch.kind0 : ch.kind1;
                const auto& y = ch.terminal(side);
                bool ok = kind == TerminalKind::Guard ||
                          (kind == TerminalKind::NotSurrounded && y.size() == 1 &&
                           std::binary_search(d.not_surrounded.begin(), d.not_surrounded.end(), y[0]));
                if (!ok) ++terminal_bad;
                for (const auto& other : d.chains) {
                    CliqueSet inner(other.inner.begin(), other.inner.end());
                    std::sort(inner.begin(), inner.end());
                    std::size_t common = 0;
                    for (int z : inner) common += std::binary_search(y.begin(), y.end(), z);
                    if (common != 0 && common != inner.size()) ++overlap_bad;
                }
            }
    }
    // Chains laid out as paths, and non-chain neighbors meeting every inner clique alike, in every oracle rep.
    for (std::size_t i = 0; i < c.instances.size(); ++i) {
        const auto& g = c.graphs[c.instances[i].graph];
        const auto& d = c.chains[c.instances[i].graph];
        for (const auto& rep : c.all_reps[i]) {
            std::vector<ChainPath> paths;
            try {
                paths = chain_paths(rep, d);
            } catch (const std::exception&) {
                ++layout_bad;
                continue;
            }
            auto vx = rep.node_sets();
            for (const auto& p : paths) {
                const auto& ch = d.chains[idx(p.chain)];
                for (int j = 1; j <= p.s(); ++j)
                    for (Node z : attachments(rep, p, j)) {
                        if (vx[idx(z)].empty()) continue;
                        int x = static_cast<int>(std::lower_bound(d.cliques.begin(), d.cliques.end(), vx[idx(z)]) - d.cliques.begin());
                        ++neighbor_checks;
                        if (!rehang_neighbors_equal(g, d.cliques, ch, x)) ++neighbor_bad;
                    }
            }
        }
    }
    CriterionResult r;
    long bad = partition_bad + terminal_bad + overlap_bad + neighbor_bad + layout_bad;
    r.pass = bad <= kAllowedFailures;
    std::ostringstream out;
    out << c.graphs.size() << " graphs: " << partition_bad << " partition, " << terminal_bad << " terminal, " << overlap_bad
        << " terminal-overlap, " << layout_bad << " layout violations; " << neighbor_checks << " neighbor checks, " << neighbor_bad
        << " inequalities";
    r.detail = out.str();
    return r;
}

// Last candidate index for Phi at i: stop before the next chain node that has attachments.
int candidate_end(const Representation& r, const ChainPath& p, int i) {
    for (int k = i + 1; k <= p.s(); ++k)
        if (!attachments(r, p, k).empty()) return k - 1;
    return p.s();
}

struct LawCounts {
    long evaluated = 0, branching = 0;
    long contiguity = 0, oracle_bad = 0, linearity = 0, independence = 0, compact_bad = 0;
    long bad() const { return contiguity + oracle_bad + linearity + independence + compact_bad; }
};

// Potential laws at every inner chain node of a compact representation.
void check_potential_laws(const Graph& g, const Representation& rep, const ChainDecomposition& d, LawCounts& c) {
    for (const auto& p : chain_paths(rep, d))
        for (int i = 1; i <= p.s(); ++i) {
            ++c.evaluated;
            auto phi = potential(g, rep, p, i);
            bool contiguous = !phi.empty() && phi.indices.front() == i;
            for (std::size_t a = 1; a < phi.indices.size(); ++a) contiguous = contiguous && phi.indices[a] == phi.indices[a - 1] + 1;
            if (!contiguous) {
                ++c.contiguity;
                continue;
            }
            if (oracle_potential(g, rep, p.nodes, i, candidate_end(rep, p, i)) != phi.indices) ++c.oracle_bad;
            if (attachments(rep, p, i).empty()) continue;
            ++c.branching;
            int j = phi.last();
            auto moved = rehang(rep, p, i, j);
            if (!verify_compact(g, moved)) ++c.compact_bad;
            if (potential(g, moved, p, j).indices != std::vector<int>{j}) ++c.linearity;
            for (int k = j + 1; k <= p.s(); ++k) {
                if (attachments(rep, p, k).empty()) continue;
                auto before = potential(g, rep, p, k).indices;
                auto after = potential(g, moved, p, k).indices;
                if (!std::includes(before.begin(), before.end(), after.begin(), after.end())) ++c.independence;
            }
        }
}

std::string describe_laws(const LawCounts& c) {
    std::ostringstream out;
    out << c.evaluated << " chain nodes (" << c.branching << " branching): " << c.contiguity << " non-contiguous, " << c.oracle_bad
        << " oracle mismatches, " << c.compact_bad << " non-compact rehangs, " << c.linearity << " linearity, " << c.independence
        << " independence violations";
    return out.str();
}

// Criterion 6. The planted instances are the stated population; the corpus representations add coverage.
CriterionResult potential_laws(const Options& opt) {
    std::vector<HostTree> trees;
    for (int k = 4; k <= 7; ++k)
        for (auto& t : all_trees(k))
            if (branching_count(t) > 0) trees.push_back(t);
    long instances = 0;
    LawCounts planted;
    for (std::uint64_t seed = 0; instances < kPlantedPotential && seed < 4 * kPlantedPotential; ++seed) {
        const auto& t = trees[seed % trees.size()];
        Planted pl;
        try {
            pl = gen_planted(t, 5 + static_cast<int>(seed % 8), seed);
        } catch (const GenerationFailed&) {
            continue;
        }
        ++instances;
        check_potential_laws(pl.graph, compact_from_proper(pl.graph, pl.rep), chains(pl.graph), planted);
    }
    auto& c = corpus(opt.jobs);
    LawCounts extra;
    for (std::size_t i = 0; i < c.instances.size(); ++i)
        for (const auto& rep : c.all_reps[i]) check_potential_laws(c.graphs[c.instances[i].graph], rep, c.chains[c.instances[i].graph], extra);
    CriterionResult r;
    r.pass = planted.bad() + extra.bad() <= kAllowedFailures && instances == kPlantedPotential;
    r.detail = std::to_string(instances) + " planted instances, " + describe_laws(planted) + "; corpus reps: " + describe_laws(extra);
    return r;
}

// Criterion 7.
CriterionResult template_completeness(const Options& opt) {
    auto& c = corpus(opt.jobs);
    long reps = 0, misses = 0;
    std::mutex mu;
    parallel_for(c.instances.size(), opt.jobs, [&](std::size_t i) {
        const auto& g = c.graphs[c.instances[i].graph];
        const auto& t = c.trees[c.instances[i].tree];
        if (t.n() == 1 || c.all_reps[i].empty()) return;
        const auto& d = c.chains[c.instances[i].graph];
        auto tpls = all_templates(g, t, d);
        long local_reps = 0, local_misses = 0;
        for (const auto& rep : c.all_reps[i]) {
            ++local_reps;
            bool hit = std::any_of(tpls.begin(), tpls.end(), [&](const Template& tp) { return realizes(g, rep, d, tp); });
            if (!hit) ++local_misses;
        }
        std::lock_guard<std::mutex> lock(mu);
        reps += local_reps;
        misses += local_misses;
    });
    CriterionResult r;
    r.pass = misses <= kAllowedFailures;
    r.detail = count_line("oracle compact reps", reps, misses, "without a realized template");
    return r;
}

// Criterion 8.
CriterionResult hardness_equivalence(const Options& opt) {
    std::vector<HeightOnePoset> posets;
    for (int n = 0; n <= kPosetMaxElements; ++n)
        for (auto& p : height_one_posets(n)) posets.push_back(std::move(p));
    std::vector<int> disagree(posets.size(), 0), trip_bad(posets.size(), 0), yes(posets.size(), 0);
    parallel_for(posets.size(), opt.jobs, [&](std::size_t i) {
        const auto& p = posets[i];
        auto cert = find_certificate(p);
        auto gd = gadget_graph(p);
        auto found = oracle_recognize_proper(gd.graph, graph_D(), kDHostMaxNodes);
        disagree[i] = cert.has_value() != found.has_value();
        if (found) {
            yes[i] = 1;
            if (!verify_proper(gd.graph, *found)) trip_bad[i] = 1;
            try {
                if (!check_certificate(p, interval_orders_from_representation(p, *found))) trip_bad[i] = 1;
            } catch (const std::exception&) {
                trip_bad[i] = 1;
            }
        }
        if (cert) {
            try {
                auto rep = d_representation_from_certificate(p, *cert);
                if (!verify_proper(gd.graph, rep) || !is_re_subdivision(rep.host, graph_D())) trip_bad[i] = 1;
                if (!check_certificate(p, interval_orders_from_representation(p, rep))) trip_bad[i] = 1;
            } catch (const std::exception&) {
                trip_bad[i] = 1;
            }
        }
    });
    long d = std::count(disagree.begin(), disagree.end(), 1), t = std::count(trip_bad.begin(), trip_bad.end(), 1);
    long y = std::count(yes.begin(), yes.end(), 1);
    CriterionResult r;
    r.pass = d + t <= kAllowedFailures;
    r.detail = count_line("height-one posets (" + std::to_string(y) + " yes)", static_cast<long>(posets.size()), d, "disagreements") +
               ", " + std::to_string(t) + " round-trip failures";
    return r;
}

// Brute-force proper leafage of a connected chordal graph from the unrestricted tree list.
int brute_leafage(const Graph& g) {
    if (g.n() <= 1) return 0;
    int k = static_cast<int>(oracle_maximal_cliques(g).size());
    for (int leaves = 2; leaves <= k + 1; ++leaves)
        for (int nodes = 2; nodes <= 2 * leaves - 2; ++nodes)
            for (const auto& t : all_trees(nodes)) {
                bool reduced = true;
                int lc = 0;
                for (Node x = 0; x < t.n(); ++x) {
                    if (t.degree(x) == 2) reduced = false;
                    if (t.degree(x) == 1) ++lc;
                }
                if (reduced && lc == leaves && oracle_recognize(g, t, kOracleBudget)) return leaves;
            }
    return -1;
}

// Criterion 9.
CriterionResult leafage(const Options& opt) {
    auto& c = corpus(opt.jobs);
    std::vector<int> bad(c.graphs.size(), 0);
    parallel_for(c.graphs.size(), opt.jobs, [&](std::size_t i) {
        auto l = proper_leafage(c.graphs[i]);
        bad[i] = !l.resolved || l.leaves != brute_leafage(c.graphs[i]);
    });
    CriterionResult r;
    long b = std::count(bad.begin(), bad.end(), 1);
    r.pass = b <= kAllowedFailures;
    r.detail = count_line("connected chordal graphs", static_cast<long>(c.graphs.size()), b, "disagreements");
    return r;
}

// Criterion 10.
CriterionResult scaling(const Options&) {
    std::vector<double> xs, ys;
    std::ostringstream out;
    bool all_yes = true;
    for (int n : {50, 100, 200, 400}) {
        auto g = path_graph(n);
        double best = 1e300;
        for (int rep = 0; rep < 3; ++rep) {
            auto t0 = std::chrono::steady_clock::now();
            auto res = recognize(g, path_tree(2));
            best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
            all_yes = all_yes && res.has_value();
        }
        xs.push_back(std::log(n));
        ys.push_back(std::log(std::max(best, 1e-6)));
        out << "P" << n << " " << best << "s; ";
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(ys.size());
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    double slope = sxy / sxx;
    double r2 = syy > 0 ? sxy * sxy / (sxx * syy) : 1.0;
    CriterionResult r;
    r.pass = all_yes && slope <= kMaxScalingSlope;
    out << "log-log slope " << slope << " (R^2 " << r2 << ", limit " << kMaxScalingSlope << ")";
    r.detail = out.str();
    return r;
}

struct Entry {
    const char* name;
    CriterionResult (*run)(const Options&);
};

const Entry kCriteria[] = {
    {"oracle equivalence", oracle_equivalence},
    {"compact/proper round trip", round_trip},
    {"structural bounds", structural_bounds},
    {"guard characterization", guard_characterization},
    {"chain laws", chain_laws},
    {"potential laws", potential_laws},
    {"template completeness", template_completeness},
    {"hardness equivalence", hardness_equivalence},
    {"proper leafage", leafage},
    {"scaling", scaling},
};

}  // namespace

int criterion_count() { return static_cast<int>(std::size(kCriteria)); }

CriterionResult run_criterion(int id, const Options& opt) {
    const auto& e = kCriteria[idx(id - 1)];
    auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        r = e.run(opt);
    } catch (const std::exception& ex) {
        r.pass = false;
        r.detail = std::string("exception: ") + ex.what();
    }
    r.id = id;
    r.name = e.name;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<CriterionResult> run_all(const Options& opt, const std::function<void(const CriterionResult&)>& report) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= criterion_count(); ++id) {
        if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end()) continue;
        out.push_back(run_criterion(id, opt));
        report(out.back());
    }
    return out;
}

std::string format(const CriterionResult& r) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(1);
    out << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << ": " << r.detail << " (" << r.seconds << " s)";
    return out.str();
}

}  // namespace ptg::suite
