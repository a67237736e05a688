#include "ptg/structure.hpp"

#include <algorithm>

#include <json.hpp>

#include "ptg/chordal.hpp"

namespace ptg {

CliqueComponents clique_components(const Graph& g, const std::vector<VertexSet>& cliques, CliqueId y) {
    CliqueComponents cc;
    const auto& vy = cliques[static_cast<std::size_t>(y)];
    auto sub = induced_subgraph(g, set_difference(iota_set(g.n()), vy));
    std::vector<int> comp_of(static_cast<std::size_t>(g.n()), -1);
    for (const auto& comp : connected_components(sub.graph)) {
        VertexSet orig;
        for (Vertex v : comp) orig.push_back(sub.new_to_old[static_cast<std::size_t>(v)]);
        orig = normalized(orig);
        for (Vertex v : orig) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(cc.comps.size());
        cc.nbhd.push_back(open_neighborhood(g, orig));
        cc.comps.push_back(std::move(orig));
    }
    cc.of_clique.assign(cliques.size(), -1);
    for (std::size_t l = 0; l < cliques.size(); ++l) {
        if (static_cast<CliqueId>(l) == y) continue;
        for (Vertex v : cliques[l])
            if (!contains(vy, v)) {
                cc.of_clique[l] = comp_of[static_cast<std::size_t>(v)];
                break;
            }
    }
    return cc;
}

namespace {

// Neighborhood conditions on the component pair (a, b): with two components their neighborhoods cover V_y
// or are disjoint; otherwise they cover V_y and every other component attaches inside their overlap.
bool pair_conditions(const CliqueComponents& cc, const VertexSet& vy, int a, int b) {
    if (a == b || a < 0 || b < 0) return false;
    const auto& na = cc.nbhd[static_cast<std::size_t>(a)];
    const auto& nb = cc.nbhd[static_cast<std::size_t>(b)];
    bool covers = set_union(na, nb) == vy;
    if (cc.comps.size() == 2) return covers || !intersects(na, nb);
    if (!covers) return false;
    VertexSet both = set_intersection(na, nb);
    for (std::size_t c = 0; c < cc.comps.size(); ++c) {
        if (static_cast<int>(c) == a || static_cast<int>(c) == b) continue;
        if (!is_subset(cc.nbhd[c], both)) return false;
    }
    return true;
}

std::size_t meet(const std::vector<VertexSet>& cliques, CliqueId a, CliqueId b) {
    return set_intersection(cliques[static_cast<std::size_t>(a)], cliques[static_cast<std::size_t>(b)]).size();
}

// Cliques of component c with the largest intersection with y.
CliqueSet best_in_component(const std::vector<VertexSet>& cliques, const CliqueComponents& cc, CliqueId y, int c) {
    CliqueSet best;
    std::size_t top = 0;
    for (CliqueId l = 0; l < static_cast<CliqueId>(cliques.size()); ++l) {
        if (cc.of_clique[static_cast<std::size_t>(l)] != c) continue;
        std::size_t k = meet(cliques, l, y);
        if (best.empty() || k > top) {
            best = {l};
            top = k;
        } else if (k == top) {
            best.push_back(l);
        }
    }
    return best;
}

}  // namespace

bool is_surrounding(const Graph& g, const std::vector<VertexSet>& cliques, CliqueId l, CliqueId y, CliqueId r) {
    if (l == y || r == y || l == r) return false;
    auto cc = clique_components(g, cliques, y);
    int a = cc.of_clique[static_cast<std::size_t>(l)], b = cc.of_clique[static_cast<std::size_t>(r)];
    if (!pair_conditions(cc, cliques[static_cast<std::size_t>(y)], a, b)) return false;
    std::size_t kl = meet(cliques, l, y), kr = meet(cliques, r, y);
    for (CliqueId x = 0; x < static_cast<CliqueId>(cliques.size()); ++x) {
        if (x == y) continue;
        int c = cc.of_clique[static_cast<std::size_t>(x)];
        if (c == a && meet(cliques, x, y) > kl) return false;
        if (c == b && meet(cliques, x, y) > kr) return false;
    }
    return true;
}

Guards guards(const Graph& g, const std::vector<VertexSet>& cliques, CliqueId y) {
    auto cc = clique_components(g, cliques, y);
    const auto& vy = cliques[static_cast<std::size_t>(y)];
    int k = static_cast<int>(cc.comps.size());
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            if (!pair_conditions(cc, vy, a, b)) continue;
            Guards gd;
            gd.L = best_in_component(cliques, cc, y, a);
            gd.R = best_in_component(cliques, cc, y, b);
            if (gd.L.empty() || gd.R.empty()) continue;
            if (gd.R.front() < gd.L.front()) std::swap(gd.L, gd.R);
            return gd;
        }
    return {};
}

ChainDecomposition chains(const Graph& g) {
    ChainDecomposition d;
    d.cliques = maximal_cliques(g);
    int k = static_cast<int>(d.cliques.size());
    for (CliqueId y = 0; y < k; ++y) d.guards.push_back(guards(g, d.cliques, y));
    d.inner_index.assign(static_cast<std::size_t>(k), -1);
    d.inner_position.assign(static_cast<std::size_t>(k), 0);
    for (CliqueId y = 0; y < k; ++y)
        if (!d.guards[static_cast<std::size_t>(y)].surrounded()) d.not_surrounded.push_back(y);

    auto singleton_guard = [&](CliqueId y, CliqueId z) {
        const auto& gd = d.guards[static_cast<std::size_t>(y)];
        return gd.L == CliqueSet{z} || gd.R == CliqueSet{z};
    };
    auto linked = [&](CliqueId y, CliqueId z) {
        return d.guards[static_cast<std::size_t>(z)].surrounded() && singleton_guard(y, z) && singleton_guard(z, y);
    };
    auto links = [&](CliqueId y) {
        std::vector<CliqueId> out;
        const auto& gd = d.guards[static_cast<std::size_t>(y)];
        for (const CliqueSet* side : {&gd.L, &gd.R})
            if (side->size() == 1 && linked(y, side->front())) out.push_back(side->front());
        return out;
    };
    auto kind = [&](const CliqueSet& t) {
        if (t.size() > 1) return TerminalKind::Guard;
        return d.guards[static_cast<std::size_t>(t.front())].surrounded() ? TerminalKind::SurroundedSingleton : TerminalKind::NotSurrounded;
    };

    std::vector<char> used(static_cast<std::size_t>(k), 0);
    for (CliqueId start = 0; start < k; ++start) {
        if (used[static_cast<std::size_t>(start)] || !d.guards[static_cast<std::size_t>(start)].surrounded()) continue;
        // Walk to one end of the aligned path, then collect it.
        CliqueId end = start, prev = -1;
        for (;;) {
            CliqueId next = -1;
            for (CliqueId z : links(end))
                if (z != prev) next = z;
            if (next < 0 || next == start) break;
            prev = end;
            end = next;
        }
        Chain ch;
        prev = -1;
        for (CliqueId cur = end; cur >= 0;) {
            ch.inner.push_back(cur);
            used[static_cast<std::size_t>(cur)] = 1;
            CliqueId next = -1;
            for (CliqueId z : links(cur))
                if (z != prev && !used[static_cast<std::size_t>(z)]) next = z;
            prev = cur;
            cur = next;
        }
        auto outer = [&](CliqueId y, CliqueId inside) {
            const auto& gd = d.guards[static_cast<std::size_t>(y)];
            if (inside >= 0 && gd.L == CliqueSet{inside}) return gd.R;
            if (inside >= 0 && gd.R == CliqueSet{inside}) return gd.L;
            return gd.L;
        };
        if (ch.inner.size() == 1) {
            ch.Y0 = d.guards[static_cast<std::size_t>(ch.inner[0])].L;
            ch.Y1 = d.guards[static_cast<std::size_t>(ch.inner[0])].R;
        } else {
            ch.Y0 = outer(ch.inner.front(), ch.inner[1]);
            ch.Y1 = outer(ch.inner.back(), ch.inner[ch.inner.size() - 2]);
        }
        bool flip = ch.inner.size() > 1 ? ch.inner.back() < ch.inner.front() : ch.Y1 < ch.Y0;
        if (flip) {
            std::reverse(ch.inner.begin(), ch.inner.end());
            std::swap(ch.Y0, ch.Y1);
        }
        ch.kind0 = kind(ch.Y0);
        ch.kind1 = kind(ch.Y1);
        d.chains.push_back(std::move(ch));
    }
    std::sort(d.chains.begin(), d.chains.end(), [](const Chain& a, const Chain& b) { return a.inner.front() < b.inner.front(); });
    for (std::size_t c = 0; c < d.chains.size(); ++c)
        for (std::size_t i = 0; i < d.chains[c].inner.size(); ++i) {
            d.inner_index[static_cast<std::size_t>(d.chains[c].inner[i])] = static_cast<int>(c);
            d.inner_position[static_cast<std::size_t>(d.chains[c].inner[i])] = static_cast<int>(i) + 1;
        }
    return d;
}

bool rehang_neighbors_equal(const Graph&, const std::vector<VertexSet>& cliques, const Chain& chain, CliqueId x) {
    const auto& vx = cliques[static_cast<std::size_t>(x)];
    VertexSet first = set_intersection(vx, cliques[static_cast<std::size_t>(chain.inner.front())]);
    for (CliqueId y : chain.inner)
        if (set_intersection(vx, cliques[static_cast<std::size_t>(y)]) != first) return false;
    return true;
}

std::string chains_to_json(const Graph& g, const ChainDecomposition& d) {
    auto clique_json = [&](CliqueId c) {
        nlohmann::json arr = nlohmann::json::array();
        for (Vertex v : d.cliques[static_cast<std::size_t>(c)]) arr.push_back(g.label(v));
        return arr;
    };
    auto set_json = [&](const CliqueSet& s) {
        nlohmann::json arr = nlohmann::json::array();
        for (CliqueId c : s) arr.push_back(clique_json(c));
        return arr;
    };
    auto kind_name = [](TerminalKind k) {
        switch (k) {
        case TerminalKind::NotSurrounded: return "not_surrounded";
        case TerminalKind::Guard: return "guard";
        default: return "surrounded_singleton";
        }
    };
    nlohmann::ordered_json j;
    j["chains"] = nlohmann::json::array();
    for (const auto& ch : d.chains) {
        nlohmann::ordered_json c;
        c["Y0"] = set_json(ch.Y0);
        c["Y0_kind"] = kind_name(ch.kind0);
        nlohmann::json inner = nlohmann::json::array();
        for (CliqueId y : ch.inner) inner.push_back(clique_json(y));
        c["inner"] = inner;
        c["Y1"] = set_json(ch.Y1);
        c["Y1_kind"] = kind_name(ch.kind1);
        j["chains"].push_back(c);
    }
    j["not_surrounded"] = set_json(d.not_surrounded);
    return j.dump(2);
}

}  // namespace ptg
