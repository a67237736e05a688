#include "ptg/solver.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ptg/chordal.hpp"

namespace ptg {

namespace {

std::size_t idx(int x) { return static_cast<std::size_t>(x); }

CliqueId clique_index(const ChainDecomposition& d, const VertexSet& vs) {
    auto it = std::lower_bound(d.cliques.begin(), d.cliques.end(), vs);
    if (it == d.cliques.end() || *it != vs) return -1;
    return static_cast<CliqueId>(it - d.cliques.begin());
}

bool ordered(const HostTree& t, Node a, Node b, Node c) {
    auto p = path_between(t, a, c);
    return std::find(p.begin(), p.end(), b) != p.end();
}

// "u does not escape v anywhere inside the subtree" for all ordered pairs, plus per-vertex node counts.
struct EscapeTable {
    int n = 0;
    std::vector<char> ne;
    std::vector<int> count;

    explicit EscapeTable(int vertices) : n(vertices), ne(idx(vertices) * idx(vertices), 1), count(idx(vertices), 0) {}
    char& at(Vertex u, Vertex v) { return ne[idx(u) * idx(n) + idx(v)]; }
    char at(Vertex u, Vertex v) const { return ne[idx(u) * idx(n) + idx(v)]; }
};

class TableBuilder {
public:
    TableBuilder(const Representation& r, int vertices) : r_(r), n_(vertices), vx_(r.node_sets()) {}

    // Subtree of x hanging away from parent.
    EscapeTable subtree(Node x, Node parent) const {
        std::vector<EscapeTable> kids;
        for (Node z : r_.host.neighbors(x))
            if (z != parent) kids.push_back(subtree(z, x));
        std::vector<Node> ids;
        for (Node z : r_.host.neighbors(x))
            if (z != parent) ids.push_back(z);
        return combine(x, kids, ids);
    }

    // Table of node x whose children are the given subtrees rooted at child_nodes.
    EscapeTable combine(Node x, const std::vector<EscapeTable>& kids, const std::vector<Node>& child_nodes) const {
        EscapeTable t(n_);
        const auto& vxs = vx_[idx(x)];
        for (Vertex u : vxs) ++t.count[idx(u)];
        std::vector<char> in_x(idx(n_), 0);
        for (Vertex u : vxs) in_x[idx(u)] = 1;
        for (std::size_t k = 0; k < kids.size(); ++k) {
            const auto& c = kids[k];
            for (std::size_t i = 0; i < t.ne.size(); ++i) t.ne[i] = static_cast<char>(t.ne[i] & c.ne[i]);
            for (Vertex u = 0; u < n_; ++u) t.count[idx(u)] += c.count[idx(u)];
            const auto& vc = vx_[idx(child_nodes[k])];
            std::vector<char> in_c(idx(n_), 0);
            for (Vertex u : vc) in_c[idx(u)] = 1;
            for (Vertex u : vxs)
                for (Vertex v = 0; v < n_; ++v)
                    if (!in_c[idx(v)]) t.at(u, v) = 0;
            for (Vertex u : vc)
                for (Vertex v = 0; v < n_; ++v)
                    if (!in_x[idx(v)]) t.at(u, v) = 0;
        }
        return t;
    }

    const std::vector<VertexSet>& node_sets() const { return vx_; }

private:
    const Representation& r_;
    int n_;
    std::vector<VertexSet> vx_;
};

}  // namespace

std::vector<ChainPath> chain_paths(const Representation& r, const ChainDecomposition& d) {
    auto vx = r.node_sets();
    std::vector<Node> at(d.cliques.size(), -1);
    for (Node x = 0; x < r.host.n(); ++x) {
        if (vx[idx(x)].empty()) continue;
        CliqueId c = clique_index(d, vx[idx(x)]);
        if (c < 0) throw NotCompact("node " + std::to_string(x) + " does not carry a maximal clique");
        at[idx(c)] = x;
    }
    HostTree tree(r.host);
    NodeSet rbar;
    for (CliqueId c : d.not_surrounded) rbar.push_back(at[idx(c)]);

    std::vector<ChainPath> out;
    for (std::size_t c = 0; c < d.chains.size(); ++c) {
        const Chain& ch = d.chains[c];
        std::vector<Node> inner;
        for (CliqueId y : ch.inner) inner.push_back(at[idx(y)]);
        for (std::size_t i = 0; i + 1 < inner.size(); ++i)
            if (!r.host.find_edge(inner[i], inner[i + 1])) throw NotCompact("chain " + std::to_string(c) + " is not a path");
        auto end_near = [&](Node y, Node avoid, const CliqueSet& terminal) {
            for (Node z : r.host.neighbors(y)) {
                if (z == avoid || vx[idx(z)].empty()) continue;
                CliqueId cz = clique_index(d, vx[idx(z)]);
                if (std::binary_search(terminal.begin(), terminal.end(), cz)) return z;
            }
            throw NotCompact("chain " + std::to_string(c) + " has no terminal neighbor");
        };
        Node a = end_near(inner.front(), inner.size() > 1 ? inner[1] : -1, ch.Y0);
        Node b = end_near(inner.back(), inner.size() > 1 ? inner[inner.size() - 2] : a, ch.Y1);
        ChainPath p;
        p.chain = static_cast<int>(c);
        bool resolved = false;
        for (Node rk : rbar) {
            if (ordered(tree, a, b, rk)) {
                p.toward_end = true;
                resolved = true;
                break;
            }
            if (ordered(tree, rk, a, b)) {
                p.toward_end = false;
                resolved = true;
                break;
            }
        }
        if (!resolved) throw InvariantBroken("no root resolves the orientation of chain " + std::to_string(c));
        p.nodes.push_back(a);
        p.nodes.insert(p.nodes.end(), inner.begin(), inner.end());
        p.nodes.push_back(b);
        if (!p.toward_end) std::reverse(p.nodes.begin(), p.nodes.end());
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Node> attachments(const Representation& r, const ChainPath& path, int i) {
    std::vector<Node> out;
    for (Node z : r.host.neighbors(path.nodes[idx(i)]))
        if (z != path.nodes[idx(i - 1)] && z != path.nodes[idx(i + 1)]) out.push_back(z);
    return out;
}

Representation rehang(const Representation& r, const ChainPath& path, int i, int j) {
    if (i < 1 || j < i || j > path.s()) throw NotOnChain();
    if (i == j) return r;
    Node yi = path.nodes[idx(i)], yj = path.nodes[idx(j)];
    auto moved = attachments(r, path, i);
    Host h(r.host.n());
    for (const auto& e : r.host.edges()) {
        Node u = e.u, v = e.v;
        if (u == yi && std::find(moved.begin(), moved.end(), v) != moved.end()) u = yj;
        else if (v == yi && std::find(moved.begin(), moved.end(), u) != moved.end()) v = yj;
        h.add_edge(u, v);
    }
    Representation out = r;
    out.host = std::move(h);
    return out;
}

Potential potential(const Graph& g, const Representation& r, const ChainPath& path, int i, BlockedPair* blocked) {
    int s = path.s();
    if (i < 1 || i > s) throw NotOnChain();
    int n = g.n();
    TableBuilder tb(r, n);
    const auto& vx = tb.node_sets();
    std::vector<int> msize(idx(n), 0);
    for (const auto& set : vx)
        for (Vertex u : set) ++msize[idx(u)];

    int jmax = s;
    for (int k = i + 1; k <= s; ++k)
        if (!attachments(r, path, k).empty()) {
            jmax = k - 1;
            break;
        }

    EscapeTable below = tb.subtree(path.nodes[0], path.nodes[1]);
    for (int k = 1; k < i; ++k) {
        std::vector<EscapeTable> kids{below};
        std::vector<Node> ids{path.nodes[idx(k - 1)]};
        for (Node z : attachments(r, path, k)) {
            kids.push_back(tb.subtree(z, path.nodes[idx(k)]));
            ids.push_back(z);
        }
        below = tb.combine(path.nodes[idx(k)], kids, ids);
    }

    Potential pot;
    for (int j = i; j <= jmax; ++j) {
        const auto& top = vx[idx(path.nodes[idx(j - 1)])];
        const auto& next = vx[idx(path.nodes[idx(j)])];
        bool ok = true;
        for (Vertex u = 0; u < n && ok; ++u) {
            if (msize[idx(u)] == 0 || below.count[idx(u)] != msize[idx(u)]) continue;
            bool exits = contains(top, u);
            for (Vertex v = 0; v < n; ++v) {
                if (v == u || !below.at(u, v)) continue;
                if (exits && !contains(next, v)) continue;
                ok = false;
                if (blocked) *blocked = {u, v};
                break;
            }
        }
        if (!ok) break;
        pot.indices.push_back(j);
        below = tb.combine(path.nodes[idx(j)], {below}, {path.nodes[idx(j - 1)]});
    }
    return pot;
}

namespace {

class Realizer {
public:
    Realizer(const Graph& g, const ChainDecomposition& d, const Template& tpl, const RootOrdering& rbar)
        : g_(g), d_(d), tpl_(tpl), rbar_(rbar), k_(static_cast<int>(d.cliques.size())) {
        for (std::size_t c = 0; c < d.chains.size(); ++c) orient_.push_back(orient_chain(tpl, rbar, static_cast<int>(c)));
        leaf_id_.assign(idx(tpl.T0.n()), -1);
        int next = k_;
        for (Node x = 0; x < tpl.T0.n(); ++x)
            if (tpl.kind[idx(x)] == TemplateNodeKind::Leaf) leaf_id_[idx(x)] = next++;
        total_ = next;
        pos_.resize(d.chains.size());
        for (std::size_t c = 0; c < d.chains.size(); ++c) {
            int b = static_cast<int>(tpl.h0[c].size()) - 2;
            pos_[c].resize(idx(b));
            for (int j = 0; j < b; ++j) pos_[c][idx(j)] = j + 1;
        }
        for (std::size_t c = 0; c < tpl.h0.size(); ++c)
            for (std::size_t j = 0; j + 1 < tpl.h0[c].size(); ++j) {
                Node a = tpl.h0[c][j], b = tpl.h0[c][j + 1];
                chain_edges_.insert({std::min(a, b), std::max(a, b)});
            }
    }

    Realization run() {
        for (int c : processing_order()) {
            const auto& path = tpl_.h0[idx(c)];
            int b = static_cast<int>(path.size()) - 2;
            int s = d_.chains[idx(c)].s();
            for (int k = 1; k <= b; ++k) {
                int lo = k == 1 ? 1 : oriented_pos(c, k - 1) + 1;
                set_oriented_pos(c, k, lo);
                for (int k2 = k + 1; k2 <= b; ++k2) set_oriented_pos(c, k2, s - (b - k2));
                Representation rep = build();
                ChainPath cp = chain_path(c);
                BlockedPair blocked;
                Potential pot = potential(g_, rep, cp, lo, &blocked);
                if (pot.empty()) return fail(oriented_beta(c, k), blocked, "empty potential");
                set_oriented_pos(c, k, pot.last());
            }
        }
        Representation rep = build();
        auto verdict = verify_compact(g_, rep);
        if (!verdict.ok) {
            const auto& v = *verdict.violation;
            Node where = -1;
            if (v.a >= 0 && v.a < g_.n()) {
                for (Node x = 0; x < tpl_.T0.n() && where < 0; ++x) {
                    Node img = realized(x);
                    if (img < k_ && contains(d_.cliques[idx(img)], v.a)) where = x;
                }
            }
            return fail(where, {v.a, v.b}, "final check " + v.condition);
        }
        return {std::move(rep), std::nullopt};
    }

private:
    const Graph& g_;
    const ChainDecomposition& d_;
    const Template& tpl_;
    const RootOrdering& rbar_;
    int k_;
    int total_ = 0;
    std::vector<OrientedChain> orient_;
    std::vector<Node> leaf_id_;
    std::vector<std::vector<int>> pos_;  // per chain, canonical inner position (1..s) of lambda_1..lambda_b
    std::set<std::pair<Node, Node>> chain_edges_;

    static Realization fail(Node where, BlockedPair pair, std::string why) {
        Realization out;
        out.certificate = Certificate{where, pair, std::move(why)};
        return out;
    }

    // k-th branching node in orientation order, as a template node.
    Node oriented_beta(int c, int k) const {
        const auto& path = tpl_.h0[idx(c)];
        int b = static_cast<int>(path.size()) - 2;
        return orient_[idx(c)].toward_end ? path[idx(k)] : path[idx(b + 1 - k)];
    }
    int oriented_pos(int c, int k) const {
        int b = static_cast<int>(pos_[idx(c)].size());
        int s = d_.chains[idx(c)].s();
        return orient_[idx(c)].toward_end ? pos_[idx(c)][idx(k - 1)] : s + 1 - pos_[idx(c)][idx(b - k)];
    }
    void set_oriented_pos(int c, int k, int p) {
        int b = static_cast<int>(pos_[idx(c)].size());
        int s = d_.chains[idx(c)].s();
        if (orient_[idx(c)].toward_end) pos_[idx(c)][idx(k - 1)] = p;
        else pos_[idx(c)][idx(b - k)] = s + 1 - p;
    }

    Node realized(Node x) const {
        switch (tpl_.kind[idx(x)]) {
        case TemplateNodeKind::Leaf: return leaf_id_[idx(x)];
        case TemplateNodeKind::Single: return tpl_.label[idx(x)];
        default: {
            int c = tpl_.label[idx(x)];
            const auto& path = tpl_.h0[idx(c)];
            auto it = std::find(path.begin() + 1, path.end() - 1, x);
            int j = static_cast<int>(it - path.begin());
            return d_.chains[idx(c)].inner[idx(pos_[idx(c)][idx(j - 1)] - 1)];
        }
        }
    }

    Representation build() const {
        Host h(total_);
        for (std::size_t c = 0; c < d_.chains.size(); ++c) {
            const auto& inner = d_.chains[c].inner;
            const auto& path = tpl_.h0[c];
            h.add_edge(realized(path.front()), inner.front());
            for (std::size_t i = 0; i + 1 < inner.size(); ++i) h.add_edge(inner[i], inner[i + 1]);
            h.add_edge(inner.back(), realized(path.back()));
        }
        for (const auto& e : tpl_.T0.edges())
            if (!chain_edges_.count({std::min(e.u, e.v), std::max(e.u, e.v)})) h.add_edge(realized(e.u), realized(e.v));
        std::vector<VertexSet> sets(idx(total_));
        for (int c = 0; c < k_; ++c) sets[idx(c)] = d_.cliques[idx(c)];
        return representation_from_node_sets(h, sets, g_.n(), RepMode::Compact);
    }

    ChainPath chain_path(int c) const {
        ChainPath cp;
        cp.chain = c;
        cp.toward_end = orient_[idx(c)].toward_end;
        const auto& path = tpl_.h0[idx(c)];
        cp.nodes.push_back(realized(path.front()));
        for (CliqueId y : d_.chains[idx(c)].inner) cp.nodes.push_back(y);
        cp.nodes.push_back(realized(path.back()));
        if (!cp.toward_end) std::reverse(cp.nodes.begin(), cp.nodes.end());
        return cp;
    }

    // Chains whose paths lie deeper below the first root come first; ties by chain id.
    std::vector<int> processing_order() const {
        std::vector<int> depth(idx(tpl_.T0.n()), -1);
        if (!rbar_.empty()) {
            std::vector<Node> queue{rbar_.front()};
            depth[idx(rbar_.front())] = 0;
            for (std::size_t i = 0; i < queue.size(); ++i)
                for (Node z : tpl_.T0.neighbors(queue[i]))
                    if (depth[idx(z)] < 0) {
                        depth[idx(z)] = depth[idx(queue[i])] + 1;
                        queue.push_back(z);
                    }
        }
        std::vector<std::pair<int, int>> keyed;
        for (std::size_t c = 0; c < tpl_.h0.size(); ++c) {
            int top = 1 << 30;
            for (Node x : tpl_.h0[c]) top = std::min(top, depth[idx(x)]);
            keyed.emplace_back(-top, static_cast<int>(c));
        }
        std::sort(keyed.begin(), keyed.end());
        std::vector<int> out;
        for (auto [key, c] : keyed) out.push_back(c);
        return out;
    }
};

}  // namespace

Realization realize_template(const Graph& g, const ChainDecomposition& d, const Template& tpl, const RootOrdering& rbar) {
    return Realizer(g, d, tpl, rbar).run();
}

std::optional<Representation> recognize_compact(const Graph& g, const HostTree& t) {
    if (g.n() == 0 || t.n() < 2) return std::nullopt;
    auto d = chains(g);
    std::optional<Representation> found;
    enumerate_templates(g, t, d, [&](const Template& tpl) {
        auto res = realize_template(g, d, tpl, root_ordering(tpl));
        if (!res.rep) return true;
        found = std::move(res.rep);
        return false;
    });
    return found;
}

namespace {

struct Placed {
    Host host;
    std::vector<NodeSet> models;  // indexed by original vertex; empty for vertices not placed
};

// Proper representation of a connected proper interval graph on a path, nodes in path order.
Representation interval_path(const Graph& g) {
    auto compact = recognize_compact(g, path_tree(2));
    if (!compact) throw InvariantBroken("proper interval component has no path representation");
    Representation rep = proper_from_compact(g, *compact);
    // Relabel nodes along the path.
    Node start = 0;
    for (Node x = 0; x < rep.host.n(); ++x)
        if (rep.host.degree(x) <= 1) {
            start = x;
            break;
        }
    std::vector<Node> order{start}, rank(idx(rep.host.n()), -1);
    rank[idx(start)] = 0;
    while (static_cast<int>(order.size()) < rep.host.n()) {
        Node cur = order.back(), nxt = -1;
        for (Node z : rep.host.neighbors(cur))
            if (rank[idx(z)] < 0) nxt = z;
        rank[idx(nxt)] = static_cast<int>(order.size());
        order.push_back(nxt);
    }
    Representation out;
    out.mode = RepMode::Proper;
    out.host = Host(rep.host.n());
    for (Node i = 0; i + 1 < rep.host.n(); ++i) out.host.add_edge(i, i + 1);
    for (const auto& m : rep.models) {
        NodeSet nm;
        for (Node x : m) nm.push_back(rank[idx(x)]);
        out.models.push_back(normalized(nm));
    }
    return out;
}

// Appends a path carrying the given proper interval components after node `at` (or as a fresh host when at < 0).
void append_interval_components(const Graph& g, const std::vector<VertexSet>& comps, Placed& placed, Node at) {
    Node prev = at;
    for (const auto& comp : comps) {
        auto sub = induced_subgraph(g, comp);
        Representation rep = interval_path(sub.graph);
        Node base = placed.host.n();
        for (Node i = 0; i < rep.host.n(); ++i) placed.host.add_node();
        if (prev >= 0) placed.host.add_edge(prev, base);
        for (Node i = 0; i + 1 < rep.host.n(); ++i) placed.host.add_edge(base + i, base + i + 1);
        for (std::size_t v = 0; v < rep.models.size(); ++v) {
            NodeSet m;
            for (Node x : rep.models[v]) m.push_back(base + x);
            placed.models[idx(sub.new_to_old[v])] = m;
        }
        prev = base + rep.host.n() - 1;
    }
}

// Proper representation of a connected component on a re-subdivision of tree.
std::optional<Representation> component_rep(const Graph& sub, const HostTree& tree) {
    auto compact = recognize_compact(sub, tree);
    if (!compact) return std::nullopt;
    return proper_from_compact(sub, *compact);
}

std::vector<std::uint32_t> connected_subsets(const HostTree& t) {
    std::vector<std::uint32_t> out;
    int n = t.n();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int first = __builtin_ctz(mask);
        std::uint32_t seen = 1u << first;
        std::vector<Node> queue{first};
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (Node z : t.neighbors(queue[i]))
                if ((mask >> z & 1u) && !(seen >> z & 1u)) {
                    seen |= 1u << z;
                    queue.push_back(z);
                }
        if (seen == mask) out.push_back(mask);
    }
    return out;
}

// Several non-interval components on disjoint subtrees of t.
std::optional<Placed> place_components(const Graph& g, const HostTree& t, const std::vector<VertexSet>& comps) {
    if (t.n() > 20) return std::nullopt;
    auto subsets = connected_subsets(t);
    std::vector<std::uint32_t> usable;
    for (auto mask : subsets)
        for (Node x = 0; x < t.n(); ++x)
            if ((mask >> x & 1u) && t.degree(x) >= 3) {
                usable.push_back(mask);
                break;
            }
    std::size_t m = comps.size();
    std::vector<std::uint32_t> pick(m);
    std::optional<Placed> result;

    std::function<void(std::size_t, std::uint32_t)> go = [&](std::size_t i, std::uint32_t used) {
        if (result) return;
        if (i == m) {
            Placed placed;
            placed.models.assign(idx(g.n()), {});
            // boundary pendant image per (component, tree edge)
            std::map<std::pair<std::size_t, EdgeId>, Node> pendant_image;
            std::vector<Node> outside(idx(t.n()), -1);
            for (std::size_t c = 0; c < m; ++c) {
                std::uint32_t mask = pick[c];
                std::vector<Node> local(idx(t.n()), -1);
                Host ti;
                for (Node x = 0; x < t.n(); ++x)
                    if (mask >> x & 1u) local[idx(x)] = ti.add_node();
                std::vector<std::pair<EdgeId, Node>> pendants;
                for (EdgeId e = 0; e < t.m(); ++e) {
                    Node a = t.edge(e).u, b = t.edge(e).v;
                    bool ia = mask >> a & 1u, ib = mask >> b & 1u;
                    if (ia && ib) ti.add_edge(local[idx(a)], local[idx(b)]);
                    else if (ia || ib) {
                        Node leaf = ti.add_node();
                        ti.add_edge(local[idx(ia ? a : b)], leaf);
                        pendants.emplace_back(e, leaf);
                    }
                }
                HostTree tree(ti);
                auto sub = induced_subgraph(g, comps[c]);
                auto rep = component_rep(sub.graph, tree);
                if (!rep) return;
                auto wit = resubdivision_witness(HostTree(rep->host), tree);
                if (!wit) return;
                Node base = placed.host.n();
                for (Node x = 0; x < rep->host.n(); ++x) placed.host.add_node();
                for (const auto& e : rep->host.edges()) placed.host.add_edge(base + e.u, base + e.v);
                for (std::size_t v = 0; v < rep->models.size(); ++v) {
                    NodeSet mm;
                    for (Node x : rep->models[v]) mm.push_back(base + x);
                    placed.models[idx(sub.new_to_old[v])] = mm;
                }
                for (auto [e, leaf] : pendants) pendant_image[{c, e}] = base + wit->image[idx(leaf)];
            }
            std::vector<int> owner(idx(t.n()), -1);
            for (std::size_t c = 0; c < m; ++c)
                for (Node x = 0; x < t.n(); ++x)
                    if (pick[c] >> x & 1u) owner[idx(x)] = static_cast<int>(c);
            for (Node x = 0; x < t.n(); ++x)
                if (owner[idx(x)] < 0) outside[idx(x)] = placed.host.add_node();
            for (EdgeId e = 0; e < t.m(); ++e) {
                Node a = t.edge(e).u, b = t.edge(e).v;
                int oa = owner[idx(a)], ob = owner[idx(b)];
                if (oa >= 0 && oa == ob) continue;
                Node ea = oa >= 0 ? pendant_image[{idx(oa), e}] : outside[idx(a)];
                Node eb = ob >= 0 ? pendant_image[{idx(ob), e}] : outside[idx(b)];
                placed.host.add_edge(ea, eb);
            }
            result = std::move(placed);
            return;
        }
        for (auto mask : usable) {
            if (mask & used) continue;
            pick[i] = mask;
            go(i + 1, used | mask);
            if (result) return;
        }
    };
    go(0, 0);
    return result;
}

}  // namespace

std::optional<Representation> recognize(const Graph& g, const HostTree& t) {
    if (t.n() == 1) {
        if (g.n() > 1) return std::nullopt;
        Representation r;
        r.host = Host(1);
        for (Vertex v = 0; v < g.n(); ++v) r.models.push_back({0});
        return r;
    }
    if (g.n() == 0) {
        Representation r;
        r.host = t;
        return r;
    }
    if (!is_chordal(g).chordal) return std::nullopt;

    std::vector<VertexSet> interval, other;
    for (const auto& comp : connected_components(g)) {
        auto sub = induced_subgraph(g, comp);
        (is_proper_interval(sub.graph) ? interval : other).push_back(comp);
    }
    if (static_cast<int>(other.size()) > branching_count(t)) return std::nullopt;

    Placed placed;
    placed.models.assign(idx(g.n()), {});
    if (other.empty()) {
        append_interval_components(g, interval, placed, -1);
    } else if (other.size() == 1) {
        auto sub = induced_subgraph(g, other.front());
        auto rep = component_rep(sub.graph, t);
        if (!rep) return std::nullopt;
        placed.host = rep->host;
        for (std::size_t v = 0; v < rep->models.size(); ++v) placed.models[idx(sub.new_to_old[v])] = rep->models[v];
    } else {
        auto p = place_components(g, t, other);
        if (!p) return std::nullopt;
        placed = std::move(*p);
    }
    if (!other.empty() && !interval.empty()) {
        Node leaf = -1;
        for (Node x = 0; x < placed.host.n() && leaf < 0; ++x)
            if (placed.host.degree(x) == 1) leaf = x;
        append_interval_components(g, interval, placed, leaf);
    }

    Representation out;
    out.host = std::move(placed.host);
    out.models = std::move(placed.models);
    out.mode = RepMode::Proper;
    if (!verify_proper(g, out).ok || !is_re_subdivision(out.host, t)) {
        if (other.size() >= 2) return std::nullopt;
        throw InvariantBroken("recognizer produced an invalid representation");
    }
    return out;
}

std::vector<HostTree> reduced_trees(int leaves) {
    if (leaves < 2) return {};
    std::vector<Host> level{path_tree(2)};
    for (int l = 3; l <= leaves; ++l) {
        std::map<std::string, Host> next;
        for (const auto& h : level) {
            auto add = [&](Host grown) {
                HostTree t(grown);
                next.emplace(tree_code(t), std::move(grown));
            };
            for (Node x = 0; x < h.n(); ++x)
                if (h.degree(x) >= 3) {
                    Host grown = h;
                    Node leaf = grown.add_node();
                    grown.add_edge(x, leaf);
                    add(std::move(grown));
                }
            for (EdgeId e = 0; e < h.m(); ++e) {
                auto [grown, mid] = subdivide_edge(h, e);
                Node leaf = grown.add_node();
                grown.add_edge(mid, leaf);
                add(std::move(grown));
            }
        }
        level.clear();
        for (auto& [code, h] : next) level.push_back(std::move(h));
    }
    std::vector<HostTree> out;
    for (auto& h : level) out.emplace_back(std::move(h));
    return out;
}

Leafage proper_leafage(const Graph& g, int max_leaves) {
    if (!is_chordal(g).chordal) throw NotChordal();
    Leafage out;
    if (g.n() <= 1) return out;
    int cap = max_leaves >= 0 ? max_leaves : static_cast<int>(maximal_cliques(g).size()) + 1;
    for (int l = 2; l <= std::max(cap, 2); ++l)
        for (const auto& t : reduced_trees(l))
            if (recognize(g, t)) {
                out.leaves = l;
                out.witness = t;
                return out;
            }
    out.leaves = -1;
    out.resolved = false;
    return out;
}

}  // namespace ptg
