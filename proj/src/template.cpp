#include "ptg/template.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <json.hpp>

namespace ptg {

CliqueSet Template::t0(Node x, const ChainDecomposition& d) const {
    switch (kind[static_cast<std::size_t>(x)]) {
    case TemplateNodeKind::Single: return {label[static_cast<std::size_t>(x)]};
    case TemplateNodeKind::Inner: return normalized(d.chains[static_cast<std::size_t>(label[static_cast<std::size_t>(x)])].inner);
    default: return {};
    }
}

RootOrdering root_ordering(const Template& tpl) {
    RootOrdering out;
    for (Node x = 0; x < tpl.T0.n(); ++x)
        if (tpl.kind[static_cast<std::size_t>(x)] == TemplateNodeKind::Single) out.push_back(x);
    std::sort(out.begin(), out.end(), [&](Node a, Node b) { return tpl.label[static_cast<std::size_t>(a)] < tpl.label[static_cast<std::size_t>(b)]; });
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        return true;
    }
};

class Enumerator {
public:
    Enumerator(const Graph& g, const HostTree& t, const ChainDecomposition& d, const std::function<bool(const Template&)>& sink)
        : g_(g), t_(t), d_(d), sink_(sink) {
        q_ = static_cast<int>(d.not_surrounded.size());
        h_ = static_cast<int>(d.chains.size());
        leaves_ = leaf_count(t);
        branching_ = branching_count(t);
    }

    void run() {
        if (q_ - 1 - h_ < 0) return;
        b_.assign(static_cast<std::size_t>(h_), 0);
        choose_counts(0, 0);
    }

private:
    const Graph& g_;
    const HostTree& t_;
    const ChainDecomposition& d_;
    const std::function<bool(const Template&)>& sink_;
    int q_ = 0, h_ = 0, leaves_ = 0, branching_ = 0;
    bool stop_ = false;

    std::vector<int> b_;       // branching nodes per chain
    std::vector<int> offset_;  // first beta node id per chain
    int nodes_ = 0;
    std::vector<std::pair<Node, Node>> edges_;
    std::vector<std::vector<Node>> paths_;
    std::vector<std::pair<Node, Node>> anchors_;
    std::map<std::string, bool> resub_cache_;

    Node beta(int c, int j) const { return offset_[static_cast<std::size_t>(c)] + j - 1; }
    int chain_of(Node x) const {
        for (int c = h_ - 1; c >= 0; --c)
            if (x >= offset_[static_cast<std::size_t>(c)]) return c;
        return -1;
    }
    // Cliques a node may be realized by.
    CliqueSet candidates(Node x) const {
        if (x < q_) return {d_.not_surrounded[static_cast<std::size_t>(x)]};
        return normalized(d_.chains[static_cast<std::size_t>(chain_of(x))].inner);
    }
    bool may_touch(Node x, Node y) const {
        for (CliqueId a : candidates(x))
            for (CliqueId b : candidates(y))
                if (intersects(d_.cliques[static_cast<std::size_t>(a)], d_.cliques[static_cast<std::size_t>(b)])) return true;
        return false;
    }

    void choose_counts(int c, int used) {
        if (stop_) return;
        if (c == h_) {
            offset_.assign(static_cast<std::size_t>(h_), 0);
            nodes_ = q_;
            for (int k = 0; k < h_; ++k) {
                offset_[static_cast<std::size_t>(k)] = nodes_;
                nodes_ += b_[static_cast<std::size_t>(k)];
            }
            anchors_.assign(static_cast<std::size_t>(h_), {-1, -1});
            choose_anchors(0);
            return;
        }
        int s = d_.chains[static_cast<std::size_t>(c)].s();
        for (int b = 0; b <= std::min(s, branching_ - used); ++b) {
            b_[static_cast<std::size_t>(c)] = b;
            choose_counts(c + 1, used + b);
        }
    }

    std::vector<Node> anchor_options(int c, const CliqueSet& terminal) const {
        std::vector<Node> out;
        for (int x = 0; x < q_; ++x)
            if (std::binary_search(terminal.begin(), terminal.end(), d_.not_surrounded[static_cast<std::size_t>(x)])) out.push_back(x);
        for (int c2 = 0; c2 < h_; ++c2) {
            if (c2 == c || b_[static_cast<std::size_t>(c2)] == 0) continue;
            if (!is_subset(normalized(d_.chains[static_cast<std::size_t>(c2)].inner), terminal)) continue;
            for (int j = 1; j <= b_[static_cast<std::size_t>(c2)]; ++j) out.push_back(beta(c2, j));
        }
        return out;
    }

    void choose_anchors(int c) {
        if (stop_) return;
        if (c == h_) {
            build_chain_edges();
            return;
        }
        const Chain& ch = d_.chains[static_cast<std::size_t>(c)];
        for (Node a0 : anchor_options(c, ch.Y0))
            for (Node a1 : anchor_options(c, ch.Y1)) {
                if (a0 == a1) continue;
                anchors_[static_cast<std::size_t>(c)] = {a0, a1};
                choose_anchors(c + 1);
                if (stop_) return;
            }
    }

    void build_chain_edges() {
        edges_.clear();
        paths_.assign(static_cast<std::size_t>(h_), {});
        UnionFind uf(nodes_);
        for (int c = 0; c < h_; ++c) {
            auto& path = paths_[static_cast<std::size_t>(c)];
            path.push_back(anchors_[static_cast<std::size_t>(c)].first);
            for (int j = 1; j <= b_[static_cast<std::size_t>(c)]; ++j) path.push_back(beta(c, j));
            path.push_back(anchors_[static_cast<std::size_t>(c)].second);
            for (std::size_t k = 0; k + 1 < path.size(); ++k) {
                if (!uf.unite(path[k], path[k + 1])) return;
                edges_.emplace_back(path[k], path[k + 1]);
            }
        }
        std::vector<std::pair<Node, Node>> cand;
        for (Node x = 0; x < nodes_; ++x)
            for (Node y = x + 1; y < nodes_; ++y)
                if (uf.find(x) != uf.find(y) && may_touch(x, y)) cand.emplace_back(x, y);
        choose_uncovered(cand, 0, q_ - 1 - h_, uf);
    }

    void choose_uncovered(const std::vector<std::pair<Node, Node>>& cand, std::size_t from, int left, const UnionFind& uf) {
        if (stop_) return;
        if (left == 0) {
            choose_leaves();
            return;
        }
        for (std::size_t i = from; i < cand.size(); ++i) {
            UnionFind next = uf;
            if (!next.unite(cand[i].first, cand[i].second)) continue;
            edges_.push_back(cand[i]);
            choose_uncovered(cand, i + 1, left - 1, next);
            edges_.pop_back();
            if (stop_) return;
        }
    }

    void choose_leaves() {
        std::vector<int> deg(static_cast<std::size_t>(nodes_), 0);
        for (auto [x, y] : edges_) {
            ++deg[static_cast<std::size_t>(x)];
            ++deg[static_cast<std::size_t>(y)];
        }
        // Not-surrounded nodes need degree 2 and branching chain nodes degree 3, counting leaves.
        std::vector<int> extra(static_cast<std::size_t>(nodes_), 0);
        int need = 0;
        for (Node x = 0; x < nodes_; ++x) {
            int want = x < q_ ? 2 : 3;
            extra[static_cast<std::size_t>(x)] = std::max(0, want - deg[static_cast<std::size_t>(x)]);
            need += extra[static_cast<std::size_t>(x)];
        }
        if (need > leaves_) return;
        distribute(0, leaves_ - need, extra);
    }

    void distribute(Node x, int budget, std::vector<int>& extra) {
        if (stop_) return;
        if (x == nodes_) {
            emit(extra);
            return;
        }
        for (int more = 0; more <= budget; ++more) {
            extra[static_cast<std::size_t>(x)] += more;
            distribute(x + 1, budget - more, extra);
            extra[static_cast<std::size_t>(x)] -= more;
            if (stop_) return;
        }
    }

    void emit(const std::vector<int>& extra) {
        Template tpl;
        Host h(nodes_);
        tpl.kind.assign(static_cast<std::size_t>(nodes_), TemplateNodeKind::Single);
        tpl.label.assign(static_cast<std::size_t>(nodes_), -1);
        for (Node x = 0; x < nodes_; ++x) {
            if (x < q_) {
                tpl.label[static_cast<std::size_t>(x)] = d_.not_surrounded[static_cast<std::size_t>(x)];
            } else {
                tpl.kind[static_cast<std::size_t>(x)] = TemplateNodeKind::Inner;
                tpl.label[static_cast<std::size_t>(x)] = chain_of(x);
            }
        }
        for (auto [x, y] : edges_) h.add_edge(x, y);
        for (Node x = 0; x < nodes_; ++x)
            for (int k = 0; k < extra[static_cast<std::size_t>(x)]; ++k) {
                Node leaf = h.add_node();
                h.add_edge(x, leaf);
                tpl.kind.push_back(TemplateNodeKind::Leaf);
                tpl.label.push_back(-1);
            }
        if (h.n() > 1 && leaf_count(h) > leaves_) return;
        HostTree tree(h);
        std::string code = tree_code(tree);
        auto it = resub_cache_.find(code);
        if (it == resub_cache_.end()) it = resub_cache_.emplace(code, is_re_subdivision(tree, t_)).first;
        if (!it->second) return;
        tpl.T0 = std::move(tree);
        tpl.h0 = paths_;
        if (!sink_(tpl)) stop_ = true;
    }
};

bool ordered(const HostTree& t, Node a, Node b, Node c) {
    auto p = path_between(t, a, c);
    return std::find(p.begin(), p.end(), b) != p.end();
}

}  // namespace

void enumerate_templates(const Graph& g, const HostTree& t, const ChainDecomposition& d,
                         const std::function<bool(const Template&)>& sink) {
    Enumerator(g, t, d, sink).run();
}

std::vector<Template> all_templates(const Graph& g, const HostTree& t, const ChainDecomposition& d) {
    std::vector<Template> out;
    enumerate_templates(g, t, d, [&](const Template& tpl) {
        out.push_back(tpl);
        return true;
    });
    return out;
}

OrientedChain orient_chain(const Template& tpl, const RootOrdering& rbar, int chain) {
    const auto& path = tpl.h0[static_cast<std::size_t>(chain)];
    Node a = path.front(), b = path.back();
    for (Node r : rbar) {
        if (ordered(tpl.T0, a, b, r)) return {chain, true};
        if (ordered(tpl.T0, r, a, b)) return {chain, false};
    }
    throw InvariantBroken("no root resolves the orientation of chain " + std::to_string(chain));
}

bool realizes(const Graph& g, const Representation& r, const ChainDecomposition& d, const Template& tpl) {
    (void)g;
    if (!r.host.is_tree()) return false;
    auto vx = r.node_sets();
    int k = static_cast<int>(d.cliques.size());
    // Node of r carrying each clique.
    std::vector<Node> at(static_cast<std::size_t>(k), -1);
    for (Node x = 0; x < r.host.n(); ++x) {
        if (vx[static_cast<std::size_t>(x)].empty()) continue;
        auto it = std::lower_bound(d.cliques.begin(), d.cliques.end(), vx[static_cast<std::size_t>(x)]);
        if (it == d.cliques.end() || *it != vx[static_cast<std::size_t>(x)]) return false;
        at[static_cast<std::size_t>(it - d.cliques.begin())] = x;
    }
    for (Node x : at)
        if (x < 0) return false;

    // Branching nodes of each chain in r, in chain order.
    std::vector<std::vector<Node>> branch(d.chains.size());
    for (std::size_t c = 0; c < d.chains.size(); ++c) {
        const auto& inner = d.chains[c].inner;
        for (std::size_t i = 0; i + 1 < inner.size(); ++i)
            if (!r.host.find_edge(at[static_cast<std::size_t>(inner[i])], at[static_cast<std::size_t>(inner[i + 1])])) return false;
        for (CliqueId y : inner)
            if (r.host.degree(at[static_cast<std::size_t>(y)]) >= 3) branch[c].push_back(at[static_cast<std::size_t>(y)]);
            else if (r.host.degree(at[static_cast<std::size_t>(y)]) != 2) return false;
    }

    // Image of every template non-leaf.
    std::vector<Node> image(static_cast<std::size_t>(tpl.T0.n()), -1);
    for (Node x = 0; x < tpl.T0.n(); ++x)
        if (tpl.kind[static_cast<std::size_t>(x)] == TemplateNodeKind::Single) image[static_cast<std::size_t>(x)] = at[static_cast<std::size_t>(tpl.label[static_cast<std::size_t>(x)])];
    for (std::size_t c = 0; c < tpl.h0.size(); ++c) {
        const auto& path = tpl.h0[c];
        if (path.size() - 2 != branch[c].size()) return false;
        for (std::size_t j = 1; j + 1 < path.size(); ++j) image[static_cast<std::size_t>(path[j])] = branch[c][j - 1];
    }

    // Anchor nodes of r: leaves, not-surrounded cliques and branching chain nodes; all others are chain nodes of degree 2.
    std::vector<char> anchor(static_cast<std::size_t>(r.host.n()), 0);
    int anchors = 0;
    for (Node x = 0; x < r.host.n(); ++x) {
        bool leaf = r.host.degree(x) <= 1;
        bool single = !vx[static_cast<std::size_t>(x)].empty() && d.inner_index[static_cast<std::size_t>(std::lower_bound(d.cliques.begin(), d.cliques.end(), vx[static_cast<std::size_t>(x)]) - d.cliques.begin())] < 0;
        if (leaf || single || r.host.degree(x) >= 3) {
            anchor[static_cast<std::size_t>(x)] = 1;
            ++anchors;
        }
    }
    if (anchors != tpl.T0.n()) return false;

    HostTree rt(r.host);
    auto clique_of = [&](Node x) {
        return static_cast<CliqueId>(std::lower_bound(d.cliques.begin(), d.cliques.end(), vx[static_cast<std::size_t>(x)]) - d.cliques.begin());
    };
    std::map<std::pair<Node, Node>, int> chain_edge;
    for (std::size_t c = 0; c < tpl.h0.size(); ++c)
        for (std::size_t j = 0; j + 1 < tpl.h0[c].size(); ++j) {
            Node a = tpl.h0[c][j], b = tpl.h0[c][j + 1];
            chain_edge[{std::min(a, b), std::max(a, b)}] = static_cast<int>(c);
        }
    // Leaves are matched by count per anchor.
    std::vector<int> tpl_leaves(static_cast<std::size_t>(tpl.T0.n()), 0);
    for (const auto& e : tpl.T0.edges()) {
        bool lu = tpl.kind[static_cast<std::size_t>(e.u)] == TemplateNodeKind::Leaf;
        bool lv = tpl.kind[static_cast<std::size_t>(e.v)] == TemplateNodeKind::Leaf;
        if (lu && lv) return false;
        if (lu) ++tpl_leaves[static_cast<std::size_t>(e.v)];
        else if (lv) ++tpl_leaves[static_cast<std::size_t>(e.u)];
        else {
            Node a = image[static_cast<std::size_t>(e.u)], b = image[static_cast<std::size_t>(e.v)];
            auto path = path_between(rt, a, b);
            auto it = chain_edge.find({std::min(e.u, e.v), std::max(e.u, e.v)});
            for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                Node z = path[i];
                if (anchor[static_cast<std::size_t>(z)]) return false;
                if (it == chain_edge.end() || d.inner_index[static_cast<std::size_t>(clique_of(z))] != it->second) return false;
            }
        }
    }
    // Each chain runs from a Y_0 clique through y_1 .. y_s to a Y_{s+1} clique.
    for (std::size_t c = 0; c < tpl.h0.size(); ++c) {
        const Chain& ch = d.chains[c];
        Node from = image[static_cast<std::size_t>(tpl.h0[c].front())], to = image[static_cast<std::size_t>(tpl.h0[c].back())];
        if (from < 0 || to < 0) return false;
        if (!std::binary_search(ch.Y0.begin(), ch.Y0.end(), clique_of(from))) return false;
        if (!std::binary_search(ch.Y1.begin(), ch.Y1.end(), clique_of(to))) return false;
        std::vector<CliqueId> order;
        for (Node z : path_between(rt, from, to))
            if (!vx[static_cast<std::size_t>(z)].empty() && d.inner_index[static_cast<std::size_t>(clique_of(z))] == static_cast<int>(c))
                order.push_back(clique_of(z));
        if (order != ch.inner) return false;
    }
    for (Node x = 0; x < tpl.T0.n(); ++x) {
        if (tpl.kind[static_cast<std::size_t>(x)] == TemplateNodeKind::Leaf) continue;
        int count = 0;
        for (Node z : r.host.neighbors(image[static_cast<std::size_t>(x)]))
            if (r.host.degree(z) == 1) ++count;
        if (count != tpl_leaves[static_cast<std::size_t>(x)]) return false;
    }
    return true;
}

std::string template_to_json(const Graph& g, const ChainDecomposition& d, const Template& tpl) {
    nlohmann::ordered_json j;
    j["nodes"] = nlohmann::json::array();
    for (Node x = 0; x < tpl.T0.n(); ++x) {
        nlohmann::ordered_json n;
        n["id"] = x;
        switch (tpl.kind[static_cast<std::size_t>(x)]) {
        case TemplateNodeKind::Leaf: n["kind"] = "leaf"; break;
        case TemplateNodeKind::Single: n["kind"] = "single"; break;
        case TemplateNodeKind::Inner: n["kind"] = "inner"; n["chain"] = tpl.label[static_cast<std::size_t>(x)]; break;
        }
        nlohmann::json t0 = nlohmann::json::array();
        for (CliqueId c : tpl.t0(x, d)) {
            nlohmann::json clique = nlohmann::json::array();
            for (Vertex v : d.cliques[static_cast<std::size_t>(c)]) clique.push_back(g.label(v));
            t0.push_back(clique);
        }
        n["t0"] = t0;
        j["nodes"].push_back(n);
    }
    j["edges"] = nlohmann::json::array();
    for (const auto& e : tpl.T0.edges()) j["edges"].push_back({e.u, e.v});
    j["h0"] = tpl.h0;
    return j.dump(2);
}

}  // namespace ptg
