#include "ptg/host.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace ptg {

Node Host::add_node() {
    inc_.emplace_back();
    return n() - 1;
}

EdgeId Host::add_edge(Node u, Node v) {
    if (u < 0 || v < 0 || u >= n() || v >= n()) throw std::invalid_argument("node id out of range");
    if (u == v) throw std::invalid_argument("self-loop in host");
    edges_.push_back({u, v});
    EdgeId e = m() - 1;
    inc_[static_cast<std::size_t>(u)].push_back(e);
    inc_[static_cast<std::size_t>(v)].push_back(e);
    return e;
}

Node Host::other(EdgeId e, Node x) const {
    const auto& ed = edge(e);
    return ed.u == x ? ed.v : ed.u;
}

NodeSet Host::neighbors(Node x) const {
    NodeSet out;
    for (EdgeId e : incident(x)) out.push_back(other(e, x));
    return normalized(std::move(out));
}

int Host::multiplicity(Node x, Node y) const {
    int c = 0;
    for (EdgeId e : incident(x))
        if (other(e, x) == y) ++c;
    return c;
}

std::optional<EdgeId> Host::find_edge(Node x, Node y) const {
    for (EdgeId e : incident(x))
        if (other(e, x) == y) return e;
    return std::nullopt;
}

bool Host::is_connected() const {
    if (n() == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(n()), 0);
    std::vector<Node> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Node x = stack.back();
        stack.pop_back();
        for (EdgeId e : incident(x)) {
            Node y = other(e, x);
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                ++count;
                stack.push_back(y);
            }
        }
    }
    return count == n();
}

bool Host::is_tree() const { return n() >= 1 && m() == n() - 1 && is_connected(); }

NodeSet Host::leaves() const {
    NodeSet out;
    for (Node x = 0; x < n(); ++x)
        if (degree(x) == 1) out.push_back(x);
    return out;
}

HostTree::HostTree(Host h) : Host(std::move(h)) {
    if (!is_tree()) throw std::invalid_argument("host is not a tree");
}

Host host_from_edges(int n, const std::vector<std::pair<Node, Node>>& edges) {
    Host h(n);
    for (auto [u, v] : edges) h.add_edge(u, v);
    return h;
}

HostTree tree_from_edges(int n, const std::vector<std::pair<Node, Node>>& edges) {
    return HostTree(host_from_edges(n, edges));
}

HostTree path_tree(int nodes) {
    Host h(nodes);
    for (int i = 0; i + 1 < nodes; ++i) h.add_edge(i, i + 1);
    return HostTree(std::move(h));
}

HostTree star_tree(int leaves) {
    Host h(leaves + 1);
    for (int i = 1; i <= leaves; ++i) h.add_edge(0, i);
    return HostTree(std::move(h));
}

std::pair<Host, Node> subdivide_edge(const Host& h, EdgeId e) {
    if (e < 0 || e >= h.m()) throw UnknownEdge();
    Host out(h.n());
    Node fresh = out.add_node();
    for (EdgeId i = 0; i < h.m(); ++i) {
        const auto& ed = h.edge(i);
        if (i == e) out.add_edge(ed.u, fresh);
        else out.add_edge(ed.u, ed.v);
    }
    out.add_edge(fresh, h.edge(e).v);
    return {std::move(out), fresh};
}

Host contract_edges(const Host& h, const std::vector<EdgeId>& es, std::vector<Node>* node_map) {
    std::vector<Node> parent(static_cast<std::size_t>(h.n()));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<Node(Node)> find = [&](Node x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (EdgeId e : es) {
        if (e < 0 || e >= h.m()) throw UnknownEdge();
        Node a = find(h.edge(e).u), b = find(h.edge(e).v);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::vector<Node> id(static_cast<std::size_t>(h.n()), -1);
    int next = 0;
    for (Node x = 0; x < h.n(); ++x)
        if (find(x) == x) id[static_cast<std::size_t>(x)] = next++;
    std::vector<Node> map(static_cast<std::size_t>(h.n()));
    for (Node x = 0; x < h.n(); ++x) map[static_cast<std::size_t>(x)] = id[static_cast<std::size_t>(find(x))];
    Host out(next);
    for (const auto& ed : h.edges()) {
        Node a = map[static_cast<std::size_t>(ed.u)], b = map[static_cast<std::size_t>(ed.v)];
        if (a != b) out.add_edge(a, b);
    }
    if (node_map) *node_map = std::move(map);
    return out;
}

Host contract_edge(const Host& h, EdgeId e, std::vector<Node>* node_map) {
    return contract_edges(h, {e}, node_map);
}

namespace {

// Reduction that also reports, for each surviving node, its id in the input.
Host reduce_with_map(const Host& h, std::vector<Node>* kept) {
    std::vector<std::pair<Node, Node>> edges;
    for (const auto& ed : h.edges()) edges.emplace_back(ed.u, ed.v);
    std::vector<char> alive(static_cast<std::size_t>(h.n()), 1);
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(h.n()));
    std::vector<char> edge_alive(edges.size(), 1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        inc[static_cast<std::size_t>(edges[i].first)].push_back(static_cast<int>(i));
        inc[static_cast<std::size_t>(edges[i].second)].push_back(static_cast<int>(i));
    }
    auto live_inc = [&](Node x) {
        std::vector<int> out;
        for (int e : inc[static_cast<std::size_t>(x)])
            if (edge_alive[static_cast<std::size_t>(e)]) out.push_back(e);
        return out;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (Node x = 0; x < h.n(); ++x) {
            if (!alive[static_cast<std::size_t>(x)]) continue;
            auto li = live_inc(x);
            if (li.size() != 2) continue;
            auto end = [&](int e) {
                auto [a, b] = edges[static_cast<std::size_t>(e)];
                return a == x ? b : a;
            };
            Node y = end(li[0]), z = end(li[1]);
            if (y == z) continue;
            edge_alive[static_cast<std::size_t>(li[0])] = 0;
            edge_alive[static_cast<std::size_t>(li[1])] = 0;
            alive[static_cast<std::size_t>(x)] = 0;
            edges.emplace_back(y, z);
            edge_alive.push_back(1);
            int ne = static_cast<int>(edges.size()) - 1;
            inc[static_cast<std::size_t>(y)].push_back(ne);
            inc[static_cast<std::size_t>(z)].push_back(ne);
            changed = true;
        }
    }
    std::vector<Node> id(static_cast<std::size_t>(h.n()), -1);
    std::vector<Node> keep;
    for (Node x = 0; x < h.n(); ++x)
        if (alive[static_cast<std::size_t>(x)]) {
            id[static_cast<std::size_t>(x)] = static_cast<Node>(keep.size());
            keep.push_back(x);
        }
    Host out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edge_alive[i]) out.add_edge(id[static_cast<std::size_t>(edges[i].first)], id[static_cast<std::size_t>(edges[i].second)]);
    if (kept) *kept = std::move(keep);
    return out;
}

std::vector<std::vector<int>> multiplicity_matrix(const Host& h) {
    std::vector<std::vector<int>> mm(static_cast<std::size_t>(h.n()), std::vector<int>(static_cast<std::size_t>(h.n()), 0));
    for (const auto& ed : h.edges()) {
        ++mm[static_cast<std::size_t>(ed.u)][static_cast<std::size_t>(ed.v)];
        ++mm[static_cast<std::size_t>(ed.v)][static_cast<std::size_t>(ed.u)];
    }
    return mm;
}

// Backtracking isomorphism search with degree refinement; returns a->b node map.
std::optional<std::vector<Node>> find_isomorphism(const Host& a, const Host& b) {
    if (a.n() != b.n() || a.m() != b.m()) return std::nullopt;
    int n = a.n();
    auto ma = multiplicity_matrix(a), mb = multiplicity_matrix(b);
    auto signature = [](const Host& h, Node x) {
        std::vector<int> nd;
        for (EdgeId e : h.incident(x)) nd.push_back(h.degree(h.other(e, x)));
        std::sort(nd.begin(), nd.end());
        nd.insert(nd.begin(), h.degree(x));
        return nd;
    };
    std::vector<std::vector<int>> sa(static_cast<std::size_t>(n)), sb(static_cast<std::size_t>(n));
    for (Node x = 0; x < n; ++x) {
        sa[static_cast<std::size_t>(x)] = signature(a, x);
        sb[static_cast<std::size_t>(x)] = signature(b, x);
    }
    {
        auto ca = sa, cb = sb;
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        if (ca != cb) return std::nullopt;
    }
    // Order a's nodes so that each (after the first of its component) has a mapped neighbor.
    std::vector<Node> order;
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    for (int round = 0; round < n; ++round) {
        Node best = -1;
        int best_links = -1;
        for (Node x = 0; x < n; ++x) {
            if (placed[static_cast<std::size_t>(x)]) continue;
            int links = 0;
            for (Node y : order) links += ma[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] > 0;
            if (links > best_links || (links == best_links && a.degree(x) > a.degree(best))) {
                best = x;
                best_links = links;
            }
        }
        placed[static_cast<std::size_t>(best)] = 1;
        order.push_back(best);
    }
    std::vector<Node> map(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::function<bool(int)> go = [&](int k) {
        if (k == n) return true;
        Node x = order[static_cast<std::size_t>(k)];
        for (Node y = 0; y < n; ++y) {
            if (used[static_cast<std::size_t>(y)] || sa[static_cast<std::size_t>(x)] != sb[static_cast<std::size_t>(y)]) continue;
            bool ok = true;
            for (int j = 0; j < k && ok; ++j) {
                Node px = order[static_cast<std::size_t>(j)];
                ok = ma[static_cast<std::size_t>(x)][static_cast<std::size_t>(px)] ==
                     mb[static_cast<std::size_t>(y)][static_cast<std::size_t>(map[static_cast<std::size_t>(px)])];
            }
            if (!ok) continue;
            map[static_cast<std::size_t>(x)] = y;
            used[static_cast<std::size_t>(y)] = 1;
            if (go(k + 1)) return true;
            used[static_cast<std::size_t>(y)] = 0;
            map[static_cast<std::size_t>(x)] = -1;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return map;
}

}  // namespace

Host homeomorphic_reduction(const Host& h) { return reduce_with_map(h, nullptr); }

bool are_isomorphic(const Host& a, const Host& b) { return find_isomorphism(a, b).has_value(); }

bool is_re_subdivision(const Host& s, const Host& t) {
    if (!s.is_connected() || !t.is_connected()) return false;
    Host rs = homeomorphic_reduction(s);
    int me = t.m();
    if (me > 24) throw std::invalid_argument("is_re_subdivision: target host too large");
    for (std::uint32_t mask = 0; mask < (1u << me); ++mask) {
        std::vector<EdgeId> es;
        for (int i = 0; i < me; ++i)
            if (mask >> i & 1u) es.push_back(i);
        Host rc = homeomorphic_reduction(contract_edges(t, es));
        if (rc.n() == rs.n() && rc.m() == rs.m() && are_isomorphic(rc, rs)) return true;
    }
    return false;
}

std::optional<ResubdivisionWitness> resubdivision_witness(const HostTree& s, const HostTree& t) {
    std::vector<Node> skeep;
    Host rs = reduce_with_map(s, &skeep);
    int me = t.m();
    if (me > 24) throw std::invalid_argument("resubdivision_witness: target tree too large");
    for (std::uint32_t mask = 0; mask < (1u << me); ++mask) {
        std::vector<EdgeId> es;
        for (int i = 0; i < me; ++i)
            if (mask >> i & 1u) es.push_back(i);
        std::vector<Node> cmap;
        Host c = contract_edges(t, es, &cmap);
        std::vector<Node> ckeep;
        Host rc = reduce_with_map(c, &ckeep);
        if (rc.n() != rs.n() || rc.m() != rs.m()) continue;
        auto iso = find_isomorphism(rc, rs);
        if (!iso) continue;
        // Place every node of c: reduced nodes via iso, degree-2 nodes along the matching s-path.
        std::vector<Node> cimage(static_cast<std::size_t>(c.n()), -1);
        for (std::size_t i = 0; i < ckeep.size(); ++i)
            cimage[static_cast<std::size_t>(ckeep[i])] = skeep[static_cast<std::size_t>((*iso)[i])];
        HostTree ct(c);
        bool ok = true;
        if (c.n() > 1 && rc.n() >= 1) {
            for (EdgeId re = 0; re < rc.m() && ok; ++re) {
                Node a = ckeep[static_cast<std::size_t>(rc.edge(re).u)], b = ckeep[static_cast<std::size_t>(rc.edge(re).v)];
                NodeSet cpath = path_between(ct, a, b);
                NodeSet spath = path_between(s, cimage[static_cast<std::size_t>(a)], cimage[static_cast<std::size_t>(b)]);
                if (spath.size() < cpath.size()) {
                    ok = false;
                    break;
                }
                for (std::size_t k = 1; k + 1 < cpath.size(); ++k) cimage[static_cast<std::size_t>(cpath[k])] = spath[k];
            }
        }
        if (!ok) continue;
        ResubdivisionWitness w;
        w.contracted = es;
        for (Node x = 0; x < t.n(); ++x) w.image.push_back(cimage[static_cast<std::size_t>(cmap[static_cast<std::size_t>(x)])]);
        return w;
    }
    return std::nullopt;
}

NodeSet path_between(const HostTree& t, Node x, Node y) {
    std::vector<Node> parent(static_cast<std::size_t>(t.n()), -2);
    parent[static_cast<std::size_t>(y)] = -1;
    std::vector<Node> queue{y};
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (EdgeId e : t.incident(queue[i])) {
            Node z = t.other(e, queue[i]);
            if (parent[static_cast<std::size_t>(z)] == -2) {
                parent[static_cast<std::size_t>(z)] = queue[i];
                queue.push_back(z);
            }
        }
    NodeSet out;
    for (Node z = x; z != -1; z = parent[static_cast<std::size_t>(z)]) out.push_back(z);
    return out;
}

NodeSet eyes(const HostTree& t) {
    NodeSet out;
    for (Node x = 0; x < t.n(); ++x) {
        bool eye = t.degree(x) >= 3;
        for (EdgeId e : t.incident(x)) eye = eye || t.degree(t.other(e, x)) == 1;
        if (eye) out.push_back(x);
    }
    return out;
}

int leaf_count(const Host& h) { return static_cast<int>(h.leaves().size()); }

int branching_count(const Host& h) {
    int c = 0;
    for (Node x = 0; x < h.n(); ++x) c += h.degree(x) >= 3;
    return c;
}

namespace {

std::string rooted_code(const HostTree& t, Node root, Node parent, const std::vector<int>* color) {
    std::vector<std::string> kids;
    for (EdgeId e : t.incident(root)) {
        Node c = t.other(e, root);
        if (c != parent) kids.push_back(rooted_code(t, c, root, color));
    }
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    if (color) out += std::to_string((*color)[static_cast<std::size_t>(root)]);
    for (const auto& k : kids) out += k;
    return out + ")";
}

std::string tree_code_impl(const HostTree& t, const std::vector<int>* color) {
    // Find centers by peeling leaves.
    int n = t.n();
    if (n == 1) return rooted_code(t, 0, -1, color);
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<Node> layer;
    for (Node x = 0; x < n; ++x) {
        deg[static_cast<std::size_t>(x)] = t.degree(x);
        if (deg[static_cast<std::size_t>(x)] <= 1) layer.push_back(x);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<Node> next;
        for (Node x : layer) {
            --remaining;
            for (EdgeId e : t.incident(x)) {
                Node y = t.other(e, x);
                if (--deg[static_cast<std::size_t>(y)] == 1) next.push_back(y);
            }
        }
        layer = std::move(next);
    }
    std::string best;
    for (Node c : layer) {
        std::string code = rooted_code(t, c, -1, color);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

}  // namespace

std::string tree_code(const HostTree& t) { return tree_code_impl(t, nullptr); }

std::string colored_tree_code(const HostTree& t, const std::vector<int>& color) { return tree_code_impl(t, &color); }

Host read_host(std::istream& in) {
    RawEdgeList raw = read_raw_edge_list(in);
    if (raw.n == 0) throw ParseError(1, 1, "host needs at least one node");
    Host h = host_from_edges(raw.n, raw.edges);
    if (!h.is_connected()) throw ParseError(1, 1, "host is not connected");
    return h;
}

Host parse_host(const std::string& text) {
    std::istringstream in(text);
    return read_host(in);
}

std::string write_host(const Host& h) {
    std::ostringstream out;
    out << h.n() << ' ' << h.m() << '\n';
    for (const auto& ed : h.edges()) out << ed.u << ' ' << ed.v << '\n';
    return out.str();
}

}  // namespace ptg
