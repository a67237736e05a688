#include "ptg/oracle.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>

namespace ptg {

namespace {

std::size_t idx(int x) { return static_cast<std::size_t>(x); }

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    Vertex pivot = -1;
    std::size_t best = 0;
    for (const VertexSet* s : {&p, &x})
        for (Vertex u : *s) {
            std::size_t k = 0;
            for (Vertex v : p) k += g.adjacent(u, v) ? 1 : 0;
            if (pivot < 0 || k > best) {
                pivot = u;
                best = k;
            }
        }
    VertexSet candidates;
    for (Vertex v : p)
        if (!g.adjacent(pivot, v)) candidates.push_back(v);
    for (Vertex v : candidates) {
        VertexSet np, nx;
        for (Vertex w : p)
            if (g.adjacent(v, w)) np.push_back(w);
        for (Vertex w : x)
            if (g.adjacent(v, w)) nx.push_back(w);
        VertexSet nr = r;
        nr.push_back(v);
        std::sort(nr.begin(), nr.end());
        bron_kerbosch(g, nr, np, nx, out);
        p.erase(std::find(p.begin(), p.end(), v));
        x.insert(std::upper_bound(x.begin(), x.end(), v), v);
    }
}

std::vector<VertexSet> node_sets_of(const Representation& r, int n) {
    std::vector<VertexSet> vx(idx(r.host.n()));
    for (int v = 0; v < n; ++v)
        for (Node x : r.models[idx(v)]) vx[idx(x)].push_back(v);
    for (auto& s : vx) std::sort(s.begin(), s.end());
    return vx;
}

bool has(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

bool model_connected(const Host& h, const NodeSet& m) {
    if (m.empty()) return false;
    std::vector<char> in(idx(h.n()), 0), seen(idx(h.n()), 0);
    for (Node x : m) in[idx(x)] = 1;
    std::vector<Node> stack{m.front()};
    seen[idx(m.front())] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Node x = stack.back();
        stack.pop_back();
        for (EdgeId e : h.incident(x)) {
            Node z = h.other(e, x);
            if (in[idx(z)] && !seen[idx(z)]) {
                seen[idx(z)] = 1;
                ++reached;
                stack.push_back(z);
            }
        }
    }
    return reached == m.size();
}

// u escapes v somewhere in h (either orientation of every edge).
bool escapes_somewhere(const Host& h, const std::vector<VertexSet>& vx, Vertex u, Vertex v) {
    for (const auto& e : h.edges()) {
        if (has(vx[idx(e.u)], u) && !has(vx[idx(e.v)], v)) return true;
        if (has(vx[idx(e.v)], u) && !has(vx[idx(e.u)], v)) return true;
    }
    return false;
}

struct Components {
    std::vector<VertexSet> comps;
    std::vector<VertexSet> nbhd;
    std::vector<int> of;  // vertex -> component, -1 inside V_y
};

Components components_without(const Graph& g, const VertexSet& removed) {
    Components c;
    c.of.assign(idx(g.n()), -1);
    std::vector<char> gone(idx(g.n()), 0);
    for (Vertex v : removed) gone[idx(v)] = 1;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (gone[idx(s)] || c.of[idx(s)] >= 0) continue;
        int id = static_cast<int>(c.comps.size());
        VertexSet comp{s}, nb;
        c.of[idx(s)] = id;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex w : g.neighbors(comp[i])) {
                if (gone[idx(w)]) nb.push_back(w);
                else if (c.of[idx(w)] < 0) {
                    c.of[idx(w)] = id;
                    comp.push_back(w);
                }
            }
        std::sort(comp.begin(), comp.end());
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        c.comps.push_back(comp);
        c.nbhd.push_back(nb);
    }
    return c;
}

}  // namespace

std::vector<VertexSet> oracle_maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    if (g.n() == 0) return out;
    bron_kerbosch(g, {}, iota_set(g.n()), {}, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool oracle_is_chordal(const Graph& g) {
    std::vector<char> alive(idx(g.n()), 1);
    int left = g.n();
    while (left > 0) {
        Vertex found = -1;
        for (Vertex v = 0; v < g.n() && found < 0; ++v) {
            if (!alive[idx(v)]) continue;
            VertexSet nb;
            for (Vertex w : g.neighbors(v))
                if (alive[idx(w)]) nb.push_back(w);
            bool simplicial = true;
            for (std::size_t i = 0; i < nb.size() && simplicial; ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j)
                    if (!g.adjacent(nb[i], nb[j])) {
                        simplicial = false;
                        break;
                    }
            if (simplicial) found = v;
        }
        if (found < 0) return false;
        alive[idx(found)] = 0;
        --left;
    }
    return true;
}

std::vector<HostTree> all_trees(int nodes) {
    static std::map<int, std::vector<HostTree>> cache;
    static std::mutex mu;
    if (nodes < 1) return {};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(nodes);
        if (it != cache.end()) return it->second;
    }
    std::vector<HostTree> out;
    if (nodes == 1) {
        out.emplace_back();
    } else {
        std::map<std::string, HostTree> grown;
        for (const auto& t : all_trees(nodes - 1))
            for (Node x = 0; x < t.n(); ++x) {
                Host h = t;
                Node leaf = h.add_node();
                h.add_edge(x, leaf);
                HostTree ht(h);
                grown.emplace(tree_code(ht), ht);
            }
        for (auto& [code, t] : grown) out.push_back(t);
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(nodes, out);
    return out;
}

bool oracle_is_compact(const Graph& g, const Representation& r) {
    int n = g.n();
    if (static_cast<int>(r.models.size()) != n || !r.host.is_tree()) return false;
    auto vx = node_sets_of(r, n);
    auto cliques = oracle_maximal_cliques(g);
    std::vector<VertexSet> seen;
    for (Node x = 0; x < r.host.n(); ++x) {
        bool leaf = r.host.degree(x) <= 1 && r.host.n() > 1;
        if (leaf) {
            if (!vx[idx(x)].empty()) return false;
        } else {
            if (!std::binary_search(cliques.begin(), cliques.end(), vx[idx(x)])) return false;
            seen.push_back(vx[idx(x)]);
        }
    }
    std::sort(seen.begin(), seen.end());
    if (seen != cliques) return false;
    for (Vertex v = 0; v < n; ++v)
        if (!model_connected(r.host, r.models[idx(v)])) return false;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            bool together = false;
            for (const auto& s : vx) together = together || (has(s, u) && has(s, v));
            if (together != g.adjacent(u, v)) return false;
            if (!escapes_somewhere(r.host, vx, u, v)) return false;
        }
    return true;
}

namespace {

// Calls visit for every compact representation in the search space until it returns false.
void search_compact(const Graph& g, const HostTree& t, int budget, const std::function<bool(const Representation&)>& visit) {
    auto cliques = oracle_maximal_cliques(g);
    int k = static_cast<int>(cliques.size());
    int maxleaves = t.n() == 1 ? 0 : leaf_count(t);
    if (k + maxleaves > budget) throw BudgetExceeded();
    std::map<std::string, bool> resub;
    for (int total = k + 2; total <= k + maxleaves; ++total) {
        for (const auto& tree : all_trees(total)) {
            std::vector<Node> inner;
            for (Node x = 0; x < tree.n(); ++x)
                if (tree.degree(x) >= 2) inner.push_back(x);
            if (static_cast<int>(inner.size()) != k) continue;
            std::string code = tree_code(tree);
            auto it = resub.find(code);
            if (it == resub.end()) it = resub.emplace(code, is_re_subdivision(tree, t)).first;
            if (!it->second) continue;
            std::vector<int> assign(idx(tree.n()), -1);
            std::vector<char> used(idx(k), 0);
            bool stop = false;
            std::function<void(std::size_t)> go = [&](std::size_t pos) {
                if (stop) return;
                if (pos == inner.size()) {
                    Representation r;
                    r.host = tree;
                    r.mode = RepMode::Compact;
                    r.models.assign(idx(g.n()), {});
                    for (Node x : inner)
                        for (Vertex v : cliques[idx(assign[idx(x)])]) r.models[idx(v)].push_back(x);
                    for (auto& m : r.models) std::sort(m.begin(), m.end());
                    if (oracle_is_compact(g, r) && !visit(r)) stop = true;
                    return;
                }
                Node x = inner[pos];
                for (int c = 0; c < k && !stop; ++c) {
                    if (used[idx(c)]) continue;
                    bool ok = true;
                    for (Node z : tree.neighbors(x))
                        if (assign[idx(z)] >= 0 && !intersects(cliques[idx(c)], cliques[idx(assign[idx(z)])])) ok = false;
                    if (!ok) continue;
                    used[idx(c)] = 1;
                    assign[idx(x)] = c;
                    go(pos + 1);
                    assign[idx(x)] = -1;
                    used[idx(c)] = 0;
                }
            };
            go(0);
            if (stop) return;
        }
    }
}

}  // namespace

std::optional<Representation> oracle_recognize(const Graph& g, const HostTree& t, int budget) {
    if (t.n() == 1) {
        if (g.n() > 1) return std::nullopt;
        Representation r;
        r.host = Host(1);
        for (Vertex v = 0; v < g.n(); ++v) r.models.push_back({0});
        return r;
    }
    if (g.n() == 0 || !oracle_is_chordal(g)) return std::nullopt;
    std::optional<Representation> found;
    search_compact(g, t, budget, [&](const Representation& r) {
        found = r;
        return false;
    });
    return found;
}

std::vector<Representation> oracle_all_compact(const Graph& g, const HostTree& t, int budget, std::size_t limit) {
    std::vector<Representation> out;
    if (t.n() == 1 || g.n() == 0 || !oracle_is_chordal(g)) return out;
    search_compact(g, t, budget, [&](const Representation& r) {
        out.push_back(r);
        return out.size() < limit;
    });
    return out;
}

std::vector<Host> re_subdivisions(const Host& h, int max_nodes) {
    if (h.m() > 16) throw BudgetExceeded();
    std::vector<Host> out;
    std::set<std::vector<int>> seen;
    for (std::uint32_t f = 0; f < (std::uint32_t{1} << h.m()); ++f) {
        std::vector<EdgeId> contracted;
        for (EdgeId e = 0; e < h.m(); ++e)
            if (f >> e & 1) contracted.push_back(e);
        Host base = contract_edges(h, contracted);
        int spare = max_nodes - base.n();
        if (spare < 0 || base.n() > 8) continue;
        std::vector<int> k(idx(base.m()), 0);
        std::vector<int> perm(idx(base.n()));
        std::function<void(int, int)> go = [&](int e, int left) {
            if (e == base.m()) {
                // Canonical key: smallest sorted (u, v, subdivisions) list over relabelings of the base.
                std::vector<int> best;
                std::iota(perm.begin(), perm.end(), 0);
                do {
                    std::vector<std::array<int, 3>> es;
                    for (EdgeId i = 0; i < base.m(); ++i) {
                        int a = perm[idx(base.edge(i).u)], b = perm[idx(base.edge(i).v)];
                        es.push_back({std::min(a, b), std::max(a, b), k[idx(i)]});
                    }
                    std::sort(es.begin(), es.end());
                    std::vector<int> key{base.n()};
                    for (const auto& t : es) key.insert(key.end(), t.begin(), t.end());
                    if (best.empty() || key < best) best = key;
                } while (std::next_permutation(perm.begin(), perm.end()));
                if (!seen.insert(best).second) return;
                Host s(base.n());
                for (EdgeId i = 0; i < base.m(); ++i) {
                    Node prev = base.edge(i).u;
                    for (int j = 0; j < k[idx(i)]; ++j) {
                        Node z = s.add_node();
                        s.add_edge(prev, z);
                        prev = z;
                    }
                    s.add_edge(prev, base.edge(i).v);
                }
                out.push_back(std::move(s));
                return;
            }
            for (int c = 0; c <= left; ++c) {
                k[idx(e)] = c;
                go(e + 1, left - c);
            }
        };
        go(0, spare);
    }
    std::stable_sort(out.begin(), out.end(), [](const Host& a, const Host& b) { return a.n() < b.n(); });
    return out;
}

std::optional<Representation> oracle_recognize_proper(const Graph& g, const Host& h, int max_nodes) {
    if (max_nodes > 20) throw BudgetExceeded();
    int n = g.n();
    // Twins may swap models, so among twins u < v we only look at mask(u) < mask(v).
    std::vector<Vertex> twin_before(idx(n), -1);
    for (const auto& cls : twin_classes(g))
        for (std::size_t i = 1; i < cls.size(); ++i) twin_before[idx(cls[i])] = cls[i - 1];
    for (const Host& host : re_subdivisions(h, max_nodes)) {
        int nodes = host.n();
        std::vector<std::uint32_t> adj(idx(nodes), 0);
        for (const auto& e : host.edges()) {
            adj[idx(e.u)] |= std::uint32_t{1} << e.v;
            adj[idx(e.v)] |= std::uint32_t{1} << e.u;
        }
        std::vector<std::uint32_t> subsets;
        for (std::uint32_t m = 1; m < (std::uint32_t{1} << nodes); ++m) {
            std::uint32_t reach = m & (~m + 1), grown = reach;
            do {
                reach = grown;
                for (int x = 0; x < nodes; ++x)
                    if (reach >> x & 1) grown |= adj[idx(x)] & m;
            } while (grown != reach);
            if (reach == m) subsets.push_back(m);
        }
        auto compatible = [&](Vertex u, std::uint32_t mu, Vertex v, std::uint32_t mv) {
            std::uint32_t both = mu & mv;
            if (!g.adjacent(u, v)) return both == 0;
            if (both == 0 || both == mu || both == mv) return false;
            if (twin_before[idx(v)] == u) return mu < mv;
            if (twin_before[idx(u)] == v) return mv < mu;
            return true;
        };
        // Forward checking: every unassigned vertex keeps the candidates compatible with all
        // assignments so far; the vertex with the fewest candidates is branched on next.
        std::vector<std::uint32_t> model(idx(n), 0);
        std::vector<char> assigned(idx(n), 0);
        std::function<bool(std::vector<std::vector<std::uint32_t>>&, int)> go = [&](std::vector<std::vector<std::uint32_t>>& dom, int left) {
            if (left == 0) return true;
            Vertex v = -1;
            for (Vertex w = 0; w < n; ++w)
                if (!assigned[idx(w)] && (v < 0 || dom[idx(w)].size() < dom[idx(v)].size())) v = w;
            assigned[idx(v)] = 1;
            for (std::uint32_t s : dom[idx(v)]) {
                model[idx(v)] = s;
                std::vector<std::vector<std::uint32_t>> next(idx(n));
                bool dead = false;
                for (Vertex w = 0; w < n && !dead; ++w) {
                    if (assigned[idx(w)]) continue;
                    for (std::uint32_t t : dom[idx(w)])
                        if (compatible(v, s, w, t)) next[idx(w)].push_back(t);
                    dead = next[idx(w)].empty();
                }
                if (!dead && go(next, left - 1)) return true;
            }
            assigned[idx(v)] = 0;
            return false;
        };
        std::vector<std::vector<std::uint32_t>> dom(idx(n), subsets);
        if (!go(dom, n)) continue;
        Representation r;
        r.host = host;
        r.mode = RepMode::Proper;
        for (Vertex v = 0; v < n; ++v) {
            NodeSet m;
            for (int x = 0; x < nodes; ++x)
                if (model[idx(v)] >> x & 1) m.push_back(x);
            r.models.push_back(std::move(m));
        }
        return r;
    }
    return std::nullopt;
}

bool oracle_surrounding(const Graph& g, const std::vector<VertexSet>& cliques, int l, int y, int r) {
    if (l == y || r == y || l == r) return false;
    const auto& vy = cliques[idx(y)];
    auto c = components_without(g, vy);
    auto comp_of_clique = [&](int x) {
        for (Vertex v : cliques[idx(x)])
            if (!has(vy, v)) return c.of[idx(v)];
        return -1;
    };
    int gl = comp_of_clique(l), gr = comp_of_clique(r);
    if (gl < 0 || gr < 0 || gl == gr) return false;
    const auto& nl = c.nbhd[idx(gl)];
    const auto& nr = c.nbhd[idx(gr)];
    VertexSet uni = set_union(nl, nr), both = set_intersection(nl, nr);
    if (c.comps.size() == 2) {
        if (!(uni == vy || both.empty())) return false;
    } else {
        if (uni != vy) return false;
        for (std::size_t k = 0; k < c.comps.size(); ++k) {
            if (static_cast<int>(k) == gl || static_cast<int>(k) == gr) continue;
            if (!is_subset(c.nbhd[k], both)) return false;
        }
    }
    VertexSet ml = set_intersection(cliques[idx(l)], vy), mr = set_intersection(cliques[idx(r)], vy);
    for (int x = 0; x < static_cast<int>(cliques.size()); ++x) {
        if (x == y) continue;
        int gx = comp_of_clique(x);
        VertexSet mx = set_intersection(cliques[idx(x)], vy);
        if (gx == gl && !is_subset(mx, ml)) return false;
        if (gx == gr && !is_subset(mx, mr)) return false;
    }
    return true;
}

std::set<std::pair<int, int>> oracle_surrounding_pairs(const Graph& g, const std::vector<VertexSet>& cliques, int y) {
    std::set<std::pair<int, int>> out;
    int k = static_cast<int>(cliques.size());
    for (int l = 0; l < k; ++l)
        for (int r = 0; r < k; ++r)
            if (oracle_surrounding(g, cliques, l, y, r)) out.insert({l, r});
    return out;
}

std::vector<int> oracle_potential(const Graph& g, const Representation& r, const std::vector<Node>& path, int i, int jmax) {
    std::vector<int> out;
    int n = g.n();
    auto vx = node_sets_of(r, n);
    Node yi = path[idx(i)];
    std::vector<Node> moving;
    for (EdgeId e : r.host.incident(yi)) {
        Node z = r.host.other(e, yi);
        if (z != path[idx(i - 1)] && z != path[idx(i + 1)]) moving.push_back(z);
    }
    for (int j = i; j <= jmax; ++j) {
        Host h(r.host.n());
        for (const auto& e : r.host.edges()) {
            Node a = e.u, b = e.v;
            if (a == yi && std::find(moving.begin(), moving.end(), b) != moving.end()) a = path[idx(j)];
            else if (b == yi && std::find(moving.begin(), moving.end(), a) != moving.end()) b = path[idx(j)];
            h.add_edge(a, b);
        }
        Node cut_a = path[idx(j - 1)], cut_b = path[idx(j)];
        std::vector<char> in(idx(h.n()), 0);
        std::vector<Node> queue{path[0]};
        in[idx(path[0])] = 1;
        for (std::size_t q = 0; q < queue.size(); ++q)
            for (EdgeId e : h.incident(queue[q])) {
                Node z = h.other(e, queue[q]);
                if ((queue[q] == cut_a && z == cut_b) || (queue[q] == cut_b && z == cut_a)) continue;
                if (!in[idx(z)]) {
                    in[idx(z)] = 1;
                    queue.push_back(z);
                }
            }
        bool ok = true;
        for (Vertex u = 0; u < n && ok; ++u) {
            const auto& m = r.models[idx(u)];
            if (m.empty()) continue;
            bool inside = std::all_of(m.begin(), m.end(), [&](Node x) { return in[idx(x)] != 0; });
            if (!inside) continue;
            for (Vertex v = 0; v < n && ok; ++v)
                if (v != u && !escapes_somewhere(h, vx, u, v)) ok = false;
        }
        if (ok) out.push_back(j);
    }
    return out;
}

namespace {

Host random_tree(int nodes, std::mt19937_64& rng) {
    Host h(nodes);
    for (Node x = 1; x < nodes; ++x) h.add_edge(std::uniform_int_distribution<Node>(0, x - 1)(rng), x);
    return h;
}

NodeSet random_subtree(const Host& h, int size, std::mt19937_64& rng) {
    std::vector<char> in(idx(h.n()), 0);
    Node start = std::uniform_int_distribution<Node>(0, h.n() - 1)(rng);
    NodeSet set{start};
    in[idx(start)] = 1;
    while (static_cast<int>(set.size()) < size) {
        std::vector<Node> frontier;
        for (Node x : set)
            for (Node z : h.neighbors(x))
                if (!in[idx(z)]) frontier.push_back(z);
        std::sort(frontier.begin(), frontier.end());
        frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
        if (frontier.empty()) break;
        Node z = frontier[std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng)];
        in[idx(z)] = 1;
        set.push_back(z);
    }
    std::sort(set.begin(), set.end());
    return set;
}

Graph intersection_graph(int n, const std::vector<NodeSet>& models) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (intersects(models[idx(u)], models[idx(v)])) g.add_edge(u, v);
    return g;
}

}  // namespace

Graph gen_chordal(int n, double density, std::uint64_t seed) {
    if (n <= 1) return Graph(std::max(n, 0));
    std::mt19937_64 rng(seed);
    density = std::clamp(density, 0.01, 1.0);
    Host host = random_tree(n, rng);
    std::binomial_distribution<int> extra(n - 1, density / 2);
    std::vector<NodeSet> models(idx(n));
    for (int attempt = 0; attempt < 200; ++attempt) {
        for (auto& m : models) m = random_subtree(host, 1 + extra(rng), rng);
        Graph g = intersection_graph(n, models);
        if (is_connected(g)) return g;
    }
    // Pull every model to node 0 along the tree; the result is connected.
    HostTree tree(host);
    for (auto& m : models) {
        auto path = path_between(tree, m.front(), 0);
        m = normalized(set_union(m, normalized(path)));
    }
    return intersection_graph(n, models);
}

Planted gen_planted(const HostTree& t, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int per_edge = std::max(1, (3 * n) / std::max(1, t.m()));
    for (int attempt = 0; attempt < 200; ++attempt) {
        Host host = t;
        for (EdgeId e = 0, m = t.m(); e < m; ++e) {
            int k = std::uniform_int_distribution<int>(0, per_edge)(rng);
            // Subdivide the original edge e; its first half keeps id e after each split.
            for (int i = 0; i < k; ++i) host = subdivide_edge(host, e).first;
        }
        std::vector<NodeSet> models(idx(n));
        std::uniform_int_distribution<int> size(1, 3);
        for (auto& m : models) m = random_subtree(host, size(rng), rng);
        bool failed = false;
        for (int step = 0; step < 50 * n * host.n(); ++step) {
            int cu = -1, cv = -1;
            for (int u = 0; u < n && cu < 0; ++u)
                for (int v = 0; v < n; ++v)
                    if (u != v && is_subset(models[idx(u)], models[idx(v)])) {
                        cu = u;
                        cv = v;
                        break;
                    }
            if (cu < 0) break;
            auto& mu = models[idx(cu)];
            std::vector<Node> out_of_v, any;
            for (Node x : mu)
                for (Node z : host.neighbors(x)) {
                    if (std::binary_search(mu.begin(), mu.end(), z)) continue;
                    any.push_back(z);
                    if (!std::binary_search(models[idx(cv)].begin(), models[idx(cv)].end(), z)) out_of_v.push_back(z);
                }
            const auto& pool = out_of_v.empty() ? any : out_of_v;
            if (pool.empty()) {
                failed = true;
                break;
            }
            Node z = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
            mu.push_back(z);
            std::sort(mu.begin(), mu.end());
        }
        if (failed) continue;
        Graph g = intersection_graph(n, models);
        if (!is_connected(g)) continue;
        Representation rep;
        rep.host = host;
        rep.models = models;
        rep.mode = RepMode::Proper;
        if (!verify_proper(g, rep).ok) continue;
        return {g, rep};
    }
    throw GenerationFailed();
}

std::string graph_canonical_form(const Graph& g) {
    int n = g.n();
    // Vertex invariant: degree, then sorted neighbor degrees.
    std::vector<std::vector<int>> inv(idx(n));
    for (Vertex v = 0; v < n; ++v) {
        inv[idx(v)].push_back(g.degree(v));
        std::vector<int> nd;
        for (Vertex w : g.neighbors(v)) nd.push_back(g.degree(w));
        std::sort(nd.begin(), nd.end());
        inv[idx(v)].insert(inv[idx(v)].end(), nd.begin(), nd.end());
    }
    std::vector<Vertex> order = iota_set(n);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return inv[idx(a)] < inv[idx(b)]; });
    std::vector<std::pair<int, int>> groups;  // [begin, end) ranges of equal invariant
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && inv[idx(order[idx(j)])] == inv[idx(order[idx(i)])]) ++j;
        groups.emplace_back(i, j);
        i = j;
    }
    std::string best;
    std::vector<Vertex> perm = order;
    std::function<void(std::size_t)> go = [&](std::size_t gi) {
        if (gi == groups.size()) {
            std::string s(idx(n * n), '0');
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (g.adjacent(perm[idx(i)], perm[idx(j)])) s[idx(i * n + j)] = '1';
            if (best.empty() || s < best) best = s;
            return;
        }
        auto [b, e] = groups[gi];
        std::sort(perm.begin() + b, perm.begin() + e);
        do {
            go(gi + 1);
        } while (std::next_permutation(perm.begin() + b, perm.begin() + e));
    };
    go(0);
    return std::to_string(n) + "|" + best;
}

std::vector<Graph> chordal_corpus(int max_n) {
    std::vector<Graph> out;
    if (max_n < 1) return out;
    std::vector<Graph> level{Graph(1)};
    out.push_back(level.front());
    for (int n = 2; n <= max_n; ++n) {
        std::map<std::string, Graph> next;
        for (const auto& g : level) {
            int m = g.n();
            for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
                VertexSet c;
                for (int v = 0; v < m; ++v)
                    if (mask >> v & 1u) c.push_back(v);
                bool clique = true;
                for (std::size_t i = 0; i < c.size() && clique; ++i)
                    for (std::size_t j = i + 1; j < c.size(); ++j)
                        if (!g.adjacent(c[i], c[j])) {
                            clique = false;
                            break;
                        }
                if (!clique) continue;
                Graph h(m + 1);
                for (const auto& [u, v] : g.edges()) h.add_edge(u, v);
                for (Vertex v : c) h.add_edge(v, m);
                next.emplace(graph_canonical_form(h), h);
            }
        }
        level.clear();
        for (auto& [code, g] : next) level.push_back(g);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace ptg
