#include "ptg/chordal.hpp"

#include <algorithm>
#include <numeric>

#include "ptg/solver.hpp"

namespace ptg {

namespace {

// Shortest path from a to b avoiding the blocked vertices; empty if none.
std::vector<Vertex> shortest_path_avoiding(const Graph& g, Vertex a, Vertex b, const std::vector<char>& blocked) {
    std::vector<Vertex> parent(static_cast<std::size_t>(g.n()), -2);
    parent[static_cast<std::size_t>(a)] = -1;
    std::vector<Vertex> queue{a};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        Vertex x = queue[i];
        if (x == b) break;
        for (Vertex y : g.neighbors(x))
            if (parent[static_cast<std::size_t>(y)] == -2 && (!blocked[static_cast<std::size_t>(y)] || y == b)) {
                parent[static_cast<std::size_t>(y)] = x;
                queue.push_back(y);
            }
    }
    if (parent[static_cast<std::size_t>(b)] == -2) return {};
    std::vector<Vertex> path;
    for (Vertex x = b; x != -1; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

// Closes a cycle through v and two non-adjacent neighbors a, b, if the rest of the graph links them.
std::vector<Vertex> cycle_through(const Graph& g, Vertex v, Vertex a, Vertex b) {
    std::vector<char> blocked(static_cast<std::size_t>(g.n()), 0);
    blocked[static_cast<std::size_t>(v)] = 1;
    for (Vertex w : g.neighbors(v))
        if (w != a && w != b) blocked[static_cast<std::size_t>(w)] = 1;
    auto path = shortest_path_avoiding(g, a, b, blocked);
    if (path.empty()) return {};
    path.insert(path.begin(), v);
    return path;
}

std::vector<Vertex> find_induced_cycle(const Graph& g, Vertex first) {
    std::vector<Vertex> order(static_cast<std::size_t>(g.n()));
    std::iota(order.begin(), order.end(), 0);
    std::rotate(order.begin(), order.begin() + first, order.end());
    for (Vertex v : order) {
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                auto c = cycle_through(g, v, nb[i], nb[j]);
                if (!c.empty()) return c;
            }
    }
    return {};
}

}  // namespace

bool is_perfect_elimination_ordering(const Graph& g, const std::vector<Vertex>& peo) {
    if (static_cast<int>(peo.size()) != g.n()) return false;
    std::vector<int> pos(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < peo.size(); ++i) {
        Vertex v = peo[i];
        if (v < 0 || v >= g.n() || pos[static_cast<std::size_t>(v)] >= 0) return false;
        pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    for (Vertex v : peo) {
        VertexSet later;
        for (Vertex w : g.neighbors(v))
            if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)]) later.push_back(w);
        for (std::size_t i = 0; i < later.size(); ++i)
            for (std::size_t j = i + 1; j < later.size(); ++j)
                if (!g.adjacent(later[i], later[j])) return false;
    }
    return true;
}

bool is_induced_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
    std::size_t k = cycle.size();
    if (k < 3) return false;
    if (normalized(cycle).size() != k) return false;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
        }
    return true;
}

ChordalResult is_chordal(const Graph& g) {
    ChordalResult r;
    int n = g.n();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!done[static_cast<std::size_t>(v)] && (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]))
                best = v;
        done[static_cast<std::size_t>(best)] = 1;
        r.order.push_back(best);
        for (Vertex w : g.neighbors(best))
            if (!done[static_cast<std::size_t>(w)]) ++weight[static_cast<std::size_t>(w)];
    }
    auto peo = r.peo();
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(peo[static_cast<std::size_t>(i)])] = i;
    for (Vertex v : peo) {
        VertexSet later;
        for (Vertex w : g.neighbors(v))
            if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)]) later.push_back(w);
        for (std::size_t i = 0; i < later.size(); ++i)
            for (std::size_t j = i + 1; j < later.size(); ++j)
                if (!g.adjacent(later[i], later[j])) {
                    r.chordal = false;
                    r.cycle = cycle_through(g, v, later[i], later[j]);
                    if (r.cycle.empty()) r.cycle = find_induced_cycle(g, v);
                    return r;
                }
    }
    r.chordal = true;
    return r;
}

std::vector<VertexSet> maximal_cliques(const Graph& g, const std::vector<Vertex>& peo) {
    if (!is_perfect_elimination_ordering(g, peo)) throw NotChordal();
    std::vector<int> pos(static_cast<std::size_t>(g.n()));
    for (std::size_t i = 0; i < peo.size(); ++i) pos[static_cast<std::size_t>(peo[i])] = static_cast<int>(i);
    std::vector<VertexSet> cand;
    for (Vertex v : peo) {
        VertexSet c{v};
        for (Vertex w : g.neighbors(v))
            if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)]) c.push_back(w);
        cand.push_back(normalized(std::move(c)));
    }
    std::sort(cand.begin(), cand.end(), [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
    std::vector<VertexSet> out;
    for (const auto& c : cand) {
        bool dominated = false;
        for (const auto& k : out) dominated = dominated || is_subset(c, k);
        if (!dominated) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    auto r = is_chordal(g);
    if (!r.chordal) throw NotChordal();
    return maximal_cliques(g, r.peo());
}

CliqueTree clique_tree(const Graph& g) {
    auto r = is_chordal(g);
    if (!r.chordal) throw NotChordal();
    if (g.n() == 0 || !is_connected(g)) throw NotConnected();
    CliqueTree ct;
    ct.cliques = maximal_cliques(g, r.peo());
    int k = static_cast<int>(ct.cliques.size());
    // Prim's algorithm on intersection sizes; ties go to the lowest (tree node, new node) pair.
    std::vector<char> in(static_cast<std::size_t>(k), 0);
    in[0] = 1;
    Host h(k);
    for (int step = 1; step < k; ++step) {
        int ba = -1, bb = -1, bw = -1;
        for (int a = 0; a < k; ++a) {
            if (!in[static_cast<std::size_t>(a)]) continue;
            for (int b = 0; b < k; ++b) {
                if (in[static_cast<std::size_t>(b)]) continue;
                int w = static_cast<int>(set_intersection(ct.cliques[static_cast<std::size_t>(a)], ct.cliques[static_cast<std::size_t>(b)]).size());
                if (w > bw) {
                    bw = w;
                    ba = a;
                    bb = b;
                }
            }
        }
        h.add_edge(ba, bb);
        in[static_cast<std::size_t>(bb)] = 1;
    }
    ct.tree = HostTree(std::move(h));
    return ct;
}

bool is_claw_free(const Graph& g) {
    for (Vertex c = 0; c < g.n(); ++c) {
        const auto& nb = g.neighbors(c);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                for (std::size_t k = j + 1; k < nb.size(); ++k)
                    if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) return false;
            }
    }
    return true;
}

bool is_proper_interval(const Graph& g) {
    if (!is_chordal(g).chordal || !is_claw_free(g)) return false;
    for (const auto& comp : connected_components(g))
        if (!recognize_compact(induced_subgraph(g, comp).graph, path_tree(2))) return false;
    return true;
}

}  // namespace ptg
