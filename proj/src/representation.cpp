#include "ptg/representation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "ptg/chordal.hpp"

namespace ptg {

std::vector<VertexSet> Representation::node_sets() const {
    std::vector<VertexSet> vx(static_cast<std::size_t>(host.n()));
    for (std::size_t v = 0; v < models.size(); ++v)
        for (Node x : models[v])
            if (x >= 0 && x < host.n()) vx[static_cast<std::size_t>(x)].push_back(static_cast<Vertex>(v));
    return vx;
}

Representation representation_from_node_sets(const Host& host, const std::vector<VertexSet>& node_sets, int vertex_count,
                                              RepMode mode) {
    Representation r;
    r.host = host;
    r.mode = mode;
    r.models.assign(static_cast<std::size_t>(vertex_count), {});
    for (Node x = 0; x < static_cast<Node>(node_sets.size()); ++x)
        for (Vertex v : node_sets[static_cast<std::size_t>(x)]) r.models[static_cast<std::size_t>(v)].push_back(x);
    return r;
}

namespace {

bool node_set_connected(const Host& h, const NodeSet& s) {
    if (s.empty()) return false;
    std::vector<char> in(static_cast<std::size_t>(h.n()), 0), seen(static_cast<std::size_t>(h.n()), 0);
    for (Node x : s) in[static_cast<std::size_t>(x)] = 1;
    std::vector<Node> stack{s[0]};
    seen[static_cast<std::size_t>(s[0])] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        Node x = stack.back();
        stack.pop_back();
        for (EdgeId e : h.incident(x)) {
            Node y = h.other(e, x);
            if (in[static_cast<std::size_t>(y)] && !seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                ++count;
                stack.push_back(y);
            }
        }
    }
    return count == s.size();
}

Verdict fail(std::string condition, std::string detail, int a = -1, int b = -1) {
    Verdict v;
    v.ok = false;
    v.violation = Violation{std::move(condition), std::move(detail), a, b};
    return v;
}

}  // namespace

Verdict verify_represents(const Graph& g, const Representation& r) {
    if (static_cast<int>(r.models.size()) != g.n())
        return fail("model", "model count " + std::to_string(r.models.size()) + " differs from vertex count");
    for (Vertex v = 0; v < g.n(); ++v) {
        const auto& mv = r.models[static_cast<std::size_t>(v)];
        if (mv.empty()) return fail("model", "empty model", v);
        if (!std::is_sorted(mv.begin(), mv.end()) || std::adjacent_find(mv.begin(), mv.end()) != mv.end())
            return fail("model", "model is not a sorted node set", v);
        if (mv.front() < 0 || mv.back() >= r.host.n()) return fail("model", "model uses an unknown node", v);
    }
    for (Vertex v = 0; v < g.n(); ++v)
        if (!node_set_connected(r.host, r.models[static_cast<std::size_t>(v)])) return fail("connected", "model is disconnected", v);
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v) {
            bool meet = intersects(r.models[static_cast<std::size_t>(u)], r.models[static_cast<std::size_t>(v)]);
            bool adj = g.adjacent(u, v);
            if (adj && !meet) return fail("edge", "adjacent vertices with disjoint models", u, v);
            if (!adj && meet) return fail("non-edge", "non-adjacent vertices with intersecting models", u, v);
        }
    return {};
}

Verdict verify_proper(const Graph& g, const Representation& r) {
    if (auto base = verify_represents(g, r); !base) return base;
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = 0; v < g.n(); ++v)
            if (u != v && is_subset(r.models[static_cast<std::size_t>(u)], r.models[static_cast<std::size_t>(v)]))
                return fail("containment", "model of the first vertex is contained in the second", u, v);
    return {};
}

std::optional<EscapeWitness> escapes(const Host& h, const std::vector<VertexSet>& vx, Vertex u, Vertex v) {
    for (const auto& ed : h.edges()) {
        for (int dir = 0; dir < 2; ++dir) {
            Node x = dir ? ed.v : ed.u, y = dir ? ed.u : ed.v;
            if (contains(vx[static_cast<std::size_t>(x)], u) && !contains(vx[static_cast<std::size_t>(y)], v)) return EscapeWitness{x, y};
        }
    }
    return std::nullopt;
}

std::optional<EscapeWitness> strongly_escapes(const Host& h, const std::vector<VertexSet>& vx, Vertex u, Vertex v) {
    for (const auto& ed : h.edges()) {
        for (int dir = 0; dir < 2; ++dir) {
            Node x = dir ? ed.v : ed.u, y = dir ? ed.u : ed.v;
            const auto& sx = vx[static_cast<std::size_t>(x)];
            if (contains(sx, u) && contains(sx, v) && !contains(vx[static_cast<std::size_t>(y)], v)) return EscapeWitness{x, y};
        }
    }
    return std::nullopt;
}

std::optional<EscapeWitness> escapes(const Representation& r, Vertex u, Vertex v) { return escapes(r.host, r.node_sets(), u, v); }

std::optional<EscapeWitness> strongly_escapes(const Representation& r, Vertex u, Vertex v) {
    return strongly_escapes(r.host, r.node_sets(), u, v);
}

Verdict verify_compact(const Graph& g, const Representation& r) {
    if (!r.host.is_tree()) return fail("host", "host is not a tree");
    if (auto base = verify_represents(g, r); !base) return base;
    auto vx = r.node_sets();
    for (Node x = 0; x < r.host.n(); ++x)
        if (r.host.degree(x) == 1 && !vx[static_cast<std::size_t>(x)].empty()) return fail("C1", "leaf node is not empty", x);
    std::vector<VertexSet> cliques;
    try {
        cliques = maximal_cliques(g);
    } catch (const NotChordal&) {
        return fail("C2", "graph is not chordal");
    }
    std::vector<char> used(cliques.size(), 0);
    for (Node x = 0; x < r.host.n(); ++x) {
        if (r.host.degree(x) == 1) continue;
        auto it = std::lower_bound(cliques.begin(), cliques.end(), vx[static_cast<std::size_t>(x)]);
        if (it == cliques.end() || *it != vx[static_cast<std::size_t>(x)]) return fail("C2", "non-leaf node set is not a maximal clique", x);
        auto idx = static_cast<std::size_t>(it - cliques.begin());
        if (used[idx]) return fail("C2", "maximal clique appears on two non-leaves", x);
        used[idx] = 1;
    }
    for (std::size_t i = 0; i < cliques.size(); ++i)
        if (!used[i]) return fail("C2", "maximal clique without a non-leaf", static_cast<int>(i));
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = 0; v < g.n(); ++v) {
            if (u == v) continue;
            bool meet = intersects(r.models[static_cast<std::size_t>(u)], r.models[static_cast<std::size_t>(v)]);
            bool ok = meet ? strongly_escapes(r.host, vx, u, v).has_value() : escapes(r.host, vx, u, v).has_value();
            if (!ok) return fail("C3", "first vertex does not escape the second", u, v);
        }
    return {};
}

std::vector<KComponent> components_K(const Graph& g, const Representation& r, Node y) {
    auto vx = r.node_sets();
    const auto& vy = vx[static_cast<std::size_t>(y)];
    VertexSet rest = set_difference(iota_set(g.n()), vy);
    auto sub = induced_subgraph(g, rest);
    std::vector<KComponent> out;
    for (const auto& comp : connected_components(sub.graph)) {
        KComponent k;
        for (Vertex v : comp) k.gamma.push_back(sub.new_to_old[static_cast<std::size_t>(v)]);
        k.gamma = normalized(k.gamma);
        k.neighborhood = open_neighborhood(g, k.gamma);
        for (Vertex v : k.gamma) k.model = set_union(k.model, r.models[static_cast<std::size_t>(v)]);
        out.push_back(std::move(k));
    }
    return out;
}

std::vector<VertexSet> twin_classes(const Graph& g) {
    std::map<VertexSet, VertexSet> by_closed;
    for (Vertex v = 0; v < g.n(); ++v) by_closed[closed_neighborhood(g, v)].push_back(v);
    std::vector<VertexSet> out;
    for (auto& [key, cls] : by_closed) out.push_back(cls);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Mutable host plus membership table used while rebuilding representations.
struct Workspace {
    std::vector<std::pair<Node, Node>> edges;
    std::vector<std::vector<char>> member;  // member[v][x]
    int nodes = 0;

    Node add_node() {
        for (auto& row : member) row.push_back(0);
        return nodes++;
    }
    bool has(Vertex v, Node x) const { return member[static_cast<std::size_t>(v)][static_cast<std::size_t>(x)] != 0; }
    void set(Vertex v, Node x) { member[static_cast<std::size_t>(v)][static_cast<std::size_t>(x)] = 1; }

    // Replaces edge e = (x, y) by the path x, z_1, ..., z_k, y and returns the z's.
    // Models containing both x and y receive every new node.
    std::vector<Node> subdivide(std::size_t e, Node x, int k) {
        Node y = edges[e].first == x ? edges[e].second : edges[e].first;
        std::vector<Node> zs;
        for (int i = 0; i < k; ++i) zs.push_back(add_node());
        if (zs.empty()) return zs;
        edges[e] = {x, zs.front()};
        for (std::size_t i = 0; i + 1 < zs.size(); ++i) edges.emplace_back(zs[i], zs[i + 1]);
        edges.emplace_back(zs.back(), y);
        for (std::size_t v = 0; v < member.size(); ++v)
            if (member[v][static_cast<std::size_t>(x)] && member[v][static_cast<std::size_t>(y)])
                for (Node z : zs) member[v][static_cast<std::size_t>(z)] = 1;
        return zs;
    }

    Representation build(RepMode mode) const {
        Representation r;
        r.host = Host(nodes);
        for (auto [a, b] : edges) r.host.add_edge(a, b);
        r.mode = mode;
        r.models.resize(member.size());
        for (std::size_t v = 0; v < member.size(); ++v)
            for (Node x = 0; x < nodes; ++x)
                if (member[v][static_cast<std::size_t>(x)]) r.models[v].push_back(x);
        return r;
    }
};

Workspace workspace_from(const Representation& r) {
    Workspace w;
    w.nodes = r.host.n();
    for (const auto& ed : r.host.edges()) w.edges.emplace_back(ed.u, ed.v);
    w.member.assign(r.models.size(), std::vector<char>(static_cast<std::size_t>(w.nodes), 0));
    for (std::size_t v = 0; v < r.models.size(); ++v)
        for (Node x : r.models[v]) w.member[v][static_cast<std::size_t>(x)] = 1;
    return w;
}

}  // namespace

Representation proper_from_compact(const Graph& g, const Representation& r) {
    if (auto verdict = verify_compact(g, r); !verdict) throw NotCompact(describe(*verdict.violation));
    Workspace w = workspace_from(r);
    int n = g.n();

    // Twins are set aside; each class keeps its smallest member.
    std::vector<Vertex> rep(static_cast<std::size_t>(n));
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (const auto& cls : twin_classes(g))
        for (Vertex v : cls) {
            rep[static_cast<std::size_t>(v)] = cls.front();
            if (v != cls.front()) removed[static_cast<std::size_t>(v)] = 1;
        }

    // Subdivide every edge once.
    std::size_t original_edges = w.edges.size();
    for (std::size_t e = 0; e < original_edges; ++e) w.subdivide(e, w.edges[e].first, 1);

    // Collect requests to extend: (u, v) with M_u inside M_v goes to the first edge where u escapes v strongly.
    auto model_subset = [&](Vertex u, Vertex v) {
        for (Node x = 0; x < w.nodes; ++x)
            if (w.has(u, x) && !w.has(v, x)) return false;
        return true;
    };
    std::map<std::pair<std::size_t, int>, std::vector<std::pair<Vertex, Vertex>>> requests;  // (edge, direction)
    for (Vertex u = 0; u < n; ++u) {
        if (removed[static_cast<std::size_t>(u)]) continue;
        for (Vertex v = 0; v < n; ++v) {
            if (v == u || removed[static_cast<std::size_t>(v)] || !model_subset(u, v)) continue;
            bool placed = false;
            for (std::size_t e = 0; e < w.edges.size() && !placed; ++e)
                for (int dir = 0; dir < 2 && !placed; ++dir) {
                    Node x = dir ? w.edges[e].second : w.edges[e].first;
                    Node y = dir ? w.edges[e].first : w.edges[e].second;
                    if (w.has(u, x) && w.has(v, x) && !w.has(v, y)) {
                        requests[{e, dir}].emplace_back(u, v);
                        placed = true;
                    }
                }
            if (!placed) throw NotCompact("no escape edge for a contained pair");
        }
    }

    for (const auto& [key, reqs] : requests) {
        auto [e, dir] = key;
        Node x = dir ? w.edges[e].second : w.edges[e].first;
        // Kahn's algorithm over the request digraph, ties broken by vertex id.
        VertexSet verts;
        for (auto [u, v] : reqs) {
            verts.push_back(u);
            verts.push_back(v);
        }
        verts = normalized(verts);
        std::map<Vertex, int> indeg;
        std::map<Vertex, VertexSet> out;
        for (Vertex v : verts) indeg[v] = 0;
        for (auto [u, v] : reqs) {
            out[u].push_back(v);
            ++indeg[v];
        }
        std::vector<Vertex> order;
        std::vector<Vertex> ready;
        for (Vertex v : verts)
            if (indeg[v] == 0) ready.push_back(v);
        while (!ready.empty()) {
            auto it = std::min_element(ready.begin(), ready.end());
            Vertex v = *it;
            ready.erase(it);
            order.push_back(v);
            for (Vertex t : out[v])
                if (--indeg[t] == 0) ready.push_back(t);
        }
        if (order.size() != verts.size()) throw NotCompact("request digraph has a cycle");
        int s = static_cast<int>(order.size()) - 1;
        auto zs = w.subdivide(e, x, s);
        // order = u_s, ..., u_0; u_i receives z_1..z_i.
        for (int pos = 0; pos <= s; ++pos) {
            int i = s - pos;
            for (int k = 0; k < i; ++k) w.set(order[static_cast<std::size_t>(pos)], zs[static_cast<std::size_t>(k)]);
        }
    }

    // Reintroduce twins in ascending id order.
    for (Vertex v = 0; v < n; ++v) {
        if (!removed[static_cast<std::size_t>(v)]) continue;
        Vertex u = rep[static_cast<std::size_t>(v)];
        w.member[static_cast<std::size_t>(v)] = w.member[static_cast<std::size_t>(u)];
        std::vector<std::pair<std::size_t, Node>> boundary;  // (edge, inner end)
        for (std::size_t e = 0; e < w.edges.size() && boundary.size() < 2; ++e) {
            auto [a, b] = w.edges[e];
            if (w.has(u, a) && !w.has(u, b)) boundary.emplace_back(e, a);
            else if (w.has(u, b) && !w.has(u, a)) boundary.emplace_back(e, b);
        }
        if (boundary.size() < 2) throw NotCompact("twin class lacks two escape edges");
        auto z = w.subdivide(boundary[0].first, boundary[0].second, 1);
        auto z2 = w.subdivide(boundary[1].first, boundary[1].second, 1);
        w.set(u, z[0]);
        w.set(v, z2[0]);
    }
    return w.build(RepMode::Proper);
}

Representation compact_from_proper(const Graph& g, const Representation& r) {
    if (!r.host.is_tree()) throw NotProper("host is not a tree");
    if (r.host.n() < 2) throw NotProper("host must have an edge");
    if (!is_connected(g) || g.n() == 0) throw NotProper("graph is not connected");
    if (auto verdict = verify_proper(g, r); !verdict) throw NotProper(describe(*verdict.violation));
    auto cliques = maximal_cliques(g);

    Workspace w = workspace_from(r);
    for (Node l : r.host.leaves()) {
        Node fresh = w.add_node();
        w.edges.emplace_back(l, fresh);
    }
    Representation cur = w.build(RepMode::Compact);
    for (;;) {
        const Host& h = cur.host;
        auto vx = cur.node_sets();
        Node target = -1;
        for (Node z = 0; z < h.n() && target < 0; ++z) {
            if (h.degree(z) == 1) continue;
            const auto& vz = vx[static_cast<std::size_t>(z)];
            bool maximal = std::binary_search(cliques.begin(), cliques.end(), vz);
            bool unique = true;
            for (Node y = 0; y < h.n() && unique; ++y)
                if (y != z && h.degree(y) != 1 && vx[static_cast<std::size_t>(y)] == vz) unique = false;
            if (!maximal || !unique) target = z;
        }
        if (target < 0) break;
        // Closest other non-leaf whose node set contains V_target; BFS visits by distance then id.
        std::vector<Node> parent(static_cast<std::size_t>(h.n()), -2);
        parent[static_cast<std::size_t>(target)] = -1;
        std::vector<Node> layer{target};
        Node zp = -1;
        while (!layer.empty() && zp < 0) {
            std::vector<Node> next;
            for (Node x : layer)
                for (Node y : h.neighbors(x))
                    if (parent[static_cast<std::size_t>(y)] == -2) {
                        parent[static_cast<std::size_t>(y)] = x;
                        next.push_back(y);
                    }
            std::sort(next.begin(), next.end());
            for (Node y : next)
                if (h.degree(y) != 1 && is_subset(vx[static_cast<std::size_t>(target)], vx[static_cast<std::size_t>(y)])) {
                    zp = y;
                    break;
                }
            layer = std::move(next);
        }
        if (zp < 0) throw std::logic_error("compact_from_proper: no superset node found");
        Node zbar = parent[static_cast<std::size_t>(zp)];
        EdgeId e = *h.find_edge(zbar, zp);
        std::vector<Node> map;
        Host nh = contract_edge(h, e, &map);
        Representation next;
        next.host = std::move(nh);
        next.mode = RepMode::Compact;
        for (const auto& m : cur.models) {
            NodeSet nm;
            for (Node x : m) nm.push_back(map[static_cast<std::size_t>(x)]);
            next.models.push_back(normalized(std::move(nm)));
        }
        cur = std::move(next);
    }
    if (auto verdict = verify_compact(g, cur); !verdict)
        throw std::logic_error("compact_from_proper produced a non-compact result: " + describe(*verdict.violation));
    return cur;
}

std::string describe(const Violation& v) {
    std::string out = v.condition + ": " + v.detail;
    if (v.a >= 0) out += " (" + std::to_string(v.a) + (v.b >= 0 ? ", " + std::to_string(v.b) : std::string()) + ")";
    return out;
}

std::string representation_to_json(const Graph& g, const Representation& r) {
    nlohmann::ordered_json j;
    j["host"]["nodes"] = r.host.n();
    j["host"]["edges"] = nlohmann::json::array();
    for (const auto& ed : r.host.edges()) j["host"]["edges"].push_back({ed.u, ed.v});
    j["models"] = nlohmann::ordered_json::object();
    for (Vertex v = 0; v < static_cast<Vertex>(r.models.size()); ++v) j["models"][g.label(v)] = r.models[static_cast<std::size_t>(v)];
    j["mode"] = r.mode == RepMode::Compact ? "compact" : "proper";
    return j.dump(2);
}

Representation representation_from_json(const Graph& g, const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // nlohmann reports a byte offset; translate it to line/column.
        std::size_t off = std::min<std::size_t>(e.byte, text.size());
        int line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < off; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(line, col, "malformed JSON");
    }
    Representation r;
    try {
        int nodes = j.at("host").at("nodes").get<int>();
        if (nodes < 1) throw ParseError(1, 1, "host needs at least one node");
        r.host = Host(nodes);
        for (const auto& e : j.at("host").at("edges")) {
            int a = e.at(0).get<int>(), b = e.at(1).get<int>();
            if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b) throw ParseError(1, 1, "bad host edge");
            r.host.add_edge(a, b);
        }
        std::map<std::string, Vertex> by_label;
        for (Vertex v = 0; v < g.n(); ++v) by_label[g.label(v)] = v;
        r.models.assign(static_cast<std::size_t>(g.n()), {});
        std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
        for (const auto& [key, nodes_json] : j.at("models").items()) {
            auto it = by_label.find(key);
            if (it == by_label.end()) throw ParseError(1, 1, "unknown vertex '" + key + "' in models");
            NodeSet m;
            for (const auto& x : nodes_json) {
                int node = x.get<int>();
                if (node < 0 || node >= nodes) throw ParseError(1, 1, "model of '" + key + "' uses unknown node");
                m.push_back(node);
            }
            r.models[static_cast<std::size_t>(it->second)] = normalized(std::move(m));
            seen[static_cast<std::size_t>(it->second)] = 1;
        }
        for (Vertex v = 0; v < g.n(); ++v)
            if (!seen[static_cast<std::size_t>(v)]) throw ParseError(1, 1, "missing model for vertex '" + g.label(v) + "'");
        std::string mode = j.value("mode", "proper");
        if (mode == "compact") r.mode = RepMode::Compact;
        else if (mode == "proper") r.mode = RepMode::Proper;
        else throw ParseError(1, 1, "unknown mode '" + mode + "'");
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, 1, std::string("representation JSON has the wrong shape: ") + e.what());
    }
    return r;
}

std::string representation_to_dot(const Graph& g, const Representation& r) {
    auto vx = r.node_sets();
    std::ostringstream out;
    out << "graph representation {\n  node [shape=box];\n";
    for (Node x = 0; x < r.host.n(); ++x) {
        out << "  n" << x << " [label=\"" << x;
        if (r.host.degree(x) != 1 || !vx[static_cast<std::size_t>(x)].empty()) {
            out << ": {";
            for (std::size_t i = 0; i < vx[static_cast<std::size_t>(x)].size(); ++i)
                out << (i ? "," : "") << g.label(vx[static_cast<std::size_t>(x)][i]);
            out << "}";
        }
        out << "\"];\n";
    }
    for (const auto& ed : r.host.edges()) out << "  n" << ed.u << " -- n" << ed.v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace ptg
