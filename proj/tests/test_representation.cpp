#include <doctest.h>

#include <algorithm>
#include <random>

#include "ptg/chordal.hpp"
#include "ptg/oracle.hpp"
#include "ptg/representation.hpp"

using namespace ptg;

namespace {

Graph claw() { return graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}}); }

// Spider: center c=0, arms c - a_i - b_i with a_i = i and b_i = i + 3.
Host spider() { return host_from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}}); }

Representation claw_on_spider() {
    Representation r;
    r.host = spider();
    r.models = {{0, 1, 2, 3}, {1, 4}, {2, 5}, {3, 6}};
    return r;
}

// Compact claw: x0=0, l1=1, m2=2, l2=3, m3=4, l3=5 with vertices v=0, u1=1, u2=2, u3=3.
Representation compact_claw() {
    Host h = host_from_edges(6, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}});
    return representation_from_node_sets(h, {{0, 1}, {}, {0, 2}, {}, {0, 3}, {}}, 4);
}

// P5 a..e as 0..4 on the path leaf - ab - bc - cd - de - leaf.
Representation compact_p5() {
    return representation_from_node_sets(path_tree(6), {{}, {0, 1}, {1, 2}, {2, 3}, {3, 4}, {}}, 5);
}

int non_leaves(const Host& h) {
    int c = 0;
    for (Node x = 0; x < h.n(); ++x) c += h.degree(x) > 1;
    return c;
}

// Every connected vertex subset has a connected model.
bool connected_sets_have_connected_models(const Graph& g, const Representation& r) {
    for (unsigned mask = 1; mask < (1u << g.n()); ++mask) {
        VertexSet s;
        for (Vertex v = 0; v < g.n(); ++v)
            if (mask >> v & 1) s.push_back(v);
        if (!is_connected(induced_subgraph(g, s).graph)) continue;
        NodeSet m;
        for (Vertex v : s) m = set_union(m, r.models[static_cast<std::size_t>(v)]);
        Host sub(static_cast<int>(m.size()));
        for (const auto& e : r.host.edges()) {
            auto iu = std::lower_bound(m.begin(), m.end(), e.u);
            auto iv = std::lower_bound(m.begin(), m.end(), e.v);
            if (iu != m.end() && *iu == e.u && iv != m.end() && *iv == e.v)
                sub.add_edge(static_cast<Node>(iu - m.begin()), static_cast<Node>(iv - m.begin()));
        }
        if (!sub.is_connected()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("verify represents on the spider") {
    Graph g = claw();
    Representation r = claw_on_spider();
    CHECK(verify_represents(g, r));

    Representation missing = r;
    missing.models[1] = {4};
    Verdict v = verify_represents(g, missing);
    CHECK_FALSE(v);
    REQUIRE(v.violation);
    CHECK(v.violation->condition == "edge");
    CHECK(v.violation->a == 0);
    CHECK(v.violation->b == 1);

    Representation split = r;
    split.models[1] = {1, 5};
    Verdict w = verify_represents(g, split);
    CHECK_FALSE(w);
    REQUIRE(w.violation);
    CHECK(w.violation->condition == "connected");
}

TEST_CASE("verify proper") {
    CHECK(verify_proper(claw(), claw_on_spider()));
    Representation nested;
    nested.host = path_tree(4);
    nested.models = {{1, 2, 3}, {2}};
    Verdict v = verify_proper(complete_graph(2), nested);
    CHECK_FALSE(v);
    REQUIRE(v.violation);
    CHECK(v.violation->condition == "containment");
}

TEST_CASE("escapes on the compact claw") {
    Representation r = compact_claw();
    auto vx = r.node_sets();
    // u escapes v at (x, y) when u is in V_x and v is not in V_y.
    auto valid = [&](Vertex u, Vertex v, Node x, Node y) {
        return r.host.find_edge(x, y).has_value() && contains(vx[static_cast<std::size_t>(x)], u) &&
               !contains(vx[static_cast<std::size_t>(y)], v);
    };
    auto e = escapes(r, 1, 0);
    REQUIRE(e);
    CHECK(e->x == 0);
    CHECK(e->y == 1);
    // Several edges witness that v escapes u1; (m2, l2) is one of them.
    auto f = escapes(r, 0, 1);
    REQUIRE(f);
    CHECK(valid(0, 1, f->x, f->y));
    CHECK(valid(0, 1, 2, 3));
    auto s = strongly_escapes(r, 0, 1);
    REQUIRE(s);
    CHECK(contains(vx[static_cast<std::size_t>(s->x)], 1));
    CHECK(valid(0, 1, s->x, s->y));
}

TEST_CASE("verify compact") {
    Graph g = claw();
    CHECK(verify_compact(g, compact_claw()));

    Host no_l1 = host_from_edges(5, {{0, 1}, {1, 2}, {0, 3}, {3, 4}});
    Representation broken = representation_from_node_sets(no_l1, {{0, 1}, {0, 2}, {}, {0, 3}, {}}, 4);
    Verdict v = verify_compact(g, broken);
    CHECK_FALSE(v);
    REQUIRE(v.violation);
    CHECK(v.violation->condition == "C3");

    Representation twice = representation_from_node_sets(path_tree(4), {{}, {0, 1}, {0, 1}, {}}, 2);
    Verdict w = verify_compact(complete_graph(2), twice);
    CHECK_FALSE(w);
    REQUIRE(w.violation);
    CHECK(w.violation->condition == "C2");

    Representation p5 = compact_p5();
    CHECK(verify_compact(path_graph(5), p5));
    CHECK(oracle_is_compact(path_graph(5), p5));
}

TEST_CASE("components of the clique complement") {
    auto ks = components_K(claw(), compact_claw(), 0);
    REQUIRE(ks.size() == 2);
    CHECK(ks[0].gamma == VertexSet{2});
    CHECK(ks[1].gamma == VertexSet{3});
    CHECK(ks[0].neighborhood == VertexSet{0});
    CHECK(ks[1].neighborhood == VertexSet{0});

    auto p5 = components_K(path_graph(5), compact_p5(), 2);
    REQUIRE(p5.size() == 2);
    CHECK(p5[0].gamma == VertexSet{0});
    CHECK(p5[1].gamma == VertexSet{3, 4});
}

TEST_CASE("proper from compact on small inputs") {
    Graph g = claw();
    Representation p = proper_from_compact(g, compact_claw());
    CHECK(verify_proper(g, p));
    CHECK(is_re_subdivision(p.host, compact_claw().host));

    Representation q = proper_from_compact(path_graph(5), compact_p5());
    CHECK(verify_proper(path_graph(5), q));
    CHECK(q.host.is_tree());
    CHECK(leaf_count(q.host) == 2);

    Representation twins = representation_from_node_sets(path_tree(3), {{}, {0, 1}, {}}, 2);
    REQUIRE(verify_compact(complete_graph(2), twins));
    Representation t = proper_from_compact(complete_graph(2), twins);
    CHECK(verify_proper(complete_graph(2), t));
    CHECK(twin_classes(complete_graph(2)) == std::vector<VertexSet>{{0, 1}});
}

TEST_CASE("compact from proper on small inputs") {
    Representation c = compact_from_proper(claw(), claw_on_spider());
    CHECK(verify_compact(claw(), c));
    CHECK(non_leaves(c.host) == 3);

    Representation interval;
    interval.host = path_tree(8);
    interval.models = {{0, 1}, {1, 2, 3}, {3, 4}, {4, 5, 6}, {6, 7}};
    REQUIRE(verify_proper(path_graph(5), interval));
    Representation p5 = compact_from_proper(path_graph(5), interval);
    CHECK(verify_compact(path_graph(5), p5));
    CHECK(non_leaves(p5.host) == 4);
}

TEST_CASE("compact representations round trip through proper form") {
    HostTree claw_tree = star_tree(3);
    for (const Graph& g : chordal_corpus(6)) {
        for (const HostTree& t : {path_tree(2), claw_tree}) {
            auto reps = oracle_all_compact(g, t, 12, 4);
            for (const Representation& r : reps) {
                REQUIRE(verify_compact(g, r));
                Representation p = proper_from_compact(g, r);
                CHECK(verify_proper(g, p));
                CHECK(is_re_subdivision(p.host, t));
                CHECK(connected_sets_have_connected_models(g, p));
                Representation back = compact_from_proper(g, p);
                CHECK(verify_compact(g, back));
                auto a = r.node_sets(), b = back.node_sets();
                std::erase_if(a, [](const VertexSet& s) { return s.empty(); });
                std::erase_if(b, [](const VertexSet& s) { return s.empty(); });
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                CHECK(a == b);
            }
        }
    }
}

TEST_CASE("compact node sets differ and tree edges share a vertex") {
    for (const Graph& g : chordal_corpus(6)) {
        for (const Representation& r : oracle_all_compact(g, star_tree(3), 12, 4)) {
            auto vx = r.node_sets();
            for (Node x = 0; x < r.host.n(); ++x)
                for (Node y = 0; y < r.host.n(); ++y) {
                    if (x == y || r.host.degree(x) < 2 || r.host.degree(y) < 2) continue;
                    CHECK_FALSE(set_difference(vx[static_cast<std::size_t>(x)], vx[static_cast<std::size_t>(y)]).empty());
                }
            for (const auto& e : r.host.edges())
                if (r.host.degree(e.u) > 1 && r.host.degree(e.v) > 1)
                    CHECK(intersects(vx[static_cast<std::size_t>(e.u)], vx[static_cast<std::size_t>(e.v)]));
        }
    }
}

TEST_CASE("escape equals disjointness or strong escape under empty leaves") {
    for (const Graph& g : chordal_corpus(6)) {
        for (const Representation& r : oracle_all_compact(g, star_tree(3), 12, 4)) {
            for (Vertex u = 0; u < g.n(); ++u)
                for (Vertex v = 0; v < g.n(); ++v) {
                    if (u == v) continue;
                    bool disjoint = !intersects(r.models[static_cast<std::size_t>(u)], r.models[static_cast<std::size_t>(v)]);
                    CHECK(escapes(r, u, v).has_value() == (disjoint || strongly_escapes(r, u, v).has_value()));
                }
        }
    }
}

TEST_CASE("representation json round trip") {
    Graph g = claw();
    Representation r = compact_claw();
    Representation back = representation_from_json(g, representation_to_json(g, r));
    CHECK(back.models == r.models);
    CHECK(back.mode == r.mode);
    CHECK(back.host.m() == r.host.m());
    CHECK(verify_compact(g, back));
    CHECK_THROWS(representation_from_json(g, "{\"host\": 3}"));
    CHECK(representation_to_dot(g, r).find("graph") != std::string::npos);
}
