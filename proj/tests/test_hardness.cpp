#include <doctest.h>

#include <random>

#include "ptg/hardness.hpp"
#include "ptg/oracle.hpp"

using namespace ptg;

namespace {

HeightOnePoset example_poset() {
    return parse_poset("min: p q\nmax: r s\nrel: p r\nrel: p s\nrel: q s\n");
}

IntervalOrder order_of(std::vector<Interval> iv) { return IntervalOrder{std::move(iv)}; }

Relation random_order(int n, std::mt19937_64& rng) {
    // Random relation compatible with the identity linear order, then transitively closed.
    Relation r(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) r[x][y] = rng() % 3 == 0;
    for (int k = 0; k < n; ++k)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (r[x][k] && r[k][y]) r[x][y] = 1;
    return r;
}

}  // namespace

TEST_CASE("the multigraph D") {
    Host d = graph_D();
    CHECK(d.n() == 4);
    CHECK(d.m() == 5);
    CHECK(d.degree(0) == 1);
    CHECK(d.degree(1) == 4);
    CHECK(d.degree(2) == 4);
    CHECK(d.degree(3) == 1);
    CHECK(d.multiplicity(1, 2) == 3);
}

TEST_CASE("gadget graph of a four element poset") {
    HeightOnePoset p = example_poset();
    Gadget g = gadget_graph(p);
    CHECK(g.graph.n() == 8);
    // p=0, q=1, r=2, s=3.
    for (Element a : {0, 1})
        for (Element b : {2, 3}) CHECK(g.graph.adjacent(a, b) == (a == 1 && b == 2));
    CHECK(g.graph.adjacent(0, 1));
    CHECK(g.graph.adjacent(2, 3));
    CHECK(g.graph.neighbors(g.v_min) == VertexSet{0, 1, g.u_min});
    CHECK(g.graph.neighbors(g.v_max) == VertexSet{2, 3, g.u_max});
    CHECK(g.graph.neighbors(g.u_min) == VertexSet{g.v_min});
    CHECK(g.graph.label(g.u_max) == "u_max");

    HeightOnePoset empty = parse_poset("min: a b\nmax: c d\n");
    Gadget e = gadget_graph(empty);
    for (Element a : {0, 1})
        for (Element b : {2, 3}) CHECK(e.graph.adjacent(a, b));
    HeightOnePoset full = parse_poset("min: a b\nmax: c d\nrel: a c\nrel: a d\nrel: b c\nrel: b d\n");
    Gadget f = gadget_graph(full);
    for (Element a : {0, 1})
        for (Element b : {2, 3}) CHECK_FALSE(f.graph.adjacent(a, b));
}

TEST_CASE("certificate checks") {
    HeightOnePoset chain = parse_poset("min: a\nmax: b\nrel: a b\n");
    IntervalOrder ab = order_of({{0, 0}, {1, 1}});
    CHECK(check_certificate(chain, ab, ab, ab));

    HeightOnePoset anti = parse_poset("min: a\nmax: b\n");
    IntervalOrder overlap = order_of({{0, 1}, {1, 2}});
    CHECK(check_certificate(anti, overlap, overlap, overlap));
    CHECK_FALSE(check_certificate(anti, ab, ab, ab));
    CHECK_THROWS_AS(check_certificate(chain, order_of({{0, 0}}), ab, ab), DomainMismatch);

    // Standard example: a_i below b_j exactly when i != j.
    HeightOnePoset s2 = parse_poset("min: a1 a2\nmax: b1 b2\nrel: a1 b2\nrel: a2 b1\n");
    auto cert = find_certificate(s2);
    REQUIRE(cert);
    CHECK(check_certificate(s2, *cert));
    Certificate3 broken = *cert;
    for (auto& iv : broken[1].intervals) iv = {0, 0};
    CHECK_FALSE(check_certificate(s2, broken));
}

TEST_CASE("interval orders are exactly the 2+2-free orders") {
    std::mt19937_64 rng(13);
    int interval = 0, other = 0;
    for (int iter = 0; iter < 2000; ++iter) {
        Relation r = random_order(1 + static_cast<int>(rng() % 7), rng);
        REQUIRE(is_strict_order(r));
        bool a = is_interval_order(r);
        CHECK(a == is_two_plus_two_free(r));
        auto rep = interval_representation(r);
        CHECK(rep.has_value() == a);
        if (rep) CHECK(relation_of(*rep) == r);
        (a ? interval : other)++;
    }
    CHECK(interval > 0);
    CHECK(other > 0);
}

TEST_CASE("interval dimension of small posets") {
    CHECK(interval_dimension(parse_poset("min: a\nmax: b\nrel: a b\n")) == 1);
    CHECK(interval_dimension(parse_poset("min: a1 a2\nmax: b1 b2\nrel: a1 b2\nrel: a2 b1\n")) == 2);
    HeightOnePoset big = parse_poset("min: a b c d\nmax: e f g\n");
    CHECK_THROWS_AS(interval_dimension(big), std::invalid_argument);
}

TEST_CASE("building from a certificate yields a proper representation on D") {
    for (int n = 1; n <= 5; ++n)
        for (const HeightOnePoset& p : height_one_posets(n)) {
            auto cert = find_certificate(p);
            REQUIRE(cert);
            Gadget g = gadget_graph(p);
            Representation r = d_representation_from_certificate(p, *cert);
            CHECK(verify_proper(g.graph, r));
            CHECK(is_re_subdivision(r.host, graph_D()));
            // No containment among the minimal elements and v_min.
            VertexSet side = p.minimal;
            side.push_back(g.v_min);
            for (Vertex u : side)
                for (Vertex v : side)
                    if (u != v) CHECK_FALSE(is_subset(r.models[static_cast<std::size_t>(u)], r.models[static_cast<std::size_t>(v)]));
            Certificate3 back = interval_orders_from_representation(p, r);
            CHECK(check_certificate(p, back));
        }
}

TEST_CASE("building rejects a wrong certificate") {
    HeightOnePoset p = example_poset();
    auto cert = find_certificate(p);
    REQUIRE(cert);
    Certificate3 wrong = *cert;
    for (auto& iv : wrong[0].intervals) iv = {0, 0};
    for (auto& iv : wrong[1].intervals) iv = {0, 0};
    for (auto& iv : wrong[2].intervals) iv = {0, 0};
    CHECK_THROWS_AS(d_representation_from_certificate(p, wrong), InvalidCertificate);
}

TEST_CASE("extraction from exhaustively found representations") {
    for (const char* text : {"min: a\nmax: b\nrel: a b\n", "min: a b\nmax: c\nrel: a c\n", "min: p q\nmax: r s\nrel: p r\nrel: p s\nrel: q s\n"}) {
        HeightOnePoset p = parse_poset(text);
        Gadget g = gadget_graph(p);
        auto r = oracle_recognize_proper(g.graph, graph_D(), 14);
        REQUIRE(r);
        CHECK(check_certificate(p, interval_orders_from_representation(p, *r)));
    }
}

TEST_CASE("extraction rejects foreign representations") {
    HeightOnePoset p = parse_poset("min: a\nmax: b\nrel: a b\n");
    Gadget g = gadget_graph(p);
    Representation r;
    r.host = path_tree(3);
    r.models.assign(static_cast<std::size_t>(g.graph.n()), NodeSet{0});
    CHECK_THROWS_AS(interval_orders_from_representation(p, r), NotAGadgetRepresentation);
}

TEST_CASE("poset text and certificate json round trips") {
    HeightOnePoset p = example_poset();
    HeightOnePoset q = parse_poset(write_poset(p));
    CHECK(q.names == p.names);
    CHECK(q.minimal == p.minimal);
    CHECK(q.maximal == p.maximal);
    CHECK(relation_of(q) == relation_of(p));

    auto cert = find_certificate(p);
    REQUIRE(cert);
    Certificate3 back = certificate_from_json(p, certificate_to_json(p, *cert));
    for (int j = 0; j < 3; ++j)
        for (int x = 0; x < p.size(); ++x) {
            CHECK(back[j].intervals[x].left == (*cert)[j].intervals[x].left);
            CHECK(back[j].intervals[x].right == (*cert)[j].intervals[x].right);
        }
}

TEST_CASE("poset parse errors") {
    CHECK_THROWS_AS(parse_poset("min: a\nmax: a\n"), ParseError);
    CHECK_THROWS_AS(parse_poset("min: a\nmax: b\nrel: b a\n"), ParseError);
    CHECK_THROWS_AS(parse_poset("min: a\nmax: b\nrel: a z\n"), ParseError);
    HeightOnePoset loose;
    loose.names = {"a", "b"};
    loose.minimal = {0};
    loose.maximal = {1};
    loose.relation = {{1, 0}};
    CHECK_THROWS_AS(validate(loose), InvalidPoset);
    try {
        parse_poset("min: a\nmax: b\nbogus a b\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 1);
    }
}

TEST_CASE("height one poset enumeration") {
    // Bipartite graphs with labeled sides up to permutations within each side.
    CHECK(height_one_posets(1).size() == 2);
    CHECK(height_one_posets(2).size() == 4);
    for (int n = 1; n <= 4; ++n)
        for (const HeightOnePoset& p : height_one_posets(n)) {
            CHECK(p.size() == n);
            CHECK_NOTHROW(validate(p));
        }
}
