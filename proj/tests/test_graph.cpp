#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qspectra/graph.hpp"

using namespace qspectra;

namespace {

std::size_t offset_of(const std::string& s) {
    try {
        parse_graph6(s);
    } catch (const ParseError& e) {
        return e.offset();
    }
    FAIL("expected ParseError for: " + s);
    return static_cast<std::size_t>(-1);
}

} // namespace

TEST_CASE("basic graph construction") {
    Graph g(4);
    REQUIRE(g.order() == 4);
    REQUIRE(g.edge_count() == 0);
    g.add_edge(0, 1);
    g.add_edge(2, 1);
    REQUIRE(g.has_edge(1, 0));
    REQUIRE(g.has_edge(1, 2));
    REQUIRE_FALSE(g.has_edge(0, 2));
    REQUIRE(g.degree(1) == 2);
    REQUIRE(g.degree(3) == 0);
    REQUIRE(g.edge_count() == 2);
    REQUIRE(g.degree_sequence() == std::vector<int>{2, 1, 1, 0});

    REQUIRE_THROWS_AS(g.add_edge(1, 1), DomainError);
    REQUIRE_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
    REQUIRE_THROWS_AS(Graph(65), SizeError);
    REQUIRE_NOTHROW(Graph(64));
}

TEST_CASE("builders") {
    REQUIRE(path_graph(1).edge_count() == 0);
    REQUIRE(path_graph(5).edge_count() == 4);
    REQUIRE(cycle_graph(5).degree_sequence() == std::vector<int>(5, 2));
    REQUIRE(complete_graph(6).edge_count() == 15);
    REQUIRE(star_graph(4).degree_sequence() == std::vector<int>{3, 1, 1, 1});
    REQUIRE_THROWS_AS(cycle_graph(2), DomainError);

    Graph u = disjoint_union(complete_graph(3), Graph(1));
    REQUIRE(u.order() == 4);
    REQUIRE(u.edge_count() == 3);
    REQUIRE(u.degree(3) == 0);
}

TEST_CASE("complement") {
    Graph k5 = complete_graph(5);
    REQUIRE(k5.complement().edge_count() == 0);
    REQUIRE(k5.complement().complement() == k5);

    Graph c5 = cycle_graph(5);
    Graph cc = c5.complement();
    REQUIRE(cc.edge_count() == 5);
    REQUIRE(cc.degree_sequence() == std::vector<int>(5, 2));

    Graph full64 = complete_graph(64);
    REQUIRE(full64.complement().edge_count() == 0);
}

TEST_CASE("induced subgraph") {
    Graph c5 = cycle_graph(5);
    Graph h = c5.induced({0, 1, 2});
    REQUIRE(h.order() == 3);
    REQUIRE(h.has_edge(0, 1));
    REQUIRE(h.has_edge(1, 2));
    REQUIRE_FALSE(h.has_edge(0, 2));
}

TEST_CASE("graph6 decode of known strings") {
    Graph k1 = parse_graph6("@");
    REQUIRE(k1.order() == 1);

    Graph k2 = parse_graph6("A_");
    REQUIRE(k2.order() == 2);
    REQUIRE(k2.has_edge(0, 1));

    Graph c3 = parse_graph6("Bw");
    REQUIRE(c3 == cycle_graph(3));

    Graph claw = parse_graph6("Cs");
    REQUIRE(claw == star_graph(4));

    Graph k3k1 = parse_graph6("Cw");
    REQUIRE(k3k1 == disjoint_union(complete_graph(3), Graph(1)));

    REQUIRE(parse_graph6(">>graph6<<A_") == k2);
}

TEST_CASE("graph6 encode") {
    REQUIRE(to_graph6(parse_graph6("Cs")) == "Cs");
    REQUIRE(to_graph6(complete_graph(3)) == "Bw");
    REQUIRE(to_graph6(Graph(1)) == "@");
    REQUIRE_THROWS_AS(to_graph6(Graph(0)), SizeError);
    REQUIRE_THROWS_AS(to_graph6(Graph(63)), SizeError);
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937 rng(20260817);
    for (int n = 1; n <= 20; ++n) {
        for (int rep = 0; rep < 25; ++rep) {
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() & 1) g.add_edge(u, v);
            REQUIRE(parse_graph6(to_graph6(g)) == g);
        }
    }
}

TEST_CASE("graph6 strict errors carry byte offsets") {
    REQUIRE(offset_of("") == 0);
    REQUIRE(offset_of("?") == 0);
    REQUIRE(offset_of("~~") == 0);
    REQUIRE(offset_of("C") == 1);
    REQUIRE(offset_of("Cst") == 2);
    REQUIRE(offset_of("B ") == 1);
    REQUIRE(offset_of("Ao") == 1);
    REQUIRE(offset_of(">>graph6<<C") == 11);
    REQUIRE(offset_of(">>graph6<<") == 10);
}

TEST_CASE("rooted product shape") {
    Graph prod = rooted_product(cycle_graph(3), 2);
    REQUIRE(prod.order() == 6);
    REQUIRE(prod.degree_sequence() == std::vector<int>{3, 3, 3, 1, 1, 1});
    REQUIRE(prod.has_edge(rooted_index(0, 0, 3), rooted_index(0, 1, 3)));
    REQUIRE(prod.has_edge(0, 1));
    REQUIRE_FALSE(prod.has_edge(3, 4));

    Graph same = rooted_product(cycle_graph(3), 1);
    REQUIRE(same == cycle_graph(3));

    Graph p4 = rooted_product(path_graph(2), 2);
    REQUIRE(p4.order() == 4);
    REQUIRE(p4.degree_sequence() == std::vector<int>{2, 2, 1, 1});
    REQUIRE(p4.edge_count() == 3);

    REQUIRE_THROWS_AS(rooted_product(path_graph(9), 8), SizeError);
    REQUIRE_THROWS_AS(rooted_product(path_graph(3), 0), DomainError);
    REQUIRE_THROWS_AS(rooted_product(Graph(0), 2), DomainError);
}

TEST_CASE("rooted tower") {
    Graph t0 = rooted_tower(cycle_graph(3), 2, 0);
    REQUIRE(t0 == cycle_graph(3));

    Graph t2 = rooted_tower(path_graph(2), 2, 2);
    REQUIRE(t2.order() == 8);
    REQUIRE(t2.edge_count() == 7);

    Graph t1 = rooted_tower(cycle_graph(4), 3, 1);
    REQUIRE(t1 == rooted_product(cycle_graph(4), 3));
}
