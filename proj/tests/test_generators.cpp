#include <doctest.h>

#include "degsplit/generators.hpp"
#include "test_helpers.hpp"

using namespace degsplit;

TEST_CASE("structured generators") {
    auto k5 = gen_complete(5);
    CHECK(k5.edge_count() == 10);
    for (int v = 0; v < 5; ++v) CHECK(k5.degree(v) == 4);

    auto c4 = gen_cycle(4);
    CHECK(c4.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);

    auto p3 = gen_path(3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.degree(1) == 2);

    auto star = gen_star(5);
    CHECK(star.degree(0) == 5);
    CHECK(star.node_count() == 6);

    CHECK_THROWS_AS(gen_cycle(2), BadParamError);
}

TEST_CASE("full tree node count and degrees") {
    // 1 + 3 + 3*2 = 10 nodes for delta 3, depth 2.
    auto t = gen_full_tree(3, 2);
    CHECK(t.node_count() == 10);
    CHECK(t.degree(0) == 3);
    for (int v = 1; v <= 3; ++v) CHECK(t.degree(v) == 3);  // internal level
    for (int v = 4; v < 10; ++v) CHECK(t.degree(v) == 1);  // leaves
}

TEST_CASE("random regular graphs") {
    SUBCASE("parity error") {
        CHECK_THROWS_AS(gen_random_regular(3, 3, 1), ParityError);
    }
    SUBCASE("exact regularity, no self-loops") {
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            auto g = gen_random_regular(16, 5, seed);
            for (int v = 0; v < g.node_count(); ++v) CHECK(g.degree(v) == 5);
            for (const Edge& e : g.edges()) CHECK(e.u != e.v);
        }
        auto g43 = gen_random_regular(4, 3, 7);
        for (int v = 0; v < 4; ++v) CHECK(g43.degree(v) == 3);
    }
    SUBCASE("determinism") {
        auto a = gen_random_regular(100, 4, 7);
        auto b = gen_random_regular(100, 4, 7);
        REQUIRE(a.edge_count() == b.edge_count());
        for (int e = 0; e < a.edge_count(); ++e) {
            CHECK(a.edge(e).u == b.edge(e).u);
            CHECK(a.edge(e).v == b.edge(e).v);
        }
        auto c = gen_random_regular(100, 4, 8);
        bool same = a.edge_count() == c.edge_count();
        if (same) {
            bool identical = true;
            for (int e = 0; e < a.edge_count(); ++e)
                identical &= a.edge(e).u == c.edge(e).u && a.edge(e).v == c.edge(e).v;
            CHECK_FALSE(identical);
        }
    }
    SUBCASE("typed coin is deterministic too") {
        auto a = gen_random_regular(30, 4, 3, TypeAssignment::RandomCoin);
        auto b = gen_random_regular(30, 4, 3, TypeAssignment::RandomCoin);
        for (int e = 0; e < a.edge_count(); ++e)
            CHECK(a.edge(e).type == b.edge(e).type);
    }
}

TEST_CASE("girth") {
    CHECK(girth(gen_cycle(4)) == 4);
    CHECK(girth(gen_cycle(7)) == 7);
    CHECK_FALSE(girth(gen_full_tree(3, 2)).has_value());
    CHECK_FALSE(girth(gen_path(5)).has_value());
    auto parallel = TypedMultiGraph::build(
        3, {{0, 1, EdgeType::C}, {0, 1, EdgeType::C}, {1, 2, EdgeType::C}});
    CHECK(girth(parallel) == 2);
    CHECK(girth(gen_complete(4)) == 3);
}

TEST_CASE("split_nodes_epsilon") {
    SUBCASE("star center degree 8, eps 1/2") {
        auto star = gen_star(8);
        auto [h, back] = split_nodes_epsilon(star, 0.5);
        // Center split into parts of degree in [4, 8]; leaves untouched.
        int total_center = 0;
        for (int v = 0; v < h.node_count(); ++v) {
            if (back[v] == 0) {
                CHECK(h.degree(v) >= 4);
                CHECK(h.degree(v) <= 8);
                total_center += h.degree(v);
            } else {
                CHECK(h.degree(v) == 1);
            }
        }
        CHECK(total_center == 8);
        CHECK(h.edge_count() == star.edge_count());
    }
    SUBCASE("eps 1 gives chunks within [2, 4]") {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            auto g = testutil::random_multigraph(14, 30, 9, seed, false);
            auto [h, back] = split_nodes_epsilon(g, 1.0);
            std::vector<int> recovered(g.node_count(), 0);
            for (int v = 0; v < h.node_count(); ++v) {
                recovered[back[v]] += h.degree(v);
                if (g.degree(back[v]) >= 2) {
                    CHECK(h.degree(v) >= 2);
                    CHECK(h.degree(v) <= 4);
                }
            }
            for (int v = 0; v < g.node_count(); ++v)
                CHECK(recovered[v] == g.degree(v));
        }
    }
    SUBCASE("low-degree graphs unchanged") {
        auto p = gen_path(3);
        auto [h, back] = split_nodes_epsilon(p, 0.25);  // threshold ceil(8) = 8
        CHECK(h.node_count() == p.node_count());
        for (int v = 0; v < h.node_count(); ++v) CHECK(back[v] == v);
    }
    SUBCASE("types preserved") {
        auto g = testutil::random_multigraph(10, 24, 8, 3, true);
        auto [h, back] = split_nodes_epsilon(g, 0.5);
        for (int e = 0; e < g.edge_count(); ++e)
            CHECK(h.edge(e).type == g.edge(e).type);
    }
}
