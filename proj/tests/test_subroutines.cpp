#include <doctest.h>

#include <queue>

#include "degsplit/generators.hpp"
#include "degsplit/subroutines.hpp"
#include "degsplit/verify.hpp"
#include "test_helpers.hpp"

using namespace degsplit;

TEST_CASE("sinkless orientation") {
    CostLedger led;
    SUBCASE("cycle is vacuous but consistent") {
        auto c3 = gen_cycle(3);
        auto o = sinkless_orientation(c3, led);
        CHECK(verify::check_sinkless(c3, o).pass);
    }
    SUBCASE("K4: all nodes get an out-edge") {
        auto k4 = gen_complete(4);
        auto o = sinkless_orientation(k4, led);
        for (int v = 0; v < 4; ++v) CHECK(out_degree(k4, o, v) >= 1);
    }
    SUBCASE("star center degree 5") {
        auto s = gen_star(5);
        auto o = sinkless_orientation(s, led);
        CHECK(out_degree(s, o, 0) >= 1);
    }
    SUBCASE("random graphs, including trees and parallel edges") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            auto g = testutil::random_multigraph(24, 40, 7, seed, true);
            auto o = sinkless_orientation(g, led);
            auto verdict = verify::check_sinkless(g, o);
            CHECK(verdict.pass);
        }
        auto tree = gen_full_tree(3, 3);
        auto o = sinkless_orientation(tree, led);
        CHECK(verify::check_sinkless(tree, o).pass);
    }
    SUBCASE("appends one SO entry per call") {
        CostLedger fresh;
        sinkless_orientation(gen_cycle(3), fresh);
        CHECK(fresh.size() == 1);
        CHECK(fresh.entries()[0].unit == UnitKind::SO);
    }
}

TEST_CASE("balanced orientation") {
    CostLedger led;
    SUBCASE("C4 exactly balanced") {
        auto c4 = gen_cycle(4);
        auto o = balanced_orientation(c4, led);
        for (int v = 0; v < 4; ++v) {
            CHECK(out_degree(c4, o, v) == 1);
            CHECK(in_degree(c4, o, v) == 1);
        }
    }
    SUBCASE("path middle node balanced") {
        auto p = gen_path(3);
        auto o = balanced_orientation(p, led);
        CHECK(out_degree(p, o, 1) == 1);
        CHECK(in_degree(p, o, 1) == 1);
    }
    SUBCASE("star(4) center gets 2/2") {
        auto s = gen_star(4);
        auto o = balanced_orientation(s, led);
        CHECK(out_degree(s, o, 0) == 2);
        CHECK(in_degree(s, o, 0) == 2);
    }
    SUBCASE("discrepancy <= 1 everywhere, equality at even degrees") {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            auto g = testutil::random_multigraph(30, 70, 9, seed, true);
            auto o = balanced_orientation(g, led);
            CHECK(verify::check_balanced(g, o).pass);
        }
    }
    SUBCASE("ledger records BO with the max degree") {
        CostLedger fresh;
        balanced_orientation(gen_complete(5), fresh);
        REQUIRE(fresh.size() == 1);
        CHECK(fresh.entries()[0].unit == UnitKind::BO);
        CHECK(fresh.entries()[0].param == doctest::Approx(4.0));
    }
}

TEST_CASE("eps balanced orientation logs BO(1/eps)") {
    auto k5 = gen_complete(5);
    CostLedger led;
    auto o = eps_balanced_orientation(k5, 0.1, led);
    REQUIRE(led.size() == 1);
    CHECK(led.entries()[0].unit == UnitKind::BO);
    CHECK(led.entries()[0].param == doctest::Approx(10.0));
    // K5 is 4-regular: outdeg 2 >= 0.9 * 2 - 1 everywhere.
    for (int v = 0; v < 5; ++v) CHECK(out_degree(k5, o, v) == 2);
}

TEST_CASE("outdeg2 orientation") {
    CostLedger led;
    SUBCASE("K6: outdegrees land in {2, 3}") {
        auto k6 = gen_complete(6);
        auto o = outdeg2_orientation(k6, led);
        for (int v = 0; v < 6; ++v) {
            CHECK(out_degree(k6, o, v) >= 2);
            CHECK(out_degree(k6, o, v) <= 3);
        }
    }
    SUBCASE("star(6) center") {
        auto s = gen_star(6);
        auto o = outdeg2_orientation(s, led);
        CHECK(out_degree(s, o, 0) == 3);
    }
    SUBCASE("C4 vacuous") {
        auto c4 = gen_cycle(4);
        auto o = outdeg2_orientation(c4, led);
        CHECK(o.edge_count() == 4);
    }
    SUBCASE("degree >= 5 nodes on random graphs") {
        for (std::uint64_t seed = 0; seed < 15; ++seed) {
            auto g = testutil::random_multigraph(20, 60, 11, seed, false);
            auto o = outdeg2_orientation(g, led);
            for (int v = 0; v < g.node_count(); ++v)
                if (g.degree(v) >= 5) CHECK(out_degree(g, o, v) >= 2);
        }
    }
    SUBCASE("logs SO") {
        CostLedger fresh;
        outdeg2_orientation(gen_complete(6), fresh);
        REQUIRE(fresh.size() == 1);
        CHECK(fresh.entries()[0].unit == UnitKind::SO);
    }
}

TEST_CASE("maximal matching") {
    CostLedger led;
    SUBCASE("single edge") {
        auto g = TypedMultiGraph::build(2, {{0, 1, EdgeType::C}});
        CHECK(maximal_matching(g, led) == std::vector<int>{0});
    }
    SUBCASE("path of 3 edges picks 0 and 2") {
        auto p = gen_path(4);
        CHECK(maximal_matching(p, led) == std::vector<int>{0, 2});
    }
    SUBCASE("C4 gives two disjoint edges") {
        auto c4 = gen_cycle(4);
        auto m = maximal_matching(c4, led);
        CHECK(m == std::vector<int>{0, 2});
    }
    SUBCASE("matching and maximality on random graphs") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            auto g = testutil::random_multigraph(18, 40, 8, seed, false);
            auto m = maximal_matching(g, led);
            std::vector<char> covered(g.node_count(), 0);
            for (int e : m) {
                CHECK_FALSE(covered[g.edge(e).u]);
                CHECK_FALSE(covered[g.edge(e).v]);
                covered[g.edge(e).u] = covered[g.edge(e).v] = 1;
            }
            for (int e = 0; e < g.edge_count(); ++e)
                CHECK((covered[g.edge(e).u] || covered[g.edge(e).v]));
        }
    }
}

namespace {

std::vector<int> bfs_distances(const TypedMultiGraph& g, int s) {
    std::vector<int> dist(g.node_count(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (const HalfEdge& h : g.incident(x)) {
            int y = g.other_endpoint(h.edge, x);
            if (dist[y] == -1) {
                dist[y] = dist[x] + 1;
                q.push(y);
            }
        }
    }
    return dist;
}

}  // namespace

TEST_CASE("(3,2) ruling set") {
    CostLedger led;
    SUBCASE("single node") {
        auto g = TypedMultiGraph::build(1, {});
        CHECK(ruling_set_32(g, led) == std::vector<int>{0});
    }
    SUBCASE("path 0-1-2-3-4 greedy gives {0, 3}") {
        auto p = gen_path(5);
        CHECK(ruling_set_32(p, led) == std::vector<int>{0, 3});
    }
    SUBCASE("triangle keeps exactly one node") {
        auto c3 = gen_cycle(3);
        CHECK(ruling_set_32(c3, led).size() == 1);
    }
    SUBCASE("distance conditions on random graphs") {
        for (std::uint64_t seed = 0; seed < 15; ++seed) {
            auto g = testutil::random_multigraph(22, 35, 6, seed, false);
            auto s = ruling_set_32(g, led);
            std::vector<char> member(g.node_count(), 0);
            for (int v : s) member[v] = 1;
            std::vector<int> best(g.node_count(), 1 << 20);
            for (int v : s) {
                auto dist = bfs_distances(g, v);
                for (int u : s)
                    if (u != v && dist[u] != -1) CHECK(dist[u] >= 3);
                for (int x = 0; x < g.node_count(); ++x)
                    if (dist[x] != -1) best[x] = std::min(best[x], dist[x]);
            }
            for (int x = 0; x < g.node_count(); ++x) CHECK(best[x] <= 2);
        }
    }
}
