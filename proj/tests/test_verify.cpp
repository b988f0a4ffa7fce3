#include <doctest.h>

#include "degsplit/generators.hpp"
#include "degsplit/verify.hpp"
#include "test_helpers.hpp"

using namespace degsplit;
namespace v = degsplit::verify;

namespace {

Labeling label_all(const TypedMultiGraph& g, Label l) {
    Labeling lab(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        Label other = g.edge(e).type == EdgeType::C ? l : opposite(l);
        lab.set_both(e, l, other);
    }
    return lab;
}

}  // namespace

TEST_CASE("check_types") {
    auto g = TypedMultiGraph::build(2, {{0, 1, EdgeType::C}, {0, 1, EdgeType::O}});
    Labeling lab(2);
    lab.set_both(0, Label::R, Label::R);
    lab.set_both(1, Label::R, Label::B);
    CHECK(v::check_types(g, lab).pass);

    lab.set_both(1, Label::R, Label::R);  // O edge with equal halves
    auto verdict = v::check_types(g, lab);
    CHECK_FALSE(verdict.pass);
    CHECK(verdict.violations.size() == 1);
    CHECK(verdict.violations[0].id == 1);

    lab.set_both(0, Label::R, Label::B);  // C edge with differing halves
    lab.set_both(1, Label::R, Label::B);
    CHECK_FALSE(v::check_types(g, lab).pass);
}

TEST_CASE("check_eq1") {
    auto single = TypedMultiGraph::build(2, {{0, 1, EdgeType::C}});
    CHECK(v::check_eq1(single, label_all(single, Label::R)).pass);

    auto star = gen_star(4);
    auto all_red = label_all(star, Label::R);
    auto verdict = v::check_eq1(star, all_red);  // center d_R = 4, not in [1,3]
    CHECK_FALSE(verdict.pass);
    CHECK(verdict.violations[0].id == 0);

    auto c4 = gen_cycle(4);
    Labeling alt(4);
    for (int e = 0; e < 4; ++e)
        alt.set_both(e, e % 2 ? Label::R : Label::B, e % 2 ? Label::R : Label::B);
    CHECK(v::check_eq1(c4, alt).pass);
}

TEST_CASE("check_eq2") {
    auto tri = gen_cycle(3);
    Labeling two_red(3);
    two_red.set_both(0, Label::R, Label::R);
    two_red.set_both(1, Label::R, Label::R);
    two_red.set_both(2, Label::B, Label::B);
    CHECK(v::check_eq2(tri, two_red, v::RoundSide::Down).pass);
    CHECK_FALSE(v::check_eq2(tri, label_all(tri, Label::B), v::RoundSide::Down).pass);

    auto none = TypedMultiGraph::build(1, {});
    CHECK(v::check_eq2(none, Labeling(0), v::RoundSide::Down).pass);

    auto with_o = TypedMultiGraph::build(2, {{0, 1, EdgeType::O}});
    CHECK_THROWS_AS(v::check_eq2(with_o, Labeling(1), v::RoundSide::Down),
                    TypeError);
}

TEST_CASE("check_eq2 up is the color swap of down") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto g = testutil::random_multigraph(8, 10, 5, seed, false);
        auto n = g.edge_count();
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            Labeling lab(n);
            for (int e = 0; e < n; ++e) {
                Label l = (mask >> e) & 1 ? Label::R : Label::B;
                lab.set_both(e, l, l);
            }
            Labeling swapped = lab;
            swapped.swap_colors();
            CHECK(v::check_eq2(g, lab, v::RoundSide::Down).pass ==
                  v::check_eq2(g, swapped, v::RoundSide::Up).pass);
        }
        if (n > 12) break;
    }
}

TEST_CASE("check_lemma31") {
    auto k4 = gen_complete(4);
    auto all_red = label_all(k4, Label::R);
    CHECK_FALSE(v::check_lemma31(k4, all_red).pass);

    auto c5 = gen_cycle(5);
    CHECK(v::check_lemma31(c5, label_all(c5, Label::R)).pass);  // vacuous
}

TEST_CASE("pi allowed sets") {
    CHECK(v::pi_allowed_red(4, 1, 4) == std::vector<int>{1, 2});
    CHECK(v::pi_allowed_x(4, 1, 3) == std::vector<int>{1});
    CHECK(v::pi_allowed_red(4, 1, 3) == std::vector<int>{0, 1, 2});
    CHECK(v::pi_allowed_x(4, 1, 2) == std::vector<int>{1});
    CHECK(v::pi_allowed_red(4, 1, 2) == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(v::pi_allowed_x(4, 4, 2), RangeError);
    CHECK_THROWS_AS(v::pi_allowed_x(1, 0, 1), RangeError);
}

TEST_CASE("check_pi basics") {
    auto k4 = gen_complete(4);
    CHECK(v::check_pi(k4, 3, 0, label_all(k4, Label::B)).pass);
    CHECK_FALSE(v::check_pi(k4, 3, 1, label_all(k4, Label::R)).pass);

    // Perfect matching red on K4: d_R = 1 everywhere, valid for Pi(1).
    Labeling pm(6);
    for (int e = 0; e < 6; ++e) pm.set_both(e, Label::B, Label::B);
    for (int e = 0; e < 6; ++e) {
        auto [a, b] = std::pair(k4.edge(e).u, k4.edge(e).v);
        if ((a == 0 && b == 1) || (a == 2 && b == 3))
            pm.set_both(e, Label::R, Label::R);
    }
    CHECK(v::check_pi(k4, 3, 1, pm).pass);
    CHECK_THROWS_AS(v::check_pi(k4, 3, 5, pm), RangeError);
    CHECK_THROWS_AS(v::check_pi(k4, 2, 0, pm), RangeError);  // degree > delta
}

TEST_CASE("check_pi decomposition matches whole-vector search for small delta") {
    // Direct existential over (x_1, ..., x_{delta-1}) versus the per-degree
    // decomposition.
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        auto g = testutil::random_multigraph(9, 11, 4, seed, false);
        int delta = g.max_degree();
        if (delta < 2) continue;
        for (int y = 0; y <= delta - 1; ++y) {
            for (int trial = 0; trial < 40; ++trial) {
                Rng rng(seed * 100 + trial);
                Labeling lab(g.edge_count());
                for (int e = 0; e < g.edge_count(); ++e) {
                    Label l = rng.bernoulli(0.5) ? Label::R : Label::B;
                    lab.set_both(e, l, l);
                }
                bool decomposed = v::check_pi(g, delta, y, lab).pass;

                // Whole-vector route.
                std::vector<std::vector<int>> choices;
                for (int d = 1; d <= delta - 1; ++d)
                    choices.push_back(v::pi_allowed_x(delta, y, d));
                bool delta_ok = true;
                for (int x = 0; x < g.node_count(); ++x)
                    if (g.degree(x) == delta) {
                        int r = red_degree(g, lab, x);
                        delta_ok &= r == y || r == y + 1;
                    }
                bool whole = false;
                std::vector<std::size_t> idx(choices.size(), 0);
                while (true) {
                    bool ok = delta_ok;
                    for (int x = 0; x < g.node_count() && ok; ++x) {
                        int d = g.degree(x);
                        if (d >= 1 && d < delta) {
                            int xd = choices[d - 1][idx[d - 1]];
                            int r = red_degree(g, lab, x);
                            ok = r >= xd - 1 && r <= xd + 1;
                        }
                    }
                    whole |= ok;
                    std::size_t i = 0;
                    while (i < idx.size() && ++idx[i] == choices[i].size())
                        idx[i++] = 0;
                    if (i == idx.size()) break;
                }
                CHECK(decomposed == whole);
            }
        }
    }
}

TEST_CASE("check_sinkless and check_unbalanced basics") {
    auto k4 = gen_complete(4);
    Orientation toward0(6);
    for (int e = 0; e < 6; ++e) {
        // orient every edge toward node 0 when incident, else forward
        if (k4.edge(e).u == 0)
            toward0.set(e, Dir::Backward);
        else if (k4.edge(e).v == 0)
            toward0.set(e, Dir::Forward);
    }
    auto verdict = v::check_sinkless(k4, toward0);
    CHECK_FALSE(verdict.pass);  // node 0 is a degree-3 sink

    // rho1 = rho2 = 1/2 never fails: one of out/in is always <= d/2.
    v::UnbalancedThresholds t{0.5, 0.5, 0.0};
    CHECK(v::check_unbalanced(k4, toward0, t).pass);
    v::UnbalancedThresholds strict{0.0, 0.0, 0.0};
    CHECK_FALSE(v::check_unbalanced(k4, toward0, strict).pass);
}

TEST_CASE("brute force labeling") {
    SUBCASE("triangle eq2_down has exactly 3 satisfying colorings") {
        auto tri = gen_cycle(3);
        auto res = v::brute_force_labeling(tri, v::LabelingPredicate::Eq2Down);
        CHECK(res.sat);
        CHECK(v::check_eq2(tri, *res.witness, v::RoundSide::Down).pass);
        long long count = v::brute_force_labeling_count(
            tri, [](const TypedMultiGraph& g, const Labeling& l) {
                return v::check_eq2(g, l, v::RoundSide::Down).pass;
            });
        CHECK(count == 3);
    }
    SUBCASE("K4 pi(1) is satisfiable") {
        auto k4 = gen_complete(4);
        auto res = v::brute_force_labeling(k4, v::LabelingPredicate::Pi, 1);
        CHECK(res.sat);
        CHECK(v::check_pi(k4, 3, 1, *res.witness).pass);
    }
    SUBCASE("contradictory predicate is UNSAT") {
        auto single = TypedMultiGraph::build(2, {{0, 1, EdgeType::C}});
        auto res = v::brute_force_labeling(
            single, [](const TypedMultiGraph& g, const Labeling& l) {
                return red_degree(g, l, 0) == 0 && red_degree(g, l, 0) == 1;
            });
        CHECK_FALSE(res.sat);
    }
    SUBCASE("too large") {
        auto big = gen_complete(8);  // 28 edges
        CHECK_THROWS_AS(v::brute_force_labeling(big, v::LabelingPredicate::Eq1),
                        TooLargeError);
    }
}

TEST_CASE("brute force orientation") {
    SUBCASE("K5 with out<=0 or in<=0 is UNSAT") {
        auto k5 = gen_complete(5);
        auto res = v::brute_force_orientation(k5, 0.0, 0.0, 0.0);
        CHECK_FALSE(res.sat);
    }
    SUBCASE("C4 with out<=1 or in<=1 is SAT") {
        auto c4 = gen_cycle(4);
        auto res = v::brute_force_orientation(c4, 0.5, 0.5, 0.0);
        CHECK(res.sat);
    }
    SUBCASE("K4 with out<=1 or in<=1 regression fixture") {
        // Recorded result of the 2^6 enumeration: SAT. One witness is
        // 0->1, 0->2, 3->0, 1->2, 1->3, 2->3 (nodes 0,1 take the in-side,
        // nodes 2,3 the out-side).
        auto k4 = gen_complete(4);
        auto res = v::brute_force_orientation(k4, 1.0 / 3.0, 1.0 / 3.0, 0.0);
        CHECK(res.sat);
    }
}

TEST_CASE("ledger shape checker rejects tampering") {
    CostLedger led;
    led.add("split/halve[0]", UnitKind::BO, 4.0 * std::sqrt(2.0), 1, 1);
    led.add("split/extra[0]", UnitKind::SO, 0.0, 1, 2);
    led.add("split/extra[1]", UnitKind::SO, 0.0, 1, 2);
    led.add("split/lemma31", UnitKind::RS32, 0.0, 1, 2);
    led.add("split/lemma31", UnitKind::SO, 0.0, 1, 2);
    CHECK(v::check_ledger(led, 2, v::Pipeline::BalancedSplit).pass);

    CostLedger missing;  // same but without the BO entry
    missing.add("split/extra[0]", UnitKind::SO, 0.0, 1, 2);
    missing.add("split/extra[1]", UnitKind::SO, 0.0, 1, 2);
    missing.add("split/lemma31", UnitKind::RS32, 0.0, 1, 2);
    missing.add("split/lemma31", UnitKind::SO, 0.0, 1, 2);
    CHECK_FALSE(v::check_ledger(missing, 2, v::Pipeline::BalancedSplit).pass);
}
