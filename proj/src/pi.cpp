#include "degsplit/pi.hpp"

#include <cassert>

#include "degsplit/splitting.hpp"
#include "degsplit/verify.hpp"

namespace degsplit::pi {

std::vector<int> targets_allowed_x(int delta, int y, int d) {
    if (delta < 2) throw RangeError("pi needs delta >= 2");
    if (y < 0 || y > delta - 1) throw RangeError("pi needs 0 <= y <= delta-1");
    if (d < 1 || d > delta) throw RangeError("pi needs 1 <= d <= delta");
    if (d == delta) return {y};
    long long num = static_cast<long long>(d) * (2LL * y + 1);
    long long den = 2LL * delta;
    int alpha = static_cast<int>(num / den);
    long long r = num % den;
    if (r <= d) return {alpha};           // beta_d <= tau_d
    if (r >= den - d) return {alpha + 1};  // beta_d >= 1 - tau_d
    return {alpha, alpha + 1};
}

std::vector<int> targets_allowed_red(int delta, int y, int d) {
    if (d == delta) {
        if (delta < 2) throw RangeError("pi needs delta >= 2");
        if (y < 0 || y > delta - 1) throw RangeError("pi needs 0 <= y <= delta-1");
        return {y, y + 1};
    }
    std::vector<int> out;
    for (int x : targets_allowed_x(delta, y, d))
        for (int c : {x - 1, x, x + 1})
            if (out.empty() || out.back() != c) out.push_back(c);
    return out;
}

int normalize(long long y, int delta) {
    if (delta < 2) throw RangeError("pi needs delta >= 2");
    long long mod = delta - 1;
    long long r = y % mod;
    if (r < 0) r += mod;
    return static_cast<int>(r);
}

Labeling swap_colors(const Labeling& lab) {
    Labeling out = lab;
    out.swap_colors();
    return out;
}

namespace {

Labeling all_blue(const TypedMultiGraph& g) {
    Labeling lab(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e)
        lab.set_both(e, Label::B, Label::B);
    return lab;
}

void require_valid(const TypedMultiGraph& g, int delta, int y,
                   const Labeling& lab, const char* who) {
    if (!verify::check_pi(g, delta, y, lab).pass)
        throw InvalidInputError(std::string(who) + ": input labeling is not a valid Pi(" +
                                std::to_string(y) + ") solution");
}

// Exact-split the red subgraph; red survivors stay red, everything else blue.
Labeling split_red_subgraph(const TypedMultiGraph& g, const Labeling& work,
                            RoundMode mode, CostLedger& ledger,
                            const std::string& phase) {
    std::vector<int> red_ids;
    std::vector<EdgeSpec> specs;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (work.at(e, 0) == Label::R) {
            red_ids.push_back(e);
            specs.emplace_back(g.edge(e).u, g.edge(e).v, EdgeType::C);
        }
    }
    TypedMultiGraph red = TypedMultiGraph::build(g.node_count(), specs);
    Labeling sub = exact_split(red, mode, ledger, phase);

    Labeling out = all_blue(g);
    for (std::size_t j = 0; j < red_ids.size(); ++j)
        if (sub.at(static_cast<int>(j), 0) == Label::R)
            out.set_both(red_ids[j], Label::R, Label::R);
    return out;
}

}  // namespace

Labeling solve_base(const TypedMultiGraph& g, Base which, CostLedger& ledger,
                    const std::string& phase) {
    switch (which) {
        case Base::Zero:
            return all_blue(g);
        case Base::FloorHalf:
            return exact_split(g, RoundMode::Down, ledger, phase + "/exact");
        case Base::CeilHalfMinus1:
            return swap_colors(exact_split(g, RoundMode::Down, ledger, phase + "/exact"));
    }
    throw Error("unknown base");
}

Labeling halve_from_even(const TypedMultiGraph& g, const Labeling& input, int y,
                         CostLedger& ledger, const std::string& phase) {
    const int delta = g.max_degree();
    if (delta < 2) throw RangeError("halving needs delta >= 2");
    if (y < 0 || y > delta - 2) throw RangeError("halving needs 0 <= y <= delta-2");

    if (2 * y <= delta - 2) {
        require_valid(g, delta, 2 * y, input, "halve_from_even");
        return split_red_subgraph(g, input, RoundMode::Down, ledger, phase);
    }
    // 2y wraps: Pi(2y) = Pi(k). Swapping colors moves to the even problem
    // Pi(delta-1-k), which the round-down split halves; swapping back lands
    // on Pi(y).
    int k = 2 * y - (delta - 1);
    require_valid(g, delta, k, input, "halve_from_even");
    Labeling out =
        split_red_subgraph(g, swap_colors(input), RoundMode::Down, ledger, phase);
    out.swap_colors();
    return out;
}

Labeling halve_from_odd(const TypedMultiGraph& g, const Labeling& input, int y,
                        CostLedger& ledger, const std::string& phase) {
    const int delta = g.max_degree();
    if (delta < 2) throw RangeError("halving needs delta >= 2");
    if (y < 0 || y > delta - 2) throw RangeError("halving needs 0 <= y <= delta-2");

    if (2 * y <= delta - 3) {
        require_valid(g, delta, 2 * y + 1, input, "halve_from_odd");
        return split_red_subgraph(g, input, RoundMode::Up, ledger, phase);
    }
    if (2 * y >= delta) {
        // Pi(2y-1) = Pi(k); after the color swap the red set solves the odd
        // problem Pi(delta-1-k), and the round-up split brings it to Pi(y)
        // after the final swap.
        int k = 2 * y - delta;
        require_valid(g, delta, k, input, "halve_from_odd");
        Labeling out =
            split_red_subgraph(g, swap_colors(input), RoundMode::Up, ledger, phase);
        out.swap_colors();
        return out;
    }
    // The remaining y are the base values floor(delta/2) / ceil(delta/2)-1,
    // which the plan never reaches through this step.
    throw InvalidInputError("halve_from_odd: y = " + std::to_string(y) +
                            " is a base value; no odd halving applies");
}

namespace {

int ceil_log2(int x) {
    int k = 0;
    while ((1 << k) < x) ++k;
    return k;
}

bool is_base_residue(int res, int delta) {
    return res == 0 || res == delta / 2 || res == (delta + 1) / 2 - 1;
}

StepKind base_kind(int res, int delta) {
    if (res == 0) return StepKind::BaseZero;
    if (res == delta / 2) return StepKind::BaseFloorHalf;
    if (res == (delta + 1) / 2 - 1) return StepKind::BaseCeilHalfMinus1;
    throw Error("not a base residue");
}

}  // namespace

Plan plan(int delta, int y) {
    if (delta < 2) throw RangeError("pi needs delta >= 2");
    if (y < 0 || y > delta - 2) throw RangeError("plan needs 0 <= y <= delta-2");

    Plan p;
    p.delta = delta;
    p.target_y = y;

    // Forward pass: intervals of consecutive raw y-values, doubling until one
    // member normalizes into the base set.
    std::vector<std::pair<long long, long long>> ivs = {{y, y}};
    std::vector<bool> high;  // case used to expand level j to j+1
    auto has_base = [&](std::pair<long long, long long> iv) {
        for (long long v = iv.first; v <= iv.second; ++v)
            if (is_base_residue(normalize(v, delta), delta)) return true;
        return false;
    };
    while (!has_base(ivs.back())) {
        auto [a, b] = ivs.back();
        int low_cnt = 0, high_cnt = 0;
        for (long long v = a; v <= b; ++v) {
            int res = normalize(v, delta);
            if (2 * res <= delta - 3) ++low_cnt;
            if (2 * res >= delta + 1) ++high_cnt;
        }
        if (low_cnt + high_cnt != b - a + 1 || (low_cnt && high_cnt))
            throw Error("interval members straddle the halving cases");
        if (high_cnt)
            ivs.emplace_back(2 * a - 1, 2 * b);
        else
            ivs.emplace_back(2 * a, 2 * b + 1);
        high.push_back(high_cnt > 0);
        if (ivs.size() > 40) throw Error("plan construction runaway");
    }

    // Lowest base member of the final interval, then back-chain to y.
    long long cur = -1;
    for (long long v = ivs.back().first; v <= ivs.back().second; ++v) {
        if (is_base_residue(normalize(v, delta), delta)) {
            cur = v;
            break;
        }
    }
    p.steps.push_back({cur, base_kind(normalize(cur, delta), delta)});
    for (int lvl = static_cast<int>(ivs.size()) - 1; lvl >= 1; --lvl) {
        long long parent;
        StepKind kind;
        if (high[lvl - 1]) {
            parent = (cur + 1) / 2;  // cur in {2p-1, 2p}
            kind = cur % 2 != 0 ? StepKind::From2yMinus1 : StepKind::From2y;
        } else {
            parent = cur / 2;  // cur in {2p, 2p+1}
            kind = cur % 2 == 0 ? StepKind::From2y : StepKind::From2yPlus1;
        }
        if (parent < ivs[lvl - 1].first || parent > ivs[lvl - 1].second)
            throw Error("back-chained parent left its interval");
        p.steps.push_back({parent, kind});
        cur = parent;
    }
    if (cur != y) throw Error("plan did not end at the target");
    if (static_cast<int>(p.steps.size()) > ceil_log2(delta) + 2)
        throw Error("plan exceeded its length bound");
    return p;
}

SolveResult solve(const TypedMultiGraph& g, int y, CostLedger& ledger,
                  const std::string& phase) {
    if (!g.all_edges_of_type(EdgeType::C))
        throw TypeError("pi problems need every edge to be of type C");
    const int delta = g.max_degree();

    if (delta <= 1) {
        // Nodes of degree <= 1 carry no constraint; all blue works.
        if (y < 0 || y > std::max(delta - 1, 0))
            throw RangeError("pi needs 0 <= y <= delta-1");
        SolveResult res{all_blue(g), Plan{delta, y, {{0, StepKind::BaseZero}}}};
        return res;
    }
    if (y < 0 || y > delta - 1) throw RangeError("pi needs 0 <= y <= delta-1");

    if (y == delta - 1) {
        // Pi(delta-1) is the color swap of Pi(0): everything red.
        SolveResult res{swap_colors(all_blue(g)),
                        Plan{delta, y,
                             {{0, StepKind::BaseZero}, {y, StepKind::Swap}}}};
        return res;
    }

    Plan pl = plan(delta, y);
    Labeling lab;
    for (std::size_t i = 0; i < pl.steps.size(); ++i) {
        const Step& st = pl.steps[i];
        const std::string sp = phase + "/step" + std::to_string(i);
        int ny = normalize(st.y, delta);
        switch (st.kind) {
            case StepKind::BaseZero:
                lab = solve_base(g, Base::Zero, ledger, sp);
                break;
            case StepKind::BaseFloorHalf:
                lab = solve_base(g, Base::FloorHalf, ledger, sp);
                break;
            case StepKind::BaseCeilHalfMinus1:
                lab = solve_base(g, Base::CeilHalfMinus1, ledger, sp);
                break;
            case StepKind::From2y:
                lab = halve_from_even(g, lab, ny, ledger, sp);
                break;
            case StepKind::From2yPlus1:
            case StepKind::From2yMinus1:
                lab = halve_from_odd(g, lab, ny, ledger, sp);
                break;
            case StepKind::Swap:
                lab = swap_colors(lab);
                break;
        }
        assert(verify::check_pi(g, delta, ny, lab).pass);
    }
    return {std::move(lab), std::move(pl)};
}

std::string to_string(StepKind k) {
    switch (k) {
        case StepKind::BaseZero: return "base_zero";
        case StepKind::BaseFloorHalf: return "base_floor_half";
        case StepKind::BaseCeilHalfMinus1: return "base_ceil_half_minus1";
        case StepKind::From2y: return "from_2y";
        case StepKind::From2yPlus1: return "from_2y_plus_1";
        case StepKind::From2yMinus1: return "from_2y_minus_1";
        case StepKind::Swap: return "swap";
    }
    return "?";
}

}  // namespace degsplit::pi
