#include "degsplit/verify.hpp"

#include <algorithm>
#include <cmath>

namespace degsplit::verify {

namespace {

int ceil_log2(int x) {
    int k = 0;
    while ((1 << k) < x) ++k;
    return k;
}

std::string set_to_string(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

}  // namespace

std::string Verdict::to_json_lines() const {
    std::string out;
    for (const auto& v : violations)
        out += "{\"kind\":\"" + v.kind + "\",\"id\":" + std::to_string(v.id) +
               ",\"observed\":" + std::to_string(v.observed) + ",\"allowed\":\"" +
               v.allowed + "\"}\n";
    return out;
}

Verdict check_types(const TypedMultiGraph& g, const Labeling& lab) {
    Verdict v;
    for (int e = 0; e < g.edge_count(); ++e) {
        Label a = lab.at(e, 0), b = lab.at(e, 1);
        if (a == Label::Unset || b == Label::Unset) {
            v.fail("edge", e, 0, "total labeling");
            continue;
        }
        bool ok = g.edge(e).type == EdgeType::C ? a == b : a != b;
        if (!ok)
            v.fail("edge", e, a == Label::R ? 0 : 1,
                   g.edge(e).type == EdgeType::C ? "equal halves" : "opposite halves");
    }
    return v;
}

Verdict check_eq1(const TypedMultiGraph& g, const Labeling& lab) {
    Verdict v;
    for (int x = 0; x < g.node_count(); ++x) {
        double lo = g.degree(x) / 2.0 - 1.0, hi = g.degree(x) / 2.0 + 1.0;
        int r = red_degree(g, lab, x), b = blue_degree(g, lab, x);
        if (r < lo || r > hi)
            v.fail("node", x, r, "[d/2-1, d/2+1] red");
        if (b < lo || b > hi)
            v.fail("node", x, b, "[d/2-1, d/2+1] blue");
    }
    return v;
}

Verdict check_eq2(const TypedMultiGraph& g, const Labeling& lab, RoundSide side) {
    if (!g.all_edges_of_type(EdgeType::C))
        throw TypeError("check_eq2 requires every edge to be of type C");
    Verdict v;
    for (int x = 0; x < g.node_count(); ++x) {
        int d = g.degree(x);
        int r = red_degree(g, lab, x), b = blue_degree(g, lab, x);
        if (side == RoundSide::Up) std::swap(r, b);
        // Down shape: d_R in {floor(d/2), floor(d/2)+1},
        //             d_B in {ceil(d/2)-1, ceil(d/2)}.
        if (r != d / 2 && r != d / 2 + 1)
            v.fail("node", x, side == RoundSide::Up ? b : r,
                   "{floor(d/2), floor(d/2)+1}");
        int c = (d + 1) / 2;
        if (b != c - 1 && b != c)
            v.fail("node", x, side == RoundSide::Up ? r : b,
                   "{ceil(d/2)-1, ceil(d/2)}");
    }
    return v;
}

Verdict check_lemma31(const TypedMultiGraph& g, const Labeling& lab) {
    Verdict v;
    for (int x = 0; x < g.node_count(); ++x) {
        if (g.degree(x) < 3) continue;
        int r = red_degree(g, lab, x), b = blue_degree(g, lab, x);
        if (r < 1) v.fail("node", x, r, "d_R >= 1");
        if (b < 1) v.fail("node", x, b, "d_B >= 1");
    }
    return v;
}

std::vector<int> pi_allowed_x(int delta, int y, int d) {
    if (delta < 2) throw RangeError("pi needs delta >= 2");
    if (y < 0 || y > delta - 1) throw RangeError("pi needs 0 <= y <= delta-1");
    if (d < 1 || d > delta) throw RangeError("pi needs 1 <= d <= delta");
    if (d == delta) return {y};
    // x~_d = d(2y+1) / (2 delta); beta <= tau iff r <= d, beta >= 1-tau iff
    // r >= 2 delta - d, where r is the remainder.
    long long num = static_cast<long long>(d) * (2LL * y + 1);
    long long den = 2LL * delta;
    int alpha = static_cast<int>(num / den);
    long long r = num % den;
    if (r <= d) return {alpha};
    if (r >= den - d) return {alpha + 1};
    return {alpha, alpha + 1};
}

std::vector<int> pi_allowed_red(int delta, int y, int d) {
    if (d == delta) {
        if (delta < 2) throw RangeError("pi needs delta >= 2");
        if (y < 0 || y > delta - 1) throw RangeError("pi needs 0 <= y <= delta-1");
        return {y, y + 1};
    }
    std::vector<int> out;
    for (int x : pi_allowed_x(delta, y, d))
        for (int c : {x - 1, x, x + 1})
            if (out.empty() || out.back() != c) out.push_back(c);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PiVerdict check_pi(const TypedMultiGraph& g, int delta, int y, const Labeling& lab) {
    if (delta < 2) throw RangeError("pi needs delta >= 2");
    if (y < 0 || y > delta - 1) throw RangeError("pi needs 0 <= y <= delta-1");
    if (g.max_degree() > delta)
        throw RangeError("graph max degree exceeds delta");
    if (!g.all_edges_of_type(EdgeType::C))
        throw TypeError("check_pi requires every edge to be of type C");

    PiVerdict v;
    std::map<int, std::vector<int>> reds_by_degree;
    for (int x = 0; x < g.node_count(); ++x) {
        int d = g.degree(x);
        int r = red_degree(g, lab, x);
        if (d == delta) {
            if (r != y && r != y + 1)
                v.fail("node", x, r, "{" + std::to_string(y) + "," +
                                         std::to_string(y + 1) + "}");
        } else if (d >= 1) {
            reds_by_degree[d].push_back(r);
        }
    }
    // The existential over the vector (x_1, ..., x_{delta-1}) decomposes per
    // degree because the coordinates are independent.
    for (auto& [d, reds] : reds_by_degree) {
        std::vector<int> surviving;
        for (int x : pi_allowed_x(delta, y, d)) {
            bool all = std::all_of(reds.begin(), reds.end(), [&](int r) {
                return r >= x - 1 && r <= x + 1;
            });
            if (all) surviving.push_back(x);
        }
        v.surviving_x[d] = surviving;
        if (surviving.empty())
            v.fail("degree", d, static_cast<long>(reds.size()),
                   "no x_d in " + set_to_string(pi_allowed_x(delta, y, d)) +
                       " covers all degree-" + std::to_string(d) + " nodes");
    }
    return v;
}

Verdict check_sinkless(const TypedMultiGraph& g, const Orientation& o) {
    Verdict v;
    for (int x = 0; x < g.node_count(); ++x) {
        if (g.degree(x) < 3) continue;
        int out = out_degree(g, o, x);
        if (out < 1) v.fail("node", x, out, "outdeg >= 1");
    }
    return v;
}

Verdict check_balanced(const TypedMultiGraph& g, const Orientation& o) {
    Verdict v;
    for (int x = 0; x < g.node_count(); ++x) {
        int out = out_degree(g, o, x), in = in_degree(g, o, x);
        if (std::abs(out - in) > 1) v.fail("node", x, out - in, "|out-in| <= 1");
        if (g.degree(x) % 2 == 0 && out != in)
            v.fail("node", x, out - in, "out == in at even degree");
    }
    return v;
}

Verdict check_unbalanced(const TypedMultiGraph& g, const Orientation& o,
                         const UnbalancedThresholds& t) {
    Verdict v;
    for (int x = 0; x < g.node_count(); ++x) {
        int out = out_degree(g, o, x), in = in_degree(g, o, x);
        bool ok = out <= t.rho1 * g.degree(x) + t.slack ||
                  in <= t.rho2 * g.degree(x) + t.slack;
        if (!ok) v.fail("node", x, out, "outdeg or indeg under threshold");
    }
    return v;
}

namespace {

Labeling labeling_from_mask(const TypedMultiGraph& g, std::uint32_t mask) {
    Labeling lab(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        bool bit = (mask >> e) & 1u;
        if (g.edge(e).type == EdgeType::C)
            lab.set_both(e, bit ? Label::R : Label::B, bit ? Label::R : Label::B);
        else
            lab.set_both(e, bit ? Label::R : Label::B, bit ? Label::B : Label::R);
    }
    return lab;
}

LabelingTest named_test(LabelingPredicate pred, int y) {
    switch (pred) {
        case LabelingPredicate::Eq1:
            return [](const TypedMultiGraph& g, const Labeling& l) {
                return check_eq1(g, l).pass;
            };
        case LabelingPredicate::Eq2Down:
            return [](const TypedMultiGraph& g, const Labeling& l) {
                return check_eq2(g, l, RoundSide::Down).pass;
            };
        case LabelingPredicate::Eq2Up:
            return [](const TypedMultiGraph& g, const Labeling& l) {
                return check_eq2(g, l, RoundSide::Up).pass;
            };
        case LabelingPredicate::Lemma31:
            return [](const TypedMultiGraph& g, const Labeling& l) {
                return check_lemma31(g, l).pass;
            };
        case LabelingPredicate::Pi:
            return [y](const TypedMultiGraph& g, const Labeling& l) {
                return check_pi(g, g.max_degree(), y, l).pass;
            };
    }
    throw Error("unknown predicate");
}

void ensure_small(const TypedMultiGraph& g) {
    if (g.edge_count() > 24)
        throw TooLargeError("brute force capped at 24 binary choices, got " +
                            std::to_string(g.edge_count()));
}

}  // namespace

LabelingSearch brute_force_labeling(const TypedMultiGraph& g,
                                    const LabelingTest& test) {
    ensure_small(g);
    const std::uint64_t total = 1ull << g.edge_count();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Labeling lab = labeling_from_mask(g, static_cast<std::uint32_t>(mask));
        if (test(g, lab)) return {true, std::move(lab)};
    }
    return {false, std::nullopt};
}

LabelingSearch brute_force_labeling(const TypedMultiGraph& g,
                                    LabelingPredicate pred, int y) {
    return brute_force_labeling(g, named_test(pred, y));
}

long long brute_force_labeling_count(const TypedMultiGraph& g,
                                     const LabelingTest& test) {
    ensure_small(g);
    const std::uint64_t total = 1ull << g.edge_count();
    long long count = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask)
        if (test(g, labeling_from_mask(g, static_cast<std::uint32_t>(mask))))
            ++count;
    return count;
}

OrientationSearch brute_force_orientation(const TypedMultiGraph& g, double rho1,
                                          double rho2, double slack_absolute) {
    ensure_small(g);
    const std::uint64_t total = 1ull << g.edge_count();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Orientation o(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e)
            o.set(e, ((mask >> e) & 1u) ? Dir::Backward : Dir::Forward);
        bool all_ok = true;
        for (int x = 0; x < g.node_count() && all_ok; ++x) {
            int out = out_degree(g, o, x), in = in_degree(g, o, x);
            all_ok = out <= rho1 * g.degree(x) - slack_absolute ||
                     in <= rho2 * g.degree(x) - slack_absolute;
        }
        if (all_ok) return {true, std::move(o)};
    }
    return {false, std::nullopt};
}

namespace {

bool phase_contains(const LedgerEntry& e, const std::string& needle) {
    return e.phase.find(needle) != std::string::npos;
}

void check_balanced_split_shape(const CostLedger& ledger, int delta, Verdict& v,
                                bool delta_is_exact) {
    auto bo = ledger.entries_of(UnitKind::BO);
    const int k_max = ceil_log2(std::max(delta, 1));
    const int k = delta_is_exact ? k_max : static_cast<int>(bo.size());
    if (static_cast<int>(bo.size()) != k)
        v.fail("ledger", 0, static_cast<long>(bo.size()),
               std::to_string(k) + " BO entries");
    for (int i = 0; i < static_cast<int>(bo.size()); ++i) {
        if (bo[i].overhead != (1L << i))
            v.fail("ledger", i, bo[i].overhead,
                   "BO overhead 2^" + std::to_string(i));
        if (delta_is_exact) {
            double expect = 4.0 * std::sqrt(double(delta)) / std::pow(2.0, i / 2.0);
            if (std::abs(bo[i].param - expect) > 1e-9 * expect)
                v.fail("ledger", i, static_cast<long>(bo[i].param),
                       "BO param 4*sqrt(delta)/2^(i/2)");
        }
    }
    if (!delta_is_exact && k > k_max)
        v.fail("ledger", 0, k, "at most ceil(log2 delta) BO entries");

    auto so = ledger.entries_of(UnitKind::SO);
    long extra = 0, base = 0;
    for (const auto& e : so) {
        if (phase_contains(e, "extra[")) ++extra;
        if (phase_contains(e, "lemma31")) ++base;
    }
    if (extra != 2) v.fail("ledger", 0, extra, "two extra-level SO entries");
    if (base < 1) v.fail("ledger", 0, base, "one SO entry from the base coloring");
    if (ledger.count_of(UnitKind::RS32) != 1)
        v.fail("ledger", 0, ledger.count_of(UnitKind::RS32), "one RS32 entry");
}

}  // namespace

Verdict check_ledger(const CostLedger& ledger, int delta, Pipeline pipeline) {
    Verdict v;
    switch (pipeline) {
        case Pipeline::BalancedSplit:
            check_balanced_split_shape(ledger, delta, v, true);
            if (ledger.count_of(UnitKind::MM) != 0)
                v.fail("ledger", 0, ledger.count_of(UnitKind::MM), "no MM entries");
            break;
        case Pipeline::ExactSplit: {
            if (ledger.count_of(UnitKind::MM) != 1)
                v.fail("ledger", 0, ledger.count_of(UnitKind::MM), "one MM entry");
            if (!ledger.empty() && ledger.entries().front().unit != UnitKind::MM)
                v.fail("ledger", 0, 0, "MM entry first");
            // The nested split ran on the all-odd residual graph, whose max
            // degree is at most delta; its BO ladder must still be shaped.
            check_balanced_split_shape(ledger, delta, v, false);
            break;
        }
        case Pipeline::SolvePi: {
            long mm = ledger.count_of(UnitKind::MM);
            long bound = ceil_log2(std::max(delta, 1)) + 2;
            if (mm > bound)
                v.fail("ledger", 0, mm,
                       "at most ceil(log2 delta)+2 exact_split phases");
            break;
        }
    }
    return v;
}

}  // namespace degsplit::verify
