#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "degsplit/graph.hpp"
#include "degsplit/ledger.hpp"

namespace degsplit::verify {

// Checkers are deliberately independent of the solver code: they share only
// the graph types and re-derive everything else (including the allowed
// red-degree sets) from scratch.

struct Violation {
    std::string kind;  // "node" or "edge"
    int id = 0;
    long observed = 0;
    std::string allowed;
};

struct Verdict {
    bool pass = true;
    std::vector<Violation> violations;

    void fail(std::string kind, int id, long observed, std::string allowed) {
        pass = false;
        violations.push_back({std::move(kind), id, observed, std::move(allowed)});
    }
    std::string to_json_lines() const;
};

// C edges must have equal halves, O edges different halves.
Verdict check_types(const TypedMultiGraph& g, const Labeling& lab);

// d_R(v), d_B(v) in [d(v)/2 - 1, d(v)/2 + 1] for every node.
Verdict check_eq1(const TypedMultiGraph& g, const Labeling& lab);

enum class RoundSide : std::uint8_t { Down, Up };

// Down: d_R in {floor(d/2), floor(d/2)+1}; Up: the color-swapped variant.
// All edges must be of type C.
Verdict check_eq2(const TypedMultiGraph& g, const Labeling& lab, RoundSide side);

// Every node of degree >= 3 sees at least one R and one B half-edge.
Verdict check_lemma31(const TypedMultiGraph& g, const Labeling& lab);

// Allowed x_d candidates for degree d under problem Pi(y) with parameter
// delta, from the closed-form rule; d == delta yields {y} standing for the
// red-degree window {y, y+1}. Exact integer arithmetic.
std::vector<int> pi_allowed_x(int delta, int y, int d);

// Allowed red degrees for degree-d nodes: {y, y+1} at d == delta, otherwise
// the union of {x-1, x, x+1} over allowed x_d.
std::vector<int> pi_allowed_red(int delta, int y, int d);

struct PiVerdict : Verdict {
    // Surviving x_d candidates per degree < delta (diagnostic).
    std::map<int, std::vector<int>> surviving_x;
};

// Whole-edge red/blue coloring against Pi(y): degree-delta nodes need
// d_R in {y, y+1}; every smaller degree needs one consistent x_d.
PiVerdict check_pi(const TypedMultiGraph& g, int delta, int y, const Labeling& lab);

// Every node of degree >= 3 has outdegree >= 1.
Verdict check_sinkless(const TypedMultiGraph& g, const Orientation& o);

// |outdeg - indeg| <= 1 everywhere, with equality on even-degree nodes.
Verdict check_balanced(const TypedMultiGraph& g, const Orientation& o);

struct UnbalancedThresholds {
    double rho1 = 0.0;
    double rho2 = 0.0;
    double slack = 0.0;  // the additive O(sqrt(Delta log Delta)) term, resolved
};

// Disjunction: outdeg(v) <= rho1*d(v) + slack or indeg(v) <= rho2*d(v) + slack.
Verdict check_unbalanced(const TypedMultiGraph& g, const Orientation& o,
                         const UnbalancedThresholds& t);

// --- brute-force oracles -------------------------------------------------

enum class LabelingPredicate : std::uint8_t { Eq1, Eq2Down, Eq2Up, Lemma31, Pi };

struct LabelingSearch {
    bool sat = false;
    std::optional<Labeling> witness;
};

using LabelingTest = std::function<bool(const TypedMultiGraph&, const Labeling&)>;

// Exhaustive search over all 2^m type-consistent labelings (m <= 24).
LabelingSearch brute_force_labeling(const TypedMultiGraph& g,
                                    LabelingPredicate pred, int y = 0);
LabelingSearch brute_force_labeling(const TypedMultiGraph& g,
                                    const LabelingTest& test);
// Number of type-consistent labelings satisfying the predicate.
long long brute_force_labeling_count(const TypedMultiGraph& g,
                                     const LabelingTest& test);

struct OrientationSearch {
    bool sat = false;
    std::optional<Orientation> witness;
};

// Exhaustive search over all 2^m orientations against the subtractive
// (lower-bound) thresholds: outdeg(v) <= rho1*d(v) - slack or
// indeg(v) <= rho2*d(v) - slack for every node.
OrientationSearch brute_force_orientation(const TypedMultiGraph& g, double rho1,
                                          double rho2, double slack_absolute);

// --- ledger shape --------------------------------------------------------

enum class Pipeline : std::uint8_t { BalancedSplit, ExactSplit, SolvePi };

// balanced_split: exactly ceil(log2 delta) BO entries with parameter
// 4*sqrt(delta)/2^(i/2) and overhead 2^i, two SO entries from the extra
// levels, one RS32+SO pair from the base coloring. exact_split: one MM in
// front of a balanced_split block (whose own delta may be smaller).
// solve_pi: at most ceil(log2 delta) + 2 exact_split sub-ledgers.
Verdict check_ledger(const CostLedger& ledger, int delta, Pipeline pipeline);

}  // namespace degsplit::verify
