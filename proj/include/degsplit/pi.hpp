#pragma once

#include <string>
#include <vector>

#include "degsplit/graph.hpp"
#include "degsplit/ledger.hpp"

namespace degsplit::pi {

// Solver machinery for the arbitrary red-blue splitting problems Pi(y):
// degree-delta nodes take red degree y or y+1, smaller degrees follow the
// derived x_d rule. Whole-edge colorings throughout (all edges type C).

// Allowed x_d candidates for a degree-d node (d < delta): {alpha_d},
// {alpha_d + 1} or both, by the beta/tau rule. Exact integer arithmetic.
std::vector<int> targets_allowed_x(int delta, int y, int d);

// Allowed red degrees: {y, y+1} at d == delta, else union of x_d +- 1.
std::vector<int> targets_allowed_red(int delta, int y, int d);

// Representative of Pi(y) in {0, ..., delta-2}; Pi is periodic mod delta-1.
int normalize(long long y, int delta);

// Swap every R and B; maps Pi(y) solutions to Pi(delta-1-y) solutions.
Labeling swap_colors(const Labeling& lab);

enum class Base : std::uint8_t { Zero, FloorHalf, CeilHalfMinus1 };

// Direct solutions: Zero = all blue (Pi(0)); FloorHalf = exact split
// (Pi(floor(delta/2))); CeilHalfMinus1 = its color swap.
Labeling solve_base(const TypedMultiGraph& g, Base which, CostLedger& ledger,
                    const std::string& phase = "pi_base");

// Halving steps: turn a solution of Pi(2y) (resp. Pi(2y+1) / Pi(2y-1),
// normalized) into a solution of Pi(y) with one exact split of the red
// subgraph. InvalidInputError if the input fails its precondition check.
Labeling halve_from_even(const TypedMultiGraph& g, const Labeling& input, int y,
                         CostLedger& ledger, const std::string& phase = "pi_even");
Labeling halve_from_odd(const TypedMultiGraph& g, const Labeling& input, int y,
                        CostLedger& ledger, const std::string& phase = "pi_odd");

enum class StepKind : std::uint8_t {
    BaseZero,
    BaseFloorHalf,
    BaseCeilHalfMinus1,
    From2y,
    From2yPlus1,
    From2yMinus1,
    Swap,
};

struct Step {
    long long y;  // the (raw, un-normalized) problem this step produces
    StepKind kind;
};

// Chain of problems from a base case down to the target; execution order.
struct Plan {
    int delta = 0;
    int target_y = 0;
    std::vector<Step> steps;
};

// Interval-doubling construction: grow [y, y] by the low/high doubling rule
// until some member normalizes into {0, ceil(delta/2)-1, floor(delta/2)},
// then back-chain. Length <= ceil(log2 delta) + 2.
Plan plan(int delta, int y);

struct SolveResult {
    Labeling labeling;
    Plan plan;
};

// Solve Pi(y) on g (all edges type C, 0 <= y <= delta-1 where delta is the
// max degree of g; y = delta-1 is handled as the color swap of Pi(0)).
SolveResult solve(const TypedMultiGraph& g, int y, CostLedger& ledger,
                  const std::string& phase = "pi");

std::string to_string(StepKind k);

}  // namespace degsplit::pi
