#pragma once

#include <string>
#include <vector>

#include "degsplit/graph.hpp"
#include "degsplit/ledger.hpp"

namespace degsplit {

// Centralized, deterministic stand-ins for the cited distributed black boxes.
// Each call appends exactly one entry to the ledger; `overhead` records the
// simulation factor of the (virtual) graph level the call conceptually ran on.

// Every node of degree >= 3 gets at least one outgoing edge. Always solvable:
// components with a cycle orient the cycle consistently and everything else
// toward it; tree components are rooted at a leaf with all edges pointing up.
Orientation sinkless_orientation(const TypedMultiGraph& g, CostLedger& ledger,
                                 const std::string& phase = "sinkless",
                                 long overhead = 1);

// |outdeg(v) - indeg(v)| <= 1 for every v, with equality of out/in on
// even-degree nodes. Euler tour with a dummy node absorbing odd-degree stubs.
Orientation balanced_orientation(const TypedMultiGraph& g, CostLedger& ledger,
                                 const std::string& phase = "balanced",
                                 long overhead = 1);

// Contract: outdeg(v) >= (1 - eps) * d(v)/2 - 1. The Euler orientation
// dominates this for every eps; the ledger entry keeps the BO(1/eps) cost.
Orientation eps_balanced_orientation(const TypedMultiGraph& g, double eps,
                                     CostLedger& ledger,
                                     const std::string& phase = "eps_balanced",
                                     long overhead = 1);

// Every node of degree >= 5 gets outdegree >= 2; costs one SO unit.
Orientation outdeg2_orientation(const TypedMultiGraph& g, CostLedger& ledger,
                                const std::string& phase = "outdeg2",
                                long overhead = 1);

// Greedy (lowest edge id first) maximal matching; returns edge ids.
std::vector<int> maximal_matching(const TypedMultiGraph& g, CostLedger& ledger,
                                  const std::string& phase = "matching",
                                  long overhead = 1);

// Greedy (lowest node id first) (3,2)-ruling set: members pairwise at
// distance >= 3, every node within distance 2 of a member.
std::vector<int> ruling_set_32(const TypedMultiGraph& g, CostLedger& ledger,
                               const std::string& phase = "ruling_set",
                               long overhead = 1);

}  // namespace degsplit
