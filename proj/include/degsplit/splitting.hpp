#pragma once

#include <string>
#include <vector>

#include "degsplit/graph.hpp"
#include "degsplit/ledger.hpp"

namespace degsplit {

// How one edge of a coarser (more split) graph relates to the finer graph it
// was built from. A virtual edge {u, w} replaces the pair {mid, u}, {mid, w}
// spun off by its middle node; children may themselves be virtual edges of
// the previous level.
struct VirtualEdge {
    bool is_virtual = false;
    int source = -1;  // inherited: edge id in the finer graph
    int child0 = -1;  // virtual: finer edge whose far endpoint is endpoint 0
    int child1 = -1;  // virtual: finer edge whose far endpoint is endpoint 1
    int middle = -1;  // virtual: the node that paired the two children
};

// Map from a coarser graph's edges back to the finer graph, indexed by
// coarser edge id.
struct VirtualEdgeMap {
    std::vector<VirtualEdge> edges;
};

struct HalveResult {
    TypedMultiGraph graph;
    VirtualEdgeMap map;
};

// One degree-halving level: orient with the eps-balanced oracle, then every
// node pairs consecutive outgoing edges (lowest edge ids first) and replaces
// each pair {v,u}, {v,w} by a virtual edge {u,w}. Same child types give O,
// different give C.
HalveResult halve_step(const TypedMultiGraph& g, double eps, CostLedger& ledger,
                       const std::string& phase = "halve", long overhead = 1);

// Extra reduction level: every node of degree >= 5 spins off exactly one
// pair of outgoing edges (outdegree >= 2 is guaranteed by the oracle).
HalveResult reduce_step_deg5(const TypedMultiGraph& g, CostLedger& ledger,
                             const std::string& phase = "extra", long overhead = 1);

// Pull a total, type-consistent labeling of the coarser graph back to the
// finer one. Each virtual edge contributes one R and one B half at its
// middle node. Throws InvalidInputError if the input labeling violates a
// virtual edge's type.
Labeling unfold_labels(const TypedMultiGraph& fine, const TypedMultiGraph& coarse,
                       const VirtualEdgeMap& map, const Labeling& coarse_labels);

// Half-edge coloring in which every node of degree >= 3 sees both colors
// (and the labeling is consistent with the edge types). Logs one ruling-set
// and one sinkless-orientation unit.
Labeling lemma31_split(const TypedMultiGraph& g, CostLedger& ledger,
                       const std::string& phase = "lemma31", long overhead = 1);

// Max degree of every intermediate graph, filled in by balanced_split;
// level_max_degree[i] is the max degree after i reduction levels.
struct LevelTrace {
    std::vector<int> level_max_degree;
};

// Half-edge coloring with d_R(v), d_B(v) in [d(v)/2 - 1, d(v)/2 + 1] for
// every node: ceil(log2 Delta) halving levels, two degree->=5 reduction
// levels, the both-colors base coloring, then unfolding through all levels.
Labeling balanced_split(const TypedMultiGraph& g, CostLedger& ledger,
                        const std::string& phase = "split",
                        LevelTrace* trace = nullptr);

enum class RoundMode : std::uint8_t { Down, Up };

// Edge 2-coloring with d_R(v) in {floor(d/2), floor(d/2)+1} (Down) or the
// color-swapped variant (Up). Requires every edge to be of type C.
Labeling exact_split(const TypedMultiGraph& g, RoundMode mode, CostLedger& ledger,
                     const std::string& phase = "exact");

}  // namespace degsplit
