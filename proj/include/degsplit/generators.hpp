#pragma once

#include <optional>
#include <vector>

#include "degsplit/graph.hpp"

namespace degsplit {

enum class TypeAssignment : std::uint8_t { AllC, AllO, RandomCoin };

// Random Delta-regular multigraph via the configuration model. Self-loop
// stubs are re-paired in place (up to 100*n retries) rather than restarting
// the whole pairing; parallel edges stay. Deterministic for a fixed seed.
TypedMultiGraph gen_random_regular(int n, int delta, std::uint64_t seed,
                                   TypeAssignment types = TypeAssignment::AllC);

TypedMultiGraph gen_path(int n, TypeAssignment types = TypeAssignment::AllC);
TypedMultiGraph gen_cycle(int n, TypeAssignment types = TypeAssignment::AllC);
TypedMultiGraph gen_complete(int n, TypeAssignment types = TypeAssignment::AllC);
// Star with `leaves` leaves; node 0 is the center.
TypedMultiGraph gen_star(int leaves, TypeAssignment types = TypeAssignment::AllC);
// Rooted tree where the root has `delta` children and every internal node
// has degree `delta`, down to the given depth.
TypedMultiGraph gen_full_tree(int delta, int depth,
                              TypeAssignment types = TypeAssignment::AllC);

// Length of the shortest cycle; nullopt for forests. Parallel edges give 2.
std::optional<int> girth(const TypedMultiGraph& g);

// Corollary-style node splitting: every node of degree >= ceil(2/eps) is
// replaced by virtual nodes carrying between ceil(2/eps) and 2*ceil(2/eps)
// of its half-edges each; smaller nodes are kept. Edge ids, order and types
// are preserved. back_map[virtual node] = original node.
struct NodeSplitResult {
    TypedMultiGraph graph;
    std::vector<int> back_map;
};
NodeSplitResult split_nodes_epsilon(const TypedMultiGraph& g, double eps);

}  // namespace degsplit
