#pragma once

#include <vector>

#include "degsplit/generators.hpp"
#include "degsplit/graph.hpp"
#include "degsplit/rng.hpp"

namespace testutil {

using namespace degsplit;

// Random multigraph with m edges and max degree capped at max_deg; rejects
// endpoints already at the cap (and self-loops), so m is an upper bound on
// the edge count when the cap binds.
inline TypedMultiGraph random_multigraph(int n, int m, int max_deg,
                                         std::uint64_t seed, bool mixed_types) {
    Rng rng(seed);
    std::vector<int> deg(n, 0);
    std::vector<EdgeSpec> edges;
    int attempts = 0;
    while (static_cast<int>(edges.size()) < m && attempts < 50 * m + 100) {
        ++attempts;
        int u = static_cast<int>(rng.below(n));
        int v = static_cast<int>(rng.below(n));
        if (u == v || deg[u] >= max_deg || deg[v] >= max_deg) continue;
        EdgeType t = mixed_types && rng.bernoulli(0.5) ? EdgeType::O : EdgeType::C;
        edges.emplace_back(u, v, t);
        ++deg[u];
        ++deg[v];
    }
    return TypedMultiGraph::build(n, edges);
}

}  // namespace testutil
