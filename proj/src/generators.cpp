#include "degsplit/generators.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "degsplit/rng.hpp"

namespace degsplit {

namespace {

std::vector<EdgeSpec> typed(std::vector<std::pair<int, int>> pairs,
                            TypeAssignment types, Rng* rng) {
    std::vector<EdgeSpec> out;
    out.reserve(pairs.size());
    for (auto [u, v] : pairs) {
        EdgeType t = EdgeType::C;
        if (types == TypeAssignment::AllO) t = EdgeType::O;
        if (types == TypeAssignment::RandomCoin)
            t = rng->bernoulli(0.5) ? EdgeType::O : EdgeType::C;
        out.emplace_back(u, v, t);
    }
    return out;
}

}  // namespace

TypedMultiGraph gen_random_regular(int n, int delta, std::uint64_t seed,
                                   TypeAssignment types) {
    if (n <= 0 || delta < 1) throw BadParamError("need n >= 1 and delta >= 1");
    if ((static_cast<long long>(n) * delta) % 2 != 0)
        throw ParityError("n * delta must be even, got n = " + std::to_string(n) +
                          ", delta = " + std::to_string(delta));
    if (n < 2) throw BadParamError("regular graph with delta >= 1 needs n >= 2");

    Rng rng(seed);
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * delta);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < delta; ++i) stubs.push_back(v);
    rng.shuffle(stubs);

    const std::size_t pairs = stubs.size() / 2;
    long long retries_left = 100LL * n;
    for (std::size_t i = 0; i < pairs; ++i) {
        while (stubs[2 * i] == stubs[2 * i + 1]) {
            if (retries_left-- <= 0)
                throw RetryExhaustedError("could not eliminate self-loop stubs");
            // Swap the violating stub with a random one elsewhere; only the
            // two affected pairs change, so re-check from the earlier one.
            std::size_t j = static_cast<std::size_t>(rng.below(stubs.size()));
            std::swap(stubs[2 * i + 1], stubs[j]);
            std::size_t other = j / 2;
            if (other < i) i = other;  // revisit the disturbed earlier pair
        }
    }

    std::vector<std::pair<int, int>> edge_pairs;
    edge_pairs.reserve(pairs);
    for (std::size_t i = 0; i < pairs; ++i)
        edge_pairs.emplace_back(stubs[2 * i], stubs[2 * i + 1]);
    return TypedMultiGraph::build(n, typed(std::move(edge_pairs), types, &rng));
}

TypedMultiGraph gen_path(int n, TypeAssignment types) {
    if (n < 1) throw BadParamError("path needs n >= 1");
    Rng rng(0);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return TypedMultiGraph::build(n, typed(std::move(pairs), types, &rng));
}

TypedMultiGraph gen_cycle(int n, TypeAssignment types) {
    if (n < 3) throw BadParamError("cycle needs n >= 3");
    Rng rng(0);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
    return TypedMultiGraph::build(n, typed(std::move(pairs), types, &rng));
}

TypedMultiGraph gen_complete(int n, TypeAssignment types) {
    if (n < 1) throw BadParamError("complete graph needs n >= 1");
    Rng rng(0);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return TypedMultiGraph::build(n, typed(std::move(pairs), types, &rng));
}

TypedMultiGraph gen_star(int leaves, TypeAssignment types) {
    if (leaves < 1) throw BadParamError("star needs at least one leaf");
    Rng rng(0);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= leaves; ++i) pairs.emplace_back(0, i);
    return TypedMultiGraph::build(leaves + 1, typed(std::move(pairs), types, &rng));
}

TypedMultiGraph gen_full_tree(int delta, int depth, TypeAssignment types) {
    if (delta < 1 || depth < 0) throw BadParamError("full_tree needs delta >= 1, depth >= 0");
    Rng rng(0);
    std::vector<std::pair<int, int>> pairs;
    int next_id = 1;
    std::vector<int> frontier = {0};
    for (int level = 0; level < depth; ++level) {
        std::vector<int> next;
        for (int parent : frontier) {
            int children = (level == 0) ? delta : delta - 1;
            for (int c = 0; c < children; ++c) {
                pairs.emplace_back(parent, next_id);
                next.push_back(next_id++);
            }
        }
        frontier = std::move(next);
    }
    return TypedMultiGraph::build(next_id, typed(std::move(pairs), types, &rng));
}

std::optional<int> girth(const TypedMultiGraph& g) {
    const int n = g.node_count();
    int best = -1;
    // BFS from every node, tracking the edge used to reach each node; any
    // non-tree edge closes a cycle. Parallel edges fall out as length 2.
    std::vector<int> dist(n), via_edge(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(via_edge.begin(), via_edge.end(), -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            if (best != -1 && 2 * dist[x] >= best) continue;
            for (const HalfEdge& h : g.incident(x)) {
                if (h.edge == via_edge[x]) continue;
                int y = g.other_endpoint(h.edge, x);
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    via_edge[y] = h.edge;
                    q.push(y);
                } else {
                    int len = dist[x] + dist[y] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

NodeSplitResult split_nodes_epsilon(const TypedMultiGraph& g, double eps) {
    if (!(eps > 0.0) || eps > 1.0) throw BadParamError("eps must be in (0, 1]");
    const int chunk = static_cast<int>(std::ceil(2.0 / eps));

    // New ids: nodes in id order; a split node of degree d becomes
    // floor(d / chunk) virtual nodes, the last one absorbing the remainder.
    std::vector<int> back_map;
    std::vector<std::vector<int>> new_ids_of(g.node_count());
    for (int v = 0; v < g.node_count(); ++v) {
        int parts = g.degree(v) >= chunk ? g.degree(v) / chunk : 1;
        for (int p = 0; p < parts; ++p) {
            new_ids_of[v].push_back(static_cast<int>(back_map.size()));
            back_map.push_back(v);
        }
    }

    // Each half-edge of v goes to one of v's parts; chunks are consecutive
    // runs of the incidence list, the last part taking chunk + remainder.
    std::vector<std::array<int, 2>> half_owner(g.edge_count(), {-1, -1});
    for (int v = 0; v < g.node_count(); ++v) {
        const auto& inc = g.incident(v);
        int parts = static_cast<int>(new_ids_of[v].size());
        for (int i = 0; i < static_cast<int>(inc.size()); ++i) {
            int p = parts == 1 ? 0 : std::min(i / chunk, parts - 1);
            half_owner[inc[i].edge][inc[i].side] = new_ids_of[v][p];
        }
    }

    std::vector<EdgeSpec> new_edges;
    new_edges.reserve(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e)
        new_edges.emplace_back(half_owner[e][0], half_owner[e][1], g.edge(e).type);

    return {TypedMultiGraph::build(static_cast<int>(back_map.size()), new_edges),
            std::move(back_map)};
}

}  // namespace degsplit
