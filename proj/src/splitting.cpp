#include "degsplit/splitting.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <queue>

#include "degsplit/subroutines.hpp"

namespace degsplit {

namespace {

int ceil_log2(int x) {
    int k = 0;
    while ((1 << k) < x) ++k;
    return k;
}

// Deterministic resolution of every "color arbitrarily" step: C edges get
// both halves R, O edges get R on the endpoint-0 half.
void color_arbitrarily(Labeling& lab, const Edge& e, int id) {
    if (e.type == EdgeType::C)
        lab.set_both(id, Label::R, Label::R);
    else
        lab.set_both(id, Label::R, Label::B);
}

// Set one half and force the other through the edge type.
void set_half(Labeling& lab, const TypedMultiGraph& g, int edge_id, int side,
              Label l) {
    lab.set(edge_id, side, l);
    Label other = g.edge(edge_id).type == EdgeType::C ? l : opposite(l);
    lab.set(edge_id, 1 - side, other);
}

struct Pairing {
    int middle;
    int e1;  // lower incident edge id of the pair
    int e2;
};

HalveResult build_coarse(const TypedMultiGraph& g,
                         const std::vector<Pairing>& pairings) {
    std::vector<char> consumed(g.edge_count(), 0);
    for (const Pairing& p : pairings) consumed[p.e1] = consumed[p.e2] = 1;

    std::vector<EdgeSpec> specs;
    VirtualEdgeMap map;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (consumed[e]) continue;
        specs.emplace_back(g.edge(e).u, g.edge(e).v, g.edge(e).type);
        map.edges.push_back({false, e, -1, -1, -1});
    }
    for (const Pairing& p : pairings) {
        int u = g.other_endpoint(p.e1, p.middle);
        int w = g.other_endpoint(p.e2, p.middle);
        EdgeType t = g.edge(p.e1).type == g.edge(p.e2).type ? EdgeType::O
                                                            : EdgeType::C;
        specs.emplace_back(u, w, t);
        map.edges.push_back({true, -1, p.e1, p.e2, p.middle});
    }
    return {TypedMultiGraph::build(g.node_count(), specs), std::move(map)};
}

std::vector<std::vector<int>> outgoing_by_node(const TypedMultiGraph& g,
                                               const Orientation& o) {
    std::vector<std::vector<int>> out(g.node_count());
    for (int v = 0; v < g.node_count(); ++v)
        for (const HalfEdge& h : g.incident(v))
            if (o.tail(g, h.edge) == v) out[v].push_back(h.edge);
    return out;  // incidence order, i.e. ascending edge ids
}

}  // namespace

HalveResult halve_step(const TypedMultiGraph& g, double eps, CostLedger& ledger,
                       const std::string& phase, long overhead) {
    Orientation o = eps_balanced_orientation(g, eps, ledger, phase, overhead);
    auto outgoing = outgoing_by_node(g, o);
    std::vector<Pairing> pairings;
    for (int v = 0; v < g.node_count(); ++v)
        for (std::size_t i = 0; i + 1 < outgoing[v].size(); i += 2)
            pairings.push_back({v, outgoing[v][i], outgoing[v][i + 1]});
    return build_coarse(g, pairings);
}

HalveResult reduce_step_deg5(const TypedMultiGraph& g, CostLedger& ledger,
                             const std::string& phase, long overhead) {
    Orientation o = outdeg2_orientation(g, ledger, phase, overhead);
    auto outgoing = outgoing_by_node(g, o);
    std::vector<Pairing> pairings;
    for (int v = 0; v < g.node_count(); ++v) {
        if (g.degree(v) < 5) continue;
        if (outgoing[v].size() < 2)
            throw Error("outdeg2 oracle broke its contract");
        pairings.push_back({v, outgoing[v][0], outgoing[v][1]});
    }
    return build_coarse(g, pairings);
}

Labeling unfold_labels(const TypedMultiGraph& fine, const TypedMultiGraph& coarse,
                       const VirtualEdgeMap& map, const Labeling& coarse_labels) {
    if (coarse_labels.edge_count() != coarse.edge_count())
        throw InvalidInputError("labeling size does not match coarse graph");
    Labeling out(fine.edge_count());
    for (int j = 0; j < coarse.edge_count(); ++j) {
        Label h0 = coarse_labels.at(j, 0);
        Label h1 = coarse_labels.at(j, 1);
        if (h0 == Label::Unset || h1 == Label::Unset)
            throw InvalidInputError("coarse labeling must be total");
        bool consistent = coarse.edge(j).type == EdgeType::C ? h0 == h1 : h0 != h1;
        if (!consistent)
            throw InvalidInputError("coarse labeling violates edge type at edge " +
                                    std::to_string(j));
        const VirtualEdge& ve = map.edges[j];
        if (!ve.is_virtual) {
            out.set_both(ve.source, h0, h1);
            continue;
        }
        // The far half of child0 copies the virtual edge's endpoint-0 half;
        // the two middle halves get different colors; child1's far half then
        // matches h1 by the type combination rule.
        int far0 = fine.other_endpoint(ve.child0, ve.middle);
        int s0 = fine.side_of(ve.child0, far0);
        set_half(out, fine, ve.child0, s0, h0);
        Label mid0 = out.at(ve.child0, fine.side_of(ve.child0, ve.middle));
        int smid1 = fine.side_of(ve.child1, ve.middle);
        set_half(out, fine, ve.child1, smid1, opposite(mid0));
        int far1 = fine.other_endpoint(ve.child1, ve.middle);
        if (out.at(ve.child1, fine.side_of(ve.child1, far1)) != h1)
            throw Error("virtual edge type combination rule broken");
    }
    return out;
}

Labeling lemma31_split(const TypedMultiGraph& g, CostLedger& ledger,
                       const std::string& phase, long overhead) {
    const int n = g.node_count();
    const int m = g.edge_count();
    Labeling lab(m);

    // Degree reduction: every node of degree >= 3 marks its 3 lowest
    // incident half-edges; an edge marked from both sides joins G'.
    std::vector<std::array<char, 2>> marked(m, {0, 0});
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) < 3) continue;
        for (int i = 0; i < 3; ++i) {
            const HalfEdge& h = g.incident(v)[i];
            marked[h.edge][h.side] = 1;
        }
    }
    std::vector<char> in_gp(m, 0);
    std::vector<int> gp_edges;
    for (int e = 0; e < m; ++e) {
        if (marked[e][0] && marked[e][1]) {
            in_gp[e] = 1;
            gp_edges.push_back(e);
        }
    }

    std::vector<EdgeSpec> gp_specs;
    for (int e : gp_edges)
        gp_specs.emplace_back(g.edge(e).u, g.edge(e).v, g.edge(e).type);
    TypedMultiGraph gp = TypedMultiGraph::build(n, gp_specs);
    auto orig_id = [&](int gp_edge) { return gp_edges[gp_edge]; };
    auto gp_degree = [&](int v) { return gp.degree(v); };

    // (3,2)-ruling set of G' becomes the cluster centers; every node joins
    // its nearest center, ties to the smaller center id.
    std::vector<int> centers = ruling_set_32(gp, ledger, phase, overhead);
    std::vector<char> is_center(n, 0);
    for (int c : centers) is_center[c] = 1;

    std::vector<int> cluster_of(n, -1);
    for (int v = 0; v < n; ++v) {
        if (is_center[v]) {
            cluster_of[v] = v;
            continue;
        }
        int best = -1;
        for (const HalfEdge& h : gp.incident(v)) {
            int u = gp.other_endpoint(h.edge, v);
            if (is_center[u] && (best == -1 || u < best)) best = u;
        }
        if (best == -1) {
            for (const HalfEdge& h : gp.incident(v)) {
                int u = gp.other_endpoint(h.edge, v);
                for (const HalfEdge& h2 : gp.incident(u)) {
                    int w = gp.other_endpoint(h2.edge, u);
                    if (is_center[w] && (best == -1 || w < best)) best = w;
                }
            }
        }
        if (best == -1)
            throw Error("ruling set failed to dominate node " + std::to_string(v));
        cluster_of[v] = best;
    }

    struct Cluster {
        std::vector<int> members;
        std::vector<int> internal;  // gp edge ids
        std::vector<int> inter;     // gp edge ids
        bool bad = false;
        int h0 = -1, h1 = -1;       // cluster nodes in H (h1 only when bad)
    };
    std::map<int, Cluster> clusters;  // keyed by center id, iterated in order
    for (int v = 0; v < n; ++v) clusters[cluster_of[v]].members.push_back(v);

    for (int j = 0; j < gp.edge_count(); ++j) {
        int cu = cluster_of[gp.edge(j).u];
        int cv = cluster_of[gp.edge(j).v];
        if (cu == cv)
            clusters[cu].internal.push_back(j);
        else {
            clusters[cu].inter.push_back(j);
            clusters[cv].inter.push_back(j);
        }
    }

    // Bad = every member has G'-degree exactly 3 and the induced subgraph is
    // acyclic (a tree, since clusters are connected).
    for (auto& [center, c] : clusters) {
        bool all3 = std::all_of(c.members.begin(), c.members.end(),
                                [&](int v) { return gp_degree(v) == 3; });
        if (!all3) continue;
        std::map<int, int> uf;  // tiny union-find over member ids
        for (int v : c.members) uf[v] = v;
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        bool acyclic = true;
        for (int j : c.internal) {
            int a = find(gp.edge(j).u), b = find(gp.edge(j).v);
            if (a == b) {
                acyclic = false;
                break;
            }
            uf[a] = b;
        }
        c.bad = acyclic;
    }

    // Cluster multigraph H: one node per good cluster, two per bad cluster;
    // a bad cluster's intercluster edges are dealt to its two nodes so both
    // get at least 3 (possible because bad clusters have >= 6 of them).
    int h_count = 0;
    for (auto& [center, c] : clusters) {
        c.h0 = h_count++;
        if (c.bad) c.h1 = h_count++;
    }
    std::vector<std::array<int, 2>> h_side(gp.edge_count(), {-1, -1});
    for (auto& [center, c] : clusters) {
        if (c.bad && static_cast<int>(c.inter.size()) < 6)
            throw Error("bad cluster with fewer than 6 intercluster edges");
        std::size_t first_half = c.inter.size() / 2;
        for (std::size_t i = 0; i < c.inter.size(); ++i) {
            int j = c.inter[i];
            int hnode = (!c.bad || i < first_half) ? c.h0 : c.h1;
            int side = cluster_of[gp.edge(j).u] == center ? 0 : 1;
            h_side[j][side] = hnode;
        }
    }
    std::vector<EdgeSpec> h_specs;
    std::vector<int> h2gp;
    for (int j = 0; j < gp.edge_count(); ++j) {
        if (h_side[j][0] == -1) continue;  // internal edge
        h_specs.emplace_back(h_side[j][0], h_side[j][1], EdgeType::C);
        h2gp.push_back(j);
    }
    TypedMultiGraph hg = TypedMultiGraph::build(h_count, h_specs);
    Orientation h_orient = sinkless_orientation(hg, ledger, phase, overhead);

    // An intercluster edge is assigned to the cluster whose H node it leaves.
    std::vector<int> h_cluster(h_count, -1);
    for (auto& [center, c] : clusters) {
        h_cluster[c.h0] = center;
        if (c.bad) h_cluster[c.h1] = center;
    }
    std::map<int, std::vector<int>> assigned;  // center -> gp edge ids, ascending
    for (int je = 0; je < hg.edge_count(); ++je)
        assigned[h_cluster[h_orient.tail(hg, je)]].push_back(h2gp[je]);

    // e_c is the lowest assigned intercluster edge of a bad cluster, e_nc the
    // second lowest; e_nc stays uncolored until the path coloring below.
    std::map<int, std::pair<int, int>> special;  // center -> (e_c, e_nc)
    std::vector<char> is_enc(gp.edge_count(), 0);
    for (auto& [center, c] : clusters) {
        if (!c.bad) continue;
        auto& got = assigned[center];
        if (got.size() < 2)
            throw Error("bad cluster was assigned fewer than 2 edges");
        special[center] = {got[0], got[1]};
        is_enc[got[1]] = 1;
    }

    auto write_half = [&](int gp_edge, int side, Label l) {
        set_half(lab, g, orig_id(gp_edge), side, l);
    };
    auto read_half = [&](int gp_edge, int side) {
        return lab.at(orig_id(gp_edge), side);
    };

    // Intercluster edges, minus every bad cluster's e_nc, are colored by the
    // fixed arbitrary rule.
    for (int j = 0; j < gp.edge_count(); ++j) {
        if (h_side[j][0] == -1 || is_enc[j]) continue;
        color_arbitrarily(lab, g.edge(orig_id(j)), orig_id(j));
    }

    // Small BFS helper over a cluster's internal edges.
    auto internal_adj = [&](const Cluster& c) {
        std::map<int, std::vector<std::pair<int, int>>> adj;  // v -> (gp edge, other)
        for (int v : c.members) adj[v];
        for (int j : c.internal) {
            adj[gp.edge(j).u].emplace_back(j, gp.edge(j).v);
            adj[gp.edge(j).v].emplace_back(j, gp.edge(j).u);
        }
        return adj;
    };

    // Make `node` happy through edge `j` given its other colored halves.
    auto color_through = [&](int j, int node) {
        bool has_r = false, has_b = false;
        for (const HalfEdge& h : gp.incident(node)) {
            if (h.edge == j) continue;
            Label l = read_half(h.edge, h.side);
            has_r |= l == Label::R;
            has_b |= l == Label::B;
        }
        Label pick = Label::R;
        if (has_r && !has_b) pick = Label::B;
        write_half(j, gp.side_of(j, node), pick);
    };

    // Bad clusters, pass 1: 2-color the path between e_c and e_nc so every
    // path node sees both colors; this also colors e_nc itself.
    for (auto& [center, c] : clusters) {
        if (!c.bad) continue;
        auto [e_c, e_nc] = special[center];
        int p0 = cluster_of[gp.edge(e_c).u] == center ? gp.edge(e_c).u
                                                      : gp.edge(e_c).v;
        int pt = cluster_of[gp.edge(e_nc).u] == center ? gp.edge(e_nc).u
                                                       : gp.edge(e_nc).v;
        auto adj = internal_adj(c);
        std::map<int, std::pair<int, int>> parent;  // node -> (gp edge, parent)
        std::queue<int> q;
        q.push(p0);
        parent[p0] = {-1, -1};
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (auto [j, y] : adj[x]) {
                if (parent.count(y)) continue;
                parent[y] = {j, x};
                q.push(y);
            }
        }
        if (!parent.count(pt)) throw Error("bad cluster is not connected");
        std::vector<int> path;  // gp edge ids from p0 towards pt
        for (int x = pt; x != p0; x = parent[x].second) path.push_back(parent[x].first);
        std::reverse(path.begin(), path.end());
        path.push_back(e_nc);

        int at = p0;
        Label prev = read_half(e_c, gp.side_of(e_c, p0));
        for (int j : path) {
            int side = gp.side_of(j, at);
            write_half(j, side, opposite(prev));
            if (j == e_nc) break;
            at = gp.other_endpoint(j, at);
            prev = read_half(j, gp.side_of(j, at));
        }
    }

    // Bad clusters, pass 2: remaining internal tree edges are colored from
    // the leaves toward the path, each node fixing itself via its parent edge.
    for (auto& [center, c] : clusters) {
        if (!c.bad) continue;
        auto [e_c, e_nc] = special[center];
        auto adj = internal_adj(c);
        std::vector<char> on_path_edge(gp.edge_count(), 0);
        // Recompute the path edge set (cheap; clusters are tiny).
        int p0 = cluster_of[gp.edge(e_c).u] == center ? gp.edge(e_c).u
                                                      : gp.edge(e_c).v;
        int pt = cluster_of[gp.edge(e_nc).u] == center ? gp.edge(e_nc).u
                                                       : gp.edge(e_nc).v;
        std::map<int, std::pair<int, int>> parent;
        std::queue<int> q;
        q.push(p0);
        parent[p0] = {-1, -1};
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (auto [j, y] : adj[x]) {
                if (parent.count(y)) continue;
                parent[y] = {j, x};
                q.push(y);
            }
        }
        std::map<int, char> on_path;
        for (int x = pt; x != p0; x = parent[x].second) {
            on_path[x] = 1;
            on_path_edge[parent[x].first] = 1;
        }
        on_path[p0] = 1;

        // BFS from path nodes over non-path internal edges; color by
        // decreasing depth.
        std::map<int, int> depth;
        std::map<int, int> up_edge;
        std::queue<int> q2;
        for (int v : c.members)
            if (on_path.count(v)) {
                depth[v] = 0;
                q2.push(v);
            }
        while (!q2.empty()) {
            int x = q2.front();
            q2.pop();
            for (auto [j, y] : adj[x]) {
                if (on_path_edge[j] || depth.count(y)) continue;
                depth[y] = depth[x] + 1;
                up_edge[y] = j;
                q2.push(y);
            }
        }
        std::vector<std::pair<int, int>> order;  // (depth, node)
        for (auto [v, d] : depth)
            if (d > 0) order.emplace_back(d, v);
        std::sort(order.begin(), order.end(),
                  [](auto a, auto b) { return a.first != b.first ? a.first > b.first
                                                                 : a.second < b.second; });
        for (auto [d, v] : order) color_through(up_edge[v], v);
    }

    // Good clusters: root a spanning tree at a degree-<3 member when one
    // exists, otherwise contract a cycle and use it as the root.
    for (auto& [center, c] : clusters) {
        if (c.bad || c.internal.empty()) continue;
        auto adj = internal_adj(c);

        int low_root = -1;
        for (int v : c.members)
            if (gp_degree(v) < 3 && (low_root == -1 || v < low_root)) low_root = v;

        std::vector<int> cycle_edges;
        std::vector<int> cycle_nodes;
        if (low_root == -1) {
            // All members have degree 3; find a cycle by DFS on internal edges.
            std::map<int, int> parent_edge;
            std::map<int, char> state;
            std::vector<std::pair<int, std::size_t>> stack;
            int start = *std::min_element(c.members.begin(), c.members.end());
            stack.emplace_back(start, 0);
            state[start] = 1;
            while (!stack.empty() && cycle_edges.empty()) {
                auto& [x, idx] = stack.back();
                if (idx == adj[x].size()) {
                    state[x] = 2;
                    stack.pop_back();
                    continue;
                }
                auto [j, y] = adj[x][idx++];
                if (parent_edge.count(x) && parent_edge[x] == j) continue;
                if (!state.count(y) || state[y] == 0) {
                    parent_edge[y] = j;
                    state[y] = 1;
                    stack.emplace_back(y, 0);
                } else if (state[y] == 1) {
                    cycle_edges.push_back(j);
                    cycle_nodes.push_back(x);
                    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
                        if (it->first == y) break;
                        cycle_edges.push_back(parent_edge[it->first]);
                        if (it->first != x) cycle_nodes.push_back(it->first);
                    }
                    cycle_nodes.push_back(y);
                    std::reverse(cycle_edges.begin(), cycle_edges.end());
                    std::reverse(cycle_nodes.begin(), cycle_nodes.end());
                }
            }
            if (cycle_edges.empty())
                throw Error("good cluster without small-degree node or cycle");
        }

        std::vector<char> skip_edge(gp.edge_count(), 0);
        std::map<int, int> depth, up_edge;
        std::queue<int> q;
        if (low_root != -1) {
            depth[low_root] = 0;
            q.push(low_root);
        } else {
            for (int j : cycle_edges) skip_edge[j] = 1;
            for (int v : cycle_nodes) {
                depth[v] = 0;
                q.push(v);
            }
        }
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (auto [j, y] : adj[x]) {
                if (skip_edge[j] || depth.count(y)) continue;
                depth[y] = depth[x] + 1;
                up_edge[y] = j;
                q.push(y);
            }
        }
        // Internal edges that are neither tree nor cycle edges.
        std::vector<char> is_tree(gp.edge_count(), 0);
        for (auto [v, j] : up_edge) is_tree[j] = 1;
        for (int j : c.internal)
            if (!is_tree[j] && !skip_edge[j])
                color_arbitrarily(lab, g.edge(orig_id(j)), orig_id(j));

        std::vector<std::pair<int, int>> order;
        for (auto [v, d] : depth)
            if (d > 0) order.emplace_back(d, v);
        std::sort(order.begin(), order.end(),
                  [](auto a, auto b) { return a.first != b.first ? a.first > b.first
                                                                 : a.second < b.second; });
        for (auto [d, v] : order) color_through(up_edge[v], v);

        // Each cycle node colors its outgoing cycle edge opposite to its one
        // non-cycle half, so it sees both colors regardless of its neighbors.
        if (low_root == -1) {
            const int L = static_cast<int>(cycle_nodes.size());
            for (int i = 0; i < L; ++i) {
                int x = cycle_nodes[i];
                int out_edge = cycle_edges[i];
                Label other = Label::Unset;
                for (const HalfEdge& h : gp.incident(x)) {
                    if (h.edge == cycle_edges[i] ||
                        h.edge == cycle_edges[(i + L - 1) % L])
                        continue;
                    other = read_half(h.edge, h.side);
                }
                if (other == Label::Unset)
                    throw Error("cycle node missing its colored third edge");
                write_half(out_edge, gp.side_of(out_edge, x), opposite(other));
            }
        }
    }

    // Leftover marked edges (marked by one endpoint only) are colored by
    // their marker so that it sees both colors.
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) < 3) continue;
        std::vector<HalfEdge> leftovers;
        for (int i = 0; i < 3; ++i) {
            const HalfEdge& h = g.incident(v)[i];
            if (!in_gp[h.edge]) leftovers.push_back(h);
        }
        if (leftovers.empty()) continue;
        bool has_r = false, has_b = false;
        for (const HalfEdge& h : g.incident(v)) {
            if (!in_gp[h.edge]) continue;
            Label l = lab.at(h.edge, h.side);
            has_r |= l == Label::R;
            has_b |= l == Label::B;
        }
        for (const HalfEdge& h : leftovers) {
            Label pick = Label::R;
            if (has_r && !has_b) pick = Label::B;
            set_half(lab, g, h.edge, h.side, pick);
            has_r |= pick == Label::R;
            has_b |= pick == Label::B;
        }
    }

    // Everything still unset was marked by nobody; color by the fixed rule.
    for (int e = 0; e < m; ++e)
        if (lab.at(e, 0) == Label::Unset) color_arbitrarily(lab, g.edge(e), e);

    assert(lab.total());
    return lab;
}

Labeling balanced_split(const TypedMultiGraph& g, CostLedger& ledger,
                        const std::string& phase, LevelTrace* trace) {
    const int delta = g.max_degree();
    const int k = ceil_log2(std::max(delta, 1));

    std::vector<TypedMultiGraph> graphs = {g};
    std::vector<VirtualEdgeMap> maps;
    if (trace) trace->level_max_degree = {delta};

    for (int i = 0; i < k; ++i) {
        double eps = std::pow(2.0, i / 2.0) / (4.0 * std::sqrt(double(delta)));
        assert(eps <= 0.25 + 1e-12);
        HalveResult hr = halve_step(graphs.back(), eps, ledger,
                                    phase + "/halve[" + std::to_string(i) + "]",
                                    1L << i);
        graphs.push_back(std::move(hr.graph));
        maps.push_back(std::move(hr.map));
        if (trace) trace->level_max_degree.push_back(graphs.back().max_degree());
    }
    for (int j = 0; j < 2; ++j) {
        HalveResult hr = reduce_step_deg5(graphs.back(), ledger,
                                          phase + "/extra[" + std::to_string(j) + "]",
                                          1L << k);
        graphs.push_back(std::move(hr.graph));
        maps.push_back(std::move(hr.map));
        if (trace) trace->level_max_degree.push_back(graphs.back().max_degree());
    }
    if (graphs.back().max_degree() > 4)
        throw Error("degree reduction left max degree " +
                    std::to_string(graphs.back().max_degree()));

    Labeling lab = lemma31_split(graphs.back(), ledger, phase + "/lemma31", 1L << k);
    for (int lev = static_cast<int>(maps.size()) - 1; lev >= 0; --lev)
        lab = unfold_labels(graphs[lev], graphs[lev + 1], maps[lev], lab);
    assert(lab.total());
    return lab;
}

Labeling exact_split(const TypedMultiGraph& g, RoundMode mode, CostLedger& ledger,
                     const std::string& phase) {
    if (!g.all_edges_of_type(EdgeType::C))
        throw TypeError("exact_split requires every edge to be of type C");
    const int n = g.node_count();
    const int m = g.edge_count();

    // Maximal matching on the subgraph induced by even-degree nodes; matched
    // edges will be red.
    std::vector<char> even(n, 0);
    for (int v = 0; v < n; ++v) even[v] = g.degree(v) % 2 == 0;
    std::vector<EdgeSpec> ve_specs;
    std::vector<int> ve2orig;
    for (int e = 0; e < m; ++e) {
        if (even[g.edge(e).u] && even[g.edge(e).v]) {
            ve_specs.emplace_back(g.edge(e).u, g.edge(e).v, EdgeType::C);
            ve2orig.push_back(e);
        }
    }
    TypedMultiGraph gve = TypedMultiGraph::build(n, ve_specs);
    std::vector<int> matching;
    for (int je : maximal_matching(gve, ledger, phase + "/matching"))
        matching.push_back(ve2orig[je]);

    std::vector<char> in_matching(m, 0);
    std::vector<char> matched_node(n, 0);
    for (int e : matching) {
        in_matching[e] = 1;
        matched_node[g.edge(e).u] = matched_node[g.edge(e).v] = 1;
    }

    // Unmatched even-degree nodes form an independent set of G - M; each of
    // them pairs up all its edges into virtual type-O edges. Everything else
    // (except the matching) is inherited into the all-odd residual graph.
    std::vector<char> pairing_node(n, 0);
    for (int v = 0; v < n; ++v) pairing_node[v] = even[v] && !matched_node[v];

    std::vector<EdgeSpec> specs;
    VirtualEdgeMap map;
    for (int e = 0; e < m; ++e) {
        if (in_matching[e]) continue;
        if (pairing_node[g.edge(e).u] && pairing_node[g.edge(e).v])
            throw Error("matching is not maximal on even-degree nodes");
        if (pairing_node[g.edge(e).u] || pairing_node[g.edge(e).v]) continue;
        specs.emplace_back(g.edge(e).u, g.edge(e).v, EdgeType::C);
        map.edges.push_back({false, e, -1, -1, -1});
    }
    for (int v = 0; v < n; ++v) {
        if (!pairing_node[v]) continue;
        const auto& inc = g.incident(v);
        if (inc.size() % 2 != 0) throw Error("pairing node with odd degree");
        for (std::size_t i = 0; i + 1 < inc.size(); i += 2) {
            int e1 = inc[i].edge, e2 = inc[i + 1].edge;
            specs.emplace_back(g.other_endpoint(e1, v), g.other_endpoint(e2, v),
                               EdgeType::O);
            map.edges.push_back({true, -1, e1, e2, v});
        }
    }
    TypedMultiGraph residual = TypedMultiGraph::build(n, specs);

    Labeling sub = balanced_split(residual, ledger, phase + "/split");
    Labeling out = unfold_labels(g, residual, map, sub);
    for (int e : matching) out.set_both(e, Label::R, Label::R);
    assert(out.total());

    if (mode == RoundMode::Up) out.swap_colors();
    return out;
}

}  // namespace degsplit
