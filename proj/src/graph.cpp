#include "degsplit/graph.hpp"

#include <algorithm>

namespace degsplit {

TypedMultiGraph TypedMultiGraph::build(int n, const std::vector<EdgeSpec>& edge_list) {
    if (n < 0) throw BadParamError("node count must be nonnegative");
    TypedMultiGraph g;
    g.n_ = n;
    g.edges_.reserve(edge_list.size());
    g.incidence_.assign(n, {});
    for (const auto& [u, v, type] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw NodeOutOfRangeError("edge endpoint out of range: (" +
                                      std::to_string(u) + ", " + std::to_string(v) +
                                      ") with n = " + std::to_string(n));
        if (u == v) throw SelfLoopError(u);
        int id = static_cast<int>(g.edges_.size());
        g.edges_.push_back({u, v, type});
        g.incidence_[u].push_back({id, 0});
        g.incidence_[v].push_back({id, 1});
    }
    return g;
}

int TypedMultiGraph::max_degree() const {
    int d = 0;
    for (const auto& inc : incidence_) d = std::max(d, static_cast<int>(inc.size()));
    return d;
}

bool TypedMultiGraph::all_edges_of_type(EdgeType t) const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [t](const Edge& e) { return e.type == t; });
}

bool Labeling::total() const {
    for (const auto& h : half_)
        if (h[0] == Label::Unset || h[1] == Label::Unset) return false;
    return true;
}

void Labeling::swap_colors() {
    for (auto& h : half_) {
        h[0] = opposite(h[0]);
        h[1] = opposite(h[1]);
    }
}

int red_degree(const TypedMultiGraph& g, const Labeling& lab, int v) {
    int c = 0;
    for (const HalfEdge& h : g.incident(v))
        if (lab.at(h.edge, h.side) == Label::R) ++c;
    return c;
}

int blue_degree(const TypedMultiGraph& g, const Labeling& lab, int v) {
    int c = 0;
    for (const HalfEdge& h : g.incident(v))
        if (lab.at(h.edge, h.side) == Label::B) ++c;
    return c;
}

int out_degree(const TypedMultiGraph& g, const Orientation& o, int v) {
    int c = 0;
    for (const HalfEdge& h : g.incident(v))
        if (o.tail(g, h.edge) == v) ++c;
    return c;
}

int in_degree(const TypedMultiGraph& g, const Orientation& o, int v) {
    return g.degree(v) - out_degree(g, o, v);
}

}  // namespace degsplit
