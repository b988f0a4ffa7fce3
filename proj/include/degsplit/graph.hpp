#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "degsplit/errors.hpp"

namespace degsplit {

// Edge type: C edges want both half-edges the same color (2-coloring),
// O edges want them different (orientation).
enum class EdgeType : std::uint8_t { C, O };

enum class Label : std::uint8_t { Unset, R, B };

inline Label opposite(Label l) {
    if (l == Label::R) return Label::B;
    if (l == Label::B) return Label::R;
    return Label::Unset;
}

struct Edge {
    int u = 0;  // endpoint 0
    int v = 0;  // endpoint 1
    EdgeType type = EdgeType::C;
};

// Reference to one half of an edge: side 0 sits at edge.u, side 1 at edge.v.
struct HalfEdge {
    int edge = 0;
    int side = 0;
};

using EdgeSpec = std::tuple<int, int, EdgeType>;

// Multigraph without self-loops. Parallel edges are first-class; node ids
// are 0..n-1 and edge ids 0..m-1, dense. Immutable after construction.
class TypedMultiGraph {
public:
    TypedMultiGraph() = default;

    static TypedMultiGraph build(int n, const std::vector<EdgeSpec>& edge_list);

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(int id) const { return edges_[id]; }
    const std::vector<Edge>& edges() const { return edges_; }

    int endpoint(int edge_id, int side) const {
        return side == 0 ? edges_[edge_id].u : edges_[edge_id].v;
    }
    // The endpoint of `edge_id` that is not `node`.
    int other_endpoint(int edge_id, int node) const {
        const Edge& e = edges_[edge_id];
        return e.u == node ? e.v : e.u;
    }
    // Side of `edge_id` at `node` (node must be an endpoint).
    int side_of(int edge_id, int node) const {
        return edges_[edge_id].u == node ? 0 : 1;
    }

    int degree(int v) const { return static_cast<int>(incidence_[v].size()); }
    const std::vector<HalfEdge>& incident(int v) const { return incidence_[v]; }

    int max_degree() const;
    bool all_edges_of_type(EdgeType t) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<HalfEdge>> incidence_;
};

// Assignment of {R, B} to half-edges. Partial while an algorithm is running;
// everything returned from the public solvers is total.
class Labeling {
public:
    Labeling() = default;
    explicit Labeling(int edge_count)
        : half_(edge_count, {Label::Unset, Label::Unset}) {}

    int edge_count() const { return static_cast<int>(half_.size()); }

    Label at(int edge_id, int side) const { return half_[edge_id][side]; }
    void set(int edge_id, int side, Label l) { half_[edge_id][side] = l; }
    void set_both(int edge_id, Label s0, Label s1) {
        half_[edge_id] = {s0, s1};
    }

    bool total() const;
    void swap_colors();

    bool operator==(const Labeling&) const = default;

private:
    std::vector<std::array<Label, 2>> half_;
};

// Per-edge direction: Forward means endpoint0 -> endpoint1.
enum class Dir : std::uint8_t { Forward, Backward };

class Orientation {
public:
    Orientation() = default;
    explicit Orientation(int edge_count) : dir_(edge_count, Dir::Forward) {}

    int edge_count() const { return static_cast<int>(dir_.size()); }

    Dir at(int edge_id) const { return dir_[edge_id]; }
    void set(int edge_id, Dir d) { dir_[edge_id] = d; }

    // Head/tail node ids of an oriented edge.
    int head(const TypedMultiGraph& g, int edge_id) const {
        const Edge& e = g.edge(edge_id);
        return dir_[edge_id] == Dir::Forward ? e.v : e.u;
    }
    int tail(const TypedMultiGraph& g, int edge_id) const {
        const Edge& e = g.edge(edge_id);
        return dir_[edge_id] == Dir::Forward ? e.u : e.v;
    }

    bool operator==(const Orientation&) const = default;

private:
    std::vector<Dir> dir_;
};

int red_degree(const TypedMultiGraph& g, const Labeling& lab, int v);
int blue_degree(const TypedMultiGraph& g, const Labeling& lab, int v);
int out_degree(const TypedMultiGraph& g, const Orientation& o, int v);
int in_degree(const TypedMultiGraph& g, const Orientation& o, int v);

inline std::string to_string(EdgeType t) { return t == EdgeType::C ? "C" : "O"; }
inline std::string to_string(Label l) {
    return l == Label::R ? "R" : (l == Label::B ? "B" : "?");
}

}  // namespace degsplit
