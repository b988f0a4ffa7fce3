#include "degsplit/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace degsplit {

using nlohmann::json;

namespace {

json parse(std::istream& in, const char* what) {
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
    return j;
}

std::ifstream open_for_read(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    return f;
}

EdgeType parse_type(const json& j, int edge_idx) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "C") return EdgeType::C;
        if (s == "O") return EdgeType::O;
    }
    throw ParseError("edges[" + std::to_string(edge_idx) +
                     "][2]: expected \"C\" or \"O\"");
}

Label parse_label(const json& j, int edge_idx, int side) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "R") return Label::R;
        if (s == "B") return Label::B;
    }
    throw ParseError("labels[" + std::to_string(edge_idx) + "][" +
                     std::to_string(side) + "]: expected \"R\" or \"B\"");
}

}  // namespace

TypedMultiGraph read_graph_json(std::istream& in) {
    json j = parse(in, "graph");
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("graph: expected object with \"n\" and \"edges\"");
    if (!j["n"].is_number_integer())
        throw ParseError("graph.n: expected integer");
    int n = j["n"].get<int>();
    if (!j["edges"].is_array()) throw ParseError("graph.edges: expected array");

    std::vector<EdgeSpec> edges;
    int idx = 0;
    for (const json& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError("edges[" + std::to_string(idx) +
                             "]: expected [u, v, \"C\"|\"O\"]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>(), parse_type(e[2], idx));
        ++idx;
    }
    try {
        return TypedMultiGraph::build(n, edges);
    } catch (const Error& e) {
        throw ParseError(std::string("graph: ") + e.what());
    }
}

TypedMultiGraph read_graph_file(const std::string& path) {
    auto f = open_for_read(path);
    return read_graph_json(f);
}

std::string graph_to_json(const TypedMultiGraph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges())
        edges.push_back({e.u, e.v, to_string(e.type)});
    json j{{"n", g.node_count()}, {"edges", std::move(edges)}};
    return j.dump();
}

Labeling read_labeling_json(std::istream& in, const TypedMultiGraph& g) {
    json j = parse(in, "labeling");
    if (!j.is_object() || !j.contains("labels") || !j["labels"].is_array())
        throw ParseError("labeling: expected object with \"labels\" array");
    const json& labels = j["labels"];
    if (static_cast<int>(labels.size()) != g.edge_count())
        throw ParseError("labels: expected " + std::to_string(g.edge_count()) +
                         " entries, got " + std::to_string(labels.size()));
    Labeling lab(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        const json& e = labels[i];
        if (!e.is_array() || e.size() != 2)
            throw ParseError("labels[" + std::to_string(i) +
                             "]: expected [half0, half1]");
        lab.set_both(i, parse_label(e[0], i, 0), parse_label(e[1], i, 1));
    }
    return lab;
}

Labeling read_labeling_file(const std::string& path, const TypedMultiGraph& g) {
    auto f = open_for_read(path);
    return read_labeling_json(f, g);
}

std::string labeling_to_json(const Labeling& lab) {
    json labels = json::array();
    for (int i = 0; i < lab.edge_count(); ++i) {
        if (lab.at(i, 0) == Label::Unset || lab.at(i, 1) == Label::Unset)
            throw Error("labeling must be total before serialization");
        labels.push_back({to_string(lab.at(i, 0)), to_string(lab.at(i, 1))});
    }
    json j{{"labels", std::move(labels)}};
    return j.dump();
}

Orientation read_orientation_json(std::istream& in, const TypedMultiGraph& g) {
    json j = parse(in, "orientation");
    if (!j.is_object() || !j.contains("orient") || !j["orient"].is_array())
        throw ParseError("orientation: expected object with \"orient\" array");
    const json& dirs = j["orient"];
    if (static_cast<int>(dirs.size()) != g.edge_count())
        throw ParseError("orient: expected " + std::to_string(g.edge_count()) +
                         " entries, got " + std::to_string(dirs.size()));
    Orientation o(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        if (!dirs[i].is_number_integer() ||
            (dirs[i].get<int>() != 0 && dirs[i].get<int>() != 1))
            throw ParseError("orient[" + std::to_string(i) + "]: expected 0 or 1");
        o.set(i, dirs[i].get<int>() == 0 ? Dir::Forward : Dir::Backward);
    }
    return o;
}

Orientation read_orientation_file(const std::string& path, const TypedMultiGraph& g) {
    auto f = open_for_read(path);
    return read_orientation_json(f, g);
}

std::string orientation_to_json(const Orientation& o) {
    json dirs = json::array();
    for (int i = 0; i < o.edge_count(); ++i)
        dirs.push_back(o.at(i) == Dir::Forward ? 0 : 1);
    json j{{"orient", std::move(dirs)}};
    return j.dump();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open " + path + " for writing");
    f << contents << '\n';
}

}  // namespace degsplit
