#pragma once

#include <iosfwd>
#include <string>

#include "degsplit/graph.hpp"

namespace degsplit {

// On-disk formats:
//   graph       {"n": N, "edges": [[u, v, "C"|"O"], ...]}
//   labeling    {"labels": [["R"|"B", "R"|"B"], ...]}   (entry i = edge i,
//               order [endpoint0-half, endpoint1-half])
//   orientation {"orient": [0|1, ...]}                  (0 = endpoint0 -> endpoint1)
// Malformed input raises ParseError with field context.

TypedMultiGraph read_graph_json(std::istream& in);
TypedMultiGraph read_graph_file(const std::string& path);
std::string graph_to_json(const TypedMultiGraph& g);

Labeling read_labeling_json(std::istream& in, const TypedMultiGraph& g);
Labeling read_labeling_file(const std::string& path, const TypedMultiGraph& g);
std::string labeling_to_json(const Labeling& lab);

Orientation read_orientation_json(std::istream& in, const TypedMultiGraph& g);
Orientation read_orientation_file(const std::string& path, const TypedMultiGraph& g);
std::string orientation_to_json(const Orientation& o);

void write_file(const std::string& path, const std::string& contents);

}  // namespace degsplit
