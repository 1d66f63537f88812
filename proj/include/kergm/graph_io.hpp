#pragma once

#include "kergm/graph.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>

namespace kergm {

/// Raised on malformed input files; the message carries file and field context.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Graph JSON schema:
//   {"n": int, "node_attrs": [[float,...],...] | null,
//    "edges": [[i,j],...], "edge_attrs": [[float,...],...]}
// Indices are 0-based; edges stored once with i < j; node_attrs holds one
// inner array per node, edge_attrs one per edge. Doubles round-trip
// bit-exactly.
AttributedGraph load_graph(const std::filesystem::path& path);
void save_graph(const AttributedGraph& g, const std::filesystem::path& path);

// Ground-truth JSON: {"mapping": [int,...], "inlier_count": int}.
GroundTruth load_ground_truth(const std::filesystem::path& path);
void save_ground_truth(const GroundTruth& t, const std::filesystem::path& path);

} // namespace kergm
