#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace kergm {

/// Undirected attributed graph. Node attributes are optional (0 rows when
/// absent); edge attributes hold one column per edge, aligned with `edges`.
/// Edges are stored once with i < j, sorted lexicographically.
struct AttributedGraph {
    int n = 0;
    Eigen::MatrixXd node_attrs; // d_N x n, or 0x0 when the graph is unattributed
    std::vector<std::array<int, 2>> edges;
    Eigen::MatrixXd edge_attrs; // d_E x m

    int num_edges() const { return static_cast<int>(edges.size()); }
    int node_attr_dim() const { return static_cast<int>(node_attrs.rows()); }
    int edge_attr_dim() const { return static_cast<int>(edge_attrs.rows()); }
    bool has_node_attrs() const { return node_attrs.size() > 0; }

    Eigen::VectorXd edge_attr(int e) const { return edge_attrs.col(e); }

    /// Index of the undirected edge {i, j}, or -1 if absent.
    int find_edge(int i, int j) const;

    /// Throws std::invalid_argument when an invariant is violated:
    /// endpoint out of range, self-loop, duplicate pair, unsorted edge list,
    /// or attribute shape mismatch.
    void validate() const;

    bool operator==(const AttributedGraph&) const = default;
};

/// Node correspondence for a generated pair: mapping[i] is the node of graph 2
/// matched to node i of graph 1, or kOutlier for outlier nodes.
struct GroundTruth {
    static constexpr int kOutlier = -1;

    std::vector<int> mapping;
    int inlier_count = 0;

    void validate() const;

    bool operator==(const GroundTruth&) const = default;
};

struct SyntheticConfig {
    int n_in = 0;
    int n_out = 0;
    double rho = 1.0;
    double sigma = 0.0;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Fraction of inlier nodes i with perm[i] == truth.mapping[i].
double matching_accuracy(std::span<const int> perm, const GroundTruth& truth);

/// Pads the smaller graph with isolated nodes (zero node attributes) so both
/// have max(n1, n2) nodes. Original indices are preserved.
std::pair<AttributedGraph, AttributedGraph> pad_with_dummy_nodes(const AttributedGraph& g1,
                                                                 const AttributedGraph& g2);

struct SyntheticPair {
    AttributedGraph g1;
    AttributedGraph g2;
    GroundTruth truth;
};

/// Erdos-Renyi pair generator: G1 edges appear with probability rho and carry
/// scalar U[0,1] attributes; G2 carries the permuted inlier edges with
/// N(0, sigma^2) attribute noise; outlier-incident edges are drawn
/// independently per graph with the same density and fresh attributes.
/// Bit-identical output for a fixed config.
SyntheticPair generate_synthetic_pair(const SyntheticConfig& cfg);

/// Symmetric normalized Laplacian I - D^{-1/2} A D^{-1/2}, with 0/0 = 0 for
/// isolated nodes.
Eigen::MatrixXd normalized_laplacian(const AttributedGraph& g);

/// Replaces edge attributes with heat-kernel values: edge (i,j) gets the
/// vector [H_t(i,j)] over t_list where H_t = exp(-t L) via the
/// eigendecomposition of the normalized Laplacian. Edge set unchanged.
AttributedGraph heat_diffusion_attrs(const AttributedGraph& g, const std::vector<double>& t_list);

} // namespace kergm
