#include "kergm/graph.hpp"

#include "kergm/rng.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace kergm {

int AttributedGraph::find_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    const std::array<int, 2> key{i, j};
    auto it = std::lower_bound(edges.begin(), edges.end(), key);
    if (it != edges.end() && *it == key) return static_cast<int>(it - edges.begin());
    return -1;
}

void AttributedGraph::validate() const {
    if (n < 0) throw std::invalid_argument("graph: negative node count");
    if (has_node_attrs() && node_attrs.cols() != n)
        throw std::invalid_argument("graph: node_attrs has " + std::to_string(node_attrs.cols()) +
                                    " columns, expected " + std::to_string(n));
    if (edge_attrs.cols() != num_edges())
        throw std::invalid_argument("graph: edge_attrs has " + std::to_string(edge_attrs.cols()) +
                                    " columns for " + std::to_string(num_edges()) + " edges");
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto [i, j] = edges[e];
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw std::invalid_argument("graph: edge " + std::to_string(e) + " endpoint out of range [0, " +
                                        std::to_string(n) + ")");
        if (i == j) throw std::invalid_argument("graph: edge " + std::to_string(e) + " is a self-loop");
        if (i > j)
            throw std::invalid_argument("graph: edge " + std::to_string(e) + " not stored with i < j");
        if (e > 0 && !(edges[e - 1] < edges[e]))
            throw std::invalid_argument("graph: edge list not sorted/unique at position " + std::to_string(e));
    }
}

void GroundTruth::validate() const {
    std::set<int> seen;
    int inliers = 0;
    for (std::size_t i = 0; i < mapping.size(); ++i) {
        const int m = mapping[i];
        if (m == kOutlier) continue;
        ++inliers;
        if (m < 0) throw std::invalid_argument("ground truth: negative mapping entry");
        if (!seen.insert(m).second)
            throw std::invalid_argument("ground truth: duplicate inlier target " + std::to_string(m));
    }
    if (inliers != inlier_count)
        throw std::invalid_argument("ground truth: " + std::to_string(inliers) +
                                    " non-sentinel entries, inlier_count says " + std::to_string(inlier_count));
}

void SyntheticConfig::validate() const {
    if (n_in < 0 || n_out < 0) throw std::invalid_argument("synthetic config: negative node count");
    if (rho < 0.0 || rho > 1.0) throw std::invalid_argument("synthetic config: rho outside [0, 1]");
    if (sigma < 0.0) throw std::invalid_argument("synthetic config: sigma < 0");
}

double matching_accuracy(std::span<const int> perm, const GroundTruth& truth) {
    if (perm.size() < truth.mapping.size())
        throw std::invalid_argument("matching_accuracy: permutation shorter than ground-truth mapping");
    if (truth.inlier_count == 0) return 0.0;
    int correct = 0;
    for (std::size_t i = 0; i < truth.mapping.size(); ++i) {
        if (truth.mapping[i] == GroundTruth::kOutlier) continue;
        if (perm[i] == truth.mapping[i]) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(truth.inlier_count);
}

namespace {

AttributedGraph pad_to(const AttributedGraph& g, int n_target) {
    if (g.n == n_target) return g;
    AttributedGraph out = g;
    out.n = n_target;
    if (g.has_node_attrs()) {
        out.node_attrs = Eigen::MatrixXd::Zero(g.node_attr_dim(), n_target);
        out.node_attrs.leftCols(g.n) = g.node_attrs;
    }
    return out;
}

} // namespace

std::pair<AttributedGraph, AttributedGraph> pad_with_dummy_nodes(const AttributedGraph& g1,
                                                                 const AttributedGraph& g2) {
    const int n = std::max(g1.n, g2.n);
    return {pad_to(g1, n), pad_to(g2, n)};
}

namespace {

struct EdgeDraft {
    std::vector<std::array<int, 2>> edges;
    std::vector<double> attrs;
};

void sort_draft(EdgeDraft& d) {
    std::vector<int> order(d.edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return d.edges[a] < d.edges[b]; });
    EdgeDraft sorted;
    sorted.edges.reserve(d.edges.size());
    sorted.attrs.reserve(d.attrs.size());
    for (int idx : order) {
        sorted.edges.push_back(d.edges[idx]);
        sorted.attrs.push_back(d.attrs[idx]);
    }
    d = std::move(sorted);
}

AttributedGraph graph_from_draft(int n, EdgeDraft d) {
    sort_draft(d);
    AttributedGraph g;
    g.n = n;
    g.edges = std::move(d.edges);
    g.edge_attrs.resize(1, static_cast<int>(d.attrs.size()));
    for (std::size_t e = 0; e < d.attrs.size(); ++e) g.edge_attrs(0, e) = d.attrs[e];
    return g;
}

} // namespace

SyntheticPair generate_synthetic_pair(const SyntheticConfig& cfg) {
    cfg.validate();
    const int n_in = cfg.n_in;
    const int n = cfg.n_in + cfg.n_out;

    // Independent sub-streams per phase so the draw layout is stable.
    SplitMix64 perm_rng(mix_seed(cfg.seed, 1));
    SplitMix64 inlier_rng(mix_seed(cfg.seed, 2));
    SplitMix64 noise_rng(mix_seed(cfg.seed, 3));
    SplitMix64 outlier1_rng(mix_seed(cfg.seed, 4));
    SplitMix64 outlier2_rng(mix_seed(cfg.seed, 5));

    // Uniform inlier permutation p (Fisher-Yates).
    std::vector<int> p(n_in);
    std::iota(p.begin(), p.end(), 0);
    for (int i = n_in - 1; i > 0; --i) {
        const int j = static_cast<int>(perm_rng.next_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(p[i], p[j]);
    }

    EdgeDraft d1, d2;

    // Inlier-inlier edges of G1 and their images in G2.
    for (int i = 0; i < n_in; ++i) {
        for (int j = i + 1; j < n_in; ++j) {
            if (inlier_rng.uniform01() >= cfg.rho) continue;
            const double q = inlier_rng.uniform01();
            d1.edges.push_back({i, j});
            d1.attrs.push_back(q);
            const int a = std::min(p[i], p[j]);
            const int b = std::max(p[i], p[j]);
            d2.edges.push_back({a, b});
            d2.attrs.push_back(q + noise_rng.normal(0.0, cfg.sigma));
        }
    }

    // Outlier-incident edges, drawn independently per graph.
    auto add_outlier_edges = [&](EdgeDraft& d, SplitMix64& rng) {
        for (int i = 0; i < n; ++i) {
            for (int j = std::max(i + 1, n_in); j < n; ++j) {
                if (rng.uniform01() >= cfg.rho) continue;
                d.edges.push_back({i, j});
                d.attrs.push_back(rng.uniform01());
            }
        }
    };
    add_outlier_edges(d1, outlier1_rng);
    add_outlier_edges(d2, outlier2_rng);

    SyntheticPair pair;
    pair.g1 = graph_from_draft(n, std::move(d1));
    pair.g2 = graph_from_draft(n, std::move(d2));
    pair.truth.mapping.assign(n, GroundTruth::kOutlier);
    for (int i = 0; i < n_in; ++i) pair.truth.mapping[i] = p[i];
    pair.truth.inlier_count = n_in;
    return pair;
}

Eigen::MatrixXd normalized_laplacian(const AttributedGraph& g) {
    const int n = g.n;
    Eigen::VectorXd degree = Eigen::VectorXd::Zero(n);
    for (const auto& [i, j] : g.edges) {
        degree[i] += 1.0;
        degree[j] += 1.0;
    }
    Eigen::VectorXd dinv_sqrt(n);
    for (int i = 0; i < n; ++i) dinv_sqrt[i] = degree[i] > 0.0 ? 1.0 / std::sqrt(degree[i]) : 0.0;

    Eigen::MatrixXd lap = Eigen::MatrixXd::Identity(n, n);
    for (const auto& [i, j] : g.edges) {
        const double w = dinv_sqrt[i] * dinv_sqrt[j];
        lap(i, j) -= w;
        lap(j, i) -= w;
    }
    return lap;
}

AttributedGraph heat_diffusion_attrs(const AttributedGraph& g, const std::vector<double>& t_list) {
    if (t_list.empty()) throw std::invalid_argument("heat_diffusion_attrs: empty diffusion time list");
    for (double t : t_list)
        if (!(t > 0.0)) throw std::invalid_argument("heat_diffusion_attrs: diffusion times must be > 0");

    AttributedGraph out = g;
    const int m = g.num_edges();
    out.edge_attrs.resize(static_cast<int>(t_list.size()), m);
    if (m == 0) return out;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(normalized_laplacian(g));
    const Eigen::VectorXd& lambda = eig.eigenvalues();
    const Eigen::MatrixXd& u = eig.eigenvectors();

    for (std::size_t ti = 0; ti < t_list.size(); ++ti) {
        const Eigen::VectorXd decay = (-t_list[ti] * lambda.array()).exp();
        for (int e = 0; e < m; ++e) {
            const auto [i, j] = g.edges[e];
            out.edge_attrs(static_cast<int>(ti), e) = (u.row(i).array() * u.row(j).array() * decay.transpose().array()).sum();
        }
    }
    return out;
}

} // namespace kergm
