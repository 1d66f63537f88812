#pragma once

#include "kergm/graph.hpp"

#include <Eigen/Dense>
#include <functional>
#include <optional>

namespace kergm {

enum class KernelKind { gaussian_sq, gaussian_abs, linear, custom };

/// Edge/node affinity kernel. Gaussian kinds use exp(-gamma * dist) where
/// dist is the squared (gaussian_sq) or plain (gaussian_abs) Euclidean
/// distance. When `scale` is set it takes precedence as the divisor form
/// exp(-dist / scale), i.e. gamma = 1 / scale.
struct KernelConfig {
    KernelKind kind = KernelKind::gaussian_sq;
    double gamma = 1.0;
    std::optional<double> scale;
    std::function<double(const Eigen::VectorXd&, const Eigen::VectorXd&)> custom_fn;

    double effective_gamma() const { return scale ? 1.0 / *scale : gamma; }

    static KernelConfig gaussian(double gamma) { return {KernelKind::gaussian_sq, gamma, {}, {}}; }
    static KernelConfig gaussian_scaled(double divisor) { return {KernelKind::gaussian_sq, 1.0, divisor, {}}; }
    static KernelConfig gaussian_abs(double gamma) { return {KernelKind::gaussian_abs, gamma, {}, {}}; }
    static KernelConfig linear() { return {KernelKind::linear, 1.0, {}, {}}; }
    static KernelConfig custom(std::function<double(const Eigen::VectorXd&, const Eigen::VectorXd&)> fn) {
        return {KernelKind::custom, 1.0, {}, std::move(fn)};
    }
};

double eval_kernel(const KernelConfig& cfg, const Eigen::VectorXd& q1, const Eigen::VectorXd& q2);

/// Node affinity matrix K^N with K^N(i, a) = k^N(p1_i, p2_a). Returns the
/// zero matrix when either graph has no node attributes (the
/// Koopmans-Beckmann reduction).
Eigen::MatrixXd build_node_affinity(const AttributedGraph& g1, const AttributedGraph& g2,
                                    const KernelConfig& cfg);

} // namespace kergm
