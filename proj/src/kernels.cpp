#include "kergm/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace kergm {

double eval_kernel(const KernelConfig& cfg, const Eigen::VectorXd& q1, const Eigen::VectorXd& q2) {
    if (q1.size() != q2.size()) throw std::invalid_argument("eval_kernel: attribute dimension mismatch");
    switch (cfg.kind) {
        case KernelKind::gaussian_sq:
            return std::exp(-cfg.effective_gamma() * (q1 - q2).squaredNorm());
        case KernelKind::gaussian_abs:
            return std::exp(-cfg.effective_gamma() * (q1 - q2).norm());
        case KernelKind::linear:
            return q1.dot(q2);
        case KernelKind::custom:
            if (!cfg.custom_fn) throw std::invalid_argument("eval_kernel: custom kind without a function");
            return cfg.custom_fn(q1, q2);
    }
    throw std::logic_error("eval_kernel: unknown kind");
}

Eigen::MatrixXd build_node_affinity(const AttributedGraph& g1, const AttributedGraph& g2,
                                    const KernelConfig& cfg) {
    const int n1 = g1.n;
    const int n2 = g2.n;
    if (!g1.has_node_attrs() || !g2.has_node_attrs()) return Eigen::MatrixXd::Zero(n1, n2);
    if (g1.node_attr_dim() != g2.node_attr_dim())
        throw std::invalid_argument("build_node_affinity: node attribute dimension mismatch");
    Eigen::MatrixXd kn(n1, n2);
    for (int i = 0; i < n1; ++i)
        for (int a = 0; a < n2; ++a)
            kn(i, a) = eval_kernel(cfg, g1.node_attrs.col(i), g2.node_attrs.col(a));
    return kn;
}

} // namespace kergm
