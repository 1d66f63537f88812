#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace kergm {

/// Random Fourier feature map for the Gaussian kernel exp(-gamma ||q-q'||^2):
/// feature_i(q) = sqrt(2/D) * cos(omega_i . q + b_i). Frequencies are drawn
/// N(0, 2*gamma*I) and phases U[0, 2*pi), the combination under which
/// E[<feature(q1), feature(q2)>] equals the kernel (checked by the
/// Monte-Carlo convergence test).
struct FourierFeatureMap {
    Eigen::MatrixXd omegas; // D x d_E
    Eigen::VectorXd phases; // D
    double normalizer = 0.0;

    int feature_dim() const { return static_cast<int>(omegas.rows()); }
    int input_dim() const { return static_cast<int>(omegas.cols()); }
};

FourierFeatureMap sample_fourier_map(double gamma, int feature_dim, int input_dim, std::uint64_t seed);

Eigen::VectorXd apply_fourier_map(const FourierFeatureMap& map, const Eigen::VectorXd& q);

/// Columns of `qs` are attribute vectors; returns the D x m feature matrix.
Eigen::MatrixXd apply_fourier_map_batch(const FourierFeatureMap& map, const Eigen::MatrixXd& qs);

} // namespace kergm
