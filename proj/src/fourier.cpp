#include "kergm/fourier.hpp"

#include "kergm/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kergm {

FourierFeatureMap sample_fourier_map(double gamma, int feature_dim, int input_dim, std::uint64_t seed) {
    if (feature_dim < 1) throw std::invalid_argument("sample_fourier_map: feature dimension must be >= 1");
    if (!(gamma > 0.0)) throw std::invalid_argument("sample_fourier_map: gamma must be > 0");
    if (input_dim < 1) throw std::invalid_argument("sample_fourier_map: input dimension must be >= 1");

    SplitMix64 rng(mix_seed(seed, 0x0F0Fu));
    FourierFeatureMap map;
    map.omegas.resize(feature_dim, input_dim);
    map.phases.resize(feature_dim);
    const double freq_std = std::sqrt(2.0 * gamma);
    for (int i = 0; i < feature_dim; ++i)
        for (int d = 0; d < input_dim; ++d) map.omegas(i, d) = rng.normal(0.0, freq_std);
    for (int i = 0; i < feature_dim; ++i) map.phases[i] = rng.uniform(0.0, 2.0 * std::numbers::pi);
    map.normalizer = std::sqrt(2.0 / static_cast<double>(feature_dim));
    return map;
}

Eigen::VectorXd apply_fourier_map(const FourierFeatureMap& map, const Eigen::VectorXd& q) {
    if (q.size() != map.input_dim()) throw std::invalid_argument("apply_fourier_map: attribute dimension mismatch");
    return map.normalizer * ((map.omegas * q + map.phases).array().cos());
}

Eigen::MatrixXd apply_fourier_map_batch(const FourierFeatureMap& map, const Eigen::MatrixXd& qs) {
    if (qs.rows() != map.input_dim())
        throw std::invalid_argument("apply_fourier_map_batch: attribute dimension mismatch");
    return map.normalizer * ((map.omegas * qs).colwise() + map.phases).array().cos();
}

} // namespace kergm
