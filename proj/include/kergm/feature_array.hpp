#pragma once

#include "kergm/fourier.hpp"
#include "kergm/graph.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <vector>

namespace kergm {

/// The n x n array of D-dimensional edge feature vectors, stored as D sparse
/// symmetric slices sharing one CSR index structure (slice d holds component
/// d of the edge feature at both (i,j) and (j,i); zero elsewhere). Space cost
/// O(D*m).
class FeatureArray {
  public:
    FeatureArray() = default;

    /// Builds from per-edge feature columns (D x m, aligned with g.edges).
    static FeatureArray from_edge_features(const AttributedGraph& g, const Eigen::MatrixXd& features);

    int n() const { return n_; }
    int feature_dim() const { return feature_dim_; }
    int nnz() const { return static_cast<int>(col_idx_.size()); }

    using SliceMap = Eigen::Map<const Eigen::SparseMatrix<double, Eigen::RowMajor>>;
    SliceMap slice(int d) const {
        return SliceMap(n_, n_, nnz(), row_ptr_.data(), col_idx_.data(), values_.col(d).data());
    }

    /// Feature vector stored at (i, j); zero vector if (i, j) is not an edge.
    Eigen::VectorXd entry(int i, int j) const;

    /// ||Psi||^2 in the array Frobenius norm: the sum of squared feature
    /// components over all (i,j) entries (both orientations).
    double squared_norm() const { return values_.squaredNorm(); }

    /// <Psi, Xi> over matched entries; arrays must share n and D.
    double frobenius_inner(const FeatureArray& other) const;

    /// Psi (.) P for a permutation P given as perm[j] = row index moved to
    /// column j', i.e. column j of the result is column perm_inv... column
    /// permutation by the matrix with P(i, j) = [perm[i] == j].
    FeatureArray permuted_columns(const std::vector<int>& perm) const;

    /// Psi * Psi = sum_d slice_d * slice_d (symmetric n x n).
    Eigen::MatrixXd gram_self() const;

    const Eigen::VectorXi& row_ptr() const { return row_ptr_; }
    const Eigen::VectorXi& col_idx() const { return col_idx_; }
    const Eigen::MatrixXd& values() const { return values_; } // nnz x D

  private:
    int n_ = 0;
    int feature_dim_ = 0;
    Eigen::VectorXi row_ptr_; // n + 1
    Eigen::VectorXi col_idx_; // nnz, sorted within each row
    Eigen::MatrixXd values_;  // nnz x D, column d = slice d

    friend Eigen::MatrixXd cross_gram(const FeatureArray&, const Eigen::MatrixXd&, const FeatureArray&);
};

FeatureArray build_feature_array(const AttributedGraph& g, const FourierFeatureMap& map);

inline Eigen::MatrixXd gram_self(const FeatureArray& psi) { return psi.gram_self(); }

/// (Psi1 (.) X) * Psi2 = sum_d slice1_d * X * slice2_d; linear in X.
Eigen::MatrixXd cross_gram(const FeatureArray& psi1, const Eigen::MatrixXd& x, const FeatureArray& psi2);

} // namespace kergm
