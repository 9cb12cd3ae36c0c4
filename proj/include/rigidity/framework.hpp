#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <utility>
#include <vector>

#include "rigidity/graph.hpp"

namespace rigidity {

/// Relative singular value / eigenvalue threshold used by the numerical
/// rank and spectral positivity tests.
inline constexpr double kRankTol = 1e-8;

/// An undirected graph together with an injective realization in R^d.
/// Positions are stored one vertex per column, so flattening the matrix
/// column-major yields the stacked position vector.
struct Framework {
  Graph graph;
  int dim;
  Eigen::MatrixXd positions;  // dim x |V|, column i = p_i

  Framework(Graph g, Eigen::MatrixXd pos)
      : graph(std::move(g)), dim(static_cast<int>(pos.rows())),
        positions(std::move(pos)) {
    if (dim < 2) throw Error("framework dimension must be at least 2");
    if (positions.cols() != graph.vertex_count())
      throw Error("positions count does not match vertex count");
    const int n = graph.vertex_count();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((positions.col(i) - positions.col(j)).squaredNorm() == 0.0)
          throw DegenerateRealization("vertices " + std::to_string(i) + " and " +
                                      std::to_string(j) + " coincide");
  }

  int vertex_count() const { return graph.vertex_count(); }
  int edge_count() const { return graph.edge_count(); }

  Eigen::VectorXd position(int i) const { return positions.col(i); }

  /// Stacked realization (p_0, p_1, ..., p_{n-1}) in R^{d|V|}.
  Eigen::VectorXd stacked() const {
    return Eigen::Map<const Eigen::VectorXd>(positions.data(),
                                             positions.size());
  }
};

/// Unit vector pointing from p_i toward p_j.
inline Eigen::VectorXd bearing(const Eigen::VectorXd& p_i,
                               const Eigen::VectorXd& p_j) {
  Eigen::VectorXd diff = p_j - p_i;
  double norm = diff.norm();
  if (norm == 0.0)
    throw DegenerateRealization("bearing between coincident points");
  return diff / norm;
}

/// Stacks the bearing of every edge, in canonical edge order; the block of
/// edge {i,j} with i < j points from i toward j.
inline Eigen::VectorXd bearing_function(const Framework& f) {
  const int d = f.dim;
  Eigen::VectorXd stacked(d * f.edge_count());
  int row = 0;
  for (const auto& [i, j] : f.graph.edges()) {
    stacked.segment(row, d) = bearing(f.positions.col(i), f.positions.col(j));
    row += d;
  }
  return stacked;
}

/// Orthogonal projector onto the complement of a unit bearing,
/// P = I - b b^T. P is symmetric, idempotent and annihilates b.
inline Eigen::MatrixXd projection(const Eigen::VectorXd& b) {
  if (std::abs(b.norm() - 1.0) > 1e-9)
    throw InvalidBearing("projection requires a unit vector");
  const auto d = b.size();
  return Eigen::MatrixXd::Identity(d, d) - b * b.transpose();
}

/// Jacobian of the stacked bearing function with respect to the stacked
/// positions. Row block of edge {i,j} (i < j) holds -P_ij/d_ij in column
/// block i and +P_ij/d_ij in column block j.
inline Eigen::MatrixXd bearing_rigidity_matrix(const Framework& f) {
  const int d = f.dim;
  const int n = f.vertex_count();
  Eigen::MatrixXd R = Eigen::MatrixXd::Zero(d * f.edge_count(), d * n);
  int row = 0;
  for (const auto& [i, j] : f.graph.edges()) {
    Eigen::VectorXd b = bearing(f.positions.col(i), f.positions.col(j));
    double dist = (f.positions.col(j) - f.positions.col(i)).norm();
    Eigen::MatrixXd P_over_d = projection(b) / dist;
    R.block(row, d * i, d, d) = -P_over_d;
    R.block(row, d * j, d, d) = P_over_d;
    row += d;
  }
  return R;
}

/// Orthonormal basis of the infinitesimal trivial motions, the span of the
/// uniform translations together with the realization itself. Dependent
/// columns are dropped, so the result has d+1 columns whenever the
/// realization is injective with at least two vertices.
inline Eigen::MatrixXd trivial_motion_basis(const Eigen::MatrixXd& positions) {
  const int d = static_cast<int>(positions.rows());
  const int n = static_cast<int>(positions.cols());
  Eigen::MatrixXd span(d * n, d + 1);
  span.setZero();
  for (int v = 0; v < n; ++v)
    span.block(d * v, 0, d, d) = Eigen::MatrixXd::Identity(d, d);
  span.col(d) = Eigen::Map<const Eigen::VectorXd>(positions.data(),
                                                  positions.size());
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(span);
  qr.setThreshold(1e-10);
  const auto rank = qr.rank();
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(d * n, rank);
  return q;
}

/// Number of singular values above tol times the largest one.
inline int numerical_rank(const Eigen::MatrixXd& m, double tol = kRankTol) {
  if (m.size() == 0) return 0;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > tol * sv(0)) ++rank;
  return rank;
}

/// Rank test for infinitesimal bearing rigidity: the bearing rigidity
/// matrix must reach rank d|V| - d - 1.
inline bool is_ibr_rank(const Framework& f, double tol = kRankTol) {
  if (f.vertex_count() < 2)
    throw UnsupportedSize("bearing rigidity needs at least two vertices");
  const int target = f.dim * f.vertex_count() - f.dim - 1;
  return numerical_rank(bearing_rigidity_matrix(f), tol) == target;
}

/// Distance rigidity matrix: row of edge {i,j} holds (p_i - p_j)^T in
/// column block i and its negation in block j.
inline Eigen::MatrixXd distance_rigidity_matrix(const Framework& f) {
  const int d = f.dim;
  Eigen::MatrixXd R = Eigen::MatrixXd::Zero(f.edge_count(),
                                            d * f.vertex_count());
  int row = 0;
  for (const auto& [i, j] : f.graph.edges()) {
    Eigen::VectorXd diff = f.positions.col(i) - f.positions.col(j);
    R.block(row, d * i, 1, d) = diff.transpose();
    R.block(row, d * j, 1, d) = -diff.transpose();
    ++row;
  }
  return R;
}

/// Rank test for infinitesimal distance rigidity,
/// rank = d|V| - d(d+1)/2. Requires |V| >= d.
inline bool is_idr(const Framework& f, double tol = kRankTol) {
  if (f.vertex_count() < f.dim)
    throw UnsupportedSize("distance rigidity rank test needs |V| >= d");
  const int d = f.dim;
  const int target = d * f.vertex_count() - d * (d + 1) / 2;
  return numerical_rank(distance_rigidity_matrix(f), tol) == target;
}

}  // namespace rigidity
