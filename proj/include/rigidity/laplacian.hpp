#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "rigidity/framework.hpp"

namespace rigidity {

/// Symmetric positive edge weights, one entry per unordered pair.
class EdgeWeights {
 public:
  void set(int i, int j, double w) { map_[key(i, j)] = w; }

  bool contains(int i, int j) const { return map_.count(key(i, j)) > 0; }

  double at(int i, int j) const {
    auto it = map_.find(key(i, j));
    if (it == map_.end())
      throw MissingWeight("no weight for edge {" + std::to_string(i) + "," +
                          std::to_string(j) + "}");
    return it->second;
  }

  static EdgeWeights unit(const Graph& g) {
    EdgeWeights w;
    for (const auto& [i, j] : g.edges()) w.set(i, j, 1.0);
    return w;
  }

 private:
  static std::uint64_t key(int i, int j) {
    auto [a, b] = make_edge(i, j);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
  }
  std::unordered_map<std::uint64_t, double> map_;
};

/// Weighted bearing Laplacian, a dense symmetric d|V| x d|V| matrix of
/// d x d blocks: -w_ij P_ij off the diagonal for edges, row sums of the
/// edge terms on the diagonal.
struct BearingLaplacian {
  Eigen::MatrixXd matrix;
  int dim = 0;
  int vertex_count = 0;
};

inline BearingLaplacian bearing_laplacian(const Framework& f,
                                          const EdgeWeights& w) {
  const int d = f.dim;
  const int n = f.vertex_count();
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(d * n, d * n);
  for (const auto& [i, j] : f.graph.edges()) {
    const double w_ij = w.at(i, j);
    Eigen::MatrixXd wP =
        w_ij * projection(bearing(f.positions.col(i), f.positions.col(j)));
    B.block(d * i, d * i, d, d) += wP;
    B.block(d * j, d * j, d, d) += wP;
    B.block(d * i, d * j, d, d) = -wP;
    B.block(d * j, d * i, d, d) = -wP;
  }
  return BearingLaplacian{std::move(B), d, n};
}

/// Full eigendecomposition, eigenvalues ascending, eigenvectors orthonormal
/// and aligned by index.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
};

inline Spectrum spectrum(const BearingLaplacian& B) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(B.matrix);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("eigendecomposition did not converge");
  return Spectrum{solver.eigenvalues(), solver.eigenvectors()};
}

/// The (d+2)-th smallest eigenvalue. Positive exactly when the framework
/// is infinitesimally bearing rigid.
inline double rigidity_eigenvalue(const Spectrum& s, int dim) {
  if (s.eigenvalues.size() < dim + 2)
    throw UnsupportedSize("spectrum too small for a rigidity eigenvalue");
  return s.eigenvalues(dim + 1);
}

inline double rigidity_eigenvalue(const BearingLaplacian& B) {
  return rigidity_eigenvalue(spectrum(B), B.dim);
}

/// Spectral test for infinitesimal bearing rigidity. Agrees with the rank
/// test for any strictly positive weights.
inline bool is_ibr_spectral(const Framework& f, const EdgeWeights& w,
                            double tol = kRankTol) {
  if (f.vertex_count() < 2)
    throw UnsupportedSize("bearing rigidity needs at least two vertices");
  Spectrum s = spectrum(bearing_laplacian(f, w));
  const double lambda_max = s.eigenvalues(s.eigenvalues.size() - 1);
  return rigidity_eigenvalue(s, f.dim) > tol * lambda_max;
}

inline bool is_ibr_spectral(const Framework& f, double tol = kRankTol) {
  return is_ibr_spectral(f, EdgeWeights::unit(f.graph), tol);
}

/// u^T B u evaluated through the assembled matrix.
inline double quadratic_form(const BearingLaplacian& B,
                             const Eigen::VectorXd& u) {
  return u.dot(B.matrix * u);
}

/// The same quadratic form evaluated edge by edge,
/// sum of w_ij (u_i - u_j)^T P_ij (u_i - u_j).
inline double edge_quadratic_form(const Framework& f, const EdgeWeights& w,
                                  const Eigen::VectorXd& u) {
  const int d = f.dim;
  double total = 0.0;
  for (const auto& [i, j] : f.graph.edges()) {
    Eigen::MatrixXd P =
        projection(bearing(f.positions.col(i), f.positions.col(j)));
    Eigen::VectorXd diff = u.segment(d * i, d) - u.segment(d * j, d);
    total += w.at(i, j) * diff.dot(P * diff);
  }
  return total;
}

/// True when P_ij (u_i - u_j) vanishes on every edge, which is equivalent
/// to B u = 0 for positive weights.
inline bool null_test(const Framework& f, const EdgeWeights& w,
                      const Eigen::VectorXd& u, double tol) {
  const int d = f.dim;
  for (const auto& [i, j] : f.graph.edges()) {
    if (!w.contains(i, j))
      throw MissingWeight("no weight for edge {" + std::to_string(i) + "," +
                          std::to_string(j) + "}");
    Eigen::MatrixXd P =
        projection(bearing(f.positions.col(i), f.positions.col(j)));
    Eigen::VectorXd diff = u.segment(d * i, d) - u.segment(d * j, d);
    if ((P * diff).norm() > tol) return false;
  }
  return true;
}

/// Recover the free vertex positions from anchor positions by solving the
/// anchored block system B_ff p_f = -B_fa p_a. The full realization is
/// returned with anchor columns copied through. Throws NotLocalizable when
/// the free block is singular.
inline Eigen::MatrixXd localize(const Framework& f, const EdgeWeights& w,
                                const std::map<int, Eigen::VectorXd>& anchors,
                                double tol = kRankTol) {
  if (anchors.size() < 2)
    throw Error("localization needs at least two anchors");
  const int d = f.dim;
  const int n = f.vertex_count();
  std::vector<int> free_ids;
  for (int i = 0; i < n; ++i)
    if (!anchors.count(i)) free_ids.push_back(i);

  BearingLaplacian B = bearing_laplacian(f, w);
  const int nf = static_cast<int>(free_ids.size());
  Eigen::MatrixXd B_ff(d * nf, d * nf);
  for (int a = 0; a < nf; ++a)
    for (int b = 0; b < nf; ++b)
      B_ff.block(d * a, d * b, d, d) =
          B.matrix.block(d * free_ids[a], d * free_ids[b], d, d);

  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(d * nf);
  for (int a = 0; a < nf; ++a)
    for (const auto& [id, pos] : anchors)
      rhs.segment(d * a, d) -= B.matrix.block(d * free_ids[a], d * id, d, d) * pos;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(B_ff);
  if (es.info() != Eigen::Success)
    throw NumericalFailure("eigendecomposition of the free block failed");
  const auto& ev = es.eigenvalues();
  if (nf > 0) {
    const double lambda_max = ev(ev.size() - 1);
    if (lambda_max <= 0.0 || ev(0) <= tol * lambda_max)
      throw NotLocalizable("free block of the bearing Laplacian is singular");
  }

  Eigen::MatrixXd out(d, n);
  for (const auto& [id, pos] : anchors) out.col(id) = pos;
  if (nf > 0) {
    Eigen::VectorXd sol =
        es.eigenvectors() *
        (es.eigenvectors().transpose() * rhs).cwiseQuotient(ev);
    for (int a = 0; a < nf; ++a) out.col(free_ids[a]) = sol.segment(d * a, d);
  }
  return out;
}

}  // namespace rigidity
