#pragma once

// Oracles used by the tests. None of these go through the library's
// eigen/kernel code paths: general eigenvalues come from ComplexEigenSolver,
// ranks from FullPivLU, spectra of cycles from the circulant formula.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/linop.hpp"
#include "qwalk/random.hpp"

namespace qwalk::testing {

inline constexpr double pi = std::numbers::pi;

inline double angle_in_0_2pi(std::complex<double> z) {
  double a = std::arg(z);
  if (a < 0) a += 2 * pi;
  if (a >= 2 * pi - 1e-12) a = 0.0;
  return a;
}

/// Eigenvalues of a general square matrix as sorted angles in [0, 2 pi).
inline std::vector<double> unitary_angles(const Operator& u) {
  Eigen::ComplexEigenSolver<Operator> es(u, false);
  std::vector<double> out;
  for (Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(angle_in_0_2pi(es.eigenvalues()(i)));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<double> general_real_eigenvalues(const Operator& a) {
  Eigen::ComplexEigenSolver<Operator> es(a, false);
  std::vector<double> out;
  for (Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()(i).real());
  std::sort(out.begin(), out.end());
  return out;
}

inline Index lu_rank(const Operator& a, double threshold = 1e-9) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  // FullPivLU's threshold is relative to the largest pivot; a noise-level matrix is rank 0
  if (a.cwiseAbs().maxCoeff() <= threshold) return 0;
  Eigen::FullPivLU<Operator> lu(a);
  lu.setThreshold(threshold);
  return lu.rank();
}

inline Operator lu_kernel(const Operator& a, double threshold = 1e-9) {
  if (a.rows() == 0 || a.cwiseAbs().maxCoeff() <= threshold) return Operator::Identity(a.cols(), a.cols());
  Eigen::FullPivLU<Operator> lu(a);
  lu.setThreshold(threshold);
  if (lu.rank() == a.cols()) return Operator(a.cols(), 0);
  return lu.kernel();
}

/// dim(ker a cap ker b) = dim ker a + dim ker b - rank[K_a K_b].
inline Index kernel_intersection_dim(const Operator& a, const Operator& b) {
  const Operator ka = lu_kernel(a);
  const Operator kb = lu_kernel(b);
  Operator joined(a.cols(), ka.cols() + kb.cols());
  joined.leftCols(ka.cols()) = ka;
  joined.rightCols(kb.cols()) = kb;
  return ka.cols() + kb.cols() - lu_rank(joined);
}

/// cos(2 pi k / n), k = 0..n-1, ascending.
inline std::vector<double> cycle_transition_spectrum(int n) {
  std::vector<double> out;
  for (int k = 0; k < n; ++k) out.push_back(std::cos(2 * pi * k / n));
  std::sort(out.begin(), out.end());
  return out;
}

/// The 3 x 3 unitary used to illustrate the induced digraph.
inline Operator example_three_by_three() {
  const double r = 1.0 / std::sqrt(2.0);
  Operator u(3, 3);
  u << r, r, 0,
       0, 0, 1,
       -r, r, 0;
  return u;
}

inline Operator random_hermitian(SeededRng& rng, Index n) {
  const Operator g = rng.gaussian_matrix(n, n);
  return (g + g.adjoint()) / 2.0;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return INFINITY;
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace qwalk::testing
