#include "qwalk/linop.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qwalk/errors.hpp"

namespace qwalk {

const char* to_string(Band b) {
  switch (b) {
    case Band::interior: return "interior";
    case Band::plus_one: return "plus_one";
    case Band::minus_one: return "minus_one";
    case Band::other: return "other";
  }
  return "unknown";
}

Band classify(double lambda, double tol_ker) {
  if (std::abs(lambda - 1.0) <= tol_ker) return Band::plus_one;
  if (std::abs(lambda + 1.0) <= tol_ker) return Band::minus_one;
  if (std::abs(lambda) < 1.0 - tol_ker) return Band::interior;
  return Band::other;
}

Operator SpectralDecomposition::band_vectors(Band b) const {
  Operator out(eigenvectors.rows(), band_count(b));
  Index col = 0;
  for (Index k = 0; k < size(); ++k)
    if (bands[static_cast<std::size_t>(k)] == b) out.col(col++) = eigenvectors.col(k);
  return out;
}

Index SpectralDecomposition::band_count(Band b) const {
  Index n = 0;
  for (auto x : bands) n += (x == b);
  return n;
}

SpectralDecomposition hermitian_eig(const Operator& a, double tol_ker) {
  if (a.rows() != a.cols()) {
    std::ostringstream msg;
    msg << "hermitian_eig: operator is " << a.rows() << "x" << a.cols();
    throw DimensionError(msg.str());
  }
  const double scale = a.norm();
  const double asym = (a - a.adjoint()).norm();
  if (asym > 1e-12 * scale) {
    std::ostringstream msg;
    msg << "hermitian_eig: ||a - a^*|| = " << asym << " exceeds 1e-12 * ||a||";
    throw DomainError(msg.str());
  }
  SpectralDecomposition dec;
  dec.tol_ker = tol_ker;
  if (a.rows() == 0) {
    dec.eigenvectors = Operator(0, 0);
    return dec;
  }
  const Operator sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Operator> solver(sym);
  if (solver.info() != Eigen::Success) throw ConsistencyError("hermitian_eig: solver did not converge");
  dec.eigenvalues = solver.eigenvalues();
  dec.eigenvectors = solver.eigenvectors();
  dec.bands.reserve(static_cast<std::size_t>(dec.eigenvalues.size()));
  for (Index k = 0; k < dec.eigenvalues.size(); ++k)
    dec.bands.push_back(classify(dec.eigenvalues[k], tol_ker));
  return dec;
}

Operator apply_function(const SpectralDecomposition& dec,
                        const std::function<Complex(double)>& f) {
  const Index n = dec.eigenvectors.rows();
  Eigen::VectorXcd values(dec.size());
  for (Index k = 0; k < dec.size(); ++k) {
    const Complex fk = f(dec.eigenvalues[k]);
    if (!std::isfinite(fk.real()) || !std::isfinite(fk.imag())) {
      std::ostringstream msg;
      msg << "apply_function: f undefined at eigenvalue " << dec.eigenvalues[k];
      throw DomainError(msg.str());
    }
    values[k] = fk;
  }
  if (n == 0) return Operator(0, 0);
  return dec.eigenvectors * values.asDiagonal() * dec.eigenvectors.adjoint();
}

double clamped_arccos(double lambda) {
  if (std::abs(lambda) > 1.0 + tol::arccos_clamp) {
    std::ostringstream msg;
    msg << "arccos argument " << lambda << " outside [-1, 1]";
    throw DomainError(msg.str());
  }
  return std::acos(std::clamp(lambda, -1.0, 1.0));
}

Subspace::Subspace(Index ambient, Operator basis) : ambient_(ambient), basis_(std::move(basis)) {
  if (basis_.cols() == 0) basis_.resize(ambient_, 0);
  if (basis_.rows() != ambient_) throw DimensionError("subspace basis rows differ from ambient dimension");
}

Subspace Subspace::zero(Index ambient) { return Subspace(ambient, Operator(ambient, 0)); }

Subspace Subspace::full(Index ambient) { return Subspace(ambient, identity(ambient)); }

Operator identity(Index n) { return Operator::Identity(n, n); }

namespace {

using Svd = Eigen::JacobiSVD<Operator>;

}  // namespace

double norm2(const Operator& a) {
  if (a.size() == 0) return 0.0;
  Svd svd(a);
  return svd.singularValues()(0);
}

Subspace nullspace(const Operator& a, double tol, double scale) {
  const Index n = a.cols();
  if (a.rows() == 0 || n == 0) return Subspace::full(n);
  Svd svd(a, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double reference = std::max(sigma(0), scale);
  if (reference == 0.0) return Subspace::full(n);
  const double cutoff = tol * reference;
  Index rank = 0;
  while (rank < sigma.size() && sigma(rank) > cutoff) ++rank;
  return Subspace(n, svd.matrixV().rightCols(n - rank));
}

Subspace range(const Operator& m, double tol) {
  const Index n = m.rows();
  if (m.cols() == 0 || n == 0) return Subspace::zero(n);
  Svd svd(m, Eigen::ComputeThinU);
  const auto& sigma = svd.singularValues();
  const double smax = sigma(0);
  if (smax == 0.0) return Subspace::zero(n);
  Index rank = 0;
  while (rank < sigma.size() && sigma(rank) > tol * smax) ++rank;
  return Subspace(n, svd.matrixU().leftCols(rank));
}

Subspace intersect_subspaces(const Subspace& x, const Subspace& y, double tol) {
  if (x.ambient_dim() != y.ambient_dim()) throw DimensionError("intersect_subspaces: ambient mismatch");
  const Index n = x.ambient_dim();
  Operator stacked(2 * n, n);
  stacked.topRows(n) = identity(n) - projector(x);
  stacked.bottomRows(n) = identity(n) - projector(y);
  // both complements zero means x = y = full space
  if (stacked.norm() == 0.0) return Subspace::full(n);
  return nullspace(stacked, tol, 1.0);
}

Subspace span_union(const Subspace& x, const Subspace& y, double tol) {
  if (x.ambient_dim() != y.ambient_dim()) throw DimensionError("span_union: ambient mismatch");
  Operator joined(x.ambient_dim(), x.dim() + y.dim());
  joined.leftCols(x.dim()) = x.basis();
  joined.rightCols(y.dim()) = y.basis();
  return range(joined, tol);
}

Subspace orth_complement(const Subspace& x, double tol) {
  if (x.dim() == 0) return Subspace::full(x.ambient_dim());
  return nullspace(projector(x), tol, 1.0);
}

Operator projector(const Subspace& x) { return x.basis() * x.basis().adjoint(); }

double projector_distance(const Subspace& x, const Subspace& y) {
  if (x.ambient_dim() != y.ambient_dim()) throw DimensionError("projector_distance: ambient mismatch");
  return (projector(x) - projector(y)).norm();
}

double max_overlap(const Subspace& x, const Subspace& y) {
  if (x.dim() == 0 || y.dim() == 0) return 0.0;
  return (x.basis().adjoint() * y.basis()).cwiseAbs().maxCoeff();
}

}  // namespace qwalk
