#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace qwalk {

using Complex = std::complex<double>;
using Operator = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

namespace tol {
inline constexpr double kernel = 1e-9;   // default tol_ker, relative
inline constexpr double eig = 1e-11;
inline constexpr double orth = 1e-11;
inline constexpr double arccos_clamp = 1e-9;
}  // namespace tol

enum class Band { interior, plus_one, minus_one, other };

const char* to_string(Band b);

/// Band of a real eigenvalue: within tol of +1 or -1, strictly inside
/// (-1 + tol, 1 - tol), or outside [-1, 1] beyond tol.
Band classify(double lambda, double tol_ker = tol::kernel);

struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;  // ascending
  Operator eigenvectors;        // orthonormal columns
  std::vector<Band> bands;
  double tol_ker = tol::kernel;

  Index size() const { return eigenvalues.size(); }
  // Orthonormal eigenvectors whose band equals b, as columns.
  Operator band_vectors(Band b) const;
  Index band_count(Band b) const;
};

/// Throws DimensionError for non-square input and DomainError when
/// ||a - a^*|| exceeds 1e-12 * ||a||. The input is symmetrized first.
SpectralDecomposition hermitian_eig(const Operator& a, double tol_ker = tol::kernel);

/// Sum_k f(lambda_k) v_k v_k^*. Throws DomainError if f returns a non-finite value.
Operator apply_function(const SpectralDecomposition& dec,
                        const std::function<Complex(double)>& f);

/// arccos restricted to [-1, 1]; values within tol::arccos_clamp outside
/// are clamped, anything further out is a DomainError.
double clamped_arccos(double lambda);

/// Orthonormal basis of a subspace of C^ambient (possibly zero columns).
class Subspace {
 public:
  Subspace(Index ambient, Operator basis);
  static Subspace zero(Index ambient);
  static Subspace full(Index ambient);

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.cols(); }
  const Operator& basis() const { return basis_; }

 private:
  Index ambient_;
  Operator basis_;
};

/// Spectral norm.
double norm2(const Operator& a);

/// {v : ||a v|| <= tol max(||a||, scale) ||v||} via the singular value
/// decomposition of a. Pass scale = 1 for differences such as U - I whose
/// rounding error is set by the operands rather than by the result.
Subspace nullspace(const Operator& a, double tol = tol::kernel, double scale = 0.0);

/// Orthonormal basis of the column space of m, dropping singular values
/// below tol * sigma_max.
Subspace range(const Operator& m, double tol = tol::kernel);

Subspace intersect_subspaces(const Subspace& x, const Subspace& y, double tol = tol::kernel);
Subspace span_union(const Subspace& x, const Subspace& y, double tol = tol::kernel);
Subspace orth_complement(const Subspace& x, double tol = tol::kernel);

Operator projector(const Subspace& x);

/// Frobenius distance between the orthogonal projectors onto x and y.
double projector_distance(const Subspace& x, const Subspace& y);

/// Largest |<b_i, c_j>| between the two orthonormal bases.
double max_overlap(const Subspace& x, const Subspace& y);

Operator identity(Index n);

}  // namespace qwalk
