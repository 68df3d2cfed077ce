#include "qwalk/random.hpp"

#include <cmath>
#include <numbers>

namespace qwalk {

double SeededRng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double SeededRng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex SeededRng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) / std::sqrt(2.0);
}

Operator SeededRng::gaussian_matrix(Index rows, Index cols) {
  Operator m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = complex_normal();
  return m;
}

Operator SeededRng::unitary(Index n) {
  const Operator z = gaussian_matrix(n, n);
  Eigen::HouseholderQR<Operator> qr(z);
  Operator q = qr.householderQ();
  const Operator r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

Vector SeededRng::unit_vector(Index n) {
  Vector v(n);
  for (Index i = 0; i < n; ++i) v(i) = complex_normal();
  return v / v.norm();
}

}  // namespace qwalk
