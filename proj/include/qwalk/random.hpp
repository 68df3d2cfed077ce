#pragma once

#include <cstdint>
#include <random>

#include "qwalk/linop.hpp"

namespace qwalk {

/// Seeded source for all randomized fixtures: std::mt19937_64 feeding
/// 53-bit uniforms and Box-Muller normals, so streams do not depend on the
/// standard library's distribution implementations.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // [0, 1)
  double normal();
  Complex complex_normal();  // E|z|^2 = 1
  bool coin() { return (engine_() >> 63) != 0; }

  Operator gaussian_matrix(Index rows, Index cols);
  /// Haar-distributed unitary: QR of a complex Gaussian matrix with the
  /// phases of diag(R) folded into Q.
  Operator unitary(Index n);
  Vector unit_vector(Index n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace qwalk
