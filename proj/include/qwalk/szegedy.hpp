#pragma once

#include <cstdint>
#include <optional>

#include "qwalk/graph.hpp"
#include "qwalk/linop.hpp"
#include "qwalk/partition.hpp"
#include "qwalk/validation.hpp"

namespace qwalk {

/// Operator family of an abstract Szegedy walk built from a coisometry
/// d_A : H -> K and a unitary involution S on H:
///   C = 2 d_A^* d_A - 1,  U = S C,  T = d_A S d_A^*.
/// d_B = d_A S is derived on demand.
class WalkInstance {
 public:
  Index dim_H() const { return d_A_.cols(); }
  Index dim_K() const { return d_A_.rows(); }

  const Operator& d_A() const { return d_A_; }
  const Operator& S() const { return S_; }
  const Operator& C() const { return C_; }
  const Operator& U() const { return U_; }
  const Operator& T() const { return T_; }
  Operator d_B() const { return d_A_ * S_; }

  const std::optional<Graph>& graph() const { return graph_; }
  /// Graph vertex partition when a graph is attached, otherwise the
  /// caller-supplied partition, otherwise singletons.
  Partition partition() const;

  WalkInstance with_partition(Partition p) const;

 private:
  friend WalkInstance assemble_walk(const Operator&, const Operator&, std::optional<Graph>);

  Operator d_A_, S_, C_, U_, T_;
  std::optional<Graph> graph_;
  std::optional<Partition> partition_;
};

/// (d_A psi)(v) = sum_{o(e)=v} psi(e) conj(w(e)). Throws DomainError when
/// the weight fails validation.
Operator boundary_operator(const Graph& g, const Weight& w);

/// (S psi)(e) = exp(-i theta(e)) psi(inv e). Throws DomainError when theta
/// is not antisymmetric.
Operator shift_operator(const Graph& g, const OneForm& theta);

/// Throws DimensionError on incompatible shapes and DomainError when d_A is
/// not a coisometry or S not a unitary involution within 1e-9.
WalkInstance assemble_walk(const Operator& d_A, const Operator& S,
                           std::optional<Graph> graph = std::nullopt);

WalkInstance twisted_szegedy(const Graph& g, const Weight& w, const OneForm& theta);
WalkInstance grover_walk(const Graph& g);

/// d_A = first dim_K rows of a Haar unitary, S = V diag(+-1) V^* with random
/// signs and Haar V, all drawn from SeededRng(seed) in that order.
WalkInstance random_instance(Index dim_H, Index dim_K, std::uint64_t seed);

/// WalkInstance invariants plus U d_A^* = d_B^* and U d_B^* = 2 d_B^* T - d_A^*.
ValidationReport check_instance(const WalkInstance& inst);

}  // namespace qwalk
