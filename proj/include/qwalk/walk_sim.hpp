#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/generator.hpp"
#include "qwalk/linop.hpp"
#include "qwalk/partition.hpp"
#include "qwalk/spectral_map.hpp"
#include "qwalk/szegedy.hpp"
#include "qwalk/validation.hpp"

namespace qwalk {

using Distribution = std::vector<double>;  // indexed by partition block

struct WalkTrace {
  std::vector<std::string> labels;
  std::vector<Vector> states;              // Psi_0 .. Psi_N
  std::vector<Distribution> distributions; // nu_0 .. nu_N
  std::optional<Distribution> cesaro;      // mean of nu_0 .. nu_{N-1}
  std::optional<Distribution> limit;       // nu_bar_infinity

  std::size_t steps() const { return distributions.empty() ? 0 : distributions.size() - 1; }
};

/// Psi_{n+1} = U Psi_n for n < N and nu_n(x) = ||P_x Psi_n||^2.
/// Throws DomainError if ||Psi_0|| differs from 1 by more than 1e-12.
WalkTrace evolve_and_measure(const Operator& U, const Partition& part, const Vector& psi0, std::size_t N);

/// (1/N) sum_{n<N} nu_n(R). Throws DomainError for unknown labels or when
/// the trace holds fewer than N distributions.
double time_average(const WalkTrace& trace, const std::set<std::string>& region, std::size_t N);

/// sum_j ||P_x Pi_j Psi_0||^2 over eigenprojections Pi_j of H onto distinct
/// eigenvalues; eigenvalues are clustered on the unit circle with the gap
/// threshold given.
Distribution limit_distribution(const GeneratorDecomposition& gen, const Partition& part, const Vector& psi0,
                                double cluster_gap = 1e-8);

/// Smallest chord |e^{i a} - e^{i b}| between distinct eigenvalue clusters
/// of U = e^{iH}; +infinity when U has a single cluster.
double min_spectral_gap(const GeneratorDecomposition& gen, double cluster_gap = 1e-8);

struct LocalizationReport {
  std::vector<std::string> labels;
  Distribution limit;                 // nu_bar_infinity
  double certified_lower_bound = 0.0; // max_x nu_bar_infinity(x)
  std::string argmax_label;
  double point_spectrum_overlap = 0.0;  // ||P_p(H) Psi_0||^2
  bool sigma_p_T_nonempty = false;
  bool d_perp_nonempty = false;
  Index dim_d_perp = 0;
  bool localizes = false;             // certified_lower_bound > 0
  std::pair<std::size_t, std::size_t> window{0, 0};
  Distribution window_max;            // empirical max_{n in window} nu_n(x), an estimate
};

LocalizationReport localization_report(const WalkInstance& inst, const SubspaceAtlas& atlas,
                                       const GeneratorDecomposition& gen, const Partition& part,
                                       const Vector& psi0, std::pair<std::size_t, std::size_t> window);

struct Digraph {
  std::vector<std::string> vertices;
  std::set<std::pair<std::size_t, std::size_t>> arcs;  // (from, to)

  bool has_arc(const std::string& from, const std::string& to) const;
};

/// Arc v -> u whenever ||P_u W P_v|| > tol_block; default tol_block is
/// 1e-10 * ||W||.
Digraph infer_graph(const Operator& W, const Partition& part, std::optional<double> tol_block = std::nullopt);

/// Symmetric digraph of g: for each edge {u, v}, arcs u -> v and v -> u.
Digraph symmetric_digraph(const Graph& g);

/// sum_x W_ux (W^*)_xv = sum_x (W^*)_ux W_xv = delta_uv P_v for all (u, v),
/// cross-checked against ||W^*W - I|| and ||WW^* - I||.
ValidationReport block_unitarity_check(const Operator& W, const Partition& part, double tol = -1.0);

struct EquivalenceReport {
  double max_deviation = 0.0;  // max_{n, x} |nu_n(x) - nu~_n(x)|
  std::size_t steps = 0;
  bool passed = false;
};

/// Compares nu_n from (W1 W2, {H_v}, Psi_0) with nu_n from
/// (W2 W1, {W2 H_v}, W2 Psi_0) for n <= N; passes within 1e-10.
/// Throws DomainError for non-unitary W1 or W2.
EquivalenceReport equivalence_transform(const Operator& W1, const Operator& W2, const Partition& part,
                                        const Vector& psi0, std::size_t N);

struct HomogeneousWalk {
  Operator U;
  Partition partition;
};

/// Violations of PP^* + QQ^* = 1, P^*P + Q^*Q = 1, PQ^* = 0, Q^*P = 0.
ValidationReport check_pq_conditions(const Eigen::Matrix2cd& P, const Eigen::Matrix2cd& Q, double tol = 1e-10);

/// U = sum_x |x+1><x| (x) Q + |x-1><x| (x) P on Z_{n_sites} (x) C^2 without
/// checking the P, Q conditions.
Operator homogeneous_cycle_operator(const Eigen::Matrix2cd& P, const Eigen::Matrix2cd& Q, int n_sites);

/// Checked variant: DomainError naming the violated identity, or n_sites < 3.
HomogeneousWalk homogeneous_cycle_walk(const Eigen::Matrix2cd& P, const Eigen::Matrix2cd& Q, int n_sites);

}  // namespace qwalk
