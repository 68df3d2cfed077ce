#include "qwalk/walk_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct EigenCluster {
  double angle;
  Operator basis;
};

// Eigenvectors of H grouped by distinct eigenvalue of e^{iH}.
std::vector<EigenCluster> clusters_of(const GeneratorDecomposition& gen, double gap) {
  std::vector<std::pair<double, Vector>> pairs;
  for (const auto& b : gen.blocks)
    for (Index k = 0; k < b.basis.cols(); ++k) pairs.emplace_back(b.spectrum[k], b.basis.col(k));
  std::stable_sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (groups.empty() || pairs[i].first - pairs[i - 1].first > gap)
      groups.emplace_back();
    groups.back().push_back(i);
  }
  // 2 pi - epsilon and 0 are the same point of the circle
  if (groups.size() > 1 && pairs.front().first + kTwoPi - pairs.back().first <= gap) {
    groups.front().insert(groups.front().end(), groups.back().begin(), groups.back().end());
    groups.pop_back();
  }

  std::vector<EigenCluster> out;
  for (const auto& g : groups) {
    Operator basis(gen.dim(), static_cast<Index>(g.size()));
    for (std::size_t c = 0; c < g.size(); ++c) basis.col(static_cast<Index>(c)) = pairs[g[c]].second;
    out.push_back({pairs[g.front()].first, std::move(basis)});
  }
  return out;
}

double unitarity_defect(const Operator& W) {
  return (W.adjoint() * W - identity(W.rows())).norm();
}

}  // namespace

WalkTrace evolve_and_measure(const Operator& U, const Partition& part, const Vector& psi0, std::size_t N) {
  if (U.rows() != part.dim() || U.cols() != part.dim() || psi0.size() != part.dim())
    throw DimensionError("evolve_and_measure: dimension mismatch");
  if (std::abs(psi0.norm() - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "evolve_and_measure: initial state has norm " << psi0.norm();
    throw DomainError(msg.str());
  }
  WalkTrace trace;
  trace.labels = part.labels();
  trace.states.reserve(N + 1);
  trace.distributions.reserve(N + 1);
  Vector psi = psi0;
  for (std::size_t n = 0; n <= N; ++n) {
    trace.distributions.push_back(part.measure(psi));
    trace.states.push_back(psi);
    if (n < N) psi = U * psi;
  }
  if (N > 0) {
    Distribution avg(part.size(), 0.0);
    for (std::size_t n = 0; n < N; ++n)
      for (std::size_t x = 0; x < avg.size(); ++x) avg[x] += trace.distributions[n][x];
    for (auto& a : avg) a /= static_cast<double>(N);
    trace.cesaro = std::move(avg);
  }
  return trace;
}

double time_average(const WalkTrace& trace, const std::set<std::string>& region, std::size_t N) {
  if (N == 0) throw DomainError("time_average: N must be positive");
  if (N > trace.distributions.size()) throw DomainError("time_average: trace shorter than N");
  std::vector<std::size_t> idx;
  for (const auto& label : region) {
    const auto it = std::find(trace.labels.begin(), trace.labels.end(), label);
    if (it == trace.labels.end()) throw DomainError("time_average: unknown label '" + label + "'");
    idx.push_back(static_cast<std::size_t>(it - trace.labels.begin()));
  }
  double total = 0.0;
  for (std::size_t n = 0; n < N; ++n)
    for (auto x : idx) total += trace.distributions[n][x];
  return total / static_cast<double>(N);
}

Distribution limit_distribution(const GeneratorDecomposition& gen, const Partition& part, const Vector& psi0,
                                double cluster_gap) {
  if (psi0.size() != gen.dim() || part.dim() != gen.dim())
    throw DimensionError("limit_distribution: dimension mismatch");
  Distribution limit(part.size(), 0.0);
  for (const auto& c : clusters_of(gen, cluster_gap)) {
    const Vector projected = c.basis * (c.basis.adjoint() * psi0);
    const auto nu = part.measure(projected);
    for (std::size_t x = 0; x < limit.size(); ++x) limit[x] += nu[x];
  }
  return limit;
}

double min_spectral_gap(const GeneratorDecomposition& gen, double cluster_gap) {
  const auto clusters = clusters_of(gen, cluster_gap);
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < clusters.size(); ++i)
    for (std::size_t j = i + 1; j < clusters.size(); ++j)
      gap = std::min(gap, std::abs(std::polar(1.0, clusters[i].angle) - std::polar(1.0, clusters[j].angle)));
  return gap;
}

LocalizationReport localization_report(const WalkInstance& inst, const SubspaceAtlas& atlas,
                                       const GeneratorDecomposition& gen, const Partition& part, const Vector& psi0,
                                       std::pair<std::size_t, std::size_t> window) {
  if (window.first > window.second) throw DomainError("localization_report: empty observation window");
  LocalizationReport rep;
  rep.labels = part.labels();
  rep.limit = limit_distribution(gen, part, psi0);
  const auto best = std::max_element(rep.limit.begin(), rep.limit.end());
  rep.certified_lower_bound = *best;
  rep.argmax_label = rep.labels[static_cast<std::size_t>(best - rep.limit.begin())];
  for (const auto& c : clusters_of(gen, 1e-8)) rep.point_spectrum_overlap += (c.basis.adjoint() * psi0).squaredNorm();
  rep.sigma_p_T_nonempty = inst.dim_K() > 0;
  rep.dim_d_perp = atlas.D_perp.dim();
  rep.d_perp_nonempty = rep.dim_d_perp > 0;
  rep.localizes = rep.certified_lower_bound > 0.0;
  rep.window = window;

  const auto trace = evolve_and_measure(inst.U(), part, psi0, window.second);
  rep.window_max.assign(part.size(), 0.0);
  for (std::size_t n = window.first; n <= window.second; ++n)
    for (std::size_t x = 0; x < part.size(); ++x)
      rep.window_max[x] = std::max(rep.window_max[x], trace.distributions[n][x]);
  return rep;
}

bool Digraph::has_arc(const std::string& from, const std::string& to) const {
  const auto f = std::find(vertices.begin(), vertices.end(), from);
  const auto t = std::find(vertices.begin(), vertices.end(), to);
  if (f == vertices.end() || t == vertices.end()) return false;
  return arcs.count({static_cast<std::size_t>(f - vertices.begin()), static_cast<std::size_t>(t - vertices.begin())}) > 0;
}

Digraph infer_graph(const Operator& W, const Partition& part, std::optional<double> tol_block) {
  const double tol = tol_block.value_or(1e-10 * norm2(W));
  Digraph g;
  g.vertices = part.labels();
  for (std::size_t u = 0; u < part.size(); ++u)
    for (std::size_t v = 0; v < part.size(); ++v)
      if (part.sub_block(W, u, v).norm() > tol) g.arcs.insert({v, u});
  return g;
}

Digraph symmetric_digraph(const Graph& g) {
  Digraph d;
  d.vertices = g.vertex_names();
  for (const auto& a : g.arcs()) d.arcs.insert({a.origin, a.terminal});
  return d;
}

ValidationReport block_unitarity_check(const Operator& W, const Partition& part, double tol) {
  const Index n = part.dim();
  if (W.rows() != n || W.cols() != n) throw DimensionError("block_unitarity_check: dimension mismatch");
  if (tol <= 0.0) tol = 1e-10 * static_cast<double>(n);
  const Operator Wstar = W.adjoint();
  const std::size_t m = part.size();
  ValidationReport r;
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = 0; v < m; ++v) {
      const auto ru = static_cast<Index>(part.block(u).indices.size());
      const auto cv = static_cast<Index>(part.block(v).indices.size());
      Operator left = Operator::Zero(ru, cv);
      Operator right = Operator::Zero(ru, cv);
      for (std::size_t x = 0; x < m; ++x) {
        left += part.sub_block(W, u, x) * part.sub_block(Wstar, x, v);
        right += part.sub_block(Wstar, u, x) * part.sub_block(W, x, v);
      }
      if (u == v) {
        left -= identity(ru);
        right -= identity(ru);
      }
      const std::string where = "(" + part.block(u).label + "," + part.block(v).label + ")";
      r.expect_le("block-WW*", where, left.norm(), tol);
      r.expect_le("block-W*W", where, right.norm(), tol);
    }
  }
  const bool global = unitarity_defect(W) <= tol && (W * Wstar - identity(n)).norm() <= tol;
  if (global != r.passed()) r.add("cross-check", "block criterion vs ||W^*W - I||", unitarity_defect(W));
  return r;
}

EquivalenceReport equivalence_transform(const Operator& W1, const Operator& W2, const Partition& part,
                                        const Vector& psi0, std::size_t N) {
  const double d1 = unitarity_defect(W1);
  const double d2 = unitarity_defect(W2);
  if (d1 > 1e-9 || d2 > 1e-9) {
    std::ostringstream msg;
    msg << "equivalence_transform: non-unitary input (" << d1 << ", " << d2 << ")";
    throw DomainError(msg.str());
  }
  const Operator U = W1 * W2;
  const Operator U_tilde = W2 * W1;
  const auto reference = evolve_and_measure(U, part, psi0, N);

  EquivalenceReport rep;
  rep.steps = N;
  // projector onto W2 H_x is W2 P_x W2^*, so ||W2 P_x W2^* phi|| = ||P_x W2^* phi||
  Vector phi = W2 * psi0;
  for (std::size_t n = 0; n <= N; ++n) {
    const auto nu = part.measure(W2.adjoint() * phi);
    for (std::size_t x = 0; x < nu.size(); ++x)
      rep.max_deviation = std::max(rep.max_deviation, std::abs(nu[x] - reference.distributions[n][x]));
    phi = U_tilde * phi;
  }
  rep.passed = rep.max_deviation <= 1e-10;
  return rep;
}

ValidationReport check_pq_conditions(const Eigen::Matrix2cd& P, const Eigen::Matrix2cd& Q, double tol) {
  ValidationReport r;
  const Eigen::Matrix2cd I = Eigen::Matrix2cd::Identity();
  r.expect_le("eqPQ", "PP^* + QQ^* = 1", (P * P.adjoint() + Q * Q.adjoint() - I).norm(), tol);
  r.expect_le("eqPQ", "P^*P + Q^*Q = 1", (P.adjoint() * P + Q.adjoint() * Q - I).norm(), tol);
  r.expect_le("eqPQ", "PQ^* = 0", (P * Q.adjoint()).norm(), tol);
  r.expect_le("eqPQ", "Q^*P = 0", (Q.adjoint() * P).norm(), tol);
  return r;
}

Operator homogeneous_cycle_operator(const Eigen::Matrix2cd& P, const Eigen::Matrix2cd& Q, int n_sites) {
  if (n_sites < 3) throw DomainError("homogeneous_cycle_walk: n_sites must be >= 3");
  const Index n = 2 * static_cast<Index>(n_sites);
  Operator U = Operator::Zero(n, n);
  for (int x = 0; x < n_sites; ++x) {
    const int up = (x + 1) % n_sites;
    const int down = (x + n_sites - 1) % n_sites;
    U.block<2, 2>(2 * up, 2 * x) += Q;
    U.block<2, 2>(2 * down, 2 * x) += P;
  }
  return U;
}

HomogeneousWalk homogeneous_cycle_walk(const Eigen::Matrix2cd& P, const Eigen::Matrix2cd& Q, int n_sites) {
  const auto report = check_pq_conditions(P, Q);
  if (!report.passed()) {
    const auto& v = report.violations().front();
    std::ostringstream msg;
    msg << "homogeneous_cycle_walk: violated " << v.location << " (magnitude " << v.magnitude << ")";
    throw DomainError(msg.str());
  }
  Operator U = homogeneous_cycle_operator(P, Q, n_sites);
  std::vector<std::string> labels;
  for (int x = 0; x < n_sites; ++x) labels.push_back(std::to_string(x));
  return {std::move(U), Partition::contiguous(labels, std::vector<Index>(static_cast<std::size_t>(n_sites), 2))};
}

}  // namespace qwalk
