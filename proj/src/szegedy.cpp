#include "qwalk/szegedy.hpp"

#include <cmath>
#include <sstream>

#include "qwalk/errors.hpp"
#include "qwalk/random.hpp"

namespace qwalk {

namespace {

constexpr double kAssemblyTol = 1e-9;

std::string describe(const ValidationReport& r) {
  std::ostringstream msg;
  for (const auto& v : r.violations()) msg << " [" << v.rule << " at " << v.location << ": " << v.magnitude << "]";
  return msg.str();
}

}  // namespace

Partition WalkInstance::partition() const {
  if (graph_) return Partition::by_origin(*graph_);
  if (partition_) return *partition_;
  return Partition::singletons(dim_H());
}

WalkInstance WalkInstance::with_partition(Partition p) const {
  if (p.dim() != dim_H()) throw DimensionError("partition dimension differs from dim_H");
  WalkInstance copy = *this;
  copy.partition_ = std::move(p);
  return copy;
}

Operator boundary_operator(const Graph& g, const Weight& w) {
  const auto report = validate_structures(g, &w, nullptr);
  if (!report.passed()) throw DomainError("boundary_operator: invalid weight" + describe(report));
  Operator d = Operator::Zero(static_cast<Index>(g.num_vertices()), static_cast<Index>(g.num_arcs()));
  for (const auto& a : g.arcs())
    d(static_cast<Index>(a.origin), static_cast<Index>(a.id)) = std::conj(w[a.id]);
  return d;
}

Operator shift_operator(const Graph& g, const OneForm& theta) {
  const auto report = validate_structures(g, nullptr, &theta);
  if (!report.passed()) throw DomainError("shift_operator: invalid one-form" + describe(report));
  const auto n = static_cast<Index>(g.num_arcs());
  Operator s = Operator::Zero(n, n);
  for (const auto& a : g.arcs())
    s(static_cast<Index>(a.id), static_cast<Index>(a.inverse)) = std::polar(1.0, -theta[a.id]);
  return s;
}

WalkInstance assemble_walk(const Operator& d_A, const Operator& S, std::optional<Graph> graph) {
  const Index n = d_A.cols();
  const Index k = d_A.rows();
  if (S.rows() != n || S.cols() != n) {
    std::ostringstream msg;
    msg << "assemble_walk: S is " << S.rows() << "x" << S.cols() << " but d_A has " << n << " columns";
    throw DimensionError(msg.str());
  }
  if (k > n) throw DimensionError("assemble_walk: d_A has more rows than columns");
  if (graph && (static_cast<Index>(graph->num_arcs()) != n || static_cast<Index>(graph->num_vertices()) != k))
    throw DimensionError("assemble_walk: graph sizes do not match operators");

  const double coiso = (d_A * d_A.adjoint() - identity(k)).norm();
  if (coiso > kAssemblyTol) {
    std::ostringstream msg;
    msg << "assemble_walk: ||d_A d_A^* - I|| = " << coiso;
    throw DomainError(msg.str());
  }
  const double herm = (S - S.adjoint()).norm();
  const double invol = (S * S - identity(n)).norm();
  if (herm > kAssemblyTol || invol > kAssemblyTol) {
    std::ostringstream msg;
    msg << "assemble_walk: S not a unitary involution, ||S - S^*|| = " << herm << ", ||S^2 - I|| = " << invol;
    throw DomainError(msg.str());
  }

  WalkInstance w;
  w.d_A_ = d_A;
  w.S_ = S;
  w.C_ = 2.0 * d_A.adjoint() * d_A - identity(n);
  w.U_ = S * w.C_;
  w.T_ = d_A * S * d_A.adjoint();
  w.graph_ = std::move(graph);
  return w;
}

WalkInstance twisted_szegedy(const Graph& g, const Weight& w, const OneForm& theta) {
  return assemble_walk(boundary_operator(g, w), shift_operator(g, theta), g);
}

WalkInstance grover_walk(const Graph& g) { return twisted_szegedy(g, grover_weight(g), OneForm::zero(g)); }

WalkInstance random_instance(Index dim_H, Index dim_K, std::uint64_t seed) {
  if (dim_K < 1 || dim_H < 1) throw DimensionError("random_instance: dimensions must be >= 1");
  if (dim_K > dim_H) throw DimensionError("random_instance: dim_K > dim_H");
  SeededRng rng(seed);
  const Operator d_A = rng.unitary(dim_H).topRows(dim_K);
  const Operator v = rng.unitary(dim_H);
  Eigen::VectorXd signs(dim_H);
  for (Index i = 0; i < dim_H; ++i) signs(i) = rng.coin() ? 1.0 : -1.0;
  Operator S = v * signs.cast<Complex>().asDiagonal() * v.adjoint();
  S = 0.5 * (S + S.adjoint());
  return assemble_walk(d_A, S);
}

ValidationReport check_instance(const WalkInstance& inst) {
  ValidationReport r;
  const Index n = inst.dim_H();
  const Index k = inst.dim_K();
  const double dn = static_cast<double>(n);
  const double dk = static_cast<double>(k);
  const Operator& dA = inst.d_A();
  const Operator dB = inst.d_B();
  const Operator& S = inst.S();
  const Operator& U = inst.U();
  const Operator& T = inst.T();

  r.expect_le("coisometry", "d_A d_A^* = I", (dA * dA.adjoint() - identity(k)).norm(), 1e-11 * dk);
  r.expect_le("shift-selfadjoint", "S = S^*", (S - S.adjoint()).norm(), 1e-11 * dn);
  r.expect_le("shift-involution", "S^2 = I", (S * S - identity(n)).norm(), 1e-11 * dn);
  r.expect_le("evolution-unitary", "U^*U = I", (U.adjoint() * U - identity(n)).norm(), 1e-10 * dn);
  r.expect_le("discriminant-hermitian", "T = T^*", (T - T.adjoint()).norm(), 1e-11 * dk);
  r.expect_le("discriminant-factor", "T = d_A d_B^*", (T - dA * dB.adjoint()).norm(), 1e-11 * dk);
  r.expect_le("intertwine-A", "U d_A^* = d_B^*", (U * dA.adjoint() - dB.adjoint()).norm(), 1e-10 * dn);
  r.expect_le("intertwine-B", "U d_B^* = 2 d_B^* T - d_A^*",
              (U * dB.adjoint() - (2.0 * dB.adjoint() * T - dA.adjoint())).norm(), 1e-10 * dn);
  if (k > 0) {
    const auto dec = hermitian_eig(0.5 * (T + T.adjoint()));
    const double spread = dec.eigenvalues.cwiseAbs().maxCoeff();
    r.expect_le("discriminant-contraction", "max |sigma(T)|", spread, 1.0 + 1e-9);
  }
  return r;
}

}  // namespace qwalk
