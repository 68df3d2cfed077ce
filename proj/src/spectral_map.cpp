#include "qwalk/spectral_map.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string fmt_angle(double xi) {
  std::ostringstream s;
  s.precision(12);
  s << "angle " << xi;
  return s.str();
}

Operator stack(const Operator& top, const Operator& bottom) {
  Operator out(top.rows() + bottom.rows(), top.cols());
  out.topRows(top.rows()) = top;
  out.bottomRows(bottom.rows()) = bottom;
  return out;
}

// ||(I - P_X) U P_X||
double leakage(const Operator& U, const Subspace& x) {
  if (x.dim() == 0) return 0.0;
  const Operator image = U * x.basis();
  return (image - x.basis() * (x.basis().adjoint() * image)).norm();
}

}  // namespace

SubspaceAtlas boundary_subspaces(const WalkInstance& inst, const SpectralDecomposition& tdec, double tol_ker) {
  const Index n = inst.dim_H();
  const Operator& dA = inst.d_A();
  const Operator dB = inst.d_B();
  const Operator& S = inst.S();
  const Operator& U = inst.U();
  const Operator I = identity(n);

  SubspaceAtlas atlas{
      range(dA.adjoint(), tol_ker),
      nullspace(dA, tol_ker, 1.0),
      nullspace(S - I, tol_ker, 1.0),
      nullspace(S + I, tol_ker, 1.0),
      nullspace(stack(dA, dB), tol_ker, 1.0),
      Subspace::zero(n),
      Subspace::zero(n),
      range(dA.adjoint() * tdec.band_vectors(Band::plus_one), tol_ker),
      range(dA.adjoint() * tdec.band_vectors(Band::minus_one), tol_ker),
      orth_complement(nullspace(U * U - I, tol_ker, 1.0), tol_ker),
  };
  // ker(S + 1) is the S-perp of the eigenspace split, so D_perp_plus pairs with S_minus
  atlas.D_perp_plus = intersect_subspaces(atlas.A_perp, atlas.S_minus, tol_ker);
  atlas.D_perp_minus = intersect_subspaces(atlas.A_perp, atlas.S_plus, tol_ker);
  atlas.M_plus = atlas.D_perp_plus.dim();
  atlas.M_minus = atlas.D_perp_minus.dim();
  atlas.ker_T_plus = tdec.band_count(Band::plus_one);
  atlas.ker_T_minus = tdec.band_count(Band::minus_one);
  return atlas;
}

SubspaceAtlas boundary_subspaces(const WalkInstance& inst, double tol_ker) {
  return boundary_subspaces(inst, hermitian_eig(inst.T(), tol_ker), tol_ker);
}

ValidationReport check_atlas(const WalkInstance& inst, const SubspaceAtlas& a) {
  ValidationReport r;
  const Index n = inst.dim_H();
  const auto dim_gap = [](Index x, Index y) { return static_cast<double>(std::abs(x - y)); };

  r.expect_le("D_perp-dimension", "dim D_perp = M_+ + M_-", dim_gap(a.D_perp.dim(), a.M_plus + a.M_minus), 0.0);
  r.expect_le("D_perp-split", "D_perp = D_perp_+ (+) D_perp_-",
              projector_distance(a.D_perp, span_union(a.D_perp_plus, a.D_perp_minus)), 1e-8);
  r.expect_le("D0-dimension", "dim D0_+ = dim ker(T-1)", dim_gap(a.D0_plus.dim(), a.ker_T_plus), 0.0);
  r.expect_le("D0-dimension", "dim D0_- = dim ker(T+1)", dim_gap(a.D0_minus.dim(), a.ker_T_minus), 0.0);
  r.expect_le("completeness", "dim D1 + dim D0 + dim D_perp = dim_H",
              dim_gap(a.D1.dim() + a.D0_plus.dim() + a.D0_minus.dim() + a.M_plus + a.M_minus, n), 0.0);
  r.expect_le("orthogonality", "D0_+ vs D_perp_+", max_overlap(a.D0_plus, a.D_perp_plus), 1e-9);
  r.expect_le("orthogonality", "D0_- vs D_perp_-", max_overlap(a.D0_minus, a.D_perp_minus), 1e-9);
  r.expect_le("orthogonality", "D1 vs D0_+", max_overlap(a.D1, a.D0_plus), 1e-9);
  r.expect_le("orthogonality", "D1 vs D0_-", max_overlap(a.D1, a.D0_minus), 1e-9);
  r.expect_le("orthogonality", "D1 vs D_perp", max_overlap(a.D1, a.D_perp), 1e-9);

  const Operator I = identity(n);
  const Subspace ker_plus = nullspace(inst.U() - I, tol::kernel, 1.0);
  const Subspace ker_minus = nullspace(inst.U() + I, tol::kernel, 1.0);
  r.expect_le("kernel-split", "ker(U-1) = D0_+ (+) D_perp_+",
              projector_distance(ker_plus, span_union(a.D0_plus, a.D_perp_plus)), 1e-8);
  r.expect_le("kernel-split", "ker(U+1) = D0_- (+) D_perp_-",
              projector_distance(ker_minus, span_union(a.D0_minus, a.D_perp_minus)), 1e-8);

  r.expect_le("U-invariance", "D1", leakage(inst.U(), a.D1), 1e-9);
  r.expect_le("U-invariance", "D0", leakage(inst.U(), span_union(a.D0_plus, a.D0_minus)), 1e-9);
  r.expect_le("U-invariance", "D_perp", leakage(inst.U(), a.D_perp), 1e-9);
  return r;
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::mapped: return "mapped";
    case Provenance::plus_correction: return "plus-correction";
    case Provenance::minus_correction: return "minus-correction";
  }
  return "unknown";
}

Index SpectrumPrediction::total() const {
  Index t = 0;
  for (const auto& e : entries) t += e.multiplicity;
  return t;
}

SpectrumPrediction mapped_spectrum(const SpectralDecomposition& tdec, const SubspaceAtlas& atlas,
                                   double cluster_gap) {
  SpectrumPrediction pred;
  const Index k = tdec.size();
  Index start = 0;
  while (start < k) {
    const Band band = tdec.bands[static_cast<std::size_t>(start)];
    Index end = start + 1;
    double sum = tdec.eigenvalues[start];
    while (end < k && tdec.bands[static_cast<std::size_t>(end)] == band &&
           tdec.eigenvalues[end] - tdec.eigenvalues[end - 1] <= cluster_gap) {
      sum += tdec.eigenvalues[end];
      ++end;
    }
    const Index mult = end - start;
    const double lambda = sum / static_cast<double>(mult);
    switch (band) {
      case Band::interior: {
        const double theta = clamped_arccos(lambda);
        pred.entries.push_back({theta, mult, Provenance::mapped, lambda});
        pred.entries.push_back({kTwoPi - theta, mult, Provenance::mapped, lambda});
        break;
      }
      case Band::plus_one: pred.entries.push_back({0.0, mult, Provenance::mapped, lambda}); break;
      case Band::minus_one:
        pred.entries.push_back({std::numbers::pi, mult, Provenance::mapped, lambda});
        break;
      case Band::other: {
        std::ostringstream msg;
        msg << "mapped_spectrum: eigenvalue " << lambda << " of T lies outside [-1, 1]";
        throw DomainError(msg.str());
      }
    }
    start = end;
  }
  if (atlas.M_plus > 0) pred.entries.push_back({0.0, atlas.M_plus, Provenance::plus_correction, 0.0});
  if (atlas.M_minus > 0) pred.entries.push_back({std::numbers::pi, atlas.M_minus, Provenance::minus_correction, 0.0});
  std::stable_sort(pred.entries.begin(), pred.entries.end(), [](const auto& x, const auto& y) {
    if (x.angle != y.angle) return x.angle < y.angle;
    return static_cast<int>(x.provenance) < static_cast<int>(y.provenance);
  });
  return pred;
}

ValidationReport verify_spectral_mapping(const WalkInstance& inst, const SpectrumPrediction& pred, double tol) {
  ValidationReport r;
  const Index n = inst.dim_H();
  const Operator I = identity(n);

  std::size_t i = 0;
  while (i < pred.entries.size()) {
    const double xi = pred.entries[i].angle;
    Index mult = 0;
    std::size_t j = i;
    while (j < pred.entries.size() && pred.entries[j].angle - xi <= 1e-9) mult += pred.entries[j++].multiplicity;
    const Subspace eig = nullspace(inst.U() - std::polar(1.0, xi) * I, tol, 1.0);
    if (eig.dim() != mult) r.add("multiplicity", fmt_angle(xi), static_cast<double>(std::abs(eig.dim() - mult)));
    i = j;
  }
  if (pred.total() != n)
    r.add("multiplicity-total", "sum of multiplicities vs dim_H", static_cast<double>(std::abs(pred.total() - n)));
  return r;
}

}  // namespace qwalk
