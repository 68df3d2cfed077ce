#include "qwalk/generator.hpp"

#include <cmath>
#include <utility>
#include <numbers>
#include <sstream>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kIdentityTol = 1e-9;

// arccos on T's spectrum with the +-1 bands pinned to exactly 0 and pi.
double snapped_theta(double lambda, double tol_ker) {
  switch (classify(lambda, tol_ker)) {
    case Band::plus_one: return 0.0;
    case Band::minus_one: return kPi;
    default: return clamped_arccos(lambda);
  }
}

Operator exp_i_theta(const SpectralDecomposition& tdec, double sign) {
  return apply_function(tdec, [&](double l) { return std::polar(1.0, sign * snapped_theta(l, tdec.tol_ker)); });
}

Operator hstack(const Operator& a, const Operator& b) {
  Operator out(a.rows(), a.cols() + b.cols());
  out.leftCols(a.cols()) = a;
  out.rightCols(b.cols()) = b;
  return out;
}

double orthonormality_defect(const Operator& basis) {
  if (basis.cols() == 0) return 0.0;
  return (basis.adjoint() * basis - identity(basis.cols())).norm();
}

}  // namespace

DPMOperators build_dpm(const WalkInstance& inst, const SpectralDecomposition& tdec) {
  if (tdec.size() != inst.dim_K()) throw DimensionError("build_dpm: decomposition does not match dim_K");
  const Index n = inst.dim_H();
  const Index k = inst.dim_K();
  const Operator dA_star = inst.d_A().adjoint();
  const Operator dB_star = inst.d_B().adjoint();

  std::vector<Index> interior;
  for (Index j = 0; j < tdec.size(); ++j) {
    const double l = tdec.eigenvalues[j];
    // 1 - lambda^2 <= tol^2 is never divided by, whatever the band says
    if (tdec.bands[static_cast<std::size_t>(j)] == Band::interior && 1.0 - l * l > tdec.tol_ker * tdec.tol_ker)
      interior.push_back(j);
  }
  const auto m = static_cast<Index>(interior.size());

  DPMOperators dpm;
  dpm.interior_vectors.resize(k, m);
  dpm.interior_eigenvalues.resize(m);
  dpm.interior_angles.resize(m);
  dpm.image_plus.resize(n, m);
  dpm.image_minus.resize(n, m);
  for (Index c = 0; c < m; ++c) {
    const Index j = interior[static_cast<std::size_t>(c)];
    const double lambda = tdec.eigenvalues[j];
    const double theta = clamped_arccos(lambda);
    const Complex phase = std::polar(1.0, theta);
    const double scale = 1.0 / std::sqrt(2.0 * (1.0 - lambda * lambda));
    const Vector f = tdec.eigenvectors.col(j);
    const Vector a = dA_star * f;
    const Vector b = dB_star * f;
    dpm.interior_vectors.col(c) = f;
    dpm.interior_eigenvalues[c] = lambda;
    dpm.interior_angles[c] = theta;
    dpm.image_plus.col(c) = (a - phase * b) * scale;
    dpm.image_minus.col(c) = (phase * a - b) * scale;
  }
  dpm.d_plus = (dpm.image_plus * dpm.interior_vectors.adjoint()).adjoint();
  dpm.d_minus = (dpm.image_minus * dpm.interior_vectors.adjoint()).adjoint();
  dpm.interior_projector = dpm.interior_vectors * dpm.interior_vectors.adjoint();
  dpm.theta_T = apply_function(tdec, [&](double l) { return Complex(snapped_theta(l, tdec.tol_ker), 0.0); });
  if (k == 0) dpm.theta_T = Operator(0, 0);
  return dpm;
}

namespace {

Operator interior_inverse_sqrt(const SpectralDecomposition& tdec) {
  return apply_function(tdec, [&](double l) {
    if (classify(l, tdec.tol_ker) != Band::interior) return Complex(0.0, 0.0);
    return Complex(1.0 / std::sqrt(2.0 * (1.0 - l * l)), 0.0);
  });
}

}  // namespace

Operator d_plus_by_formula(const WalkInstance& inst, const SpectralDecomposition& tdec) {
  const Operator em = exp_i_theta(tdec, -1.0);
  return interior_inverse_sqrt(tdec) * (inst.d_A() - em * inst.d_B());
}

Operator d_minus_by_formula(const WalkInstance& inst, const SpectralDecomposition& tdec) {
  const Operator em = exp_i_theta(tdec, -1.0);
  return interior_inverse_sqrt(tdec) * (em * inst.d_A() - inst.d_B());
}

ValidationReport check_dpm(const WalkInstance& inst, const SpectralDecomposition& tdec, const DPMOperators& dpm,
                           const SubspaceAtlas& atlas) {
  ValidationReport r;
  const double bound = kIdentityTol * static_cast<double>(inst.dim_H());
  const Operator& dp = dpm.d_plus;
  const Operator& dm = dpm.d_minus;
  const Operator& P = dpm.interior_projector;

  r.expect_le("isometry", "d_+ d_+^* = Pi_int", (dp * dp.adjoint() - P).norm(), bound);
  r.expect_le("isometry", "d_- d_-^* = Pi_int", (dm * dm.adjoint() - P).norm(), bound);
  r.expect_le("isometry", "columns of d_+^* f_k orthonormal", orthonormality_defect(dpm.image_plus), bound);
  r.expect_le("isometry", "columns of d_-^* f_k orthonormal", orthonormality_defect(dpm.image_minus), bound);
  r.expect_le("cross-vanishing", "d_+ d_-^* = 0", (dp * dm.adjoint()).norm(), bound);
  r.expect_le("cross-vanishing", "d_- d_+^* = 0", (dm * dp.adjoint()).norm(), bound);

  const Operator Pp = dp.adjoint() * dp;
  const Operator Pm = dm.adjoint() * dm;
  r.expect_le("projector", "d_+^* d_+ hermitian", (Pp - Pp.adjoint()).norm(), bound);
  r.expect_le("projector", "d_+^* d_+ idempotent", (Pp * Pp - Pp).norm(), bound);
  r.expect_le("projector", "d_-^* d_- hermitian", (Pm - Pm.adjoint()).norm(), bound);
  r.expect_le("projector", "d_-^* d_- idempotent", (Pm * Pm - Pm).norm(), bound);
  r.expect_le("orthogonal-ranges", "(d_+^* d_+)(d_-^* d_-) = 0", (Pp * Pm).norm(), bound);

  const Operator& dA = inst.d_A();
  const Operator dB = inst.d_B();
  const Operator& T = inst.T();
  const Operator ep = exp_i_theta(tdec, 1.0);
  const Operator em = exp_i_theta(tdec, -1.0);
  const Operator two_one_minus_T2 = 2.0 * (identity(T.rows()) - T * T);
  const Operator plus_left = dA - em * dB;        // d_A - e^{-i theta} d_B
  const Operator minus_left = em * dA - dB;       // e^{-i theta} d_A - d_B
  const Operator plus_right = dA.adjoint() - dB.adjoint() * ep;
  const Operator minus_right = dA.adjoint() * ep - dB.adjoint();
  r.expect_le("product-identity", "(i)", (plus_left * minus_right).norm(), bound);
  r.expect_le("product-identity", "(ii)", (minus_left * plus_right).norm(), bound);
  r.expect_le("product-identity", "(iii)", (plus_left * plus_right - two_one_minus_T2).norm(), bound);
  r.expect_le("product-identity", "(iv)", (minus_left * minus_right - two_one_minus_T2).norm(), bound);

  const Subspace d0_perp =
      span_union(span_union(atlas.D0_plus, atlas.D0_minus), atlas.D_perp);
  if (d0_perp.dim() > 0) {
    r.expect_le("vanishing-on-D0-Dperp", "(d_A - e^{-i theta(T)} d_B) v = 0", (plus_left * d0_perp.basis()).norm(),
                kIdentityTol);
    r.expect_le("vanishing-on-D0-Dperp", "(e^{-i theta(T)} d_A - d_B) v = 0", (minus_left * d0_perp.basis()).norm(),
                kIdentityTol);
    r.expect_le("vanishing-on-D0-Dperp", "d_+ v = 0", (dp * d0_perp.basis()).norm(), kIdentityTol);
    r.expect_le("vanishing-on-D0-Dperp", "d_- v = 0", (dm * d0_perp.basis()).norm(), kIdentityTol);
  }

  r.expect_le("formula-route", "d_+ spectral vs closed form", (dp - d_plus_by_formula(inst, tdec)).norm(), bound);
  r.expect_le("formula-route", "d_- spectral vs closed form", (dm - d_minus_by_formula(inst, tdec)).norm(), bound);
  return r;
}

KernelBases kernels_of_U(const WalkInstance& inst, const SpectralDecomposition& tdec, const SubspaceAtlas& atlas) {
  const Index n = inst.dim_H();
  const Operator dA_star = inst.d_A().adjoint();
  const Operator plus = hstack(dA_star * tdec.band_vectors(Band::plus_one), atlas.D_perp_plus.basis());
  const Operator minus = hstack(dA_star * tdec.band_vectors(Band::minus_one), atlas.D_perp_minus.basis());

  KernelBases kb{Subspace(n, plus), Subspace(n, minus)};
  const double def_p = orthonormality_defect(plus);
  const double def_m = orthonormality_defect(minus);
  if (def_p > 1e-9 || def_m > 1e-9) {
    std::ostringstream msg;
    msg << "kernels_of_U: assembled kernel bases not orthonormal (" << def_p << ", " << def_m << ")";
    throw ConsistencyError(msg.str());
  }
  const double dist_p = projector_distance(kb.plus, nullspace(inst.U() - identity(n), tol::kernel, 1.0));
  const double dist_m = projector_distance(kb.minus, nullspace(inst.U() + identity(n), tol::kernel, 1.0));
  if (dist_p > 1e-8 || dist_m > 1e-8) {
    std::ostringstream msg;
    msg << "kernels_of_U: projector distance to direct kernels " << dist_p << ", " << dist_m;
    throw ConsistencyError(msg.str());
  }
  return kb;
}

const char* to_string(BlockKind b) {
  switch (b) {
    case BlockKind::d1_plus: return "D1_plus";
    case BlockKind::d1_minus: return "D1_minus";
    case BlockKind::ker_plus: return "ker_U_minus_1";
    case BlockKind::ker_minus: return "ker_U_plus_1";
  }
  return "unknown";
}

const GeneratorBlock& GeneratorDecomposition::block(BlockKind kind) const {
  for (const auto& b : blocks)
    if (b.kind == kind) return b;
  throw ConsistencyError("generator block missing");
}

GeneratorBlock& GeneratorDecomposition::block(BlockKind kind) {
  return const_cast<GeneratorBlock&>(std::as_const(*this).block(kind));
}

Operator compose_generator(const std::vector<GeneratorBlock>& blocks, Index dim) {
  Operator H = Operator::Zero(dim, dim);
  for (const auto& b : blocks) {
    if (b.basis.cols() == 0) continue;
    H += b.basis * b.spectrum.cast<Complex>().asDiagonal() * b.basis.adjoint();
  }
  return H;
}

GeneratorDecomposition build_generator(const WalkInstance& inst, const DPMOperators& dpm, const KernelBases& kernels) {
  const Index n = inst.dim_H();
  const Index m = dpm.interior_angles.size();
  GeneratorDecomposition gen;
  gen.blocks.push_back({BlockKind::d1_plus, dpm.image_plus, dpm.interior_angles});
  gen.blocks.push_back({BlockKind::d1_minus, dpm.image_minus,
                        (Eigen::VectorXd::Constant(m, kTwoPi) - dpm.interior_angles).eval()});
  gen.blocks.push_back({BlockKind::ker_plus, kernels.plus.basis(), Eigen::VectorXd::Zero(kernels.plus.dim())});
  gen.blocks.push_back({BlockKind::ker_minus, kernels.minus.basis(), Eigen::VectorXd::Constant(kernels.minus.dim(), kPi)});

  const Index total = 2 * m + kernels.plus.dim() + kernels.minus.dim();
  if (total != n) {
    std::ostringstream msg;
    msg << "build_generator: block dimensions sum to " << total << ", dim_H is " << n;
    throw ConsistencyError(msg.str());
  }
  gen.H = compose_generator(gen.blocks, n);
  return gen;
}

GeneratorDecomposition generator_of(const WalkInstance& inst) {
  const auto tdec = hermitian_eig(inst.T());
  const auto atlas = boundary_subspaces(inst, tdec);
  const auto dpm = build_dpm(inst, tdec);
  return build_generator(inst, dpm, kernels_of_U(inst, tdec, atlas));
}

ValidationReport verify_generator(const WalkInstance& inst, const GeneratorDecomposition& gen) {
  ValidationReport r;
  const Index n = inst.dim_H();
  const double bound = kIdentityTol * static_cast<double>(n);
  const Operator& U = inst.U();

  r.expect_le("hermitian", "H = H^*", (gen.H - gen.H.adjoint()).norm(), bound);

  Operator sum = Operator::Zero(n, n);
  for (std::size_t i = 0; i < gen.blocks.size(); ++i) {
    const auto& bi = gen.blocks[i];
    const char* name = to_string(bi.kind);
    r.expect_le("block-orthonormal", name, orthonormality_defect(bi.basis), bound);
    for (std::size_t j = i + 1; j < gen.blocks.size(); ++j) {
      const auto& bj = gen.blocks[j];
      if (bi.basis.cols() == 0 || bj.basis.cols() == 0) continue;
      r.expect_le("block-orthogonal", std::string(name) + " vs " + to_string(bj.kind),
                  (bi.basis.adjoint() * bj.basis).norm(), bound);
    }
    if (bi.basis.cols() == 0) continue;
    const Operator P = bi.basis * bi.basis.adjoint();
    sum += P;
    r.expect_le("U-commutes-with-block", name, (U * P - P * U).norm(), bound);
  }
  r.expect_le("completeness", "sum of block projectors = I", (sum - identity(n)).norm(), bound);

  const auto check_range = [&](BlockKind kind, auto inside) {
    const auto& b = gen.block(kind);
    for (Index k = 0; k < b.spectrum.size(); ++k)
      if (!inside(b.spectrum[k])) r.add("block-spectrum", to_string(kind), b.spectrum[k]);
  };
  check_range(BlockKind::d1_plus, [](double x) { return x > 0.0 && x < kPi; });
  check_range(BlockKind::d1_minus, [](double x) { return x > kPi && x < kTwoPi; });
  check_range(BlockKind::ker_plus, [](double x) { return std::abs(x) <= 1e-12; });
  check_range(BlockKind::ker_minus, [](double x) { return std::abs(x - kPi) <= 1e-12; });

  const auto hdec = hermitian_eig(0.5 * (gen.H + gen.H.adjoint()));
  for (Index k = 0; k < hdec.size(); ++k) {
    const double x = hdec.eigenvalues[k];
    if (x < -1e-9 || x >= kTwoPi) r.add("spectrum-range", "sigma(H) in [0, 2pi)", x);
  }
  const Operator expH = apply_function(hdec, [](double x) { return std::polar(1.0, x); });
  r.expect_le("exponential", "e^{iH} = U", (expH - U).norm(), bound);
  return r;
}

ValidationReport check_point_spectrum_split(const WalkInstance& inst, const GeneratorDecomposition& gen,
                                            const DPMOperators& dpm) {
  ValidationReport r;
  const Index n = inst.dim_H();
  const auto hdec = hermitian_eig(0.5 * (gen.H + gen.H.adjoint()));
  constexpr double margin = 1e-7;
  std::vector<Index> upper, lower, edge;
  for (Index k = 0; k < hdec.size(); ++k) {
    const double x = hdec.eigenvalues[k];
    if (x > margin && x < kPi - margin)
      upper.push_back(k);
    else if (x > kPi + margin && x < kTwoPi - margin)
      lower.push_back(k);
    else
      edge.push_back(k);
  }
  const auto columns = [&](const std::vector<Index>& idx) {
    Operator out(n, static_cast<Index>(idx.size()));
    for (std::size_t c = 0; c < idx.size(); ++c) out.col(static_cast<Index>(c)) = hdec.eigenvectors.col(idx[c]);
    return Subspace(n, out);
  };
  r.expect_le("point-spectrum-split", "H in (0,pi) <-> d_+^* H_p^T",
              projector_distance(columns(upper), range(dpm.image_plus)), 1e-8);
  r.expect_le("point-spectrum-split", "H in (pi,2pi) <-> d_-^* H_p^T",
              projector_distance(columns(lower), range(dpm.image_minus)), 1e-8);
  r.expect_le("point-spectrum-split", "H in {0,pi} <-> ker(U^2-1)",
              projector_distance(columns(edge), nullspace(inst.U() * inst.U() - identity(n), tol::kernel, 1.0)), 1e-8);
  return r;
}

ValidationReport wave_equation_check(const WalkInstance& inst, const DPMOperators& dpm, const Vector& psi0, int n_max,
                                     double tol) {
  if (psi0.size() != inst.dim_H()) throw DimensionError("wave_equation_check: state dimension mismatch");
  const Operator& B = dpm.image_plus;
  Vector psi = B * (B.adjoint() * psi0);
  const double norm = psi.norm();
  if (norm <= 1e-12) throw DomainError("wave_equation_check: initial state has no component in D1^+");
  psi /= norm;

  ValidationReport r;
  std::vector<Vector> f;
  f.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int step = 0; step <= n_max; ++step) {
    f.push_back(dpm.d_plus * psi);
    psi = inst.U() * psi;
  }
  for (int step = 1; step < n_max; ++step) {
    const auto s = static_cast<std::size_t>(step);
    const double residual = (0.5 * (f[s + 1] + f[s - 1]) - inst.T() * f[s]).norm();
    r.expect_le("wave-equation", "n = " + std::to_string(step), residual, tol);
  }
  return r;
}

}  // namespace qwalk
