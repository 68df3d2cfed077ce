#pragma once

#include <string>
#include <vector>

#include "qwalk/linop.hpp"
#include "qwalk/szegedy.hpp"
#include "qwalk/validation.hpp"

namespace qwalk {

/// Concrete bases for the subspaces that organize H:
///   A = Ran d_A^*,  D_perp = ker d_A  cap ker d_B,
///   D_perp_plus = A_perp cap ker(S+1),  D_perp_minus = A_perp cap ker(S-1),
///   D0_plus/minus = d_A^* ker(T -+ 1),  D1 = ker(U^2 - 1)^perp.
struct SubspaceAtlas {
  Subspace A, A_perp;
  Subspace S_plus, S_minus;
  Subspace D_perp, D_perp_plus, D_perp_minus;
  Subspace D0_plus, D0_minus;
  Subspace D1;
  Index M_plus = 0;
  Index M_minus = 0;
  Index ker_T_plus = 0;   // dim ker(T - 1)
  Index ker_T_minus = 0;  // dim ker(T + 1)
};

SubspaceAtlas boundary_subspaces(const WalkInstance& inst, const SpectralDecomposition& tdec,
                                 double tol_ker = tol::kernel);
SubspaceAtlas boundary_subspaces(const WalkInstance& inst, double tol_ker = tol::kernel);

/// Dimension identities, D_perp consistency, D0 orthogonal to D_perp,
/// ker(U -+ 1) = D0 (+) D_perp direct, and U-invariance of D1, D0, D_perp.
ValidationReport check_atlas(const WalkInstance& inst, const SubspaceAtlas& atlas);

enum class Provenance { mapped, plus_correction, minus_correction };

const char* to_string(Provenance p);

struct PredictedEigenvalue {
  double angle = 0.0;  // in [0, 2 pi)
  Index multiplicity = 0;
  Provenance provenance = Provenance::mapped;
  double source_lambda = 0.0;  // eigenvalue of T for mapped entries
};

struct SpectrumPrediction {
  std::vector<PredictedEigenvalue> entries;  // sorted by angle, then provenance
  Index total() const;
};

/// Interior lambda of multiplicity m maps to angles arccos(lambda) and
/// 2 pi - arccos(lambda), each with multiplicity m; lambda = +1 maps to 0,
/// lambda = -1 to pi; M_+ and M_- add corrections at 0 and pi.
/// Eigenvalues of T closer than cluster_gap are merged into one level.
SpectrumPrediction mapped_spectrum(const SpectralDecomposition& tdec, const SubspaceAtlas& atlas,
                                   double cluster_gap = 1e-8);

/// For every distinct predicted angle, the dimension of ker(U - e^{i xi})
/// must equal the predicted multiplicity, and the multiplicities must sum
/// to dim_H.
ValidationReport verify_spectral_mapping(const WalkInstance& inst, const SpectrumPrediction& pred,
                                         double tol = 1e-8);

}  // namespace qwalk
