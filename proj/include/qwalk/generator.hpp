#pragma once

#include <vector>

#include "qwalk/linop.hpp"
#include "qwalk/spectral_map.hpp"
#include "qwalk/szegedy.hpp"
#include "qwalk/validation.hpp"

namespace qwalk {

/// d_+ and d_- assembled per interior eigenvector f_k of T (eigenvalue
/// lambda_k, angle theta_k = arccos lambda_k):
///   d_+^* f_k = (d_A^* - d_B^* e^{i theta_k}) f_k / sqrt(2 (1 - lambda_k^2))
///   d_-^* f_k = (d_A^* e^{i theta_k} - d_B^*) f_k / sqrt(2 (1 - lambda_k^2))
/// Both vanish on ker(T^2 - 1).
struct DPMOperators {
  Operator d_plus;              // dim_K x dim_H
  Operator d_minus;             // dim_K x dim_H
  Operator theta_T;             // arccos(T), boundary eigenvalues snapped to +-1
  Operator interior_projector;  // onto ker(T^2 - 1)^perp in K

  Operator interior_vectors;    // f_k as columns
  Eigen::VectorXd interior_eigenvalues;
  Eigen::VectorXd interior_angles;
  Operator image_plus;          // d_+^* f_k as columns (basis of D1^+)
  Operator image_minus;         // d_-^* f_k as columns (basis of D1^-)
};

DPMOperators build_dpm(const WalkInstance& inst, const SpectralDecomposition& tdec);

/// d_+ from the closed operator formula
///   (2 (1 - T^2))^{-1/2} (d_A - e^{-i theta(T)} d_B)
/// with the inverse square root taken on the interior band only.
Operator d_plus_by_formula(const WalkInstance& inst, const SpectralDecomposition& tdec);
Operator d_minus_by_formula(const WalkInstance& inst, const SpectralDecomposition& tdec);

/// Isometry, product identities, orthogonal ranges, vanishing on
/// D_0 (+) D_perp, and agreement with the formula route, all within
/// 1e-9 * dim.
ValidationReport check_dpm(const WalkInstance& inst, const SpectralDecomposition& tdec,
                           const DPMOperators& dpm, const SubspaceAtlas& atlas);

struct KernelBases {
  Subspace plus;   // ker(U - 1)
  Subspace minus;  // ker(U + 1)
};

/// ker(U -+ 1) = d_A^* ker(T -+ 1) (+) D_perp_+-; throws ConsistencyError
/// if the assembled bases are not orthonormal or differ from the direct
/// nullspaces of U -+ 1 by more than 1e-8 in projector distance.
KernelBases kernels_of_U(const WalkInstance& inst, const SpectralDecomposition& tdec,
                         const SubspaceAtlas& atlas);

enum class BlockKind { d1_plus, d1_minus, ker_plus, ker_minus };

const char* to_string(BlockKind b);

struct GeneratorBlock {
  BlockKind kind;
  Operator basis;              // orthonormal columns
  Eigen::VectorXd spectrum;    // eigenvalue of H on each basis column
};

/// Hermitian generator H with spectrum in [0, 2 pi) and e^{iH} = U, as
/// four orthogonal blocks D1^+, D1^-, ker(U - 1), ker(U + 1).
struct GeneratorDecomposition {
  Operator H;
  std::vector<GeneratorBlock> blocks;  // order: d1_plus, d1_minus, ker_plus, ker_minus

  const GeneratorBlock& block(BlockKind kind) const;
  GeneratorBlock& block(BlockKind kind);
  Index dim() const { return H.rows(); }
};

GeneratorDecomposition build_generator(const WalkInstance& inst, const DPMOperators& dpm,
                                       const KernelBases& kernels);

/// H = sum over blocks of basis * diag(spectrum) * basis^*.
Operator compose_generator(const std::vector<GeneratorBlock>& blocks, Index dim);

/// All-in-one: decompose T, build atlas, d_+-, kernels and H.
GeneratorDecomposition generator_of(const WalkInstance& inst);

/// (a) e^{iH} = U, (b) U commutes with each block projector, (c) block
/// spectra in (0, pi), (pi, 2 pi), {0}, {pi}, (d) sigma(H) in [0, 2 pi),
/// plus block orthogonality and completeness.
ValidationReport verify_generator(const WalkInstance& inst, const GeneratorDecomposition& gen);

/// Eigenspaces of H split as D1^+ for (0, pi), D1^- for (pi, 2 pi) and
/// ker(U^2 - 1) for {0, pi}; compared by projector distance.
ValidationReport check_point_spectrum_split(const WalkInstance& inst, const GeneratorDecomposition& gen,
                                            const DPMOperators& dpm);

/// With psi_n = U^n psi_0 and f_n = d_+ psi_n, checks
/// ||(f_{n+1} + f_{n-1}) / 2 - T f_n|| <= tol for 1 <= n < n_max.
/// psi_0 is first projected onto Ran(d_+^* d_+) and renormalized; a zero
/// projection is a DomainError.
ValidationReport wave_equation_check(const WalkInstance& inst, const DPMOperators& dpm, const Vector& psi0,
                                     int n_max, double tol = 1e-9);

}  // namespace qwalk
