#pragma once

// PT density and current:
//   rho(x) = psi^*(x) psi(-x)
//   j(x)   = i [psi^*(x) psi'(-x) + psi(-x) psi'^*(x)]
// (the second form follows from d/dx psi(-x) = -psi'(-x)).

#include <vector>

#include "ptscatter/core.hpp"
#include "ptscatter/numeric.hpp"

namespace ptscatter {

struct CurrentProfile {
    std::vector<double> x;
    std::vector<cplx> rho;
    std::vector<cplx> j;
};

/// Needs x mirror-symmetric about 0 (relative tolerance 1e-12); psi(-x) is read
/// from the mirrored sample.  Throws AsymmetricGrid otherwise.
CurrentProfile pt_current(const SampledWavefunction& psi);

/// Ordinary current -i (psi' psi^* - psi psi'^*) and density |psi|^2.
CurrentProfile hermitian_current(const SampledWavefunction& psi);

/// max |j(x) - j_c| / |j_c| with j_c the value nearest x = 0.
double current_spread(const CurrentProfile& profile);

struct AsymptoticCurrent {
    cplx j_plus_inf;
    cplx j_minus_inf;
};

/// j(+inf) = 2k A_+^* B_-,  j(-inf) = -2k A_+ B_-^*  (A_- = 1, B_+ = 0).
AsymptoticCurrent asymptotic_current(cplx a_plus, cplx b_minus, WaveNumber k);
/// Left-incident normalization: A_+ = T_lr, B_- = R_lr.
AsymptoticCurrent asymptotic_current(const ScatteringCoefficients& c, WaveNumber k);

/// Distance of arg R_lr - arg T_lr - pi/2 to the nearest multiple of pi.
/// Throws VacuousForReflectionless when |R_lr| <= vacuous_tol.
double phase_relation_residual(const ScatteringCoefficients& c, double vacuous_tol = 1e-14);

}  // namespace ptscatter
