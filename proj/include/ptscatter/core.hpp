#pragma once

// S-matrix / transfer-matrix algebra in the right/left plane-wave basis.
//
// Units: hbar = 2m = 1, so E = k^2.  |R> ~ e^{ikx}, |L> ~ e^{-ikx}.
//
//   S = | T_{L->R}  R_{R->L} |        (A_-)     (A_+)
//       | R_{L->R}  T_{R->L} |        (B_-) = M (B_+)

#include <complex>

#include "ptscatter/errors.hpp"

namespace ptscatter {

using cplx = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr cplx kI{0.0, 1.0};

/// Strictly positive wave number; k <= 0 (and non-finite k) is rejected.
class WaveNumber {
public:
    explicit WaveNumber(double k);
    double value() const noexcept { return k_; }
    double energy() const noexcept { return k_ * k_; }

private:
    double k_;
};

/// Asymptotic amplitudes of two independent solutions F_1, F_2:
/// F_m(x) -> a_{m+-} e^{ikx} + b_{m+-} e^{-ikx} as x -> +-inf.
struct AsymptoticAmplitudes {
    cplx a1p, b1p, a1m, b1m;
    cplx a2p, b2p, a2m, b2m;
};

struct ScatteringCoefficients {
    cplx t_lr, r_lr, t_rl, r_rl;
};

struct SMatrix {
    cplx s_rr, s_rl, s_lr, s_ll;

    cplx det() const { return s_rr * s_ll - s_rl * s_lr; }
};

struct TransferMatrix {
    cplx m_rr, m_rl, m_lr, m_ll;

    cplx det() const { return m_rr * m_ll - m_rl * m_lr; }
    static TransferMatrix identity() { return {1.0, 0.0, 0.0, 1.0}; }
};

TransferMatrix operator*(const TransferMatrix& a, const TransferMatrix& b);

SMatrix to_smatrix(const ScatteringCoefficients& c);
ScatteringCoefficients to_coefficients(const SMatrix& s);

/// Throws DegenerateSolutions when |a2- b1+ - a1- b2+| < 1e-12 max(|a2- b1+|, |a1- b2+|).
ScatteringCoefficients coefficients_from_amplitudes(const AsymptoticAmplitudes& amps);

/// Throws TransmissionPole when |M_RR| < pole_tol.
SMatrix smatrix_from_transfer(const TransferMatrix& m, double pole_tol = kDefaultTolerance);

/// Throws ZeroTransmission when |T_{L->R}| <= zero_tol.
TransferMatrix transfer_from_smatrix(const SMatrix& s, double zero_tol = 0.0);

/// Displacement D(x0) = diag(e^{ikx0}, e^{-ikx0}).
TransferMatrix displacement(double x0, WaveNumber k);

/// Transfer matrix of the same scatterer re-centred at x0:
/// off-diagonal elements pick up e^{-2ikx0} (RL) and e^{2ikx0} (LR).
TransferMatrix shift_transfer(const TransferMatrix& m, double x0, WaveNumber k);

/// m1 describes the left region, m2 the region to its right.
TransferMatrix compose_transfer(const TransferMatrix& m1, const TransferMatrix& m2);

/// |W(-inf) - W(+inf)| / max(|W(-inf)|, |W(+inf)|) with W(-inf) = -2ik T_{R->L},
/// W(+inf) = -2ik T_{L->R}.  Vanishes for local potentials.
double wronskian_residual(const AsymptoticAmplitudes& amps, WaveNumber k);

/// Largest element-wise modulus of a - b.
double max_abs_diff(const TransferMatrix& a, const TransferMatrix& b);
double max_abs_diff(const SMatrix& a, const SMatrix& b);

}  // namespace ptscatter
