#pragma once

// Closed-form catalog: PT square well, square-well lattices, Scarf II,
// regularized centrifugal potential.

#include "ptscatter/core.hpp"
#include "ptscatter/numeric.hpp"

namespace ptscatter {

/// V = -v0 + i v1 on (-b, 0), -v0 - i v1 on (0, b), zero elsewhere.
struct SquareWellParams {
    double v0 = 0.0;
    double v1 = 0.0;
    double b = 1.0;
};

/// alpha^2 = sqrt((E+V0)^2 + V1^2), phi = atan(V1/(E+V0))/2.
struct SquareWellWaveNumbers {
    double alpha;
    double phi;
    cplx alpha0;  // alpha e^{-i phi}, wave number on the left half
    cplx alpha1;  // alpha e^{+i phi}, wave number on the right half
};

SquareWellWaveNumbers square_well_wave_numbers(const SquareWellParams& p, WaveNumber k);

/// Transfer matrix of the well centred at the origin.
TransferMatrix square_well_transfer(const SquareWellParams& p, WaveNumber k);
ScatteringCoefficients square_well_coefficients(const SquareWellParams& p, WaveNumber k);

/// n identical wells of half-width b separated by gaps of width 2a.
/// Period s = 2(a+b); first well spans [u1, u1 + 2b] with u1 = -a - 2b.
struct LatticeParams {
    SquareWellParams well;
    double a = 0.5;
    int n = 1;

    double period() const { return 2.0 * (a + well.b); }
    double u1() const { return -a - 2.0 * well.b; }
    double length() const { return n * period(); }
    double well_centre(int j) const { return u1() + well.b + j * period(); }
};

TransferMatrix lattice_tmatrix(const LatticeParams& p, WaveNumber k);

/// D*(u1) T^n D(u1 + n s).  Throws TransferOverflow once an element of T^m
/// exceeds 1e300 in modulus.
TransferMatrix multi_well_transfer(const LatticeParams& p, WaveNumber k);

/// Scarf II: V(x) = (lambda^2 - s(s+1)) / cosh^2 z + lambda (2s+1) sinh z / cosh^2 z,
/// z = x + i eps.  Real lambda is hermitian (for eps = 0), imaginary lambda is PT.
struct ScarfParams {
    double s = 0.0;
    cplx lambda = 0.0;
    double eps = 0.0;
};

AsymptoticAmplitudes scarf_amplitudes(const ScarfParams& p, WaveNumber k);
ScatteringCoefficients scarf_coefficients(const ScarfParams& p, WaveNumber k);

/// Transmission for s = n (integer), lambda = i m (integer m >= 1):
/// (-1)^{n+m} prod_{j<=n} (j-ik)/(j+ik) prod_{j<=m} (j-1/2-ik)/(j-1/2+ik).
cplx scarf_reflectionless_transmission(int n, int m, WaveNumber k);

/// V(x) = alpha / (x + i eps)^2, nu = sqrt(alpha + 1/4).  The principal root
/// is used unless `negative_branch` selects -sqrt.
struct CentrifugalParams {
    double alpha_strength = 0.0;
    double eps = 0.1;
    bool negative_branch = false;

    cplx nu() const;
};

/// Throws InvalidNu when Re nu <= -1/2, InvalidParameter when eps = 0.
AsymptoticAmplitudes centrifugal_amplitudes(const CentrifugalParams& p, WaveNumber k);
ScatteringCoefficients centrifugal_coefficients(const CentrifugalParams& p, WaveNumber k);

/// A_+^* / A_- of the left-incident solution; e^{i pi (nu + 1/2)} for real nu.
cplx centrifugal_pt_phase(const CentrifugalParams& p, WaveNumber k);

// Sampled profiles for the numeric integrator.  Values at a discontinuity are
// the mean of the one-sided limits.
LocalPotential square_well_potential(const SquareWellParams& p, double centre = 0.0);
LocalPotential lattice_potential(const LatticeParams& p);
/// Zero outside |x| <= window.
LocalPotential scarf_potential(const ScarfParams& p, double window = 20.0);
LocalPotential centrifugal_potential(const CentrifugalParams& p, double window = 50.0);

}  // namespace ptscatter
