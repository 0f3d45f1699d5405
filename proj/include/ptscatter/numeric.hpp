#pragma once

// Direct integration of -psi'' + V psi = k^2 psi for complex local V.

#include <functional>
#include <vector>

#include "ptscatter/core.hpp"

namespace ptscatter {

/// V(x) with a finite support [x_left, x_right].  `breakpoints` lists the
/// points where V (or a derivative) jumps; integration steps never straddle them.
struct LocalPotential {
    std::function<cplx(double)> evaluate;
    double x_left = 0.0;
    double x_right = 0.0;
    std::vector<double> breakpoints;

    cplx operator()(double x) const { return evaluate(x); }
};

LocalPotential zero_potential(double half_width = 1.0);

/// V translated so that V_new(x) = V(x - x0).
LocalPotential translate(const LocalPotential& v, double x0);

enum class IntegrationMethod { rk4, adaptive };

struct IntegrationConfig {
    double step = 1e-3;
    IntegrationMethod method = IntegrationMethod::rk4;
    double rel_tol = 1e-11;  // adaptive mode only
    double abs_tol = 1e-13;  // adaptive mode only
    double decay_tol = 1e-14;
    double match_margin = 1.0;
};

/// F_1 starts as e^{ikx}, F_2 as e^{-ikx} at x_left - match_margin, so
/// a1m = 1, b1m = 0, a2m = 0, b2m = 1 exactly.
AsymptoticAmplitudes integrate_two_solutions(const LocalPotential& v, WaveNumber k,
                                             const IntegrationConfig& cfg = {});

/// If `wronskian` is given it receives wronskian_residual of the integrated pair.
ScatteringCoefficients numeric_coefficients(const LocalPotential& v, WaveNumber k,
                                            const IntegrationConfig& cfg = {},
                                            double* wronskian = nullptr);

enum class Incidence { left, right };

struct SampledWavefunction {
    std::vector<double> x;
    std::vector<cplx> psi;
    std::vector<cplx> dpsi;
};

/// Scattering solution with unit incident amplitude on a uniform grid spanning
/// [x_left - margin, x_right + margin], spacing <= cfg.step.  The grid is
/// mirror-symmetric whenever x_left = -x_right.
///   left:  e^{ikx} + R_lr e^{-ikx}  |  T_lr e^{ikx}
///   right: T_rl e^{-ikx}            |  e^{-ikx} + R_rl e^{ikx}
SampledWavefunction wavefunction_on_grid(const LocalPotential& v, WaveNumber k, Incidence dir,
                                         const IntegrationConfig& cfg = {});

}  // namespace ptscatter
