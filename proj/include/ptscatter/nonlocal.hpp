#pragma once

// Separable non-local kernels K(x,y) = lambda g(x) e^{i alpha x} h(y) e^{i beta y}
// in  psi'' + k^2 psi = \int K(x,y) psi(y) dy.
//
// Fourier convention: f~(q) = \int f(x) e^{-iqx} dx.

#include <functional>
#include <optional>
#include <vector>

#include "ptscatter/core.hpp"
#include "ptscatter/numeric.hpp"

namespace ptscatter {

struct YamaguchiParams {
    double gamma;
    double delta;
};

struct SeparableKernel {
    std::function<double(double)> g;
    std::function<double(double)> h;
    // Optional closed-form transforms; computed by quadrature when empty.
    std::function<cplx(double)> g_ft;
    std::function<cplx(double)> h_ft;
    double alpha = 0.0;
    double beta = 0.0;
    double lambda = 0.0;
    // g and h are treated as zero beyond |x| > extent.
    double extent = 40.0;
    // Set by yamaguchi_kernel; enables the closed forms.
    std::optional<YamaguchiParams> yamaguchi;
};

/// g = e^{-gamma|x|}, h = e^{-delta|y|}, g~(q) = 2 gamma / (gamma^2 + q^2).
SeparableKernel yamaguchi_kernel(double gamma, double delta, double alpha, double beta,
                                 double lambda);

enum class GreenSign { plus, minus };

/// G_+(u) = -(i/2k) e^{ik|u|},  G_-(u) = conj(G_+(u)).
cplx green_function(GreenSign sign, double u, WaveNumber k);

/// Transforms of the bare form factors.
cplx g_tilde(const SeparableKernel& kernel, double q);
cplx h_tilde(const SeparableKernel& kernel, double q);

/// \int G_+-(x - y) g(y) e^{i alpha y} dy
cplx green_convolution(const SeparableKernel& kernel, GreenSign sign, double x, WaveNumber k);

enum class NMethod { automatic, closed_form, quadrature };

/// N_+- = \int\int h(x) e^{i beta x} G_+-(x - y) g(y) e^{i alpha y} dx dy.
/// `automatic` uses the closed form for Yamaguchi kernels.  Quadrature throws
/// QuadratureFailure when rel_tol is not reached within the subdivision budget.
cplx compute_n(const SeparableKernel& kernel, GreenSign sign, WaveNumber k,
               NMethod method = NMethod::automatic, double rel_tol = 1e-8);

struct KernelSymmetryClass {
    bool reality = false;
    bool symmetry = false;     // K(x,y) = K(y,x)
    bool hermiticity = false;
    bool p = false;
    bool t = false;
    bool pt = false;
};

KernelSymmetryClass classify_kernel(const SeparableKernel& kernel, int samples = 512,
                                    double tol = 1e-10);

struct NonlocalIntermediates {
    cplx n_plus;
    cplx n_minus;
    cplx d_plus;          // 1 / (1 - lambda N_+)
    cplx d_minus;         // 1 / (1 - lambda N_-)
    cplx script_d_minus;  // 1 / (1 - lambda N_- + i omega S)
    cplx q_part;          // lambda (N_+ + N_-) / 2
    cplx i_plus;          // I_+ for unit left incidence
    cplx i_minus;         // I_- for unit right incidence
    double omega;         // lambda / (2k)
    cplx delta_t;         // T_rl - T_lr = i omega delta_t d_plus script_d_minus
    // g~(k - alpha), g~(-k - alpha), h~(k - beta), h~(-k - beta)
    cplx g_minus, g_plus, h_minus, h_plus;
};

struct NonlocalResult {
    ScatteringCoefficients coeffs;
    NonlocalIntermediates parts;
};

/// Throws ResonancePole when 1 - lambda N_+ or the script-D_- denominator
/// vanishes to relative 1e-12.
NonlocalResult nonlocal_solve(const SeparableKernel& kernel, WaveNumber k,
                              NMethod method = NMethod::automatic);
ScatteringCoefficients nonlocal_coefficients(const SeparableKernel& kernel, WaveNumber k,
                                             NMethod method = NMethod::automatic);

/// Scattering solution with unit incident amplitude:
///   left:  e^{ikx} + lambda I_+ \int G_+(x-y) g(y) e^{i alpha y} dy
///   right: R_rl e^{ikx} + T_rl e^{-ikx} + lambda I_- \int G_-(x-y) g(y) e^{i alpha y} dy
class NonlocalWavefunction {
public:
    NonlocalWavefunction(SeparableKernel kernel, WaveNumber k, Incidence dir,
                         NMethod method = NMethod::automatic);

    cplx operator()(double x) const;
    const NonlocalResult& result() const { return result_; }

private:
    SeparableKernel kernel_;
    WaveNumber k_;
    Incidence dir_;
    NonlocalResult result_;
};

std::vector<cplx> nonlocal_wavefunction(const SeparableKernel& kernel, WaveNumber k,
                                        Incidence dir, const std::vector<double>& grid,
                                        NMethod method = NMethod::automatic);

}  // namespace ptscatter
