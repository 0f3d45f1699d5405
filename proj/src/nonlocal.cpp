#include "ptscatter/nonlocal.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace ptscatter {

namespace {

constexpr unsigned kMaxDepth = 12;

// Adaptive Gauss-Kronrod on consecutive pieces of `cuts`.
template <class F>
cplx integrate_pieces(F&& f, std::vector<double> cuts, double rel_tol) {
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    cplx total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double err = 0.0;
        double l1 = 0.0;
        const cplx part = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
            f, cuts[i], cuts[i + 1], kMaxDepth, rel_tol, &err, &l1);
        if (!(err <= rel_tol * l1 + 1e-300) && !(err <= 1e-15)) {
            throw QuadratureFailure("tolerance " + std::to_string(rel_tol) +
                                    " not met on [" + std::to_string(cuts[i]) + ", " +
                                    std::to_string(cuts[i + 1]) + "], error " +
                                    std::to_string(err));
        }
        total += part;
    }
    return total;
}

cplx numeric_ft(const std::function<double(double)>& f, double extent, double q) {
    return integrate_pieces([&](double x) { return f(x) * std::exp(cplx(0.0, -q * x)); },
                            {-extent, 0.0, extent}, 1e-12);
}

// \int e^{i kappa |x - y|} e^{-gamma|y| + i alpha y} dy; kappa may be negative.
cplx yamaguchi_convolution(double x, double kappa, double gamma, double alpha) {
    if (x < 0.0) return yamaguchi_convolution(-x, kappa, gamma, -alpha);
    const cplx ik = kI * kappa;
    const cplx ia = kI * alpha;
    const cplx mid = -gamma + ia - ik;
    const cplx e = std::exp(ik * x);
    return e / (gamma + ia - ik) + e * (std::exp(mid * x) - 1.0) / mid +
           std::exp((-gamma + ia) * x) / (gamma - ia - ik);
}

// \int\int e^{-delta|x| + i beta x} e^{i kappa |x - y|} e^{-gamma|y| + i alpha y} dx dy,
// summed over the six orderings of x, y, 0.
cplx yamaguchi_double_integral(double kappa, double gamma, double delta, double alpha,
                               double beta) {
    const cplx ik = kI * kappa;
    const cplx ia = kI * alpha;
    const cplx ib = kI * beta;
    cplx total = 0.0;
    {  // x > y > 0
        const cplx p = -delta + ib + ik;
        const cplx q = -gamma + ia - ik;
        total += 1.0 / (p * (p + q));
    }
    {  // y > x > 0
        const cplx p = -delta + ib - ik;
        const cplx q = -gamma + ia + ik;
        total += 1.0 / (q * (p + q));
    }
    {  // x > 0 > y
        const cplx p = -delta + ib + ik;
        const cplx q = gamma + ia - ik;
        total -= 1.0 / (p * q);
    }
    {  // y > 0 > x
        const cplx p = delta + ib - ik;
        const cplx q = -gamma + ia + ik;
        total -= 1.0 / (p * q);
    }
    {  // 0 > x > y
        const cplx p = delta + ib + ik;
        const cplx q = gamma + ia - ik;
        total += 1.0 / (q * (p + q));
    }
    {  // 0 > y > x
        const cplx p = delta + ib - ik;
        const cplx q = gamma + ia + ik;
        total += 1.0 / (p * (p + q));
    }
    return total;
}

double signed_k(GreenSign sign, WaveNumber k) {
    return sign == GreenSign::plus ? k.value() : -k.value();
}

// G_+- = prefactor * e^{+-ik|u|}
cplx green_prefactor(GreenSign sign, WaveNumber k) {
    return (sign == GreenSign::plus ? -kI : kI) / (2.0 * k.value());
}

void require_pole_free(cplx denominator, cplx term, const char* what, WaveNumber k) {
    if (std::abs(denominator) < 1e-12 * std::max(1.0, std::abs(term))) {
        throw ResonancePole(std::string(what) + " vanishes at k = " + std::to_string(k.value()));
    }
}

}  // namespace

SeparableKernel yamaguchi_kernel(double gamma, double delta, double alpha, double beta,
                                 double lambda) {
    if (!(gamma > 0.0) || !(delta > 0.0)) {
        throw InvalidParameter("Yamaguchi form factors need gamma, delta > 0");
    }
    SeparableKernel kn;
    kn.g = [gamma](double x) { return std::exp(-gamma * std::abs(x)); };
    kn.h = [delta](double x) { return std::exp(-delta * std::abs(x)); };
    kn.g_ft = [gamma](double q) { return cplx(2.0 * gamma / (gamma * gamma + q * q)); };
    kn.h_ft = [delta](double q) { return cplx(2.0 * delta / (delta * delta + q * q)); };
    kn.alpha = alpha;
    kn.beta = beta;
    kn.lambda = lambda;
    kn.extent = 40.0 / std::min(gamma, delta);
    kn.yamaguchi = YamaguchiParams{gamma, delta};
    return kn;
}

cplx green_function(GreenSign sign, double u, WaveNumber k) {
    return green_prefactor(sign, k) * std::exp(kI * (signed_k(sign, k) * std::abs(u)));
}

cplx g_tilde(const SeparableKernel& kernel, double q) {
    return kernel.g_ft ? kernel.g_ft(q) : numeric_ft(kernel.g, kernel.extent, q);
}

cplx h_tilde(const SeparableKernel& kernel, double q) {
    return kernel.h_ft ? kernel.h_ft(q) : numeric_ft(kernel.h, kernel.extent, q);
}

cplx green_convolution(const SeparableKernel& kernel, GreenSign sign, double x, WaveNumber k) {
    const double kappa = signed_k(sign, k);
    cplx raw;
    if (kernel.yamaguchi) {
        raw = yamaguchi_convolution(x, kappa, kernel.yamaguchi->gamma, kernel.alpha);
    } else {
        const double e = kernel.extent;
        raw = integrate_pieces(
            [&](double y) {
                return std::exp(cplx(0.0, kappa * std::abs(x - y) + kernel.alpha * y)) *
                       kernel.g(y);
            },
            {-e, std::clamp(x, -e, e), 0.0, e}, 1e-12);
    }
    return green_prefactor(sign, k) * raw;
}

cplx compute_n(const SeparableKernel& kernel, GreenSign sign, WaveNumber k, NMethod method,
               double rel_tol) {
    if (method == NMethod::closed_form && !kernel.yamaguchi) {
        throw InvalidParameter("closed-form N is only available for Yamaguchi kernels");
    }
    const double kappa = signed_k(sign, k);
    if (kernel.yamaguchi && method != NMethod::quadrature) {
        const auto [gamma, delta] = *kernel.yamaguchi;
        return green_prefactor(sign, k) *
               yamaguchi_double_integral(kappa, gamma, delta, kernel.alpha, kernel.beta);
    }
    const double e = kernel.extent;
    const double inner_tol = std::max(rel_tol * 1e-2, 1e-14);
    auto inner = [&](double x) {
        return integrate_pieces(
            [&](double y) {
                return std::exp(cplx(0.0, kappa * std::abs(x - y) + kernel.alpha * y)) *
                       kernel.g(y);
            },
            {-e, x, 0.0, e}, inner_tol);
    };
    const cplx raw = integrate_pieces(
        [&](double x) {
            return kernel.h(x) * std::exp(cplx(0.0, kernel.beta * x)) * inner(x);
        },
        {-e, 0.0, e}, rel_tol);
    return green_prefactor(sign, k) * raw;
}

KernelSymmetryClass classify_kernel(const SeparableKernel& kernel, int samples, double tol) {
    if (samples < 2) throw InvalidParameter("classify_kernel needs at least 2 samples");
    const double e = std::min(kernel.extent, 20.0);
    bool g_even = true;
    bool h_even = true;
    bool g_is_h = true;
    for (int i = 0; i < samples; ++i) {
        const double x = -e + 2.0 * e * i / (samples - 1);
        g_even = g_even && std::abs(kernel.g(x) - kernel.g(-x)) < tol;
        h_even = h_even && std::abs(kernel.h(x) - kernel.h(-x)) < tol;
        g_is_h = g_is_h && std::abs(kernel.g(x) - kernel.h(x)) < tol;
    }
    const bool real = std::abs(kernel.alpha) < tol && std::abs(kernel.beta) < tol;
    KernelSymmetryClass c;
    c.reality = real;
    c.symmetry = std::abs(kernel.alpha - kernel.beta) < tol && g_is_h;
    c.hermiticity = std::abs(kernel.alpha + kernel.beta) < tol && g_is_h;
    c.p = real && g_even && h_even;
    c.t = real;
    c.pt = g_even && h_even;
    return c;
}

NonlocalResult nonlocal_solve(const SeparableKernel& kernel, WaveNumber k, NMethod method) {
    const double kk = k.value();
    const double lam = kernel.lambda;
    NonlocalIntermediates m{};
    m.omega = lam / (2.0 * kk);
    m.g_minus = g_tilde(kernel, kk - kernel.alpha);
    m.g_plus = g_tilde(kernel, -kk - kernel.alpha);
    m.h_minus = h_tilde(kernel, kk - kernel.beta);
    m.h_plus = h_tilde(kernel, -kk - kernel.beta);

    if (lam == 0.0) {
        m.d_plus = m.d_minus = m.script_d_minus = 1.0;
        m.i_plus = m.h_plus;
        m.i_minus = m.h_minus;
        m.delta_t = m.g_minus * m.h_plus - m.g_plus * m.h_minus;
        return {{1.0, 0.0, 1.0, 0.0}, m};
    }

    m.n_plus = compute_n(kernel, GreenSign::plus, k, method);
    m.n_minus = compute_n(kernel, GreenSign::minus, k, method);
    m.q_part = 0.5 * lam * (m.n_plus + m.n_minus);

    const cplx iw = kI * m.omega;
    const cplx s_sum = m.g_plus * m.h_minus + m.g_minus * m.h_plus;
    const cplx den_plus = 1.0 - lam * m.n_plus;
    const cplx den_script = 1.0 - lam * m.n_minus + iw * s_sum;
    require_pole_free(den_plus, lam * m.n_plus, "1 - lambda N_+", k);
    require_pole_free(den_script, lam * m.n_minus, "script-D_- denominator", k);
    m.d_plus = 1.0 / den_plus;
    m.d_minus = 1.0 / (1.0 - lam * m.n_minus);
    m.script_d_minus = 1.0 / den_script;
    m.i_plus = m.h_plus * m.d_plus;
    m.i_minus = m.h_minus * m.script_d_minus;
    m.delta_t = m.g_minus * m.h_plus - m.g_plus * m.h_minus +
                lam * (m.n_plus * m.g_plus * m.h_minus - m.n_minus * m.g_minus * m.h_plus) +
                iw * m.g_minus * m.h_plus * s_sum;

    ScatteringCoefficients c;
    c.t_lr = 1.0 - iw * m.g_minus * m.h_plus * m.d_plus;
    c.r_lr = -iw * m.g_plus * m.h_plus * m.d_plus;
    c.t_rl = 1.0 - iw * m.g_plus * m.h_minus * m.script_d_minus;
    c.r_rl = -iw * m.g_minus * m.h_minus * m.script_d_minus;
    return {c, m};
}

ScatteringCoefficients nonlocal_coefficients(const SeparableKernel& kernel, WaveNumber k,
                                             NMethod method) {
    return nonlocal_solve(kernel, k, method).coeffs;
}

NonlocalWavefunction::NonlocalWavefunction(SeparableKernel kernel, WaveNumber k, Incidence dir,
                                           NMethod method)
    : kernel_(std::move(kernel)), k_(k), dir_(dir), result_(nonlocal_solve(kernel_, k, method)) {}

cplx NonlocalWavefunction::operator()(double x) const {
    const double kk = k_.value();
    const cplx e = std::exp(kI * (kk * x));
    if (dir_ == Incidence::left) {
        return e + kernel_.lambda * result_.parts.i_plus *
                       green_convolution(kernel_, GreenSign::plus, x, k_);
    }
    const ScatteringCoefficients& c = result_.coeffs;
    return c.r_rl * e + c.t_rl * std::conj(e) +
           kernel_.lambda * result_.parts.i_minus *
               green_convolution(kernel_, GreenSign::minus, x, k_);
}

std::vector<cplx> nonlocal_wavefunction(const SeparableKernel& kernel, WaveNumber k,
                                        Incidence dir, const std::vector<double>& grid,
                                        NMethod method) {
    const NonlocalWavefunction psi(kernel, k, dir, method);
    std::vector<cplx> out;
    out.reserve(grid.size());
    for (double x : grid) out.push_back(psi(x));
    return out;
}

}  // namespace ptscatter
