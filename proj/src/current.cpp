#include "ptscatter/current.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ptscatter {

namespace {

void require_samples(const SampledWavefunction& w) {
    if (w.x.empty() || w.psi.size() != w.x.size() || w.dpsi.size() != w.x.size()) {
        throw InvalidParameter("wavefunction samples and grid differ in length");
    }
}

}  // namespace

CurrentProfile pt_current(const SampledWavefunction& w) {
    require_samples(w);
    const std::size_t n = w.x.size();
    double scale = 0.0;
    for (double x : w.x) scale = std::max(scale, std::abs(x));
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(w.x[i] + w.x[n - 1 - i]) > 1e-12 * std::max(scale, 1.0)) {
            throw AsymmetricGrid("grid is not mirror-symmetric about x = 0");
        }
    }
    CurrentProfile out;
    out.x = w.x;
    out.rho.resize(n);
    out.j.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t m = n - 1 - i;
        out.rho[i] = std::conj(w.psi[i]) * w.psi[m];
        out.j[i] = kI * (std::conj(w.psi[i]) * w.dpsi[m] + w.psi[m] * std::conj(w.dpsi[i]));
    }
    return out;
}

CurrentProfile hermitian_current(const SampledWavefunction& w) {
    require_samples(w);
    CurrentProfile out;
    out.x = w.x;
    out.rho.reserve(w.x.size());
    out.j.reserve(w.x.size());
    for (std::size_t i = 0; i < w.x.size(); ++i) {
        out.rho.emplace_back(std::norm(w.psi[i]));
        out.j.push_back(-kI * (w.dpsi[i] * std::conj(w.psi[i]) - w.psi[i] * std::conj(w.dpsi[i])));
    }
    return out;
}

double current_spread(const CurrentProfile& p) {
    if (p.j.empty()) return 0.0;
    std::size_t c = 0;
    for (std::size_t i = 1; i < p.x.size(); ++i) {
        if (std::abs(p.x[i]) < std::abs(p.x[c])) c = i;
    }
    const cplx ref = p.j[c];
    double worst = 0.0;
    for (const cplx& j : p.j) worst = std::max(worst, std::abs(j - ref));
    return worst / std::max(std::abs(ref), 1e-300);
}

AsymptoticCurrent asymptotic_current(cplx a_plus, cplx b_minus, WaveNumber k) {
    const double kk = k.value();
    return {2.0 * kk * std::conj(a_plus) * b_minus, -2.0 * kk * a_plus * std::conj(b_minus)};
}

AsymptoticCurrent asymptotic_current(const ScatteringCoefficients& c, WaveNumber k) {
    return asymptotic_current(c.t_lr, c.r_lr, k);
}

double phase_relation_residual(const ScatteringCoefficients& c, double vacuous_tol) {
    if (!(std::abs(c.r_lr) > vacuous_tol)) {
        throw VacuousForReflectionless("R_lr vanishes; the phase relation is vacuous");
    }
    constexpr double pi = std::numbers::pi;
    const double d = std::arg(c.r_lr) - std::arg(c.t_lr) - pi / 2;
    return std::abs(std::remainder(d, pi));
}

}  // namespace ptscatter
