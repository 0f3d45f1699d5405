#include "ptscatter/numeric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/numeric/odeint.hpp>

namespace ptscatter {

namespace {

namespace odeint = boost::numeric::odeint;

// (F_1, F_1', F_2, F_2')
using State = std::array<cplx, 4>;
using Rk4 = odeint::runge_kutta4<State, double, State, double, odeint::array_algebra>;
using Dopri5 = odeint::runge_kutta_dopri5<State, double, State, double, odeint::array_algebra>;

void validate(const LocalPotential& v, WaveNumber k, const IntegrationConfig& cfg) {
    if (!v.evaluate) throw InvalidParameter("potential has no evaluator");
    if (!(v.x_right >= v.x_left)) throw InvalidParameter("potential support is empty");
    if (!(cfg.step > 0.0)) throw InvalidParameter("integration step must be > 0");
    if (!(cfg.match_margin >= 0.0)) throw InvalidParameter("match margin must be >= 0");
    const double limit = 2.0 * std::numbers::pi / (10.0 * k.value());
    if (cfg.step >= limit) {
        throw StepTooLarge("step " + std::to_string(cfg.step) + " >= 2pi/(10k) = " +
                           std::to_string(limit));
    }
    for (double x : {v.x_left - cfg.match_margin, v.x_right + cfg.match_margin}) {
        if (std::abs(v(x)) >= cfg.decay_tol) {
            throw NonDecayedPotential("|V(" + std::to_string(x) + ")| = " +
                                      std::to_string(std::abs(v(x))) + " >= decay tolerance");
        }
    }
}

class Marcher {
public:
    Marcher(const LocalPotential& v, WaveNumber k, const IntegrationConfig& cfg)
        : v_(v), k2_(k.energy()), cfg_(cfg) {}

    // Advances from x0 to x1; V is only sampled strictly inside (x0, x1), so
    // the one-sided limit is used when x0 or x1 is a discontinuity.
    void advance(State& y, double x0, double x1) {
        if (x1 <= x0) return;
        const double pad = 1e-13 * std::max({1.0, std::abs(x0), std::abs(x1)});
        double lo = x0 + pad;
        double hi = x1 - pad;
        if (hi < lo) lo = hi = 0.5 * (x0 + x1);
        auto rhs = [&](const State& s, State& ds, double x) {
            const cplx w = v_(std::clamp(x, lo, hi)) - k2_;
            ds[0] = s[1];
            ds[1] = w * s[0];
            ds[2] = s[3];
            ds[3] = w * s[2];
        };
        if (cfg_.method == IntegrationMethod::rk4) {
            const auto n = static_cast<long>(std::ceil((x1 - x0) / cfg_.step - 1e-9));
            const long steps = std::max(1L, n);
            const double h = (x1 - x0) / static_cast<double>(steps);
            for (long i = 0; i < steps; ++i) {
                rk4_.do_step(rhs, y, x0 + static_cast<double>(i) * h, h);
            }
        } else {
            auto stepper = odeint::make_controlled(cfg_.abs_tol, cfg_.rel_tol, Dopri5());
            odeint::integrate_adaptive(stepper, rhs, y, x0, x1, std::min(cfg_.step, x1 - x0));
        }
    }

private:
    const LocalPotential& v_;
    double k2_;
    const IntegrationConfig& cfg_;
    Rk4 rk4_;
};

State initial_state(double x, double k) {
    const cplx e = std::exp(kI * (k * x));
    const cplx ik = kI * k;
    return {e, ik * e, std::conj(e), -ik * std::conj(e)};
}

// a e^{ikx} + b e^{-ikx} = psi, ik (a e^{ikx} - b e^{-ikx}) = dpsi
std::pair<cplx, cplx> plane_wave_split(cplx psi, cplx dpsi, double x, double k) {
    const cplx e = std::exp(kI * (k * x));
    const cplx q = dpsi / (kI * k);
    return {0.5 * (psi + q) / e, 0.5 * (psi - q) * e};
}

std::vector<double> interior_breakpoints(const LocalPotential& v, double x0, double x1) {
    std::vector<double> out;
    for (double b : v.breakpoints) {
        if (b > x0 && b < x1) out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

AsymptoticAmplitudes amplitudes_from(const State& y, double x, double k) {
    AsymptoticAmplitudes a{};
    a.a1m = 1.0;
    a.b1m = 0.0;
    a.a2m = 0.0;
    a.b2m = 1.0;
    std::tie(a.a1p, a.b1p) = plane_wave_split(y[0], y[1], x, k);
    std::tie(a.a2p, a.b2p) = plane_wave_split(y[2], y[3], x, k);
    return a;
}

}  // namespace

LocalPotential zero_potential(double half_width) {
    return {[](double) { return cplx{}; }, -half_width, half_width, {}};
}

LocalPotential translate(const LocalPotential& v, double x0) {
    LocalPotential out;
    out.evaluate = [f = v.evaluate, x0](double x) { return f(x - x0); };
    out.x_left = v.x_left + x0;
    out.x_right = v.x_right + x0;
    for (double b : v.breakpoints) out.breakpoints.push_back(b + x0);
    return out;
}

AsymptoticAmplitudes integrate_two_solutions(const LocalPotential& v, WaveNumber k,
                                             const IntegrationConfig& cfg) {
    validate(v, k, cfg);
    const double x_start = v.x_left - cfg.match_margin;
    const double x_end = v.x_right + cfg.match_margin;

    std::vector<double> nodes{x_start};
    for (double b : interior_breakpoints(v, x_start, x_end)) nodes.push_back(b);
    nodes.push_back(x_end);

    State y = initial_state(x_start, k.value());
    Marcher m(v, k, cfg);
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) m.advance(y, nodes[i], nodes[i + 1]);
    return amplitudes_from(y, x_end, k.value());
}

ScatteringCoefficients numeric_coefficients(const LocalPotential& v, WaveNumber k,
                                            const IntegrationConfig& cfg, double* wronskian) {
    const AsymptoticAmplitudes amps = integrate_two_solutions(v, k, cfg);
    if (wronskian) *wronskian = wronskian_residual(amps, k);
    return coefficients_from_amplitudes(amps);
}

SampledWavefunction wavefunction_on_grid(const LocalPotential& v, WaveNumber k, Incidence dir,
                                         const IntegrationConfig& cfg) {
    validate(v, k, cfg);
    const double x_start = v.x_left - cfg.match_margin;
    const double x_end = v.x_right + cfg.match_margin;
    const auto intervals =
        std::max(1L, static_cast<long>(std::ceil((x_end - x_start) / cfg.step - 1e-9)));
    const auto n = static_cast<double>(intervals);

    SampledWavefunction out;
    out.x.reserve(intervals + 1);
    for (long i = 0; i <= intervals; ++i) {
        const auto fi = static_cast<double>(i);
        out.x.push_back((x_start * (n - fi) + x_end * fi) / n);
    }

    const std::vector<double> cuts = interior_breakpoints(v, x_start, x_end);
    std::vector<State> states;
    states.reserve(out.x.size());
    State y = initial_state(x_start, k.value());
    states.push_back(y);
    Marcher m(v, k, cfg);
    auto cut = cuts.begin();
    for (std::size_t i = 0; i + 1 < out.x.size(); ++i) {
        double x = out.x[i];
        for (; cut != cuts.end() && *cut < out.x[i + 1]; ++cut) {
            if (*cut <= x) continue;
            m.advance(y, x, *cut);
            x = *cut;
        }
        m.advance(y, x, out.x[i + 1]);
        states.push_back(y);
    }

    const AsymptoticAmplitudes amps = amplitudes_from(y, x_end, k.value());
    if (amps.b2p == cplx{}) throw DegenerateSolutions("b2+ vanishes");
    cplx c1 = 1.0;
    cplx c2 = -amps.b1p / amps.b2p;
    if (dir == Incidence::right) {
        c1 = 0.0;
        c2 = 1.0 / amps.b2p;
    }
    out.psi.reserve(states.size());
    out.dpsi.reserve(states.size());
    for (const State& s : states) {
        out.psi.push_back(c1 * s[0] + c2 * s[2]);
        out.dpsi.push_back(c1 * s[1] + c2 * s[3]);
    }
    return out;
}

}  // namespace ptscatter
