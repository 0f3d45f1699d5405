#include "ptscatter/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ptscatter/specfun.hpp"

namespace ptscatter {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

void validate(const SquareWellParams& p) {
    if (!(p.b > 0.0)) throw InvalidParameter("square well half-width b must be > 0");
    if (!(p.v0 >= 0.0)) throw InvalidParameter("square well depth v0 must be >= 0");
    if (!std::isfinite(p.v1)) throw InvalidParameter("square well v1 must be finite");
}

void validate(const LatticeParams& p) {
    validate(p.well);
    if (!(p.a > 0.0)) throw InvalidParameter("lattice half-gap a must be > 0");
    if (p.n < 1) throw InvalidParameter("lattice needs n >= 1 wells");
}

void validate(const ScarfParams& p) {
    if (!(std::abs(p.eps) < kPi / 2)) throw InvalidParameter("Scarf shift needs |eps| < pi/2");
    if (!std::isfinite(p.s) || !std::isfinite(std::abs(p.lambda))) {
        throw InvalidParameter("Scarf parameters must be finite");
    }
}

void validate(const CentrifugalParams& p) {
    if (p.eps == 0.0 || !std::isfinite(p.eps)) {
        throw InvalidParameter("centrifugal regulator eps must be finite and non-zero");
    }
    if (!(p.nu().real() > -0.5)) {
        throw InvalidNu("Re nu = " + std::to_string(p.nu().real()) + " <= -1/2");
    }
}

cplx pow2(cplx w) { return std::exp(w * kLn2); }

// sinh(pi z), cosh(pi z) with exact zeros for integer / half-integer imaginary z
cplx sinh_pi(cplx z) { return -kI * sin_pi(kI * z); }
cplx cosh_pi(cplx z) { return cos_pi(kI * z); }

TransferMatrix checked_product(const TransferMatrix& a, const TransferMatrix& b) {
    TransferMatrix c = a * b;
    for (cplx z : {c.m_rr, c.m_rl, c.m_lr, c.m_ll}) {
        if (!(std::abs(z) <= 1e300)) {
            throw TransferOverflow("lattice transfer matrix element exceeds 1e300");
        }
    }
    return c;
}

cplx square_well_value(const SquareWellParams& p, double x) {
    const double ax = std::abs(x);
    if (ax > p.b) return 0.0;
    if (ax == p.b) return 0.5 * cplx(-p.v0, x < 0 ? p.v1 : -p.v1);
    if (x == 0.0) return -p.v0;
    return {-p.v0, x < 0 ? p.v1 : -p.v1};
}

cplx scarf_transmission(const ScarfParams& p, WaveNumber k) {
    const cplx ik = kI * k.value();
    const cplx il = kI * p.lambda;
    return gamma_ratio({{-p.s - ik, p.s + 1.0 - ik, 0.5 + il - ik, 0.5 - il - ik},
                        {-ik, 1.0 - ik, 0.5 - ik, 0.5 - ik}});
}

cplx scarf_reflection_factor(double s, cplx lambda, double k) {
    return cos_pi(s) * sinh_pi(lambda) / std::cosh(kPi * k) +
           kI * sin_pi(s) * cosh_pi(lambda) / std::sinh(kPi * k);
}

}  // namespace

SquareWellWaveNumbers square_well_wave_numbers(const SquareWellParams& p, WaveNumber k) {
    validate(p);
    const double e = k.energy() + p.v0;
    const double alpha = std::sqrt(std::hypot(e, p.v1));
    const double phi = 0.5 * std::atan2(p.v1, e);
    return {alpha, phi, std::polar(alpha, -phi), std::polar(alpha, phi)};
}

TransferMatrix square_well_transfer(const SquareWellParams& p, WaveNumber k) {
    using ld = long double;
    using lcplx = std::complex<ld>;
    const SquareWellWaveNumbers w = square_well_wave_numbers(p, k);
    const ld kk = k.value();
    const ld alpha = w.alpha;
    const ld c = std::cos(static_cast<ld>(w.phi));
    const ld s = std::sin(static_cast<ld>(w.phi));
    const ld a = 2 * alpha * p.b * c;
    const ld bb = 2 * alpha * p.b * s;
    const ld f = (kk * kk - alpha * alpha) / (2 * kk * alpha);
    const ld g = (kk * kk + alpha * alpha) / (2 * kk * alpha);
    const ld cos_a = std::cos(a);
    const ld sin_a = std::sin(a);
    const ld cosh_b = std::cosh(bb);
    const ld sinh_b = std::sinh(bb);

    const ld diag_re = c * c * cos_a + s * s * cosh_b;
    const ld diag_im = f * s * sinh_b + g * c * sin_a;
    const ld off_sym = s * c * (cos_a - cosh_b);
    const ld off_asym = f * c * sin_a + g * s * sinh_b;
    const lcplx ph = std::polar(ld{1}, 2 * kk * p.b);
    const lcplx rr = ph * lcplx(diag_re, -diag_im);
    const lcplx ll = std::conj(ph) * lcplx(diag_re, diag_im);
    return {cplx(rr), cplx(0.0, static_cast<double>(off_sym + off_asym)),
            cplx(0.0, static_cast<double>(off_sym - off_asym)), cplx(ll)};
}

ScatteringCoefficients square_well_coefficients(const SquareWellParams& p, WaveNumber k) {
    ScatteringCoefficients c = to_coefficients(smatrix_from_transfer(square_well_transfer(p, k)));
    // det M = 1 identically.
    c.t_rl = c.t_lr;
    return c;
}

TransferMatrix lattice_tmatrix(const LatticeParams& p, WaveNumber k) {
    validate(p);
    const TransferMatrix m = square_well_transfer(p.well, k);
    const double kk = k.value();
    const cplx e_ab = std::exp(kI * (2.0 * kk * (p.a + p.well.b)));
    const cplx e_a = std::exp(kI * (2.0 * kk * p.a));
    return {m.m_rr / e_ab, m.m_rl * e_a, m.m_lr / e_a, m.m_ll * e_ab};
}

TransferMatrix multi_well_transfer(const LatticeParams& p, WaveNumber k) {
    TransferMatrix base = lattice_tmatrix(p, k);
    TransferMatrix acc = TransferMatrix::identity();
    for (int e = p.n;;) {
        if (e & 1) acc = checked_product(acc, base);
        e >>= 1;
        if (e == 0) break;
        base = checked_product(base, base);
    }
    const double u1 = p.u1();
    return checked_product(checked_product(displacement(-u1, k), acc),
                           displacement(u1 + p.n * p.period(), k));
}

AsymptoticAmplitudes scarf_amplitudes(const ScarfParams& p, WaveNumber k) {
    validate(p);
    const double kk = k.value();
    const double s = p.s;
    const cplx lam = p.lambda;
    const cplx ik = kI * kk;
    const cplx il = kI * lam;
    const double h = kPi / 2.0;

    const cplx r1p = gamma_ratio({{il - s + 0.5, 2.0 * ik}, {-s + ik, 0.5 + il + ik}});
    const cplx r1m = gamma_ratio({{il - s + 0.5, -2.0 * ik}, {-s - ik, 0.5 + il - ik}});
    const cplx r2p = gamma_ratio({{s + 1.5 - il, 2.0 * ik}, {0.5 - il + ik, s + 1.0 + ik}});
    const cplx r2m = gamma_ratio({{s + 1.5 - il, -2.0 * ik}, {0.5 - il - ik, s + 1.0 - ik}});

    AsymptoticAmplitudes a{};
    a.a1p = std::exp(-h * (lam - kk + kI * s)) / pow2(s + 2.0 * ik) * r1p;
    a.b1p = std::exp(-h * (lam + kk + kI * s)) / pow2(s - 2.0 * ik) * r1m;
    a.a1m = std::exp(h * (lam + kk + kI * s)) / pow2(s - 2.0 * ik) * r1m;
    a.b1m = std::exp(h * (lam - kk + kI * s)) / pow2(s + 2.0 * ik) * r1p;
    a.a2p = std::exp(h * (lam + kk + kI * (s + 1.0))) / pow2(2.0 * ik + il - 0.5) * r2p;
    a.b2p = std::exp(h * (lam - kk + kI * (s + 1.0))) / pow2(-2.0 * ik + il - 0.5) * r2m;
    a.a2m = std::exp(-h * (lam - kk + kI * (s + 1.0))) / pow2(-2.0 * ik + il - 0.5) * r2m;
    a.b2m = std::exp(-h * (lam + kk + kI * (s + 1.0))) / pow2(2.0 * ik + il - 0.5) * r2p;

    const double down = std::exp(-kk * p.eps);
    const double up = std::exp(kk * p.eps);
    a.a1p *= down;
    a.a1m *= down;
    a.a2p *= down;
    a.a2m *= down;
    a.b1p *= up;
    a.b1m *= up;
    a.b2p *= up;
    a.b2m *= up;
    return a;
}

ScatteringCoefficients scarf_coefficients(const ScarfParams& p, WaveNumber k) {
    validate(p);
    const double kk = k.value();
    const cplx t = scarf_transmission(p, k);
    const cplx r_plus = t * scarf_reflection_factor(p.s, p.lambda, kk);
    const cplx r_minus = t * scarf_reflection_factor(p.s, -p.lambda, kk);
    return {t, r_plus * std::exp(2.0 * kk * p.eps), t, r_minus * std::exp(-2.0 * kk * p.eps)};
}

cplx scarf_reflectionless_transmission(int n, int m, WaveNumber k) {
    if (n < 0 || m < 1) throw InvalidParameter("reflectionless Scarf needs n >= 0, m >= 1");
    const double kk = k.value();
    cplx t = ((n + m) % 2 == 0) ? 1.0 : -1.0;
    for (int j = 1; j <= n; ++j) t *= cplx(j, -kk) / cplx(j, kk);
    for (int j = 1; j <= m; ++j) t *= cplx(j - 0.5, -kk) / cplx(j - 0.5, kk);
    return t;
}

cplx CentrifugalParams::nu() const {
    const cplx r = std::sqrt(cplx(alpha_strength + 0.25, 0.0));
    return negative_branch ? -r : r;
}

AsymptoticAmplitudes centrifugal_amplitudes(const CentrifugalParams& p, WaveNumber k) {
    validate(p);
    const double kk = k.value();
    const cplx nu = p.nu();
    const cplx a = std::exp(-kk * p.eps - kI * kPi * nu / 2.0 - kI * kPi / 4.0);
    const cplx b = std::exp(kk * p.eps + kI * kPi * nu / 2.0 + kI * kPi / 4.0);
    return {a, 0.0, a, 0.0, 0.0, b, 0.0, b};
}

ScatteringCoefficients centrifugal_coefficients(const CentrifugalParams& p, WaveNumber k) {
    return coefficients_from_amplitudes(centrifugal_amplitudes(p, k));
}

cplx centrifugal_pt_phase(const CentrifugalParams& p, WaveNumber k) {
    const AsymptoticAmplitudes a = centrifugal_amplitudes(p, k);
    return std::conj(a.a1p) / a.a1m;
}

LocalPotential square_well_potential(const SquareWellParams& p, double centre) {
    validate(p);
    LocalPotential v;
    v.evaluate = [p, centre](double x) { return square_well_value(p, x - centre); };
    v.x_left = centre - p.b;
    v.x_right = centre + p.b;
    v.breakpoints = {centre - p.b, centre, centre + p.b};
    return v;
}

LocalPotential lattice_potential(const LatticeParams& p) {
    validate(p);
    LocalPotential v;
    const double u1 = p.u1();
    const double period = p.period();
    v.evaluate = [p, u1, period](double x) {
        const double j = std::nearbyint((x - u1 - p.well.b) / period);
        const double jc = std::clamp(j, 0.0, static_cast<double>(p.n - 1));
        return square_well_value(p.well, x - (u1 + p.well.b + jc * period));
    };
    v.x_left = u1;
    v.x_right = u1 + (p.n - 1) * period + 2.0 * p.well.b;
    for (int j = 0; j < p.n; ++j) {
        const double c = p.well_centre(j);
        v.breakpoints.insert(v.breakpoints.end(), {c - p.well.b, c, c + p.well.b});
    }
    return v;
}

LocalPotential scarf_potential(const ScarfParams& p, double window) {
    validate(p);
    if (!(window > 0.0)) throw InvalidParameter("Scarf window must be > 0");
    LocalPotential v;
    v.evaluate = [p, window](double x) -> cplx {
        if (std::abs(x) > window) return 0.0;
        const cplx z(x, p.eps);
        const cplx ch = std::cosh(z);
        const cplx sech2 = 1.0 / (ch * ch);
        return (p.lambda * p.lambda - p.s * (p.s + 1.0)) * sech2 +
               p.lambda * (2.0 * p.s + 1.0) * std::sinh(z) * sech2;
    };
    v.x_left = -window;
    v.x_right = window;
    v.breakpoints = {-window, window};
    return v;
}

LocalPotential centrifugal_potential(const CentrifugalParams& p, double window) {
    validate(p);
    if (!(window > 0.0)) throw InvalidParameter("centrifugal window must be > 0");
    LocalPotential v;
    v.evaluate = [p, window](double x) -> cplx {
        if (std::abs(x) > window) return 0.0;
        const cplx z(x, p.eps);
        return p.alpha_strength / (z * z);
    };
    v.x_left = -window;
    v.x_right = window;
    v.breakpoints = {-window, window};
    return v;
}

}  // namespace ptscatter
