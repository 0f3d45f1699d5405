#include "ptscatter/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ptscatter {

WaveNumber::WaveNumber(double k) : k_(k) {
    if (!std::isfinite(k) || k <= 0.0) {
        throw InvalidParameter("wave number must be finite and > 0, got " + std::to_string(k));
    }
}

TransferMatrix operator*(const TransferMatrix& a, const TransferMatrix& b) {
    return {a.m_rr * b.m_rr + a.m_rl * b.m_lr, a.m_rr * b.m_rl + a.m_rl * b.m_ll,
            a.m_lr * b.m_rr + a.m_ll * b.m_lr, a.m_lr * b.m_rl + a.m_ll * b.m_ll};
}

SMatrix to_smatrix(const ScatteringCoefficients& c) {
    return {c.t_lr, c.r_rl, c.r_lr, c.t_rl};
}

ScatteringCoefficients to_coefficients(const SMatrix& s) {
    return {s.s_rr, s.s_lr, s.s_ll, s.s_rl};
}

ScatteringCoefficients coefficients_from_amplitudes(const AsymptoticAmplitudes& a) {
    const cplx p = a.a2m * a.b1p;
    const cplx q = a.a1m * a.b2p;
    const cplx d = p - q;
    const double scale = std::max(std::abs(p), std::abs(q));
    if (!(std::abs(d) > 1e-12 * scale) || scale == 0.0) {
        throw DegenerateSolutions("solution pair is linearly dependent (|d| = " +
                                  std::to_string(std::abs(d)) + ")");
    }
    return {
        (a.a2p * a.b1p - a.a1p * a.b2p) / d,
        (a.b1p * a.b2m - a.b1m * a.b2p) / d,
        (a.a2m * a.b1m - a.a1m * a.b2m) / d,
        (a.a1p * a.a2m - a.a1m * a.a2p) / d,
    };
}

SMatrix smatrix_from_transfer(const TransferMatrix& m, double pole_tol) {
    if (!(std::abs(m.m_rr) >= pole_tol)) {
        throw TransmissionPole("|M_RR| = " + std::to_string(std::abs(m.m_rr)) +
                               " below pole tolerance");
    }
    const cplx t_lr = 1.0 / m.m_rr;
    const cplx r_lr = m.m_lr / m.m_rr;
    const cplx r_rl = -m.m_rl / m.m_rr;
    const cplx t_rl = m.m_ll - m.m_rl * m.m_lr / m.m_rr;
    return to_smatrix({t_lr, r_lr, t_rl, r_rl});
}

TransferMatrix transfer_from_smatrix(const SMatrix& s, double zero_tol) {
    const ScatteringCoefficients c = to_coefficients(s);
    if (!(std::abs(c.t_lr) > zero_tol)) {
        throw ZeroTransmission("T_{L->R} vanishes; no transfer matrix");
    }
    return {1.0 / c.t_lr, -c.r_rl / c.t_lr, c.r_lr / c.t_lr, c.t_rl - c.r_rl * c.r_lr / c.t_lr};
}

TransferMatrix displacement(double x0, WaveNumber k) {
    const cplx ph = std::exp(kI * (k.value() * x0));
    return {ph, 0.0, 0.0, std::conj(ph)};
}

TransferMatrix shift_transfer(const TransferMatrix& m, double x0, WaveNumber k) {
    const cplx ph = std::exp(kI * (2.0 * k.value() * x0));
    return {m.m_rr, m.m_rl / ph, m.m_lr * ph, m.m_ll};
}

TransferMatrix compose_transfer(const TransferMatrix& m1, const TransferMatrix& m2) {
    return m1 * m2;
}

double wronskian_residual(const AsymptoticAmplitudes& amps, WaveNumber k) {
    const ScatteringCoefficients c = coefficients_from_amplitudes(amps);
    const cplx w_minus = -2.0 * kI * k.value() * c.t_rl;
    const cplx w_plus = -2.0 * kI * k.value() * c.t_lr;
    const double scale = std::max(std::abs(w_minus), std::abs(w_plus));
    if (scale == 0.0) return 0.0;
    return std::abs(w_minus - w_plus) / scale;
}

double max_abs_diff(const TransferMatrix& a, const TransferMatrix& b) {
    return std::max({std::abs(a.m_rr - b.m_rr), std::abs(a.m_rl - b.m_rl),
                     std::abs(a.m_lr - b.m_lr), std::abs(a.m_ll - b.m_ll)});
}

double max_abs_diff(const SMatrix& a, const SMatrix& b) {
    return std::max({std::abs(a.s_rr - b.s_rr), std::abs(a.s_rl - b.s_rl),
                     std::abs(a.s_lr - b.s_lr), std::abs(a.s_ll - b.s_ll)});
}

}  // namespace ptscatter
