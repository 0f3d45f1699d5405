#include "ptscatter/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace ptscatter {

namespace {

using cplx = std::complex<double>;

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;
constexpr double kStirlingRadius = 15.0;

// B_{2n} / (2n (2n-1)), n = 1..10
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

cplx stirling(cplx z) {
    const cplx w = 1.0 / z;
    const cplx w2 = w * w;
    cplx series = 0.0;
    for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) {
        series = series * w2 + *it;
    }
    return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + series * w;
}

std::string describe(cplx z) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << z.real() << ", " << z.imag() << ")";
    return os.str();
}

}  // namespace

bool is_gamma_pole(cplx z) {
    if (std::abs(z.imag()) >= 1e-12 || z.real() > 0.5) return false;
    return std::abs(z.real() - std::nearbyint(z.real())) < 1e-12;
}

cplx complex_log_gamma(cplx z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw InvalidParameter("log-gamma argument is not finite: " + describe(z));
    }
    if (is_gamma_pole(z)) {
        throw GammaPole("Gamma has a pole at " + describe(z));
    }
    // Shift right with Gamma(z) = Gamma(z+n) / (z (z+1) ... (z+n-1)); summing
    // principal logs keeps the continuous branch.
    cplx shift = 0.0;
    while (z.real() < kStirlingRadius && !(z.real() >= 0.0 && std::abs(z) >= kStirlingRadius)) {
        shift += std::log(z);
        z += 1.0;
    }
    return stirling(z) - shift;
}

cplx gamma_ratio(const GammaRatio& r) {
    for (const cplx& z : r.numerator_args) {
        if (is_gamma_pole(z)) throw NumeratorPole("numerator Gamma pole at " + describe(z));
    }
    for (const cplx& z : r.denominator_args) {
        if (is_gamma_pole(z)) return 0.0;
    }
    cplx acc = 0.0;
    for (const cplx& z : r.numerator_args) acc += complex_log_gamma(z);
    for (const cplx& z : r.denominator_args) acc -= complex_log_gamma(z);
    return std::exp(acc);
}

double sin_pi(double x) {
    // reduce to r in [-1, 1]; sin(pi x) = sin(pi r)
    const double r = x - 2.0 * std::nearbyint(0.5 * x);
    if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
    if (r == 0.5) return 1.0;
    if (r == -0.5) return -1.0;
    return std::sin(std::numbers::pi * r);
}

double cos_pi(double x) {
    const double r = x - 2.0 * std::nearbyint(0.5 * x);
    if (r == 0.5 || r == -0.5) return 0.0;
    if (r == 0.0) return 1.0;
    if (r == 1.0 || r == -1.0) return -1.0;
    return std::cos(std::numbers::pi * r);
}

cplx sin_pi(cplx z) {
    const double y = std::numbers::pi * z.imag();
    return {sin_pi(z.real()) * std::cosh(y), cos_pi(z.real()) * std::sinh(y)};
}

cplx cos_pi(cplx z) {
    const double y = std::numbers::pi * z.imag();
    return {cos_pi(z.real()) * std::cosh(y), -sin_pi(z.real()) * std::sinh(y)};
}

}  // namespace ptscatter
