#pragma once

#include <complex>
#include <vector>

#include "ptscatter/errors.hpp"

namespace ptscatter {

/// log Gamma(z) on the complex plane.  Branch: the analytic continuation of
/// the real log Gamma from the positive axis, cut along the negative real axis
/// (the loggamma branch of mpmath/scipy).  Differs from log(Gamma(z)) by a
/// multiple of 2*pi*i.  Throws GammaPole within 1e-12 of 0, -1, -2, ...
std::complex<double> complex_log_gamma(std::complex<double> z);

bool is_gamma_pole(std::complex<double> z);

struct GammaRatio {
    std::vector<std::complex<double>> numerator_args;
    std::vector<std::complex<double>> denominator_args;
};

/// prod Gamma(num) / prod Gamma(den), evaluated as exp of a log-space sum.
/// A denominator pole makes the ratio exactly 0; a numerator pole throws NumeratorPole.
std::complex<double> gamma_ratio(const GammaRatio& r);

/// sin(pi z), cos(pi z) with exact zeros at (half-)integers of the real part.
double sin_pi(double x);
double cos_pi(double x);
std::complex<double> sin_pi(std::complex<double> z);
std::complex<double> cos_pi(std::complex<double> z);

}  // namespace ptscatter
