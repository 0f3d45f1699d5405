#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "ptscatter/core.hpp"

namespace testing {

using ptscatter::cplx;

inline double rel_diff(cplx a, cplx b) {
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

inline double max_coeff_diff(const ptscatter::ScatteringCoefficients& a,
                             const ptscatter::ScatteringCoefficients& b) {
    return std::max({std::abs(a.t_lr - b.t_lr), std::abs(a.r_lr - b.r_lr),
                     std::abs(a.t_rl - b.t_rl), std::abs(a.r_rl - b.r_rl)});
}

inline double max_coeff_rel_diff(const ptscatter::ScatteringCoefficients& a,
                                 const ptscatter::ScatteringCoefficients& b) {
    return std::max({rel_diff(a.t_lr, b.t_lr), rel_diff(a.r_lr, b.r_lr),
                     rel_diff(a.t_rl, b.t_rl), rel_diff(a.r_rl, b.r_rl)});
}

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(engine);
    }
    cplx complex(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi)}; }
};

}  // namespace testing
