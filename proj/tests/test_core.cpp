#include <doctest.h>

#include <cmath>
#include <limits>

#include "helpers.hpp"
#include "ptscatter/core.hpp"
#include "ptscatter/nonlocal.hpp"
#include "ptscatter/numeric.hpp"
#include "ptscatter/potentials.hpp"

using namespace ptscatter;
using testing::Rng;

namespace {

AsymptoticAmplitudes free_amplitudes() {
    AsymptoticAmplitudes a{};
    a.a1p = a.a1m = 1.0;
    a.b2p = a.b2m = 1.0;
    return a;
}

TransferMatrix random_transfer(Rng& rng) {
    TransferMatrix m{rng.complex(-1, 1), rng.complex(-1, 1), rng.complex(-1, 1),
                     rng.complex(-1, 1)};
    while (std::abs(m.m_rr) < 0.5) m.m_rr = rng.complex(-1, 1);
    return m;
}

// Left- and right-incident scattering states written as a solution pair.
AsymptoticAmplitudes amplitudes_of(const ScatteringCoefficients& c) {
    AsymptoticAmplitudes a{};
    a.a1m = 1.0;
    a.b1m = c.r_lr;
    a.a1p = c.t_lr;
    a.b1p = 0.0;
    a.a2m = 0.0;
    a.b2m = c.t_rl;
    a.a2p = c.r_rl;
    a.b2p = 1.0;
    return a;
}

TransferMatrix numeric_transfer(const LocalPotential& v, WaveNumber k) {
    return transfer_from_smatrix(to_smatrix(numeric_coefficients(v, k)));
}

}  // namespace

TEST_CASE("wave number rejects non-positive and non-finite k") {
    CHECK_THROWS_AS(WaveNumber(0.0), InvalidParameter);
    CHECK_THROWS_AS(WaveNumber(-1.0), InvalidParameter);
    CHECK_THROWS_AS(WaveNumber(std::numeric_limits<double>::quiet_NaN()), InvalidParameter);
    CHECK_THROWS_AS(WaveNumber(std::numeric_limits<double>::infinity()), InvalidParameter);
    WaveNumber k(1.5);
    CHECK(k.value() == 1.5);
    CHECK(k.energy() == doctest::Approx(2.25));
}

TEST_CASE("free amplitudes give unit transmission") {
    const ScatteringCoefficients c = coefficients_from_amplitudes(free_amplitudes());
    CHECK(c.t_lr == cplx(1.0));
    CHECK(c.r_lr == cplx(0.0));
    CHECK(c.t_rl == cplx(1.0));
    CHECK(c.r_rl == cplx(0.0));
    CHECK(wronskian_residual(free_amplitudes(), WaveNumber(1.0)) == 0.0);
}

TEST_CASE("dependent solutions are rejected") {
    AsymptoticAmplitudes a = free_amplitudes();
    a.a2p = a.a1p;
    a.b2p = a.b1p;
    a.a2m = a.a1m;
    a.b2m = a.b1m;
    CHECK_THROWS_AS(coefficients_from_amplitudes(a), DegenerateSolutions);
}

TEST_CASE("numeric square-well amplitudes reproduce the closed form") {
    const SquareWellParams p{1.0, 0.5, 1.0};
    const WaveNumber k(1.0);
    const AsymptoticAmplitudes amps = integrate_two_solutions(square_well_potential(p), k);
    const ScatteringCoefficients c = coefficients_from_amplitudes(amps);
    CHECK(testing::max_coeff_rel_diff(c, square_well_coefficients(p, k)) < 1e-6);
    CHECK(wronskian_residual(amps, k) < 1e-10);
}

TEST_CASE("Scarf amplitudes reproduce the compact coefficients") {
    const ScarfParams p{1.3, 0.7, 0.0};
    const WaveNumber k(0.9);
    const ScatteringCoefficients a = coefficients_from_amplitudes(scarf_amplitudes(p, k));
    CHECK(testing::max_coeff_diff(a, scarf_coefficients(p, k)) < 1e-10);
}

TEST_CASE("amplitude rescaling leaves the coefficients unchanged") {
    Rng rng(11);
    const WaveNumber k(0.9);
    const AsymptoticAmplitudes base = scarf_amplitudes({1.3, 0.7, 0.0}, k);
    const ScatteringCoefficients ref = coefficients_from_amplitudes(base);
    for (int i = 0; i < 100; ++i) {
        const cplx c1 = rng.complex(-3, 3), c2 = rng.complex(-3, 3);
        AsymptoticAmplitudes a = base;
        for (cplx* f : {&a.a1p, &a.b1p, &a.a1m, &a.b1m}) *f *= c1;
        for (cplx* f : {&a.a2p, &a.b2p, &a.a2m, &a.b2m}) *f *= c2;
        CHECK(testing::max_coeff_diff(coefficients_from_amplitudes(a), ref) < 1e-12);
    }
}

TEST_CASE("identity transfer matrix is free propagation") {
    const SMatrix s = smatrix_from_transfer(TransferMatrix::identity());
    CHECK(s.s_rr == cplx(1.0));
    CHECK(s.s_ll == cplx(1.0));
    CHECK(s.s_rl == cplx(0.0));
    CHECK(s.s_lr == cplx(0.0));
    const TransferMatrix m = transfer_from_smatrix({1.0, 0.0, 0.0, 1.0});
    CHECK(max_abs_diff(m, TransferMatrix::identity()) == 0.0);
}

TEST_CASE("square-well transfer matrix gives equal transmissions") {
    const TransferMatrix m = square_well_transfer({1.0, 0.5, 1.0}, WaveNumber(1.0));
    const ScatteringCoefficients c = to_coefficients(smatrix_from_transfer(m));
    CHECK(std::abs(c.t_lr - c.t_rl) < 1e-12);
}

TEST_CASE("S and M conversions invert each other") {
    Rng rng(5);
    for (int i = 0; i < 1000; ++i) {
        const TransferMatrix m = random_transfer(rng);
        CHECK(max_abs_diff(transfer_from_smatrix(smatrix_from_transfer(m)), m) < 1e-14);
        SMatrix s{rng.complex(-1, 1), rng.complex(-1, 1), rng.complex(-1, 1), rng.complex(-1, 1)};
        while (std::abs(s.s_rr) < 0.5) s.s_rr = rng.complex(-1, 1);
        CHECK(max_abs_diff(smatrix_from_transfer(transfer_from_smatrix(s)), s) < 1e-14);
    }
}

TEST_CASE("transmission poles and zeros are reported") {
    CHECK_THROWS_AS(smatrix_from_transfer({1e-12, 1.0, 1.0, 1.0}), TransmissionPole);
    CHECK_THROWS_AS(transfer_from_smatrix({0.0, 0.5, 0.5, 1.0}), ZeroTransmission);
}

TEST_CASE("reflectionless Scarf has a diagonal transfer matrix") {
    const WaveNumber k(1.0);
    const ScatteringCoefficients c = scarf_coefficients({2.0, cplx(0.0, 1.0), 0.0}, k);
    const TransferMatrix m = transfer_from_smatrix(to_smatrix(c));
    CHECK(std::abs(m.m_rl) < 1e-12);
    CHECK(std::abs(m.m_lr) < 1e-12);
    CHECK(std::abs(m.m_rr - 1.0 / c.t_lr) < 1e-12);
}

TEST_CASE("shifting a transfer matrix") {
    const WaveNumber k(1.0);
    const TransferMatrix m = square_well_transfer({1.0, 0.5, 1.0}, k);
    CHECK(max_abs_diff(shift_transfer(m, 0.0, k), m) == 0.0);
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        const double x0 = rng.uniform(-10, 10);
        const TransferMatrix back = shift_transfer(shift_transfer(m, x0, k), -x0, k);
        CHECK(max_abs_diff(back, m) < 1e-14);
    }
    const TransferMatrix shifted = shift_transfer(m, 2.0, k);
    CHECK(shifted.m_rr == m.m_rr);
    CHECK(shifted.m_ll == m.m_ll);
    const TransferMatrix oracle =
        numeric_transfer(translate(square_well_potential({1.0, 0.5, 1.0}), 2.0), k);
    CHECK(max_abs_diff(shifted, oracle) < 1e-6);
    const TransferMatrix centred =
        numeric_transfer(square_well_potential({1.0, 0.5, 1.0}, 2.0), k);
    CHECK(max_abs_diff(centred, shifted) < 1e-6);
}

TEST_CASE("composition") {
    Rng rng(9);
    const TransferMatrix m = random_transfer(rng);
    CHECK(max_abs_diff(compose_transfer(m, TransferMatrix::identity()), m) == 0.0);
    for (int i = 0; i < 1000; ++i) {
        const TransferMatrix a = random_transfer(rng), b = random_transfer(rng);
        CHECK(std::abs(compose_transfer(a, b).det() - a.det() * b.det()) < 1e-13);
    }
}

TEST_CASE("explicit double-well product equals the lattice construction") {
    LatticeParams p;
    p.well = {1.0, 0.5, 1.0};
    p.a = 0.7;
    p.n = 2;
    for (double kv : {0.3, 1.0, 2.7}) {
        const WaveNumber k(kv);
        const TransferMatrix m = square_well_transfer(p.well, k);
        const double ab = p.a + p.well.b;
        const cplx up = std::exp(kI * (2.0 * kv * ab));
        const TransferMatrix m1{m.m_rr, up * m.m_rl, m.m_lr / up, m.m_ll};
        const TransferMatrix m2{m.m_rr, m.m_rl / up, up * m.m_lr, m.m_ll};
        CHECK(max_abs_diff(compose_transfer(m1, m2), multi_well_transfer(p, k)) < 1e-12);
    }
}

TEST_CASE("Wronskian residual separates local from asymmetric non-local") {
    const WaveNumber k(1.2);
    const AsymptoticAmplitudes well = integrate_two_solutions(
        square_well_potential({2.0, -1.3, 0.7}), k);
    CHECK(wronskian_residual(well, k) < 1e-10);
    CHECK(wronskian_residual(scarf_amplitudes({1.3, cplx(0.0, 0.7), 0.2}, k), k) < 1e-8);
    CHECK(wronskian_residual(centrifugal_amplitudes({2.0, 0.1, false}, k), k) < 1e-8);
    const ScatteringCoefficients nl =
        nonlocal_coefficients(yamaguchi_kernel(1.0, 2.0, 0.3, 0.7, 0.8), k);
    CHECK(wronskian_residual(amplitudes_of(nl), k) > 1e-6);
}
