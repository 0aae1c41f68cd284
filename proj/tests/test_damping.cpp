#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "eforce/damping.hpp"
#include "eforce/errors.hpp"
#include "eforce/response.hpp"
#include "reference_values.hpp"

using namespace eforce;

namespace {

SystemConfig design() { return reference_design(); }

// Trap with the scan voltage and d set through z0 (rho0 stays on auto).
TrapConfig trap_at(double d, double v0 = 19.3) {
    TrapConfig t;
    t.v0 = v0;
    t.b0 = 0.5;
    t.z0 = d;
    t.t_trap = 4.0;
    return t;
}

}  // namespace

TEST_CASE("cavity-suppressed Larmor rate") {
    // quoted example point: loaded Q of 1e3 and f_z = 5.87 GHz
    CavityConfig cav;
    cav.omega_k = two_pi * 5.5e9;
    cav.q_int = 1e3;
    cav.q_ext = 1e3;  // kappa = omega_k/q -> loaded Q = 1e3
    cav.lx = 0.256;
    cav.ly = 0.027;
    cav.lz = 0.150;
    ElectronModes m{};
    m.omega_z = two_pi * 5.87e9;
    CHECK(cav.q_loaded() == doctest::Approx(1e3).epsilon(1e-12));
    CHECK(gamma_larmor_cavity(m, cav) ==
          doctest::Approx(ref::gamma_larmor_cavity_example).epsilon(1e-12));

    // volume doubling halves the rate; Q growth suppresses it
    CavityConfig big = cav;
    big.lx *= 2.0;
    CHECK(gamma_larmor_cavity(m, big) ==
          doctest::Approx(0.5 * gamma_larmor_cavity(m, cav)).epsilon(1e-12));
    CavityConfig hiq = cav;
    hiq.q_int = hiq.q_ext = 1e13;
    CHECK(gamma_larmor_cavity(m, hiq) < 1e-9 * gamma_larmor_cavity(m, cav));
}

TEST_CASE("free-space Larmor rate") {
    CHECK(gamma_larmor_free(two_pi * 6e9) ==
          doctest::Approx(ref::gamma_larmor_free_6ghz).epsilon(1e-12));
    CHECK_THROWS_AS(gamma_larmor_free(0.0), DomainError);
}

TEST_CASE("antenna Ohmic damping") {
    const SystemConfig cfg = design();
    const ElectronModes m = derive_modes(cfg.trap);
    CHECK(gamma_antenna(cfg.trap, cfg.antenna, m) ==
          doctest::Approx(ref::gamma_antenna_design).epsilon(1e-12));

    AntennaConfig super = cfg.antenna;
    super.resistivity = 0.0;
    CHECK(gamma_antenna(cfg.trap, super, m) == 0.0);

    // 1/z0^2: halving the gap quadruples the damping (same length pinned)
    AntennaConfig pinned = cfg.antenna;
    pinned.length = 0.0256;
    TrapConfig half = cfg.trap;
    half.z0 *= 0.5;
    CHECK(gamma_antenna(half, pinned, m) ==
          doctest::Approx(4.0 * gamma_antenna(cfg.trap, pinned, m)).epsilon(1e-12));

    // rho*l/(A*z0^2) scaling under random rescalings
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.3, 3.0);
    const double g0 = gamma_antenna(cfg.trap, pinned, m);
    for (int i = 0; i < 50; ++i) {
        AntennaConfig a = pinned;
        TrapConfig t = cfg.trap;
        const double sr = u(rng), sl = u(rng), sa = u(rng), sz = u(rng);
        a.resistivity *= sr;
        a.length *= sl;
        a.width *= sa;
        t.z0 *= sz;
        CHECK(gamma_antenna(t, a, m) ==
              doctest::Approx(g0 * sr * sl / (sa * sz * sz)).epsilon(1e-12));
    }
}

TEST_CASE("non-ideality frequency coefficients") {
    const TrapConfig trap = trap_at(50e-6);
    const ElectronModes m = derive_modes(trap);

    SUBCASE("ideal trap gives all zeros") {
        const KerrCoefficients k = kerr_coefficients(m, trap, NonIdealityConfig{});
        CHECK(k.d_omega_z == 0.0);
        CHECK(k.d_omega_plus == 0.0);
        CHECK(k.d_omega_minus == 0.0);
        CHECK(k.omega_zz == 0.0);
        CHECK(k.omega_pp == 0.0);
        CHECK(k.omega_mm == 0.0);
        CHECK(k.omega_pz == 0.0);
        CHECK(k.omega_mz == 0.0);
        CHECK(k.omega_pm == 0.0);
    }

    SUBCASE("fractional 0.1 electrostatic/magnetic corrections") {
        NonIdealityConfig n;
        n.phi22 = trap.v0 / 10.0;
        n.b02 = trap.b0 / 10.0;
        const KerrCoefficients k = kerr_coefficients(m, trap, n);
        CHECK(k.d_omega_z == doctest::Approx(ref::kerr_d_omega_z).epsilon(1e-9));
        CHECK(k.d_omega_plus == doctest::Approx(ref::kerr_d_omega_plus).epsilon(1e-9));
        CHECK(k.d_omega_minus == doctest::Approx(ref::kerr_d_omega_minus).epsilon(1e-9));
        CHECK(k.omega_pz == doctest::Approx(ref::kerr_omega_pz).epsilon(1e-9));
        CHECK(k.omega_mz == doctest::Approx(ref::kerr_omega_mz).epsilon(1e-9));
        // the difference isolates the C coefficient exactly
        CHECK(k.omega_pz - k.omega_mz ==
              doctest::Approx(-ref::kerr_calC_design * n.b02).epsilon(1e-9));
    }

    SUBCASE("quartic and field-curvature terms") {
        NonIdealityConfig n;
        n.phi40 = trap.v0 / 10.0;
        n.phi04 = trap.v0 / 10.0;
        n.b20 = trap.b0 / 10.0;
        const KerrCoefficients k = kerr_coefficients(m, trap, n);
        CHECK(k.omega_zz == doctest::Approx(ref::kerr_omega_zz_phi04).epsilon(1e-9));
        CHECK(k.omega_pp == doctest::Approx(ref::kerr_omega_pp_b20).epsilon(1e-9));
        CHECK(k.omega_mm == doctest::Approx(ref::kerr_omega_mm_b20).epsilon(1e-9));
        CHECK(k.omega_pm == doctest::Approx(ref::kerr_omega_pm_b20).epsilon(1e-9));
    }
}

TEST_CASE("cyclotron number-fluctuation spectrum") {
    const double gp = 0.04;
    const double wp = 8e10;

    CHECK(s_number_cyclotron(1e10, 0.0, gp, wp) == 0.0);
    CHECK(s_number_cyclotron(2.0 * wp, 3.0, gp, wp) ==
          doctest::Approx(2.0 * 3.0 * 4.0 / gp).epsilon(1e-12));
    CHECK_THROWS_AS(s_number_cyclotron(0.0, 1.0, gp, wp), DomainError);

    // Lorentzian normalization: integral over positive frequencies ~ n(n+1)
    const double n = 2.5;
    double integral = 0.0;
    const double span = 4000.0 * gp;
    const int steps = 2000000;
    const double h = 2.0 * span / steps;
    for (int i = 0; i <= steps; ++i) {
        const double omega = 2.0 * wp - span + i * h;
        const double w = (i == 0 || i == steps) ? 0.5 : 1.0;
        integral += w * s_number_cyclotron(omega, n, gp, wp) * h;
    }
    integral /= two_pi;
    CHECK(integral == doctest::Approx(n * (n + 1.0)).epsilon(1e-3));
}

TEST_CASE("axial dephasing rate") {
    SUBCASE("vanishes for the ideal trap") {
        const TrapConfig trap = trap_at(50e-6);
        const ElectronModes m = derive_modes(trap);
        const KerrCoefficients k = kerr_coefficients(m, trap, NonIdealityConfig{});
        CHECK(gamma_dephasing(m, k, 4.0) == 0.0);
    }

    SUBCASE("monotone in each non-ideality amplitude") {
        const TrapConfig trap = trap_at(50e-6);
        const ElectronModes m = derive_modes(trap);
        double last = -1.0;
        for (double f = 0.0; f <= 1.0; f += 0.1) {
            NonIdealityConfig n;
            n.phi22 = f * trap.v0;
            n.b02 = 0.3 * trap.b0;
            const double rate = gamma_dephasing(m, kerr_coefficients(m, trap, n), 4.0);
            CHECK(rate >= last);
            last = rate;
        }
        last = -1.0;
        for (double f = 0.0; f <= 1.0; f += 0.1) {
            NonIdealityConfig n;
            n.phi22 = 0.3 * trap.v0;
            n.b02 = f * trap.b0;
            const double rate = gamma_dephasing(m, kerr_coefficients(m, trap, n), 4.0);
            CHECK(rate >= last);
            last = rate;
        }
    }

    SUBCASE("small-occupancy limit") {
        // strongly hierarchical trap so omega_z << omega_plus, cold cyclotron
        TrapConfig trap = trap_at(0.8e-3, 1.0);
        const ElectronModes m = derive_modes(trap);
        const double temp = 0.1;
        const double n = thermal_occupation(m.omega_plus, temp);
        REQUIRE(n < 3e-3);
        REQUIRE(m.omega_z / (2.0 * m.omega_plus) < 6e-3);
        NonIdealityConfig non;
        non.phi22 = 0.1 * trap.v0;
        non.b02 = 0.1 * trap.b0;
        const KerrCoefficients k = kerr_coefficients(m, trap, non);
        const double full = gamma_dephasing(m, k, temp);
        const double approx = gamma_dephasing_small_n(m, k, temp);
        CHECK(full == doctest::Approx(approx).epsilon(0.01));
    }

    SUBCASE("fractional rate across the submillimeter scan") {
        // d from 50 um to 0.5 mm, fractional non-idealities 0.1..1
        for (double d : {50e-6, 120e-6, 250e-6, 500e-6}) {
            const TrapConfig trap = trap_at(d, 19.0);
            const ElectronModes m = derive_modes(trap);
            const double benchmark = gamma_larmor_free(m.omega_z);
            for (double f : {0.1, 0.5, 1.0}) {
                NonIdealityConfig n;
                n.phi22 = f * trap.v0;
                n.b02 = f * trap.b0;
                const double rate =
                    gamma_dephasing(m, kerr_coefficients(m, trap, n), 4.0);
                const double frac = rate / benchmark;
                CHECK(frac >= 1e-20);
                CHECK(frac <= 1e-10);
            }
        }
    }
}

TEST_CASE("magnetron dephasing diagnostics") {
    const TrapConfig trap = trap_at(50e-6);
    const ElectronModes m = derive_modes(trap);
    NonIdealityConfig n;
    n.phi22 = 0.1 * trap.v0;
    n.phi40 = 0.1 * trap.v0;
    n.b20 = 0.1 * trap.b0;
    n.b02 = 0.1 * trap.b0;
    const KerrCoefficients k = kerr_coefficients(m, trap, n);
    const MagnetronDephasing d = magnetron_dephasing(m, k, 0.3, 4.0);
    CHECK(d.via_axial >= 0.0);
    CHECK(d.via_cyclotron >= 0.0);
}

TEST_CASE("composed damping budget") {
    const SystemConfig cfg = design();
    const double g = coupling_strength(cfg.trap, cfg.cavity, cfg.antenna);
    const DampingBreakdown b =
        compose_damping(cfg.trap, cfg.cavity, cfg.antenna, cfg.nonideal, g, 4.0);

    CHECK(b.gamma_eff ==
          b.gamma_larmor + b.gamma_antenna + b.gamma_ba + b.gamma_dephase);
    CHECK(b.gamma_larmor >= 0.0);
    CHECK(b.gamma_antenna >= 0.0);
    CHECK(b.gamma_ba >= 0.0);
    CHECK(b.gamma_dephase >= 0.0);
    // Ohmic antenna loss dominates the design budget
    CHECK(b.gamma_antenna > b.gamma_larmor);
    CHECK(b.gamma_antenna > b.gamma_ba);
    CHECK(b.gamma_antenna > b.gamma_dephase);

    // with a superconducting antenna and no backaction only Larmor is left
    AntennaConfig super = cfg.antenna;
    super.resistivity = 0.0;
    const DampingBreakdown only =
        compose_damping(cfg.trap, cfg.cavity, super, cfg.nonideal, 0.0, 4.0);
    CHECK(only.gamma_eff == only.gamma_larmor);

    // randomized positivity
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        TrapConfig t = cfg.trap;
        t.v0 = 5.0 + 40.0 * u(rng);
        t.z0 = 30e-6 + 300e-6 * u(rng);
        if (!trap_stable(t)) continue;
        CavityConfig cav = cfg.cavity;
        cav.q_ext = std::pow(10.0, 2.0 + 3.0 * u(rng));
        NonIdealityConfig n;
        n.phi22 = u(rng) * t.v0;
        n.b02 = u(rng) * t.b0;
        const DampingBreakdown r =
            compose_damping(t, cav, cfg.antenna, n, g * u(rng), 4.0 * u(rng));
        CHECK(r.gamma_larmor >= 0.0);
        CHECK(r.gamma_antenna >= 0.0);
        CHECK(r.gamma_ba >= 0.0);
        CHECK(r.gamma_dephase >= 0.0);
        CHECK(r.gamma_eff ==
              r.gamma_larmor + r.gamma_antenna + r.gamma_ba + r.gamma_dephase);
    }
}
