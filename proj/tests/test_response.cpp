#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "eforce/errors.hpp"
#include "eforce/modes.hpp"
#include "eforce/response.hpp"
#include "reference_values.hpp"

using namespace eforce;

namespace {

SystemConfig design() { return reference_design(); }

CavityConfig design_cavity() { return design().cavity; }

}  // namespace

TEST_CASE("cavity susceptibility on and off resonance") {
    const CavityConfig cav = design_cavity();
    const double kappa = cav.kappa();

    const ComplexResponse on = chi_cavity(cav.omega_k, cav);
    CHECK(on.real() == doctest::Approx(2.0 / kappa).epsilon(1e-14));
    CHECK(on.imag() == doctest::Approx(0.0));

    const double detuned = cav.omega_k + 0.5 * kappa;
    const ComplexResponse off = chi_cavity(detuned, cav);
    CHECK(std::abs(off) == doctest::Approx(std::sqrt(2.0) / kappa).epsilon(1e-12));
    CHECK(std::arg(off) == doctest::Approx(pi / 4.0).epsilon(1e-12));
}

TEST_CASE("susceptibility magnitudes match their Lorentzian denominators") {
    const CavityConfig cav = design_cavity();
    const double kappa = cav.kappa();
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.1, 3.0);
    for (int i = 0; i < 200; ++i) {
        const double omega = u(rng) * cav.omega_k;
        const double dm = omega - cav.omega_k;
        const double dp = omega + cav.omega_k;
        CHECK(std::norm(chi_cavity(omega, cav)) ==
              doctest::Approx(1.0 / (dm * dm + 0.25 * kappa * kappa)).epsilon(1e-12));
        CHECK(std::norm(chi_cavity_counter(omega, cav)) ==
              doctest::Approx(1.0 / (dp * dp + 0.25 * kappa * kappa)).epsilon(1e-12));
    }
}

TEST_CASE("mechanical susceptibility") {
    const double m = PhysConstants::codata().m_electron;
    const double wz = two_pi * 6e9;
    const double gamma = 0.3;

    const ComplexResponse dc = chi_mech(0.0, wz, gamma, m);
    CHECK(dc.real() == doctest::Approx(1.0 / (m * wz * wz)).epsilon(1e-12));
    CHECK(dc.imag() == doctest::Approx(0.0));

    const ComplexResponse res = chi_mech(wz, wz, gamma, m);
    CHECK(res.real() == doctest::Approx(0.0));
    CHECK(std::abs(res) == doctest::Approx(1.0 / (m * gamma * wz)).epsilon(1e-12));

    CHECK_THROWS_AS(chi_mech(wz, wz, 0.0, m), SingularResponse);
}

TEST_CASE("coupling strength at the reference design") {
    const SystemConfig cfg = design();
    const double g = coupling_strength(cfg.trap, cfg.cavity, cfg.antenna);
    CHECK(g == doctest::Approx(ref::g_design).epsilon(1e-12));
    CHECK(g > 4e12);
    CHECK(g < 6e12);
}

TEST_CASE("coupling strength scalings") {
    SystemConfig cfg = design();
    cfg.antenna.length = 0.0256;  // pin the length so scalings are exact
    const double g0 = coupling_strength(cfg.trap, cfg.cavity, cfg.antenna);

    SystemConfig c1 = cfg;
    c1.trap.alpha_geom = 0.5;
    CHECK(coupling_strength(c1.trap, c1.cavity, c1.antenna) ==
          doctest::Approx(0.5 * g0).epsilon(1e-14));

    SystemConfig c2 = cfg;
    c2.antenna.length *= 2.0;
    CHECK(coupling_strength(c2.trap, c2.cavity, c2.antenna) ==
          doctest::Approx(2.0 * g0).epsilon(1e-14));

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.3, 3.0);
    for (int i = 0; i < 50; ++i) {
        SystemConfig c = cfg;
        const double sz = u(rng), sv = u(rng);
        c.trap.z0 *= sz;
        c.trap.rho0 = c.trap.z0 * std::sqrt(2.0);
        c.cavity.lx *= sv;
        const double expected = g0 / sz / std::sqrt(sv);
        CHECK(coupling_strength(c.trap, c.cavity, c.antenna) ==
              doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("dynamical backaction signs and limits") {
    const SystemConfig cfg = design();
    const double m = PhysConstants::codata().m_electron;
    const ElectronModes modes = derive_modes(cfg.trap);
    const double g = coupling_strength(cfg.trap, cfg.cavity, cfg.antenna);

    const BackactionShift s = dynamical_backaction(modes.omega_z, cfg.cavity, g, m);
    CHECK(s.gamma_ba > 0.0);

    // far-detuned cavity decouples (shift ~ 1/omega_k, damping ~ 1/omega_k^2)
    CavityConfig far = cfg.cavity;
    far.omega_k *= 1e6;
    const BackactionShift sf = dynamical_backaction(modes.omega_z, far, g, m);
    CHECK(std::fabs(sf.omega_ba) < 1e-5 * std::fabs(s.omega_ba));
    CHECK(sf.gamma_ba < 1e-9 * s.gamma_ba);

    // on resonance the shift is negative (only the counter-rotating term)
    CavityConfig res = cfg.cavity;
    res.omega_k = modes.omega_z;
    CHECK(dynamical_backaction(modes.omega_z, res, g, m).omega_ba < 0.0);

    // positivity across random parameters
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 300; ++i) {
        CavityConfig cav = cfg.cavity;
        cav.omega_k = two_pi * (1e9 + 19e9 * u(rng));
        cav.q_ext = std::pow(10.0, 1.0 + 5.0 * u(rng));
        const double wz = two_pi * (1e9 + 19e9 * u(rng));
        CHECK(dynamical_backaction(wz, cav, g, m).gamma_ba > 0.0);
    }
}

TEST_CASE("effective susceptibility") {
    const SystemConfig cfg = design();
    const double m = PhysConstants::codata().m_electron;
    const ElectronModes modes = derive_modes(cfg.trap);
    const double g = coupling_strength(cfg.trap, cfg.cavity, cfg.antenna);
    const double gamma_int = 0.16;

    SUBCASE("reduces to the bare response at g = 0") {
        std::mt19937_64 rng(17);
        std::uniform_real_distribution<double> u(0.2, 2.0);
        for (int i = 0; i < 100; ++i) {
            const double omega = u(rng) * modes.omega_z;
            const ComplexResponse a =
                chi_eff(omega, modes.omega_z, gamma_int, cfg.cavity, 0.0, m);
            const ComplexResponse b = chi_mech(omega, modes.omega_z, gamma_int, m);
            CHECK(a.real() == doctest::Approx(b.real()).epsilon(1e-15));
            CHECK(a.imag() == doctest::Approx(b.imag()).epsilon(1e-15));
        }
    }

    SUBCASE("peak height matches the Lorentzian form in the high-Q limit") {
        const BackactionShift s = dynamical_backaction(modes.omega_z, cfg.cavity, g, m);
        const double omega_eff = modes.omega_z + s.omega_ba;
        const double gamma_eff = gamma_int + s.gamma_ba;
        REQUIRE(gamma_eff / modes.omega_z < 1e-3);
        const double peak = std::abs(chi_eff(omega_eff, modes.omega_z, gamma_int,
                                             cfg.cavity, g, m));
        CHECK(peak == doctest::Approx(1.0 / (m * gamma_eff * omega_eff)).epsilon(0.01));
    }

    SUBCASE("imaginary part of the inverse reproduces the composed damping") {
        const BackactionShift s = dynamical_backaction(modes.omega_z, cfg.cavity, g, m);
        const ComplexResponse chi =
            chi_eff(modes.omega_z, modes.omega_z, gamma_int, cfg.cavity, g, m);
        const double im_inv = (1.0 / chi).imag() / (m * modes.omega_z);
        CHECK(im_inv ==
              doctest::Approx(-(gamma_int + s.gamma_ba)).epsilon(1e-3));
    }
}
