#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "eforce/errors.hpp"
#include "eforce/modes.hpp"
#include "reference_values.hpp"

using namespace eforce;

namespace {
TrapConfig design_trap() {
    TrapConfig t;
    t.v0 = 19.3;
    t.b0 = 0.5;
    t.z0 = 50e-6;   // rho0 auto -> d == z0
    t.t_trap = 4.0;
    return t;
}
}  // namespace

TEST_CASE("characteristic size") {
    TrapConfig t = design_trap();
    CHECK(t.d() == doctest::Approx(50e-6).epsilon(1e-12));
    t.rho0 = 50e-6 * std::sqrt(2.0);  // explicit value matching the default
    CHECK(t.d() == doctest::Approx(50e-6).epsilon(1e-12));
}

TEST_CASE("design-point mode frequencies") {
    const ElectronModes m = derive_modes(design_trap());
    CHECK(to_hz(m.omega_z) == doctest::Approx(ref::f_z_design).epsilon(1e-12));
    CHECK(m.omega_c == doctest::Approx(ref::omega_c_design).epsilon(1e-12));
    CHECK(to_hz(m.omega_plus) == doctest::Approx(ref::f_plus_design).epsilon(1e-12));
    CHECK(to_hz(m.omega_minus) == doctest::Approx(ref::f_minus_design).epsilon(1e-12));
    CHECK(m.z_zp == doctest::Approx(ref::z_zp_design).epsilon(1e-12));
    CHECK(m.stable);
    // the quoted design lands at f_z ~ 6 GHz
    CHECK(to_hz(m.omega_z) > 5.8e9);
    CHECK(to_hz(m.omega_z) < 6.0e9);
}

TEST_CASE("axial frequency scales as sqrt(V0)") {
    TrapConfig t = design_trap();
    t.v0 = 5.0;  // headroom: x4 keeps the trap stable
    const double w1 = derive_modes(t).omega_z;
    t.v0 *= 4.0;
    const double w2 = derive_modes(t).omega_z;
    CHECK(w2 == doctest::Approx(2.0 * w1).epsilon(1e-14));
}

TEST_CASE("algebraic identities across random stable traps") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int checked = 0;
    for (int i = 0; i < 500; ++i) {
        TrapConfig t;
        t.v0 = 0.5 + 60.0 * u(rng);
        t.b0 = 0.1 + 2.0 * u(rng);
        t.z0 = 20e-6 * std::pow(10.0, 2.0 * u(rng));
        t.t_trap = 4.0;
        if (!trap_stable(t)) continue;
        const ElectronModes m = derive_modes(t);
        // keep clear of the stability edge where omega_l loses digits
        if (m.omega_l < 1e-2 * m.omega_c) continue;
        ++checked;
        CHECK(m.omega_plus + m.omega_minus ==
              doctest::Approx(m.omega_c).epsilon(1e-12));
        CHECK(m.omega_plus * m.omega_minus ==
              doctest::Approx(0.5 * m.omega_z * m.omega_z).epsilon(1e-12));
        CHECK(m.omega_plus > m.omega_minus);
    }
    CHECK(checked > 100);
}

TEST_CASE("unstable trap throws with both frequencies") {
    TrapConfig t = design_trap();
    t.v0 = 80.0;  // pushes 2*omega_z^2 above omega_c^2
    CHECK(!trap_stable(t));
    CHECK_THROWS_AS(derive_modes(t), TrapUnstable);
    try {
        derive_modes(t);
    } catch (const TrapUnstable& e) {
        CHECK(e.omega_c > 0.0);
        CHECK(e.omega_z > 0.0);
        CHECK(std::string(e.what()).find("f_c") != std::string::npos);
    }
}

TEST_CASE("thermal occupation") {
    const auto& pc = PhysConstants::codata();
    CHECK(thermal_occupation(1e10, 0.0) == 0.0);
    // hbar*omega = kB*T*ln2 puts exactly one quantum in the mode
    const double t = 1.0;
    const double omega = pc.k_b * t * std::log(2.0) / pc.hbar;
    CHECK(thermal_occupation(omega, t) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(thermal_occupation(two_pi * 6e9, 4.0) ==
          doctest::Approx(ref::n_th_6ghz_4k).epsilon(1e-12));
    // overflow-safe deep quantum regime
    CHECK(thermal_occupation(1e15, 1e-6) == 0.0);
    CHECK_THROWS_AS(thermal_occupation(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(thermal_occupation(-1.0, 1.0), DomainError);
}

TEST_CASE("config validation") {
    TrapConfig t = design_trap();
    t.v0 = -1.0;
    CHECK_THROWS_AS(t.validate(), ConfigError);
    t = design_trap();
    t.alpha_geom = 1.5;
    CHECK_THROWS_AS(t.validate(), ConfigError);
}
