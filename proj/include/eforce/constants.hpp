#pragma once

namespace eforce {

/// Fundamental constants, CODATA-2018. Fixed at load; the only supported
/// override is constructing a custom instance for dimensionless validation
/// runs (see PhysConstants::natural), which the CLI never exposes.
struct PhysConstants {
    double hbar;        // J*s
    double e_charge;    // C
    double m_electron;  // kg
    double eps0;        // F/m
    double mu0;         // H/m
    double k_b;         // J/K
    double mu_bohr;     // J/T
    double c_light;     // m/s

    static const PhysConstants& codata();

    /// All constants set to 1 (test hook for dimensionless cross-checks).
    static PhysConstants natural();
};

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;

/// 1 debye in C*m.
inline constexpr double debye = 3.33564095e-30;

inline double rad_per_sec(double hz) { return two_pi * hz; }
inline double to_hz(double rad_per_s) { return rad_per_s / two_pi; }

}  // namespace eforce
