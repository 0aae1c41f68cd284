#!/usr/bin/env python3
"""High-precision reference evaluation of the closed forms used in the tests.

This script is the independent oracle for the frozen constants in
tests/reference_values.hpp.  It evaluates every formula directly with
mpmath (40 significant digits) and never imports or reuses the C++
implementation.  Regenerate the header with:

    python3 tests/tools/compute_reference_values.py > tests/reference_values.hpp
"""

import mpmath as mp

mp.mp.dps = 40

# CODATA-2018
hbar = mp.mpf("1.054571817e-34")
e = mp.mpf("1.602176634e-19")
me = mp.mpf("9.1093837015e-31")
eps0 = mp.mpf("8.8541878128e-12")
mu0 = mp.mpf("1.25663706212e-6")
kB = mp.mpf("1.380649e-23")
muB = mp.mpf("9.2740100783e-24")
c = mp.mpf("299792458")
pi = mp.pi
debye = mp.mpf("3.33564095e-30")  # 1 D in C*m


def n_th(omega, temperature):
    if temperature == 0:
        return mp.mpf(0)
    return 1 / mp.expm1(hbar * omega / (kB * temperature))


vals = {}

# ---- trap modes: V0 = 19.3 V, d = 50 um, B0 = 0.5 T --------------------
V0 = mp.mpf("19.3")
d = mp.mpf("50e-6")
B0 = mp.mpf("0.5")
omega_z = mp.sqrt(e * V0 / (me * d * d))
omega_c = e * B0 / me
omega_l = mp.sqrt(omega_c**2 - 2 * omega_z**2)
omega_p = (omega_c + omega_l) / 2
omega_m = (omega_c - omega_l) / 2
vals["f_z_design"] = omega_z / (2 * pi)
vals["omega_c_design"] = omega_c
vals["f_plus_design"] = omega_p / (2 * pi)
vals["f_minus_design"] = omega_m / (2 * pi)
vals["z_zp_design"] = mp.sqrt(hbar / (2 * me * omega_z))

# axial frequency under the voltage sweep endpoints (same d)
vals["f_z_10v"] = mp.sqrt(e * 10 / (me * d * d)) / (2 * pi)
vals["f_z_50v"] = mp.sqrt(e * 50 / (me * d * d)) / (2 * pi)

# ---- thermal occupation -------------------------------------------------
vals["n_th_6ghz_4k"] = n_th(2 * pi * mp.mpf("6e9"), 4)

# ---- coupling strength, design cavity ----------------------------------
length = pi * c / omega_z
V_cav = mp.mpf("0.256") * mp.mpf("0.027") * mp.mpf("0.150")
omega_k = 2 * pi * mp.mpf("5.5e9")
G = e * (length / (2 * d)) * mp.sqrt(omega_k / (2 * hbar * eps0 * V_cav))
vals["antenna_length_design"] = length
vals["g_design"] = G

# ---- damping ------------------------------------------------------------
# cavity-corrected Larmor rate at the quoted example point
vals["gamma_larmor_cavity_example"] = (
    e**2 * pi**2 / (6 * V_cav * mp.mpf("1e3") * eps0 * me * 2 * pi * mp.mpf("5.87e9"))
)

# free-space Larmor rate of an oscillator at 2*pi*6 GHz
om6 = 2 * pi * mp.mpf("6e9")
gamma_L_free_6ghz = e**2 * om6**2 / (6 * pi * eps0 * me * c**3)
vals["gamma_larmor_free_6ghz"] = gamma_L_free_6ghz

# antenna Ohmic damping for the design geometry
A_a = mp.mpf("200e-9") * mp.mpf("0.05")
R_d = mp.mpf("22.1e-9") * length / A_a
vals["gamma_antenna_design"] = (e / (2 * d)) ** 2 * R_d / me

# ---- Kerr / non-ideality coefficients at the design point --------------
# fractional non-idealities 0.1: Phi22 = 0.1*V0, B02 = 0.1*B0, others zero
calA = hbar * e / (d**4 * me**2 * omega_l**2)
calB = hbar * e**2 * B0 / (d**2 * me**3 * omega_l**2)
calC = hbar * e / (d**2 * me**2 * omega_l)
phi22 = V0 / 10
b02 = B0 / 10
vals["kerr_calA_design"] = calA
vals["kerr_calB_design"] = calB
vals["kerr_calC_design"] = calC
# phi40 = phi04 = 0 and b20 = 0 in this sample
vals["kerr_d_omega_z"] = calA * (2 * phi22) + calB * b02 / 2
vals["kerr_d_omega_plus"] = calA * phi22 + (calB - calC) * (b02 / 4)
vals["kerr_d_omega_minus"] = calA * phi22 + (calB + calC) * (b02 / 4)
vals["kerr_omega_pz"] = 2 * calA * phi22 + (calB - calC) * b02 / 2
vals["kerr_omega_mz"] = 2 * calA * phi22 + (calB + calC) * b02 / 2
# pure-electrostatic terms with phi40 = phi04 = 0.1*V0 as a second sample
phi40 = V0 / 10
vals["kerr_omega_zz_phi04"] = mp.mpf("1.5") * calA * phi40  # with Phi04 = 0.1*V0
vals["kerr_omega_pp_b20"] = 4 * calA * phi40 + (calB - calC) * (B0 / 10)
vals["kerr_omega_mm_b20"] = 4 * calA * phi40 + (calB + calC) * (B0 / 10)
vals["kerr_omega_pm_b20"] = 16 * calA * phi40 + 4 * calB * (B0 / 10)

# ---- intrinsic force noise of the free electron at 4 K ------------------
vals["s_ff_intrinsic_free_6ghz_4k"] = (
    2 * hbar * me * om6 * gamma_L_free_6ghz * (n_th(om6, 4) + mp.mpf("0.5"))
)

# ---- skin depth and electrode noises ------------------------------------
rho_au = mp.mpf("22.1e-9")
vals["skin_depth_gold_6ghz"] = mp.sqrt(2 * rho_au / (mu0 * om6))

z_stand = d
t_m = mp.mpf("200e-9")
vals["s_ff_johnson_design_4k"] = 3 * e**2 * kB * 4 * rho_au / (2 * pi * z_stand**2 * t_m)

t_d = mp.mpf("2e-9")
eps_abs = 2 * eps0
tan_th = mp.mpf("0.01")
vals["s_ff_dielectric_design_4k"] = (
    3 * e**2 * (3 / (4 * pi)) * (tan_th / (eps_abs * (1 + tan_th**2)))
    * kB * 4 * t_d / (om6 * z_stand**4)
)

# ---- Barkhausen chain ----------------------------------------------------
g_s = mp.mpf("7.120")
V_uc = mp.mpf("84.703e-30")
T_c = mp.mpf("800")
T4 = mp.mpf("4")
var_m = (g_s * muB / (2 * V_uc)) ** 2 / (T_c / T4 + mp.cosh(0) ** 2)
vals["var_m_smco_4k"] = var_m

n_p = n_th(omega_p, T4)
n_m = n_th(omega_m, T4)
rho_bar = mp.sqrt(2 * hbar / (me * omega_l)) * (1 + n_p + n_m)
omega_bar = (hbar / me) * (n_p - n_m) / rho_bar**2
vals["rho_bar_design_4k"] = rho_bar
vals["omega_bar_design_4k"] = omega_bar

alpha_1khz = 2 * pi * mp.mpf("1e3")
s_bb = (g_s * mu0 * muB / (2 * V_uc)) ** 2 * (2 * alpha_1khz / (om6**2 + alpha_1khz**2)) * (T4 / (T4 + T_c))
vals["s_bb_design_4k_1khz_6ghz"] = s_bb
vals["s_ff_barkhausen_design_4k_1khz_6ghz"] = (e * omega_bar * rho_bar) ** 2 * s_bb

# ---- TLS chain ------------------------------------------------------------
P0 = mp.mpf("4.35e44")  # J^-1 m^-3, converted from 4.35e31 erg^-1 cm^-3
p_dip = mp.mpf("0.5") * debye
eps_r = mp.mpf("3.7")
A_rate = mp.mpf("1e8")
t0 = mp.mpf("1e5")

vals["tls_tan_res_t0_limit"] = P0 * p_dip**2 * pi / (3 * eps0 * eps_r)


def tan_rel(omega, temperature):
    tau_min = 1 / (A_rate * temperature**3)
    f = lambda tau: mp.sqrt(1 - tau_min / tau) * omega / (1 + (omega * tau) ** 2)
    # integrate on the original tau domain, splitting at the Lorentzian knee
    knee = 1 / omega
    pts = sorted([tau_min, t0] + ([knee] if tau_min < knee < t0 else []))
    acc = mp.mpf(0)
    for a, b in zip(pts[:-1], pts[1:]):
        acc += mp.quad(f, [a, b])
    return P0 * p_dip**2 / (eps0 * eps_r) * acc


def tan_res(omega, temperature):
    return P0 * p_dip**2 * pi / (3 * eps0 * eps_r) * mp.tanh(hbar * omega / (2 * kB * temperature))


tan_total = tan_res(omega_z, T4) + tan_rel(omega_z, T4)
vals["tls_tan_design_4k"] = tan_total
vals["tls_tan_rel_design_4k"] = tan_rel(omega_z, T4)

V_tls = length * 2 * d * mp.mpf("0.05")
s_ee = (2 * kB * T4 / omega_z) * (1 / (eps0 * eps_r * V_tls)) * tan_total / ((1 - 1 / eps_r) ** 2 + tan_total**2)
vals["v_tls_design"] = V_tls
vals["s_ff_tls_design_4k"] = (e * length / (2 * d)) ** 2 * s_ee

# ---- emit header ----------------------------------------------------------
print("// Frozen reference values for the unit and acceptance tests.")
print("// Generated by tests/tools/compute_reference_values.py (independent")
print("// high-precision evaluation of the closed forms; do not edit by hand).")
print("#pragma once")
print()
print("namespace ref {")
for name, v in vals.items():
    print(f"inline constexpr double {name} = {mp.nstr(v, 17)};")
print("}  // namespace ref")
