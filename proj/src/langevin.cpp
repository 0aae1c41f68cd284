#include "eforce/langevin.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <vector>

#include "eforce/errors.hpp"
#include "eforce/optimize.hpp"
#include "eforce/parallel.hpp"
#include "eforce/psd.hpp"
#include "eforce/response.hpp"

namespace eforce {

namespace {

using Cplx = std::complex<double>;
using Matrix4 = Eigen::Matrix4d;
using Vector4 = Eigen::Vector4d;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Deterministic normal generator (Box-Muller on explicit 53-bit uniforms).
struct Gauss {
    explicit Gauss(std::uint64_t seed) : rng(seed) {}
    std::mt19937_64 rng;
    bool has_spare = false;
    double spare = 0.0;

    double uniform() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    }
    double operator()() {
        if (has_spare) {
            has_spare = false;
            return spare;
        }
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare = r * std::sin(two_pi * u2);
        has_spare = true;
        return r * std::cos(two_pi * u2);
    }
};

/// Scaling-and-squaring Pade(6) exponential; plenty for |A| dt <= O(1).
Matrix4 expm(const Matrix4& a) {
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    Matrix4 x = a;
    if (norm > 0.5) {
        squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / 0.5))));
        x /= std::pow(2.0, squarings);
    }
    static const double c[] = {1.0, 0.5, 5.0 / 44.0, 1.0 / 66.0, 1.0 / 792.0,
                               1.0 / 15840.0, 1.0 / 665280.0};
    const Matrix4 x2 = x * x;
    const Matrix4 x4 = x2 * x2;
    const Matrix4 x6 = x4 * x2;
    const Matrix4 even = c[0] * Matrix4::Identity() + c[2] * x2 + c[4] * x4 + c[6] * x6;
    const Matrix4 odd_poly = c[1] * Matrix4::Identity() + c[3] * x2 + c[5] * x4;
    const Matrix4 odd = x * odd_poly;
    Matrix4 result = (even - odd).partialPivLu().solve(even + odd);
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

double occupancy(double omega, double temperature) {
    if (temperature <= 0.0) return 0.0;
    const double em1 = std::expm1(omega / temperature);  // hbar = kB = 1
    return std::isinf(em1) ? 0.0 : 1.0 / em1;
}

struct ModelRates {
    double kappa;
    double omega_in;
    double n_in;      // flat bath occupancy of both cavity ports
    double n_mech;    // mechanical bath occupancy at omega_z
    double s_force;   // white two-sided force PSD
};

ModelRates model_rates(const SimConfig& sim) {
    ModelRates m;
    m.kappa = sim.kappa_in + sim.kappa_add;
    m.omega_in = sim.resolved_omega_in();
    m.n_in = occupancy(sim.omega_k, sim.temperature);
    m.n_mech = occupancy(sim.omega_z, sim.temperature);
    m.s_force = 2.0 * sim.omega_z * sim.gamma * (m.n_mech + 0.5);
    return m;
}

// Lab-frame drift for state (z, v, Re a, Im a); hbar = m = 1.
Matrix4 lab_drift(const SimConfig& sim) {
    const double kappa = sim.kappa_in + sim.kappa_add;
    Matrix4 a = Matrix4::Zero();
    a(0, 1) = 1.0;
    a(1, 0) = -sim.omega_z * sim.omega_z;
    a(1, 1) = -sim.gamma;
    a(1, 2) = 2.0 * sim.g;
    a(2, 2) = -0.5 * kappa;
    a(2, 3) = sim.omega_k;
    a(3, 0) = sim.g;
    a(3, 2) = -sim.omega_k;
    a(3, 3) = -0.5 * kappa;
    return a;
}

// Rotating frame at the drive: cavity variable b = a e^{i omega_in t}; the
// coupling stays explicitly time-dependent and is applied per step.
Matrix4 rotating_drift(const SimConfig& sim) {
    const double kappa = sim.kappa_in + sim.kappa_add;
    const double detuning = sim.resolved_omega_in() - sim.omega_k;
    Matrix4 a = Matrix4::Zero();
    a(0, 1) = 1.0;
    a(1, 0) = -sim.omega_z * sim.omega_z;
    a(1, 1) = -sim.gamma;
    a(2, 2) = -0.5 * kappa;
    a(2, 3) = -detuning;
    a(3, 2) = detuning;
    a(3, 3) = -0.5 * kappa;
    return a;
}

struct TrajectoryAccum {
    std::vector<double> psd_z;   // summed periodograms
    std::vector<double> psd_q;
    int segments = 0;
    double sum_z2 = 0.0;
    std::int64_t count_z2 = 0;
};

void run_trajectory(const SimConfig& sim, int index, TrajectoryAccum& acc) {
    const ModelRates rates = model_rates(sim);
    const bool lab = sim.frame == Frame::lab;
    const Matrix4 a = lab ? lab_drift(sim) : rotating_drift(sim);
    const Matrix4 phi = expm(a * sim.dt);
    // Exact map of step-constant noise: Psi = A^-1 (Phi - 1).
    const Matrix4 psi = a.partialPivLu().solve(phi - Matrix4::Identity());

    Gauss gauss(splitmix64(sim.seed + 0x9E3779B97F4A7C15ull * (index + 1)));

    const double sig_force = std::sqrt(rates.s_force / sim.dt);
    const double sig_quad = std::sqrt((rates.n_in + 0.5) / (2.0 * sim.dt));

    std::int64_t burn = sim.burn_in_steps;
    if (burn < 0) {
        const double rate = std::max(sim.gamma, 1e-12);
        burn = static_cast<std::int64_t>(std::ceil(8.0 / (rate * sim.dt)));
        burn = std::min(burn, 4 * sim.n_steps);
    }
    const std::int64_t total = burn + sim.n_steps;

    std::vector<double> z_series(sim.n_steps);
    std::vector<double> q_series(sim.n_steps);

    Vector4 x = Vector4::Zero();
    Vector4 noise;
    const Cplx em_theta(std::cos(sim.theta), -std::sin(sim.theta));

    for (std::int64_t n = 0; n < total; ++n) {
        const double u1 = gauss() * sig_quad;
        const double u2 = gauss() * sig_quad;
        const double v1 = sim.kappa_add > 0.0 ? gauss() * sig_quad : 0.0;
        const double v2 = sim.kappa_add > 0.0 ? gauss() * sig_quad : 0.0;
        const double f = gauss() * sig_force;

        if (n >= burn) {
            const std::int64_t k = n - burn;
            const double t = static_cast<double>(n) * sim.dt;
            const double z = x[0];
            Cplx cavity(x[2], x[3]);
            Cplx out;
            if (lab) {
                // demodulate at the drive: o = (xi_in - sqrt(k_in) a) e^{i w_in t}
                const Cplx xi(u1, u2);
                out = (xi - std::sqrt(sim.kappa_in) * cavity) *
                      Cplx(std::cos(rates.omega_in * t), std::sin(rates.omega_in * t));
            } else {
                const Cplx xi(u1, u2);
                out = xi - std::sqrt(sim.kappa_in) * cavity;
            }
            z_series[k] = z;
            q_series[k] = std::sqrt(2.0) * std::real(out * em_theta);
            acc.sum_z2 += z * z;
            ++acc.count_z2;
        }

        noise[0] = 0.0;
        noise[1] = f;
        noise[2] = std::sqrt(sim.kappa_in) * u1 + std::sqrt(sim.kappa_add) * v1;
        noise[3] = std::sqrt(sim.kappa_in) * u2 + std::sqrt(sim.kappa_add) * v2;
        if (!lab) {
            // explicit coupling at the midpoint phase
            const double tm = (static_cast<double>(n) + 0.5) * sim.dt;
            const double ph = rates.omega_in * tm;
            const Cplx b(x[2], x[3]);
            noise[1] += 2.0 * sim.g *
                        std::real(b * Cplx(std::cos(ph), -std::sin(ph)));
            noise[2] += -sim.g * x[0] * std::sin(ph);
            noise[3] += sim.g * x[0] * std::cos(ph);
        }
        x = phi * x + psi * noise;
        if ((n & 0xFFF) == 0 && !x.allFinite())
            throw NonFiniteState("langevin state diverged at step " + std::to_string(n));
    }
    if (!x.allFinite()) throw NonFiniteState("langevin state diverged");

    acc.segments = welch_accumulate(z_series, sim.dt, sim.segment, acc.psd_z);
    welch_accumulate(q_series, sim.dt, sim.segment, acc.psd_q);
}

struct FitWindow {
    std::size_t lo, hi;  // inclusive bin range
};

FitWindow locate_peak_window(const std::vector<double>& omega,
                             const std::vector<double>& psd) {
    // skip DC-adjacent bins
    std::size_t start = 2;
    std::size_t pk = start;
    for (std::size_t i = start; i + 1 < psd.size(); ++i)
        if (psd[i] > psd[pk]) pk = i;
    // half-power extent around the peak; keep the fit window tight so the
    // sloped backaction floor under the line does not skew the fit
    const double half = 0.5 * psd[pk];
    std::size_t lo = pk, hi = pk;
    while (lo > start && psd[lo] > half) --lo;
    while (hi + 2 < psd.size() && psd[hi] > half) ++hi;
    const std::size_t width =
        std::max<std::size_t>(6, (5 * (hi - lo + 1)) / 2);
    lo = pk > width ? pk - width : start;
    hi = std::min(psd.size() - 2, pk + width);
    (void)omega;
    return {lo, hi};
}

LorentzianFit fit_lorentzian(const std::vector<double>& omega,
                             const std::vector<double>& psd, FitWindow w) {
    std::size_t pk = w.lo;
    for (std::size_t i = w.lo; i <= w.hi; ++i)
        if (psd[i] > psd[pk]) pk = i;
    double floor_guess = psd[w.lo];
    for (std::size_t i = w.lo; i <= w.hi; ++i) floor_guess = std::min(floor_guess, psd[i]);

    const double half = 0.5 * (psd[pk] + floor_guess);
    std::size_t lo = pk, hi = pk;
    while (lo > w.lo && psd[lo] > half) --lo;
    while (hi < w.hi && psd[hi] > half) ++hi;
    const double width_guess =
        std::max(omega[hi] - omega[lo], omega[1] - omega[0]);

    // parameters: center, fwhm, peak amplitude, floor (all positive scales)
    const double s0[4] = {omega[pk], width_guess, psd[pk], std::max(floor_guess, 1e-300)};
    auto model = [&](const std::vector<double>& p, double om) {
        const double hw = 0.5 * std::fabs(p[1]) * s0[1];
        const double det = om - p[0] * s0[0];
        return std::fabs(p[2]) * s0[2] * hw * hw / (det * det + hw * hw) +
               std::fabs(p[3]) * s0[3];
    };
    auto loss = [&](const std::vector<double>& p) {
        double sum = 0.0;
        for (std::size_t i = w.lo; i <= w.hi; ++i) {
            const double m = model(p, omega[i]);
            const double r = std::log(m) - std::log(psd[i]);
            sum += r * r;
        }
        return sum;
    };

    detail::NelderMeadOptions opts;
    opts.max_evals = 4000;
    opts.diameter_tol = 1e-10;
    const auto nm = detail::nelder_mead(loss, {1.0, 1.0, 1.0, 1.0}, 0.08, opts);

    LorentzianFit fit;
    fit.center = nm.x[0] * s0[0];
    fit.width = std::fabs(nm.x[1]) * s0[1];
    fit.amplitude = std::fabs(nm.x[2]) * s0[2];
    fit.floor = std::fabs(nm.x[3]) * s0[3];
    return fit;
}

}  // namespace

void SimConfig::validate() const {
    if (!(omega_z > 0.0) || !(omega_k > 0.0))
        throw UsageError("SimConfig: omega_z and omega_k must be > 0");
    if (!(kappa_in > 0.0) || kappa_add < 0.0)
        throw UsageError("SimConfig: kappa_in must be > 0 and kappa_add >= 0");
    if (gamma < 0.0 || g < 0.0 || temperature < 0.0)
        throw UsageError("SimConfig: gamma, g, temperature must be >= 0");
    if (n_trajectories < 8) throw UsageError("SimConfig: n_trajectories must be >= 8");
    if (!(dt > 0.0) || n_steps < 2 * segment)
        throw UsageError("SimConfig: need dt > 0 and n_steps >= 2*segment");
    if (segment < 64 || (segment & (segment - 1)) != 0)
        throw UsageError("SimConfig: segment must be a power of two >= 64");
    const double scale =
        frame == Frame::lab
            ? std::max(omega_z, omega_k)
            : std::max({omega_z, resolved_omega_in(),
                        std::fabs(resolved_omega_in() - omega_k)});
    if (!(dt * std::max(scale, kappa_in + kappa_add) < 0.1))
        throw StepTooLarge("SimConfig: dt * max frequency scale must be < 0.1");
}

SimResult simulate(const SimConfig& sim, int n_threads) {
    sim.validate();

    std::vector<TrajectoryAccum> acc(sim.n_trajectories);
    parallel_for(
        sim.n_trajectories, [&](int i) { run_trajectory(sim, i, acc[i]); }, n_threads);

    SimResult r;
    r.trajectories = sim.n_trajectories;
    r.omega_mech = welch_frequencies(sim.dt, sim.segment);
    r.omega_out = r.omega_mech;
    const std::size_t nbin = r.omega_mech.size();
    r.psd_z.assign(nbin, 0.0);
    r.psd_q.assign(nbin, 0.0);

    double sum_z2 = 0.0;
    std::int64_t count_z2 = 0;
    // fixed-order pairwise-safe reduction: accumulate per trajectory index
    for (const auto& t : acc) {
        for (std::size_t k = 0; k < nbin; ++k) {
            r.psd_z[k] += t.psd_z[k];
            r.psd_q[k] += t.psd_q[k];
        }
        r.segments += t.segments;
        sum_z2 += t.sum_z2;
        count_z2 += t.count_z2;
    }
    for (std::size_t k = 0; k < nbin; ++k) {
        r.psd_z[k] /= r.segments;
        r.psd_q[k] /= r.segments;
    }
    r.mean_z2 = sum_z2 / static_cast<double>(count_z2);

    // overall fit plus trajectory-group scatter for the error bars
    const FitWindow window = locate_peak_window(r.omega_mech, r.psd_z);
    r.mech_fit = fit_lorentzian(r.omega_mech, r.psd_z, window);

    const int n_groups = 8;
    std::vector<double> centers, widths;
    for (int g = 0; g < n_groups; ++g) {
        std::vector<double> psd(nbin, 0.0);
        int segs = 0;
        for (int i = g; i < sim.n_trajectories; i += n_groups) {
            for (std::size_t k = 0; k < nbin; ++k) psd[k] += acc[i].psd_z[k];
            segs += acc[i].segments;
        }
        if (segs == 0) continue;
        for (auto& v : psd) v /= segs;
        const LorentzianFit f = fit_lorentzian(r.omega_mech, psd, window);
        centers.push_back(f.center);
        widths.push_back(f.width);
    }
    auto sem = [](const std::vector<double>& v) {
        if (v.size() < 2) return 0.0;
        double mean = 0.0;
        for (double x : v) mean += x;
        mean /= v.size();
        double var = 0.0;
        for (double x : v) var += (x - mean) * (x - mean);
        var /= (v.size() - 1);
        return std::sqrt(var / v.size());
    };
    r.mech_fit.center_err = sem(centers);
    r.mech_fit.width_err = sem(widths);
    return r;
}

namespace {

struct Response {
    double omega_z, omega_k, kappa, kappa_in, kappa_add, gamma, g;

    Cplx chi_c(double om) const {
        return 1.0 / Cplx(0.5 * kappa, -(om - omega_k));
    }
    Cplx chi_cbar(double om) const { return std::conj(chi_c(-om)); }
    Cplx chi_e(double om) const {
        const Cplx i(0.0, 1.0);
        const Cplx inv = Cplx(omega_z * omega_z - om * om, -gamma * om) -
                         i * g * g * (chi_c(om) - chi_cbar(om));
        return 1.0 / inv;
    }
};

}  // namespace

std::vector<double> analytic_output_psd(const SimConfig& sim,
                                        const std::vector<double>& omega_env) {
    const ModelRates rates = model_rates(sim);
    const Response r{sim.omega_z, sim.omega_k, rates.kappa, sim.kappa_in,
                     sim.kappa_add, sim.gamma, sim.g};
    const double w_in = rates.n_in + 0.5;
    const double s_f = rates.s_force;
    const Cplx em(std::cos(sim.theta), -std::sin(sim.theta));
    const Cplx ep = std::conj(em);
    const double rt_in = std::sqrt(sim.kappa_in);
    const double rt_add = std::sqrt(sim.kappa_add);
    const Cplx i(0.0, 1.0);

    std::vector<double> out(omega_env.size());
    for (std::size_t idx = 0; idx < omega_env.size(); ++idx) {
        const double w = omega_env[idx];
        double total = 0.0;

        // upper group: a_out at lab frequency omega_in + w
        {
            const double om = rates.omega_in + w;
            const Cplx d0 = 1.0 - sim.kappa_in * r.chi_c(om);
            const Cplx m0 = -i * sim.g * rt_in * r.chi_c(om);
            const Cplx ce = r.chi_e(om);
            const Cplx b1 = sim.g * rt_in * r.chi_c(om);
            const Cplx b2 = sim.g * rt_in * r.chi_cbar(om);
            total += std::norm(em * (d0 + m0 * ce * b1)) * w_in;
            total += std::norm(em * (m0 * ce * b2)) * w_in;
            total += std::norm(em * (m0 * ce)) * s_f;
            if (sim.kappa_add > 0.0) {
                const Cplx da = -rt_in * rt_add * r.chi_c(om);
                const Cplx b1a = sim.g * rt_add * r.chi_c(om);
                const Cplx b2a = sim.g * rt_add * r.chi_cbar(om);
                total += std::norm(em * (da + m0 * ce * b1a)) * w_in;
                total += std::norm(em * (m0 * ce * b2a)) * w_in;
            }
        }
        // mirror group: conj(a_out) at lab frequency omega_in - w
        {
            const double om = rates.omega_in - w;
            const double omc = -om;  // frequency of the motional content
            const Cplx d0c = std::conj(1.0 - sim.kappa_in * r.chi_c(om));
            const Cplx m0c = std::conj(-i * sim.g * rt_in * r.chi_c(om));
            const Cplx ce = r.chi_e(omc);
            const Cplx b1 = sim.g * rt_in * r.chi_c(omc);
            const Cplx b2 = sim.g * rt_in * r.chi_cbar(omc);
            total += std::norm(ep * (d0c + m0c * ce * b2)) * w_in;
            total += std::norm(ep * (m0c * ce * b1)) * w_in;
            total += std::norm(ep * (m0c * ce)) * s_f;
            if (sim.kappa_add > 0.0) {
                const Cplx dac = std::conj(-rt_in * rt_add * r.chi_c(om));
                const Cplx b1a = sim.g * rt_add * r.chi_c(omc);
                const Cplx b2a = sim.g * rt_add * r.chi_cbar(omc);
                total += std::norm(ep * (dac + m0c * ce * b2a)) * w_in;
                total += std::norm(ep * (m0c * ce * b1a)) * w_in;
            }
        }
        out[idx] = 0.5 * total;
    }
    return out;
}

AnalyticPsd analytic_output_psd(const SimConfig& sim) {
    AnalyticPsd a;
    a.omega = welch_frequencies(sim.dt, sim.segment);
    a.psd = analytic_output_psd(sim, a.omega);
    return a;
}

namespace {
std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}
}  // namespace

std::string ComparisonReport::to_json() const {
    std::string s = "{\n";
    s += "  \"pass\": " + std::string(pass ? "true" : "false") + ",\n";
    s += "  \"ratio_tol\": " + fmt_double(ratio_tol) + ",\n";
    s += "  \"band_lo\": " + fmt_double(band_lo) + ",\n";
    s += "  \"band_hi\": " + fmt_double(band_hi) + ",\n";
    s += "  \"mean_ratio\": " + fmt_double(mean_ratio) + ",\n";
    s += "  \"rms_rel_dev\": " + fmt_double(rms_rel_dev) + ",\n";
    s += "  \"max_rel_dev\": " + fmt_double(max_rel_dev) + ",\n";
    s += "  \"center_analytic\": " + fmt_double(center_analytic) + ",\n";
    s += "  \"center_sim\": " + fmt_double(center_sim) + ",\n";
    s += "  \"center_sigma\": " + fmt_double(center_sigma) + ",\n";
    s += "  \"width_analytic\": " + fmt_double(width_analytic) + ",\n";
    s += "  \"width_sim\": " + fmt_double(width_sim) + ",\n";
    s += "  \"width_sigma\": " + fmt_double(width_sigma) + "\n";
    s += "}\n";
    return s;
}

ComparisonReport compare_to_analytic(const SimResult& result, const SimConfig& sim,
                                     const AnalyticPsd& analytic, double ratio_tol) {
    if (analytic.omega.size() != result.omega_out.size())
        throw GridMismatch("analytic grid size differs from simulated grid");
    for (std::size_t k = 0; k < analytic.omega.size(); ++k)
        if (analytic.omega[k] != result.omega_out[k])
            throw GridMismatch("analytic grid differs from simulated grid");

    ComparisonReport rep;
    rep.ratio_tol = ratio_tol;

    // Half-power band of the mechanical feature measured above the readout
    // floor (median of the analytic curve).
    const auto& sa = analytic.psd;
    std::vector<double> sorted(sa.begin() + 2, sa.end() - 1);
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    const double floor_level = sorted[sorted.size() / 2];
    std::size_t pk = 2;
    for (std::size_t k = 2; k + 1 < sa.size(); ++k)
        if (sa[k] > sa[pk]) pk = k;
    const bool has_feature = sa[pk] > 1.10 * floor_level;
    const double half = floor_level + 0.5 * (sa[pk] - floor_level);
    std::size_t lo = has_feature ? pk : 2;
    std::size_t hi = has_feature ? pk : sa.size() - 2;
    while (lo > 2 && sa[lo - 1] >= half) --lo;
    while (hi + 2 < sa.size() && sa[hi + 1] >= half) ++hi;
    rep.band_lo = result.omega_out[lo];
    rep.band_hi = result.omega_out[hi];

    double sum_ratio = 0.0, sum_sq = 0.0, max_dev = 0.0;
    const std::size_t n = hi - lo + 1;
    for (std::size_t k = lo; k <= hi; ++k) {
        const double ratio = result.psd_q[k] / sa[k];
        sum_ratio += ratio;
        sum_sq += (ratio - 1.0) * (ratio - 1.0);
        max_dev = std::max(max_dev, std::fabs(ratio - 1.0));
    }
    rep.mean_ratio = sum_ratio / n;
    rep.rms_rel_dev = std::sqrt(sum_sq / n);
    rep.max_rel_dev = max_dev;

    // fitted mechanical line against the backaction shift from the response
    // module, evaluated with unit constants
    CavityConfig cav;
    cav.omega_k = sim.omega_k;
    cav.q_ext = sim.omega_k / (2.0 * sim.kappa_in);
    cav.q_int = sim.kappa_add > 0.0 ? sim.omega_k / (2.0 * sim.kappa_add) : 1e300;
    cav.omega_in = sim.resolved_omega_in();
    cav.theta_lo = sim.theta;
    const BackactionShift shift =
        dynamical_backaction(sim.omega_z, cav, sim.g, 1.0, PhysConstants::natural());
    rep.center_analytic = sim.omega_z + shift.omega_ba;
    rep.width_analytic = sim.gamma + shift.gamma_ba;
    rep.center_sim = result.mech_fit.center;
    rep.width_sim = result.mech_fit.width;
    rep.center_sigma = result.mech_fit.center_err;
    rep.width_sigma = result.mech_fit.width_err;

    const bool ratio_ok =
        std::fabs(rep.mean_ratio - 1.0) <= ratio_tol && rep.rms_rel_dev <= ratio_tol;
    const bool center_ok =
        std::fabs(rep.center_sim - rep.center_analytic) <= 3.0 * rep.center_sigma;
    const bool width_ok =
        std::fabs(rep.width_sim - rep.width_analytic) <= 3.0 * rep.width_sigma;
    rep.pass = ratio_ok && center_ok && width_ok;
    return rep;
}

ComparisonReport compare_to_analytic(const SimResult& result, const SimConfig& sim,
                                     double ratio_tol) {
    return compare_to_analytic(result, sim, analytic_output_psd(sim), ratio_tol);
}

}  // namespace eforce
