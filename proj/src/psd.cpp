#include "eforce/psd.hpp"

#include <cmath>

#include "eforce/constants.hpp"
#include "eforce/errors.hpp"

namespace eforce {

namespace {
bool power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }
}  // namespace

void fft_radix2(std::vector<std::complex<double>>& data, bool inverse) {
    const std::size_t n = data.size();
    if (!power_of_two(n)) throw UsageError("fft_radix2: size must be a power of two");

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 1.0 : -1.0) * two_pi / static_cast<double>(len);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = data[i + k];
                const std::complex<double> v = data[i + k + len / 2] * w;
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (inverse)
        for (auto& x : data) x /= static_cast<double>(n);
}

std::vector<double> welch_frequencies(double dt, int segment) {
    std::vector<double> omega(segment / 2 + 1);
    for (int k = 0; k <= segment / 2; ++k)
        omega[k] = two_pi * k / (segment * dt);
    return omega;
}

int welch_accumulate(const std::vector<double>& x, double dt, int segment,
                     std::vector<double>& acc) {
    if (!power_of_two(static_cast<std::size_t>(segment)) || segment < 8)
        throw UsageError("welch: segment must be a power of two >= 8");
    if (static_cast<int>(x.size()) < segment) return 0;
    if (acc.empty()) acc.assign(segment / 2 + 1, 0.0);

    // Hann window and its mean-square normalization.
    std::vector<double> window(segment);
    double wss = 0.0;
    for (int i = 0; i < segment; ++i) {
        window[i] = 0.5 * (1.0 - std::cos(two_pi * i / segment));
        wss += window[i] * window[i];
    }
    const double norm = dt / wss;  // two-sided PSD per segment

    int added = 0;
    std::vector<std::complex<double>> buf(segment);
    const int hop = segment / 2;
    for (std::size_t start = 0; start + segment <= x.size(); start += hop) {
        for (int i = 0; i < segment; ++i)
            buf[i] = std::complex<double>(x[start + i] * window[i], 0.0);
        fft_radix2(buf);
        for (int k = 0; k <= segment / 2; ++k) acc[k] += std::norm(buf[k]) * norm;
        ++added;
    }
    return added;
}

WelchResult welch_psd(const std::vector<double>& x, double dt, int segment) {
    WelchResult r;
    r.omega = welch_frequencies(dt, segment);
    std::vector<double> acc;
    r.segments = welch_accumulate(x, dt, segment, acc);
    if (r.segments == 0) throw UsageError("welch: signal shorter than one segment");
    r.psd = std::move(acc);
    for (auto& v : r.psd) v /= r.segments;
    return r;
}

}  // namespace eforce
