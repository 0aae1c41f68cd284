#pragma once

#include <complex>
#include <vector>

namespace eforce {

/// In-place radix-2 FFT (size must be a power of two).
void fft_radix2(std::vector<std::complex<double>>& data, bool inverse = false);

/// Two-sided PSD samples on the non-negative frequency half.
/// Convention: \int S(omega) dOmega/(2 pi) = variance, so white noise of
/// per-sample variance v sampled at spacing dt sits at the flat level v*dt.
struct WelchResult {
    std::vector<double> omega;  // rad/s
    std::vector<double> psd;
    int segments = 0;
};

/// Welch estimate with a Hann window and 50% overlap; segment must be a
/// power of two.
WelchResult welch_psd(const std::vector<double>& x, double dt, int segment);

/// Accumulating variant used across trajectories: adds this signal's
/// segment periodograms into acc (resized on first use) and returns the
/// number of segments added.
int welch_accumulate(const std::vector<double>& x, double dt, int segment,
                     std::vector<double>& acc);

std::vector<double> welch_frequencies(double dt, int segment);  // rad/s

}  // namespace eforce
