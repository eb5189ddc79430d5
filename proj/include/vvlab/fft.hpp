#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace vvlab::fft {

inline std::size_t spectrum_size(std::size_t n) { return n / 2 + 1; }

/// Forward real DFT, out[k] = sum_j in[j] exp(-2*pi*i*j*k/n), k = 0..n/2.
/// Unnormalized; thread-safe.
void rfft(const double* in, std::size_t n, std::complex<double>* out);

/// Inverse of rfft including the 1/n normalization. The input spectrum is
/// left untouched.
void irfft(const std::complex<double>* in, std::size_t n, double* out);

std::vector<std::complex<double>> rfft(const std::vector<double>& f);
std::vector<double> irfft(const std::vector<std::complex<double>>& spec, std::size_t n);

}  // namespace vvlab::fft
