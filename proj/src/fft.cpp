#include "vvlab/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>

namespace vvlab::fft {

namespace {

// FFTW plan creation is not thread-safe; execution via the new-array
// interface is. Plans are cached per transform size and created with
// FFTW_UNALIGNED so they accept arbitrary caller buffers.
struct PlanPair {
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
  double* rbuf = nullptr;
  fftw_complex* cbuf = nullptr;
};

std::mutex g_mutex;
std::map<std::size_t, PlanPair>& cache() {
  static std::map<std::size_t, PlanPair> c;
  return c;
}

const PlanPair& plans_for(std::size_t n) {
  std::lock_guard<std::mutex> lock(g_mutex);
  auto& c = cache();
  auto it = c.find(n);
  if (it != c.end()) return it->second;
  PlanPair p;
  p.rbuf = fftw_alloc_real(n);
  p.cbuf = fftw_alloc_complex(spectrum_size(n));
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  p.r2c = fftw_plan_dft_r2c_1d(static_cast<int>(n), p.rbuf, p.cbuf, flags);
  p.c2r = fftw_plan_dft_c2r_1d(static_cast<int>(n), p.cbuf, p.rbuf, flags);
  if (!p.r2c || !p.c2r) throw std::runtime_error("fft: plan creation failed");
  return c.emplace(n, p).first->second;
}

}  // namespace

void rfft(const double* in, std::size_t n, std::complex<double>* out) {
  const PlanPair& p = plans_for(n);
  // r2c preserves its input; the const_cast is required by the FFTW API only.
  fftw_execute_dft_r2c(p.r2c, const_cast<double*>(in),
                       reinterpret_cast<fftw_complex*>(out));
}

void irfft(const std::complex<double>* in, std::size_t n, double* out) {
  const PlanPair& p = plans_for(n);
  // The 1D c2r transform destroys its input, so work on a copy.
  std::vector<std::complex<double>> tmp(in, in + spectrum_size(n));
  fftw_execute_dft_c2r(p.c2r, reinterpret_cast<fftw_complex*>(tmp.data()), out);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) out[i] *= scale;
}

std::vector<std::complex<double>> rfft(const std::vector<double>& f) {
  std::vector<std::complex<double>> spec(spectrum_size(f.size()));
  rfft(f.data(), f.size(), spec.data());
  return spec;
}

std::vector<double> irfft(const std::vector<std::complex<double>>& spec, std::size_t n) {
  if (spec.size() != spectrum_size(n)) throw std::invalid_argument("irfft: size mismatch");
  std::vector<double> f(n);
  irfft(spec.data(), n, f.data());
  return f;
}

}  // namespace vvlab::fft
