#pragma once

#include <fftw3.h>

#include <complex>
#include <cstring>
#include <vector>

#include "qdl/grid.hpp"

namespace qdl {

/// RAII wrapper around a pair of FFTW complex 2D plans for a fixed grid
/// shape. Transforms run on an internal aligned buffer; the inverse is
/// normalized by 1/(nx*ny). Plans use FFTW_ESTIMATE so planning is cheap and
/// run-to-run deterministic.
class Fft2D {
 public:
  Fft2D(int nx, int ny) : nx_(nx), ny_(ny), n_(nx * ny) {
    buf_ = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n_));
    fwd_ = fftw_plan_dft_2d(nx_, ny_, buf_, buf_, FFTW_FORWARD, FFTW_ESTIMATE);
    inv_ = fftw_plan_dft_2d(nx_, ny_, buf_, buf_, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  explicit Fft2D(const Grid2D& g) : Fft2D(g.nx, g.ny) {}
  ~Fft2D() {
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(inv_);
    fftw_free(buf_);
  }
  Fft2D(const Fft2D&) = delete;
  Fft2D& operator=(const Fft2D&) = delete;

  int nx() const { return nx_; }
  int ny() const { return ny_; }

  void forward(std::vector<complexd>& io) {
    std::memcpy(buf_, io.data(), sizeof(complexd) * n_);
    fftw_execute(fwd_);
    std::memcpy(io.data(), buf_, sizeof(complexd) * n_);
  }

  void inverse(std::vector<complexd>& io) {
    std::memcpy(buf_, io.data(), sizeof(complexd) * n_);
    fftw_execute(inv_);
    const double scale = 1.0 / n_;
    auto* out = reinterpret_cast<complexd*>(buf_);
    for (int i = 0; i < n_; ++i) io[i] = out[i] * scale;
  }

 private:
  int nx_, ny_, n_;
  fftw_complex* buf_;
  fftw_plan fwd_, inv_;
};

/// Squared wavenumbers kx^2 + ky^2 on the FFT frequency grid, row-major.
/// The periodic extension has period n*dx per axis (the sampled interval
/// plus one spacing), the usual convention for endpoint-inclusive grids.
inline std::vector<double> wavenumbers_squared(const Grid2D& g) {
  const double two_pi = 6.283185307179586476925287;
  auto freqs = [&](int n, double d) {
    std::vector<double> k(n);
    const double dk = two_pi / (n * d);
    for (int i = 0; i < n; ++i) k[i] = dk * (i <= n / 2 ? i : i - n);
    return k;
  };
  const std::vector<double> kx = freqs(g.nx, g.dx());
  const std::vector<double> ky = freqs(g.ny, g.dy());
  std::vector<double> k2(g.size());
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j)
      k2[g.index(i, j)] = kx[i] * kx[i] + ky[j] * ky[j];
  return k2;
}

/// out = Laplacian(f) computed spectrally: ifft(-k2 * fft(f)).
inline void laplacian(Fft2D& fft, const std::vector<double>& k2,
                      const std::vector<complexd>& f,
                      std::vector<complexd>& out) {
  out = f;
  fft.forward(out);
  for (size_t i = 0; i < out.size(); ++i) out[i] *= -k2[i];
  fft.inverse(out);
}

}  // namespace qdl
