#include "wigner/fft.hpp"

#include <fftw3.h>

#include <stdexcept>

namespace wigner {

namespace {

fftw_complex* as_fftw(cdouble* p) { return reinterpret_cast<fftw_complex*>(p); }

void check_length(int n) {
  if (n < 2 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("FFT length must be a power of two, got " + std::to_string(n));
  }
}

}  // namespace

Cfft::Cfft(int n) : n_(n) {
  check_length(n);
  buf_ = static_cast<cdouble*>(fftw_malloc(sizeof(cdouble) * n));
  if (!buf_) throw std::bad_alloc();
  // FFTW_ESTIMATE keeps plan selection deterministic across runs.
  plan_fwd_ = fftw_plan_dft_1d(n, as_fftw(buf_), as_fftw(buf_), FFTW_FORWARD, FFTW_ESTIMATE);
  plan_bwd_ = fftw_plan_dft_1d(n, as_fftw(buf_), as_fftw(buf_), FFTW_BACKWARD, FFTW_ESTIMATE);
}

Cfft::~Cfft() {
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
  fftw_free(buf_);
}

void Cfft::forward() { fftw_execute(static_cast<fftw_plan>(plan_fwd_)); }
void Cfft::backward() { fftw_execute(static_cast<fftw_plan>(plan_bwd_)); }

SlabFft::SlabFft(int n_x, int n_p) : nx_(n_x), np_(n_p) {
  check_length(n_x);
  check_length(n_p);
  slab_ = static_cast<cdouble*>(fftw_malloc(sizeof(cdouble) * n_x * n_p));
  if (!slab_) throw std::bad_alloc();

  auto plan_many = [&](int n, int howmany, int stride, int dist, int sign) {
    return fftw_plan_many_dft(1, &n, howmany, as_fftw(slab_), nullptr, stride, dist,
                              as_fftw(slab_), nullptr, stride, dist, sign, FFTW_ESTIMATE);
  };
  plan_rows_fwd_ = plan_many(np_, nx_, 1, np_, FFTW_FORWARD);
  plan_rows_bwd_ = plan_many(np_, nx_, 1, np_, FFTW_BACKWARD);
  plan_cols_fwd_ = plan_many(nx_, np_, np_, 1, FFTW_FORWARD);
  plan_cols_bwd_ = plan_many(nx_, np_, np_, 1, FFTW_BACKWARD);
}

SlabFft::~SlabFft() {
  fftw_destroy_plan(static_cast<fftw_plan>(plan_rows_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_rows_bwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_cols_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_cols_bwd_));
  fftw_free(slab_);
}

void SlabFft::rows_forward() { fftw_execute(static_cast<fftw_plan>(plan_rows_fwd_)); }
void SlabFft::rows_backward() { fftw_execute(static_cast<fftw_plan>(plan_rows_bwd_)); }
void SlabFft::cols_forward() { fftw_execute(static_cast<fftw_plan>(plan_cols_fwd_)); }
void SlabFft::cols_backward() { fftw_execute(static_cast<fftw_plan>(plan_cols_bwd_)); }

std::vector<cdouble> centered_wigner_transform(const std::vector<cdouble>& in,
                                               double dxi, double hbar) {
  const int n = static_cast<int>(in.size());
  check_length(n);
  Cfft fft(n);
  // exp(-i xi_l p_j / hbar) = (-1)^l (-1)^j (-1)^{n/2} exp(-2 pi i l j / n)
  for (int l = 0; l < n; ++l) {
    fft.data()[l] = (l % 2 == 0) ? in[l] : -in[l];
  }
  fft.forward();
  const double sign_n = ((n / 2) % 2 == 0) ? 1.0 : -1.0;
  const double scale = dxi / (2.0 * M_PI * hbar);
  std::vector<cdouble> out(n);
  for (int j = 0; j < n; ++j) {
    const double s = (j % 2 == 0) ? 1.0 : -1.0;
    out[j] = fft.data()[j] * (scale * s * sign_n);
  }
  return out;
}

}  // namespace wigner
