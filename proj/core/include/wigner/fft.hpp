#pragma once

#include <complex>
#include <memory>
#include <vector>

namespace wigner {

using cdouble = std::complex<double>;

// Transform conventions used throughout:
//
//   analysis   (p -> xi):  what(xi) = dp * sum_j w(p_j) exp(+i xi p_j / hbar)
//   synthesis  (xi -> p):  w(p_j)   = (1/(n dp)) sum_l what(xi_l) exp(-i xi_l p_j / hbar)
//   xi_l = bin_frequency(l) * dxi,  dxi = 2 pi hbar / (n dp)
//
// The x-direction uses the same pair with hbar = 1 and k = 2 pi l / (n dx).
// Diagonal multipliers are applied between analysis and synthesis; the grid
// offset phases cancel bin-wise and are omitted.

// Maps an FFT bin index to its signed frequency index: 0..n/2-1, -n/2..-1.
inline int bin_frequency(int bin, int n) { return bin < n / 2 ? bin : bin - n; }

// One-dimensional complex FFT of fixed length on an owned buffer.
class Cfft {
 public:
  explicit Cfft(int n);
  ~Cfft();
  Cfft(const Cfft&) = delete;
  Cfft& operator=(const Cfft&) = delete;

  int size() const { return n_; }
  cdouble* data() { return buf_; }

  // In-place unnormalized transforms: forward uses exp(-2 pi i jk/n),
  // backward uses exp(+2 pi i jk/n).
  void forward();
  void backward();

 private:
  int n_;
  cdouble* buf_;
  void* plan_fwd_;
  void* plan_bwd_;
};

// Batched strided complex FFTs over a caller-owned n_x * n_p row-major slab.
// "Rows" run along p (contiguous), "columns" along x (stride n_p).
class SlabFft {
 public:
  SlabFft(int n_x, int n_p);
  ~SlabFft();
  SlabFft(const SlabFft&) = delete;
  SlabFft& operator=(const SlabFft&) = delete;

  cdouble* slab() { return slab_; }
  const cdouble* slab() const { return slab_; }
  int n_x() const { return nx_; }
  int n_p() const { return np_; }

  void rows_forward();
  void rows_backward();
  void cols_forward();
  void cols_backward();

 private:
  int nx_, np_;
  cdouble* slab_;
  void* plan_rows_fwd_;
  void* plan_rows_bwd_;
  void* plan_cols_fwd_;
  void* plan_cols_bwd_;
};

// Discrete Wigner transform on symmetric centered grids:
//   out_j = (dxi / (2 pi hbar)) sum_l in_l exp(-i xi_l p_j / hbar)
// with xi_l = (l - n/2) dxi, p_j = (j - n/2) dp and dp dxi = 2 pi hbar / n.
std::vector<cdouble> centered_wigner_transform(const std::vector<cdouble>& in,
                                               double dxi, double hbar);

}  // namespace wigner
