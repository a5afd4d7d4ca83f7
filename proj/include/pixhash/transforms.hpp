#pragma once

#include <vector>

#include "pixhash/errors.hpp"

namespace pixhash {

/// Dense square matrix of doubles, row-major.
struct Mat {
  int n = 0;
  std::vector<double> v;

  Mat() = default;
  explicit Mat(int size, double fill = 0.0)
      : n(size), v(static_cast<std::size_t>(size) * size, fill) {}

  double& at(int r, int c) { return v[static_cast<std::size_t>(r) * n + c]; }
  double at(int r, int c) const { return v[static_cast<std::size_t>(r) * n + c]; }
};

/// Orthonormal DCT-II basis for one size, plus the 2-D transform built from it.
/// Basis rows satisfy B B^T = I, so the DC coefficient of a constant matrix of
/// value c is n * c.
class DctPlan {
 public:
  explicit DctPlan(int n);  // n >= 2

  int size() const { return n_; }
  /// basis()[k*n + j] = alpha_k * cos(pi*(2j+1)*k / (2n))
  const std::vector<double>& basis() const { return basis_; }

  Mat dct2(const Mat& m) const;
  Mat idct2(const Mat& m) const;

 private:
  int n_;
  std::vector<double> basis_;
};

/// Forward orthonormal Haar analysis, `levels` deep, on a 2^k x 2^k matrix.
/// Output uses the nested layout: the level-L approximation band occupies the
/// top-left (size/2^L)^2 block, detail bands fill the remainder.
Mat haar_forward(const Mat& m, int levels);

/// Inverse of haar_forward.
Mat haar_inverse(const Mat& coeffs, int levels);

/// log2 for exact powers of two; throws NonPow2Input otherwise.
int log2_exact(int value);

}  // namespace pixhash
