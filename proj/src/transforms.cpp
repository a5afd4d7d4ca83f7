#include <cmath>
#include <numbers>

#include "pixhash/transforms.hpp"

namespace pixhash {

DctPlan::DctPlan(int n) : n_(n), basis_(static_cast<std::size_t>(n) * n) {
  if (n < 2) throw Error("dct: size must be >= 2");
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  const double sqrt_2_n = std::sqrt(2.0 / n);
  for (int k = 0; k < n; ++k) {
    const double alpha = (k == 0) ? inv_sqrt_n : sqrt_2_n;
    for (int j = 0; j < n; ++j) {
      basis_[static_cast<std::size_t>(k) * n + j] =
          alpha * std::cos(std::numbers::pi * (2.0 * j + 1.0) * k / (2.0 * n));
    }
  }
}

namespace {

// out = a * b for square row-major matrices; bt selects b transposed.
Mat matmul(const std::vector<double>& a, const std::vector<double>& b, int n, bool a_t,
           bool b_t) {
  Mat out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k) {
        const double av = a_t ? a[static_cast<std::size_t>(k) * n + i]
                              : a[static_cast<std::size_t>(i) * n + k];
        const double bv = b_t ? b[static_cast<std::size_t>(j) * n + k]
                              : b[static_cast<std::size_t>(k) * n + j];
        acc += av * bv;
      }
      out.at(i, j) = acc;
    }
  }
  return out;
}

}  // namespace

Mat DctPlan::dct2(const Mat& m) const {
  if (m.n != n_) throw Error("dct2: matrix size does not match plan");
  // B * M * B^T
  const Mat t = matmul(basis_, m.v, n_, false, false);
  return matmul(t.v, basis_, n_, false, true);
}

Mat DctPlan::idct2(const Mat& m) const {
  if (m.n != n_) throw Error("idct2: matrix size does not match plan");
  // B^T * M * B
  const Mat t = matmul(basis_, m.v, n_, true, false);
  return matmul(t.v, basis_, n_, false, false);
}

int log2_exact(int value) {
  if (value < 1 || (value & (value - 1)) != 0) {
    throw NonPow2Input("size " + std::to_string(value) + " is not a power of two");
  }
  int l = 0;
  while ((1 << l) < value) ++l;
  return l;
}

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// One analysis step on the top-left `size` block: pairwise averages/differences
// along rows then columns, each scaled by 1/sqrt(2).
void haar_step_forward(Mat& m, int size) {
  const int half = size / 2;
  std::vector<double> tmp(static_cast<std::size_t>(size));
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < half; ++c) {
      const double a = m.at(r, 2 * c);
      const double b = m.at(r, 2 * c + 1);
      tmp[static_cast<std::size_t>(c)] = (a + b) * kInvSqrt2;
      tmp[static_cast<std::size_t>(half + c)] = (a - b) * kInvSqrt2;
    }
    for (int c = 0; c < size; ++c) m.at(r, c) = tmp[static_cast<std::size_t>(c)];
  }
  for (int c = 0; c < size; ++c) {
    for (int r = 0; r < half; ++r) {
      const double a = m.at(2 * r, c);
      const double b = m.at(2 * r + 1, c);
      tmp[static_cast<std::size_t>(r)] = (a + b) * kInvSqrt2;
      tmp[static_cast<std::size_t>(half + r)] = (a - b) * kInvSqrt2;
    }
    for (int r = 0; r < size; ++r) m.at(r, c) = tmp[static_cast<std::size_t>(r)];
  }
}

void haar_step_inverse(Mat& m, int size) {
  const int half = size / 2;
  std::vector<double> tmp(static_cast<std::size_t>(size));
  for (int c = 0; c < size; ++c) {
    for (int r = 0; r < half; ++r) {
      const double s = m.at(r, c);
      const double d = m.at(half + r, c);
      tmp[static_cast<std::size_t>(2 * r)] = (s + d) * kInvSqrt2;
      tmp[static_cast<std::size_t>(2 * r + 1)] = (s - d) * kInvSqrt2;
    }
    for (int r = 0; r < size; ++r) m.at(r, c) = tmp[static_cast<std::size_t>(r)];
  }
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < half; ++c) {
      const double s = m.at(r, c);
      const double d = m.at(r, half + c);
      tmp[static_cast<std::size_t>(2 * c)] = (s + d) * kInvSqrt2;
      tmp[static_cast<std::size_t>(2 * c + 1)] = (s - d) * kInvSqrt2;
    }
    for (int c = 0; c < size; ++c) m.at(r, c) = tmp[static_cast<std::size_t>(c)];
  }
}

}  // namespace

Mat haar_forward(const Mat& m, int levels) {
  const int max_levels = log2_exact(m.n);
  if (levels < 0 || levels > max_levels) {
    throw Error("haar: levels must be in [0, log2(size)]");
  }
  Mat out = m;
  int size = m.n;
  for (int l = 0; l < levels; ++l) {
    haar_step_forward(out, size);
    size /= 2;
  }
  return out;
}

Mat haar_inverse(const Mat& coeffs, int levels) {
  const int max_levels = log2_exact(coeffs.n);
  if (levels < 0 || levels > max_levels) {
    throw Error("haar: levels must be in [0, log2(size)]");
  }
  Mat out = coeffs;
  int size = coeffs.n >> levels;
  for (int l = 0; l < levels; ++l) {
    size *= 2;
    haar_step_inverse(out, size);
  }
  return out;
}

}  // namespace pixhash
