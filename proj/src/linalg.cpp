#include "mfc/linalg.hpp"

#include <cmath>

namespace mfc::lin {

double pairwise_sum(const double* x, std::size_t n) {
  if (n <= 16) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

double dot(const double* a, const double* b, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double norm2sq(const double* a, int n) { return dot(a, a, n); }

void matvec(const double* A, const double* x, double* y, int rows, int cols) {
  for (int r = 0; r < rows; ++r) y[r] = dot(A + std::size_t(r) * cols, x, cols);
}

void matvec_t(const double* A, const double* x, double* y, int rows, int cols) {
  for (int c = 0; c < cols; ++c) y[c] = 0.0;
  for (int r = 0; r < rows; ++r) {
    const double xr = x[r];
    const double* row = A + std::size_t(r) * cols;
    for (int c = 0; c < cols; ++c) y[c] += row[c] * xr;
  }
}

bool solve_spd(std::vector<double>& A, std::vector<double>& B, int n, int nrhs, double tol) {
  // in-place lower Cholesky
  for (int j = 0; j < n; ++j) {
    double d = A[std::size_t(j) * n + j];
    for (int k = 0; k < j; ++k) d -= A[std::size_t(j) * n + k] * A[std::size_t(j) * n + k];
    if (!(d > tol)) return false;
    const double ljj = std::sqrt(d);
    A[std::size_t(j) * n + j] = ljj;
    for (int i = j + 1; i < n; ++i) {
      double s = A[std::size_t(i) * n + j];
      for (int k = 0; k < j; ++k) s -= A[std::size_t(i) * n + k] * A[std::size_t(j) * n + k];
      A[std::size_t(i) * n + j] = s / ljj;
    }
  }
  // forward then backward substitution per right-hand side
  for (int r = 0; r < nrhs; ++r) {
    for (int i = 0; i < n; ++i) {
      double s = B[std::size_t(i) * nrhs + r];
      for (int k = 0; k < i; ++k) s -= A[std::size_t(i) * n + k] * B[std::size_t(k) * nrhs + r];
      B[std::size_t(i) * nrhs + r] = s / A[std::size_t(i) * n + i];
    }
    for (int i = n - 1; i >= 0; --i) {
      double s = B[std::size_t(i) * nrhs + r];
      for (int k = i + 1; k < n; ++k) s -= A[std::size_t(k) * n + i] * B[std::size_t(k) * nrhs + r];
      B[std::size_t(i) * nrhs + r] = s / A[std::size_t(i) * n + i];
    }
  }
  return true;
}

}  // namespace mfc::lin
