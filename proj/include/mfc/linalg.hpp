#pragma once

#include <cstddef>
#include <vector>

namespace mfc::lin {

// Order-fixed pairwise summation. Deterministic for a given array regardless of
// thread count (reductions are done after parallel fills) and more accurate
// than a running sum.
double pairwise_sum(const double* x, std::size_t n);
inline double pairwise_sum(const std::vector<double>& x) { return pairwise_sum(x.data(), x.size()); }

double dot(const double* a, const double* b, int n);
double norm2sq(const double* a, int n);

// y = A x and y = A^T x for row-major A (rows x cols)
void matvec(const double* A, const double* x, double* y, int rows, int cols);
void matvec_t(const double* A, const double* x, double* y, int rows, int cols);

// Cholesky solve of the SPD system A X = B in place; A is n x n row-major,
// B is n x nrhs. Returns false when a pivot falls below tol (rank deficient).
bool solve_spd(std::vector<double>& A, std::vector<double>& B, int n, int nrhs, double tol = 1e-13);

}  // namespace mfc::lin
