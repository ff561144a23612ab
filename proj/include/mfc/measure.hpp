#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mfc {

// Empirical measure (1/M) sum of Dirac masses. Immutable after construction;
// the mean and second moment are cached so cost evaluations stay O(1) per call.
class ParticleCloud {
 public:
  ParticleCloud(int dim, std::vector<double> points);

  static ParticleCloud single(std::vector<double> x);
  static ParticleCloud constant(int count, const std::vector<double>& x);
  static ParticleCloud gaussian(int count, int dim, uint64_t seed, double mean = 0.0, double sd = 1.0);

  int dim() const { return dim_; }
  int size() const { return count_; }
  const double* point(int j) const { return pts_.data() + std::size_t(j) * dim_; }
  const std::vector<double>& points() const { return pts_; }
  const std::vector<double>& mean() const { return mean_; }
  double second_moment() const { return second_moment_; }  // (1/M) sum |x_j|^2

 private:
  int dim_;
  int count_;
  std::vector<double> pts_;
  std::vector<double> mean_;
  double second_moment_;
};

std::vector<double> mean(const ParticleCloud& cloud);
double norm2(const ParticleCloud& cloud);  // sqrt((1/M) sum |x_j|^2)

struct W2Options {
  int assignment_cutoff = 512;  // exact assignment is cubic; beyond this use sliced
  int sliced_directions = 64;
  uint64_t direction_seed = 0x5EED;
};

struct W2Result {
  double value = 0.0;
  bool exact = true;  // false on the sliced approximation path
};

// 2-Wasserstein distance between empirical measures. d=1 is the exact sorted
// coupling (quantile coupling for unequal counts); d>1 with equal counts up to
// the cutoff is the exact optimal assignment; everything else is sliced.
W2Result wasserstein2_ex(const ParticleCloud& a, const ParticleCloud& b, const W2Options& opts = {});
double wasserstein2(const ParticleCloud& a, const ParticleCloud& b, const W2Options& opts = {});

// measure-derivative field x' -> du(mu)(x'), supplied by the caller
using MeasureDerivative =
    std::function<void(const ParticleCloud& cloud, const double* query, double* out)>;

// per-atom gradients g_i = (1/M) du(cloud)(x_i) of the empirical projection
std::vector<std::vector<double>> empirical_projection_gradient(const MeasureDerivative& du,
                                                               const ParticleCloud& cloud);

// root-scale sampling rate N^{-1/(d+4)}; any valid rate sequence must also
// dominate N^{-1/2}, which this instance does for all d >= 1
double chaos_rate(long long n_samples, int dim);

// exact 1-d W2^2 between two sorted samples of equal size
double w2sq_sorted_equal(const std::vector<double>& a, const std::vector<double>& b);
// exact 1-d W2^2 between empirical measures of arbitrary sizes (quantile coupling)
double w2sq_quantile_1d(std::vector<double> a, std::vector<double> b);

// min-cost assignment value for a square cost matrix (row-major n x n)
double assignment_cost(const std::vector<double>& cost, int n);

// CSV interchange: one row per particle, one column per coordinate
void write_cloud_csv(const ParticleCloud& cloud, const std::string& path);
ParticleCloud read_cloud_csv(const std::string& path);

}  // namespace mfc
