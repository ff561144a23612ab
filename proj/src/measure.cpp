#include "mfc/measure.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mfc/linalg.hpp"
#include "mfc/par.hpp"
#include "mfc/rng.hpp"

namespace mfc {

ParticleCloud::ParticleCloud(int dim, std::vector<double> points)
    : dim_(dim), pts_(std::move(points)) {
  if (dim_ < 1) throw std::invalid_argument("ParticleCloud: dim must be >= 1");
  if (pts_.empty() || pts_.size() % dim_ != 0)
    throw std::invalid_argument("ParticleCloud: point buffer size not a multiple of dim");
  count_ = int(pts_.size() / dim_);
  for (double v : pts_)
    if (!std::isfinite(v)) throw std::invalid_argument("ParticleCloud: non-finite coordinate");
  mean_.assign(dim_, 0.0);
  std::vector<double> col(count_);
  for (int c = 0; c < dim_; ++c) {
    for (int j = 0; j < count_; ++j) col[j] = pts_[std::size_t(j) * dim_ + c];
    mean_[c] = lin::pairwise_sum(col) / count_;
  }
  for (int j = 0; j < count_; ++j) col[j] = lin::norm2sq(point(j), dim_);
  second_moment_ = lin::pairwise_sum(col) / count_;
}

ParticleCloud ParticleCloud::single(std::vector<double> x) {
  return ParticleCloud(int(x.size()), std::move(x));
}

ParticleCloud ParticleCloud::constant(int count, const std::vector<double>& x) {
  const int d = int(x.size());
  std::vector<double> pts(std::size_t(count) * d);
  for (int j = 0; j < count; ++j)
    for (int c = 0; c < d; ++c) pts[std::size_t(j) * d + c] = x[c];
  return ParticleCloud(d, std::move(pts));
}

ParticleCloud ParticleCloud::gaussian(int count, int dim, uint64_t seed, double mean, double sd) {
  const uint64_t key = rng::mix(seed, rng::salt_initial_cloud);
  std::vector<double> pts(std::size_t(count) * dim);
  for (int j = 0; j < count; ++j)
    for (int c = 0; c < dim; ++c)
      pts[std::size_t(j) * dim + c] = mean + sd * rng::normal_at(key, uint64_t(j), uint64_t(c));
  return ParticleCloud(dim, std::move(pts));
}

std::vector<double> mean(const ParticleCloud& cloud) { return cloud.mean(); }

double norm2(const ParticleCloud& cloud) { return std::sqrt(cloud.second_moment()); }

double w2sq_sorted_equal(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("w2sq_sorted_equal: size mismatch");
  std::vector<double> diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = (a[i] - b[i]) * (a[i] - b[i]);
  return lin::pairwise_sum(diff) / double(a.size());
}

double w2sq_quantile_1d(std::vector<double> a, std::vector<double> b) {
  // integrate (F_a^{-1}(u) - F_b^{-1}(u))^2 over the merged quantile breakpoints
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const std::size_t na = a.size(), nb = b.size();
  std::size_t ia = 0, ib = 0;
  double u = 0.0, acc = 0.0;
  while (ia < na && ib < nb) {
    const double ua = double(ia + 1) / na;
    const double ub = double(ib + 1) / nb;
    const double unext = std::min(ua, ub);
    const double gap = a[ia] - b[ib];
    acc += gap * gap * (unext - u);
    u = unext;
    if (ua <= ub) ++ia;
    if (ub <= ua) ++ib;
  }
  return acc;
}

namespace {

std::vector<double> sorted_coords(const ParticleCloud& c) {
  std::vector<double> v(c.points());
  std::stable_sort(v.begin(), v.end());
  return v;
}

double sliced_w2(const ParticleCloud& a, const ParticleCloud& b, const W2Options& opts) {
  const int d = a.dim();
  const uint64_t key = rng::mix(opts.direction_seed, rng::salt_sliced_dirs);
  std::vector<double> acc(opts.sliced_directions);
  par::for_range(opts.sliced_directions, [&](int p) {
    std::vector<double> dir(d);
    double nrm = 0.0;
    for (int c = 0; c < d; ++c) {
      dir[c] = rng::normal_at(key, uint64_t(p), uint64_t(c));
      nrm += dir[c] * dir[c];
    }
    nrm = std::sqrt(nrm);
    for (int c = 0; c < d; ++c) dir[c] /= nrm;
    std::vector<double> pa(a.size()), pb(b.size());
    for (int j = 0; j < a.size(); ++j) pa[j] = lin::dot(a.point(j), dir.data(), d);
    for (int j = 0; j < b.size(); ++j) pb[j] = lin::dot(b.point(j), dir.data(), d);
    acc[p] = w2sq_quantile_1d(std::move(pa), std::move(pb));
  });
  return std::sqrt(lin::pairwise_sum(acc) / opts.sliced_directions);
}

}  // namespace

W2Result wasserstein2_ex(const ParticleCloud& a, const ParticleCloud& b, const W2Options& opts) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wasserstein2: dimension mismatch");
  if (a.dim() == 1) {
    if (a.size() == b.size())
      return {std::sqrt(w2sq_sorted_equal(sorted_coords(a), sorted_coords(b))), true};
    // quantile coupling is still the exact optimal transport on the line
    return {std::sqrt(w2sq_quantile_1d(a.points(), b.points())), true};
  }
  if (a.size() == b.size() && a.size() <= opts.assignment_cutoff) {
    const int n = a.size();
    std::vector<double> cost(std::size_t(n) * n);
    par::for_range(n, [&](int i) {
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int c = 0; c < a.dim(); ++c) {
          const double gap = a.point(i)[c] - b.point(j)[c];
          s += gap * gap;
        }
        cost[std::size_t(i) * n + j] = s;
      }
    });
    return {std::sqrt(assignment_cost(cost, n) / n), true};
  }
  if (a.size() != b.size() && a.size() > opts.assignment_cutoff && b.size() > opts.assignment_cutoff) {
    // fall through to sliced below
  }
  return {sliced_w2(a, b, opts), false};
}

double wasserstein2(const ParticleCloud& a, const ParticleCloud& b, const W2Options& opts) {
  return wasserstein2_ex(a, b, opts).value;
}

double assignment_cost(const std::vector<double>& cost, int n) {
  // Jonker-Volgenant style shortest augmenting path, O(n^3)
  if (n == 0) return 0.0;
  constexpr double inf = 1e300;
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[std::size_t(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  double total = 0.0;
  for (int j = 1; j <= n; ++j) total += cost[std::size_t(p[j] - 1) * n + (j - 1)];
  return total;
}

std::vector<std::vector<double>> empirical_projection_gradient(const MeasureDerivative& du,
                                                               const ParticleCloud& cloud) {
  const int d = cloud.dim(), m = cloud.size();
  std::vector<std::vector<double>> grads(m, std::vector<double>(d));
  par::for_range(m, [&](int i) {
    du(cloud, cloud.point(i), grads[i].data());
    for (int c = 0; c < d; ++c) grads[i][c] /= m;
  });
  return grads;
}

double chaos_rate(long long n_samples, int dim) {
  if (n_samples < 1 || dim < 1) throw std::invalid_argument("chaos_rate: N and d must be positive");
  return std::pow(double(n_samples), -1.0 / (dim + 4));
}

void write_cloud_csv(const ParticleCloud& cloud, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_cloud_csv: cannot open " + path);
  char buf[32];
  for (int j = 0; j < cloud.size(); ++j) {
    for (int c = 0; c < cloud.dim(); ++c) {
      const auto res = std::to_chars(buf, buf + sizeof buf, cloud.point(j)[c]);
      out.write(buf, res.ptr - buf);
      if (c + 1 < cloud.dim()) out.put(',');
    }
    out.put('\n');
  }
}

ParticleCloud read_cloud_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_cloud_csv: cannot open " + path);
  std::vector<double> pts;
  int dim = -1;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    int cols = 0;
    while (std::getline(ss, cell, ',')) {
      pts.push_back(std::stod(cell));
      ++cols;
    }
    if (dim < 0) dim = cols;
    if (cols != dim) throw std::runtime_error("read_cloud_csv: ragged row in " + path);
  }
  return ParticleCloud(dim, std::move(pts));
}

}  // namespace mfc
