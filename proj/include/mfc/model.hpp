#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mfc/measure.hpp"

namespace mfc {

// Linear dynamics family:
//   b(t,x,mu,a)     = b0 + b1*mean(mu) + b2*x + b3*a
//   sigma(t,x,mu,a) = s0 + s1*mean(mu) + s2*x + s3*a
// sigma lives in R^{d x m} stored row-major; s1/s2 are linear maps R^d -> R^{d x m}
// stored as (d*m) x d, s3 maps R^k similarly. The pairing sigma . z used by the
// Hamiltonian is the Frobenius inner product throughout.
struct DynCoeffs {
  std::vector<double> b0;      // d
  std::vector<double> b1, b2;  // d x d
  std::vector<double> b3;      // d x k
  std::vector<double> s0;      // d x m
  std::vector<double> s1, s2;  // (d*m) x d
  std::vector<double> s3;      // (d*m) x k
};

using DynFn = std::function<DynCoeffs(double t)>;

DynCoeffs zero_coeffs(int d, int m, int k);

struct CostModel {
  std::function<double(double t, const double* x, const ParticleCloud& mu, const double* a)> f;
  std::function<double(const double* x, const ParticleCloud& mu)> g;
  std::function<void(double, const double*, const ParticleCloud&, const double*, double*)> dx_f;  // out d
  std::function<void(double, const double*, const ParticleCloud&, const double*, double*)> da_f;  // out k
  // measure derivative as a query-point field x' -> dmu_f(t,x,mu,a)(x') in R^d
  std::function<void(double, const double*, const ParticleCloud&, const double*, const double* query,
                     double*)>
      dmu_f;
  std::function<void(const double*, const ParticleCloud&, double*)> dx_g;
  std::function<void(const double*, const ParticleCloud&, const double* query, double*)> dmu_g;
  double lambda = 0.0;  // strong-convexity modulus in the control
  // true when the dmu fields do not depend on the query point (scalar-mean
  // interactions); lets the cross-particle averages run in O(M) instead of O(M^2)
  bool mu_grad_query_constant = false;
};

struct ModelSpec {
  std::string name;
  int d = 1, m = 1, k = 1;
  double horizon = 1.0;
  std::vector<double> x0;
  DynFn dynamics;
  CostModel cost;
  // optional exact Hamiltonian minimizer; Newton is used when absent
  std::function<void(double t, const double* x, const ParticleCloud&, const double* y,
                     const double* z, double* alpha_out)>
      alpha_closed_form;
  bool vol_control_free = false;  // s3 == 0 on the whole horizon (set by constructors)
};

// (b, sigma) at one point; sig_out has d*m entries
void drift_vol(const DynCoeffs& c, int d, int m, int k, const double* x, const double* mu_bar,
               const double* alpha, double* b_out, double* sig_out);
void drift_vol(const ModelSpec& spec, double t, const double* x, const double* mu_bar,
               const double* alpha, double* b_out, double* sig_out);

// coefficients sampled at left grid points (Euler convention)
struct DynTable {
  int d = 0, m = 0, k = 0;
  std::vector<DynCoeffs> step;  // nt entries, plus the terminal sample at the end
  static DynTable build(const ModelSpec& spec, double horizon, int nt);
};

// ---- built-in families -----------------------------------------------------

struct LqScalarParams {
  double q = 1.0, qbar = 1.0, s = 1.0, r = 1.0;
  double c = 1.0, cbar = 0.0, sT = 1.0;
  double b1 = 0.0, b2 = 0.5, b3 = 1.0, sigma0 = 0.3;
  double T = 1.0, x0 = 1.0;
};

// d=m=k=1 model with f = q/2 x^2 + qbar/2 (x - s mean)^2 + r/2 a^2,
// g = c/2 x^2 + cbar/2 (x - sT mean)^2, drift b2 x + b1 mean + b3 a, constant
// volatility sigma0 (so the distributed-feedback equilibrium results apply).
ModelSpec make_lq_scalar(const LqScalarParams& p);
ModelSpec lq_benchmark();  // the parameter set used across the test corpus

ModelSpec make_zero_model(double T = 1.0, double x0 = 0.0);

// first-order (kernel) interactions, scalar state: every coefficient is an
// average <hhat(t,x,.,a), mu>. The dynamics kernels must be affine in
// (x, x', a) so the induced drift/vol stay in the linear family; non-affine
// dynamics kernels are rejected.
struct FirstOrderKernels {
  std::function<double(double t, double x, double xp, double a)> hb;  // drift kernel
  std::function<double(double t, double x, double xp, double a)> hs;  // volatility kernel
  std::function<double(double t, double x, double xp, double a)> hf;  // running cost kernel
  std::function<double(double t, double x, double xp, double a)> hf_x, hf_xp, hf_a;
  std::function<double(double x, double xp)> hg;  // terminal cost kernel
  std::function<double(double x, double xp)> hg_x, hg_xp;
  double lambda = 0.0;
};
ModelSpec make_first_order(const FirstOrderKernels& k, double T, double x0);

// scalar interactions through a moment <psi, mu>, scalar state:
// f(t,x,mu,a) = fhat(t, x, <psi,mu>, a), g likewise; dmu fields follow the
// chain rule dmu(..)(x') = d_r fhat * psi'(x').
struct ScalarMomentCost {
  std::function<double(double t, double x, double rmom, double a)> fhat;
  std::function<double(double t, double x, double rmom, double a)> fhat_x, fhat_r, fhat_a;
  std::function<double(double x, double rmom)> ghat;
  std::function<double(double x, double rmom)> ghat_x, ghat_r;
  std::function<double(double x)> psi, dpsi;    // running-cost moment
  std::function<double(double x)> zeta, dzeta;  // terminal-cost moment
  double lambda = 0.0;
};
ModelSpec make_scalar_moment(const ScalarMomentCost& c, const DynFn& dynamics, double T, double x0);

// ---- numerical spot-check of the standing assumptions ----------------------

struct AssumptionCheck {
  std::string name;
  bool pass = true;
  double worst = 0.0;  // worst ratio / margin over the probes
};

struct AssumptionReport {
  std::vector<AssumptionCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Lipschitz quotients of f and g over random pairs, the lambda-convexity
// inequality on control pairs, and central-difference consistency of every
// derivative field. Failures are reported, not thrown.
AssumptionReport validate_assumptions(const ModelSpec& spec, int probes, uint64_t seed);

}  // namespace mfc
