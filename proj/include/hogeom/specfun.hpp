#pragma once

#include <limits>
#include <cmath>
#include <vector>

#include "hogeom/types.hpp"

namespace hogeom {

// Principal branch of log Gamma (continuous continuation from the positive axis).
cplx log_gamma(cplx z);

// log Gamma(a) - log Gamma(b) style helpers built on log_gamma.
cplx log_beta(cplx x, cplx y);

// Gauss 2F1(a, b; c; z) for real z < 1. Negative z are mapped into [0, 1)
// with F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1)); arguments above 3/4 go
// through the connection formula at 1. Pass one_minus_z when 1 - z is known
// more accurately than z itself.
cplx gauss_2f1(cplx a, cplx b, cplx c, double z,
               double one_minus_z = std::numeric_limits<double>::quiet_NaN());

// Taylor coefficients of t / (1 - exp(-t)) up to t^order.
std::vector<double> bern_kernel_coeffs(int order);

// Double-exponential (tanh-sinh) rule on (0, 1), nested by level.
class QuadratureRule {
 public:
  struct Node {
    double u;
    double one_minus_u;
    double weight;  // du/dt, the step size is applied per level
    double t;
    int level;
  };

  explicit QuadratureRule(int max_level = 7, double t_max = 6.5);

  int max_level() const { return max_level_; }
  double t_max() const { return t_max_; }
  const std::vector<Node>& nodes() const { return nodes_; }

 private:
  int max_level_;
  double t_max_;
  std::vector<Node> nodes_;
};

const QuadratureRule& default_rule();

template <class S>
struct QuadResult {
  S value{};
  double error = 0.0;
  int evaluations = 0;
};

// Integrates f(u, 1-u) over (0, 1). The complement is passed separately so
// endpoint singularities at u = 1 keep full precision.
template <class F>
auto integrate01(F&& f, const QuadratureRule& rule = default_rule())
    -> QuadResult<decltype(f(0.5, 0.5))> {
  using S = decltype(f(0.5, 0.5));
  const int L = rule.max_level();
  std::vector<S> level_sum(L + 1, S{});
  // Contribution at the outermost node on each side; a slowly decaying
  // endpoint leaves visible mass there.
  double t_lo = 0.0, t_hi = 0.0, tail_lo = 0.0, tail_hi = 0.0;
  QuadResult<S> out;
  for (const auto& nd : rule.nodes()) {
    const S v = f(nd.u, nd.one_minus_u) * nd.weight;
    if (!std::isfinite(std::abs(v)))
      throw Error(ErrorCode::NonIntegrableEndpoint,
                  "integrand not finite at a quadrature node");
    level_sum[nd.level] += v;
    if (nd.t <= t_lo) t_lo = nd.t, tail_lo = std::abs(v);
    if (nd.t >= t_hi) t_hi = nd.t, tail_hi = std::abs(v);
    ++out.evaluations;
  }
  const double tail = std::max(tail_lo, tail_hi);
  S acc{}, prev{};
  for (int k = 0; k <= L; ++k) {
    acc += level_sum[k];
    prev = out.value;
    out.value = acc * std::ldexp(1.0, -k);
  }
  out.error = L > 0 ? std::abs(out.value - prev) : std::abs(out.value);
  const double scale = std::max(std::abs(out.value), 1e-300);
  if (tail > 1e-9 * scale)
    throw Error(ErrorCode::NonIntegrableEndpoint,
                "integrand mass does not decay at the endpoints");
  out.error += 1e-15 * scale;
  return out;
}

}  // namespace hogeom
