#include "hogeom/specfun.hpp"

#include <array>
#include <numbers>
#include <sstream>

namespace hogeom {

namespace {

constexpr double kPi = std::numbers::pi;

// Godfrey's coefficients for g = 607/128.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

bool at_nonpositive_integer(cplx z, double tol) {
  const double n = std::round(z.real());
  return n <= 0 && std::abs(z - n) <= tol;
}

cplx lanczos_log_gamma(cplx z) {
  z -= 1.0;
  cplx x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i)
    x += kLanczos[i] / (z + double(i));
  const cplx t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// log(sin(pi z)) without overflow for large |Im z|; branch fixed below.
cplx log_sin_pi(cplx z) {
  if (std::abs(z.imag()) < 15.0) return std::log(std::sin(kPi * z));
  // sin(pi z) = (e^{i pi z} - e^{-i pi z}) / 2i, keep the dominant exponential.
  const cplx i(0.0, 1.0);
  if (z.imag() > 0)
    return -i * kPi * z + std::log(1.0 - std::exp(2.0 * i * kPi * z)) -
           std::log(-2.0 * i);
  return i * kPi * z + std::log(1.0 - std::exp(-2.0 * i * kPi * z)) -
         std::log(2.0 * i);
}

}  // namespace

cplx log_gamma(cplx z) {
  if (at_nonpositive_integer(z, 0.0)) {
    std::ostringstream os;
    os << "log_gamma pole at " << z.real();
    throw Error(ErrorCode::PoleAtNonpositiveInteger, os.str());
  }
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  // Reflection; the 2 pi i k ambiguity is removed by matching the imaginary
  // part against the continuous branch obtained from the recurrence.
  cplx v = std::log(kPi) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
  // Continuous branch: shift up with lgamma(z) = lgamma(z+n) - sum log(z+k).
  const int n = static_cast<int>(std::ceil(0.5 - z.real()));
  cplx ref = lanczos_log_gamma(z + double(n));
  for (int k = 0; k < n; ++k) ref -= std::log(z + double(k));
  const double turns = std::round((ref.imag() - v.imag()) / (2 * kPi));
  v += cplx(0.0, 2 * kPi * turns);
  return v;
}

cplx log_beta(cplx x, cplx y) {
  return log_gamma(x) + log_gamma(y) - log_gamma(x + y);
}

namespace {

// Plain Gauss series for 0 <= w < 1.
cplx series_2f1(cplx a, cplx b, cplx c, double w) {
  cplx sum = 1.0, term = 1.0;
  int quiet = 0;
  constexpr int kMaxTerms = 100000;
  for (int n = 0; n < kMaxTerms; ++n) {
    const double dn = n;
    const cplx ratio = (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0));
    term *= ratio * w;
    sum += term;
    if (term == 0.0) return sum;
    const bool shrinking = std::abs(ratio) * w < 1.0;
    if (shrinking && std::abs(term) <= 1e-16 * std::abs(sum)) {
      if (++quiet >= 2) return sum;
    } else {
      quiet = 0;
    }
  }
  throw Error(ErrorCode::NonConvergent, "gauss_2f1 series did not converge");
}

// Gamma(p1) Gamma(p2) / (Gamma(q1) Gamma(q2)); zero when a denominator
// argument sits on a pole.
cplx gamma_ratio(cplx p1, cplx p2, cplx q1, cplx q2) {
  if (at_nonpositive_integer(q1, 0.0) || at_nonpositive_integer(q2, 0.0)) return 0.0;
  return std::exp(log_gamma(p1) + log_gamma(p2) - log_gamma(q1) - log_gamma(q2));
}

// Connection to 1 - w; needs c - a - b away from the integers.
cplx connected_2f1(cplx a, cplx b, cplx c, double w, double v) {
  const cplx s = c - a - b;
  const cplx t1 = gamma_ratio(c, s, c - a, c - b) * series_2f1(a, b, 1.0 - s, v);
  const cplx t2 = gamma_ratio(c, -s, a, b) * std::exp(s * std::log(v)) *
                  series_2f1(c - a, c - b, 1.0 + s, v);
  return t1 + t2;
}

cplx near_one_2f1(cplx a, cplx b, cplx c, double w, double v) {
  const cplx s = c - a - b;
  if (std::abs(s - std::round(s.real())) > 0.1) return connected_2f1(a, b, c, w, v);
  // The two terms have cancelling poles when c - a - b is an integer. F is
  // entire in a, so average it over a circle around a instead. The radius
  // shrinks with |log v| so v^{s} stays moderate on the circle.
  constexpr int kN = 32;
  const double r = std::min(0.25, 2.0 / std::abs(std::log(v)));
  cplx acc = 0.0;
  for (int k = 0; k < kN; ++k) {
    const cplx da = std::polar(r, 2 * kPi * (k + 0.5) / kN);
    acc += connected_2f1(a + da, b, c, w, v);
  }
  return acc / double(kN);
}

}  // namespace

cplx gauss_2f1(cplx a, cplx b, cplx c, double z, double one_minus_z) {
  double v = std::isnan(one_minus_z) ? 1.0 - z : one_minus_z;
  if (!(v > 0.0))
    throw Error(ErrorCode::InvalidArgument, "gauss_2f1 needs z < 1");
  if (at_nonpositive_integer(c, 1e-12))
    throw Error(ErrorCode::ParameterPole, "gauss_2f1: c is a nonpositive integer");
  cplx pref = 1.0;
  double w = z;
  if (z < 0) {
    w = z / (z - 1.0);
    v = 1.0 / v;
    pref = std::exp(-a * std::log(1.0 - z));
    b = c - b;
  }
  // Terminating series are summed directly.
  const bool terminates = at_nonpositive_integer(a, 0.0) || at_nonpositive_integer(b, 0.0);
  if (w <= 0.75 || terminates) return pref * series_2f1(a, b, c, w);
  return pref * near_one_2f1(a, b, c, w, v);
}

std::vector<double> bern_kernel_coeffs(int order) {
  // (1 - e^{-t})/t = sum_k g_k t^k with g_k = (-1)^k/(k+1)!; invert the series.
  std::vector<double> g(order + 1), c(order + 1, 0.0);
  double fact = 1.0;
  for (int k = 0; k <= order; ++k) {
    fact *= (k + 1);
    g[k] = (k % 2 ? -1.0 : 1.0) / fact;
  }
  c[0] = 1.0;
  for (int n = 1; n <= order; ++n) {
    double s = 0.0;
    for (int k = 1; k <= n; ++k) s += g[k] * c[n - k];
    c[n] = -s;
  }
  return c;
}

QuadratureRule::QuadratureRule(int max_level, double t_max)
    : max_level_(max_level), t_max_(t_max) {
  auto push = [&](double t, int level) {
    const double s = 0.5 * kPi * std::sinh(t);
    double u, v;
    if (s >= 0) {
      const double e = std::exp(-2 * s);
      u = 1.0 / (1.0 + e);
      v = e / (1.0 + e);
    } else {
      const double e = std::exp(2 * s);
      u = e / (1.0 + e);
      v = 1.0 / (1.0 + e);
    }
    const double w = kPi * std::cosh(t) * u * v;
    if (u == 0.0 || v == 0.0 || w == 0.0) return;
    nodes_.push_back({u, v, w, t, level});
  };
  const int k0 = static_cast<int>(std::floor(t_max));
  for (int k = -k0; k <= k0; ++k) push(k, 0);
  for (int level = 1; level <= max_level; ++level) {
    const double h = std::ldexp(1.0, -level);
    const int kmax = static_cast<int>(std::floor((t_max / h - 1) / 2));
    for (int k = -kmax - 1; k <= kmax; ++k) {
      const double t = (2 * k + 1) * h;
      if (std::abs(t) <= t_max) push(t, level);
    }
  }
}

const QuadratureRule& default_rule() {
  static const QuadratureRule rule;
  return rule;
}

}  // namespace hogeom
