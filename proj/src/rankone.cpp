#include "hogeom/rankone.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace hogeom {

namespace {

void require_ml_one(const Mult& m) {
  if (m.l != 1.0)
    throw Error(ErrorCode::InvalidArgument, "rank-one tau functions need m_l = 1");
}

double rho1(const Mult& m) { return m.s / 2 + 1.0; }

}  // namespace

cplx jacobi_phi(double a, double b, cplx lam, double x) {
  const double sh = std::sinh(x);
  return gauss_2f1((a + b + 1 - lam) / 2.0, (a + b + 1 + lam) / 2.0, a + 1,
                   -sh * sh);
}

Estimate f_ell_r1(const Mult& m, double ell, cplx lam, double x) {
  require_ml_one(m);
  const double rho = rho1(m);
  const double ch = std::cosh(x), th = std::tanh(x), sh = std::sinh(x);
  const cplx A = (rho - lam - ell) / 2.0;
  const cplx Bm = (rho - lam + ell) / 2.0;
  const cplx v311 = std::pow(cplx(ch), lam - rho) * gauss_2f1(A, Bm, rho, th * th, 1.0 / (ch * ch));
  // -sinh^2 form with the numerator parameters swapped, so the internal
  // transformation sums a different series (the lam -> -lam image).
  const cplx v39 = std::pow(ch, -ell) *
                   gauss_2f1((rho + lam - ell) / 2.0, A, rho, -sh * sh);
  const double scale = std::max({1.0, std::abs(v311), std::abs(v39)});
  if (std::abs(v311 - v39) > 1e-10 * scale) {
    std::ostringstream os;
    os << "rank-one closed forms disagree: " << v311 << " vs " << v39;
    throw Error(ErrorCode::NonConvergent, os.str());
  }
  Estimate e;
  e.value = v311;
  e.error = std::abs(v311 - v39) + 1e-14 * std::abs(v311);
  e.method = "rankone";
  return e;
}

Estimate g_ell_r1(const Mult& m, double ell, cplx lam, double x) {
  require_ml_one(m);
  const double a = m.s / 2;
  const double ch = std::cosh(x);
  const cplx main = jacobi_phi(a, -ell, lam, x);
  const cplx odd = (lam + a + 1.0 - ell) / (4 * (a + 1)) * std::sinh(2 * x) *
                   jacobi_phi(a + 1, 1 - ell, lam, x);
  Estimate e;
  e.value = std::pow(ch, -ell) * (main + odd);
  e.error = 1e-14 * (std::abs(main) + std::abs(odd)) * std::pow(ch, -ell);
  e.method = "rankone";
  return e;
}

cplx g_ell_difference_r1(const Mult& m, double ell, cplx lam, double x) {
  require_ml_one(m);
  const double a = m.s / 2;
  const double ch = std::cosh(x);
  const cplx plus = (lam + a + 1.0 + ell) * std::pow(ch, ell) *
                    jacobi_phi(a + 1, 1 + ell, lam, x);
  const cplx minus = (lam + a + 1.0 - ell) * std::pow(ch, -ell) *
                     jacobi_phi(a + 1, 1 - ell, lam, x);
  return std::sinh(2 * x) / (4 * (a + 1)) * (plus - minus);
}

namespace {

struct EulerParams {
  cplx A, B, C;
  cplx log_norm;  // -log Beta(B, C - B)
};

EulerParams euler_params(const Mult& m, double ell, cplx lam) {
  require_ml_one(m);
  const double rho = rho1(m);
  EulerParams p;
  p.A = (rho - lam - ell) / 2.0;
  p.B = (rho + lam - ell) / 2.0;
  p.C = rho;
  if (!(p.B.real() > 0 && (p.C - p.B).real() > 0)) {
    std::ostringstream os;
    os << "Re lambda = " << lam.real() << " outside the strip ("
       << -(rho - ell) << ", " << rho + ell << ")";
    throw Error(ErrorCode::StripViolation, os.str());
  }
  p.log_norm = -log_beta(p.B, p.C - p.B);
  return p;
}

}  // namespace

Estimate f_ell_r1_integral(const Mult& m, double ell, cplx lam, double x,
                           const QuadratureRule& rule) {
  const EulerParams p = euler_params(m, ell, lam);
  const double s2 = std::sinh(x) * std::sinh(x);
  auto f = [&](double u, double v) -> cplx {
    return std::exp((p.B - 1.0) * std::log(u) + (p.C - p.B - 1.0) * std::log(v) -
                    p.A * std::log1p(u * s2) + p.log_norm);
  };
  const auto q = integrate01(f, rule);
  const double pref = std::pow(std::cosh(x), -ell);
  Estimate e;
  e.value = pref * q.value;
  e.error = pref * q.error;
  e.method = "integral";
  return e;
}

Estimate f_ell_r1_integral_t(const Mult& m, double ell, cplx lam, double x,
                             const QuadratureRule& rule) {
  const EulerParams p = euler_params(m, ell, lam);
  const double rho = rho1(m);
  const double s2 = std::sinh(x) * std::sinh(x);
  const double ln2 = std::log(2.0);
  // t = s / (1 - s) maps (0, 1) onto (0, infinity); logs of sinh and cosh are
  // formed from e^{-2t} so large t does not overflow.
  const cplx c1 = rho + lam - ell - 1.0, c2 = 1.0 - rho - lam - ell;
  // The terms linear in t combine into -(rho - lam + ell) t, whose real part
  // is positive inside the strip.
  const cplx slope = c1 + c2 - 2.0 * p.A;
  auto f = [&](double s, double one_minus_s) -> cplx {
    const double t = s / one_minus_s;
    const double e2 = std::exp(-2 * t);
    const double rsh = t < 1 ? std::log(std::sinh(t)) - t : std::log1p(-e2) - ln2;
    const double rch = std::log1p(e2) - ln2;
    const double rmix = std::log(std::pow(1 + e2, 2) + s2 * std::pow(1 - e2, 2)) - 2 * ln2;
    const double jac = -2.0 * std::log(one_minus_s);
    const double lin = slope.real() * t;
    const cplx rest = c1 * rsh + c2 * rch - p.A * rmix + p.log_norm;
    if (lin + rest.real() + jac < -745.0) return 0.0;
    return 2.0 * std::exp(cplx(lin, std::fmod(slope.imag() * t, 2 * std::numbers::pi)) + rest + jac);
  };
  const auto q = integrate01(f, rule);
  const double pref = std::pow(std::cosh(x), -ell);
  Estimate e;
  e.value = pref * q.value;
  e.error = pref * q.error;
  e.method = "integral-t";
  return e;
}

}  // namespace hogeom
