#include "hogeom/taufun.hpp"

#include <cmath>

namespace hogeom {

const char* to_string(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::HCSeries: return "hcseries";
    case Method::Taylor: return "taylor";
    case Method::RankOne: return "rankone";
  }
  return "?";
}

Method parse_method(const std::string& s) {
  if (s == "auto") return Method::Auto;
  if (s == "hcseries") return Method::HCSeries;
  if (s == "taylor") return Method::Taylor;
  if (s == "rankone") return Method::RankOne;
  throw Error(ErrorCode::InvalidArgument, "unknown method '" + s + "'");
}

double u_func(const RootSystem& rs, const Point& x) {
  double u = 1.0;
  for (int j = 0; j < rs.rank(); ++j) u *= std::cosh(x(j));
  return u;
}

Point rho_ell(const RootSystem& rs, const Mult& m, double ell) {
  return rho(rs, m) - ell * Point::Ones(rs.rank());
}

HOFunction::HOFunction(const RootSystem& rs, const Mult& m, const Covec& lam,
                       Method method, EvalOptions opt)
    : rs_(rs), m_(m), lam_(lam), method_(method), opt_(opt) {
  if (lam.size() != rs.rank())
    throw Error(ErrorCode::InvalidArgument, "lambda has the wrong dimension");
  if (method == Method::RankOne && rs.rank() != 1)
    throw Error(ErrorCode::MethodUnavailable, "rankone needs rank 1");
}

const HCEvaluator& HOFunction::hc() const {
  std::call_once(hc_once_, [&] {
    HCOptions o;
    o.max_height = opt_.max_height;
    o.delta = opt_.delta;
    hc_ = std::make_unique<HCEvaluator>(rs_, m_, lam_, o);
  });
  return *hc_;
}

const TaylorPoly& HOFunction::g_poly() const {
  std::call_once(g_once_, [&] {
    g_ = std::make_unique<TaylorPoly>(g_taylor(rs_, m_, lam_, opt_.degree));
  });
  return *g_;
}

const TaylorPoly& HOFunction::f_poly() const {
  std::call_once(f_once_, [&] {
    f_ = std::make_unique<TaylorPoly>(weyl_average(rs_, g_poly()));
  });
  return *f_;
}

Estimate HOFunction::via_rank_one(const Point& x, bool want_g) const {
  // Any (m_s, m_l) is m(ell) for the base (m_s + m_l - 1, *, 1).
  const Mult base{m_.s + m_.l - 1.0, m_.m, 1.0};
  const double ell = (1.0 - m_.l) / 2;
  Estimate e = want_g ? g_ell_r1(base, ell, lam_(0), x(0))
                      : f_ell_r1(base, ell, lam_(0), x(0));
  const double c = std::pow(std::cosh(x(0)), ell);
  e.value *= c;
  e.error *= c;
  return e;
}

Estimate HOFunction::F(const Point& x) const {
  const double margin = rs_.chamber_margin(dominant_representative(rs_, x).point);
  switch (method_) {
    case Method::RankOne: return via_rank_one(x, false);
    case Method::HCSeries: return hc()(x);
    case Method::Taylor: return eval_taylor(f_poly(), x, opt_.trust_radius);
    case Method::Auto: break;
  }
  if (rs_.rank() == 1) {
    try {
      return via_rank_one(x, false);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NonConvergent || margin < opt_.delta) throw;
    }
  }
  if (margin < opt_.delta) return eval_taylor(f_poly(), x, opt_.trust_radius);
  // Large multiplicities slow the series down near the walls; the Taylor
  // polynomial takes over when it is the better of the two.
  const bool near = x.norm() <= opt_.trust_radius;
  try {
    Estimate e = hc()(x);
    if (!near || e.error <= 1e-10 * std::abs(e.value)) return e;
    Estimate t = eval_taylor(f_poly(), x, opt_.trust_radius);
    return t.error < e.error ? t : e;
  } catch (const Error& e) {
    if (!near || e.code() != ErrorCode::TruncationNotConverged) throw;
  }
  return eval_taylor(f_poly(), x, opt_.trust_radius);
}

Estimate HOFunction::G(const Point& x) const {
  switch (method_) {
    case Method::RankOne: return via_rank_one(x, true);
    case Method::HCSeries:
      throw Error(ErrorCode::MethodUnavailable, "G has no Harish-Chandra expansion here");
    case Method::Taylor: return eval_taylor(g_poly(), x, opt_.trust_radius);
    case Method::Auto: break;
  }
  if (rs_.rank() == 1) return via_rank_one(x, true);
  return eval_taylor(g_poly(), x, opt_.trust_radius);
}

namespace {

const TauRequest& checked(const TauRequest& req) {
  if (req.m.l != 1.0)
    throw Error(ErrorCode::InvalidArgument, "tau functions need m_l = 1");
  return req;
}

Estimate scaled(Estimate e, double s) {
  e.value *= s;
  e.error *= s;
  return e;
}

}  // namespace

TauFunction::TauFunction(const RootSystem& rs, const TauRequest& req)
    : req_(checked(req)),
      ho_(rs, deform(req.m, req.ell), req.lam, req.method, req.opt) {}

Estimate TauFunction::f(const Point& x) const {
  const bool r1 = ho_.roots().rank() == 1;
  if (r1 && (req_.method == Method::RankOne || req_.method == Method::Auto)) {
    try {
      return f_ell_r1(req_.m, req_.ell, req_.lam(0), x(0));
    } catch (const Error& e) {
      if (req_.method == Method::RankOne || e.code() != ErrorCode::NonConvergent) throw;
    }
  }
  return scaled(ho_.F(x), std::pow(u_func(ho_.roots(), x), -req_.ell));
}

Estimate TauFunction::g(const Point& x) const {
  const bool r1 = ho_.roots().rank() == 1;
  if (r1 && (req_.method == Method::RankOne || req_.method == Method::Auto))
    return g_ell_r1(req_.m, req_.ell, req_.lam(0), x(0));
  return scaled(ho_.G(x), std::pow(u_func(ho_.roots(), x), -req_.ell));
}

Estimate f_ell(const RootSystem& rs, const TauRequest& req, const Point& x) {
  return TauFunction(rs, req).f(x);
}

Estimate g_ell(const RootSystem& rs, const TauRequest& req, const Point& x) {
  return TauFunction(rs, req).g(x);
}

}  // namespace hogeom
