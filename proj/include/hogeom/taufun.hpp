#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "hogeom/hcseries.hpp"
#include "hogeom/localseries.hpp"
#include "hogeom/rankone.hpp"

namespace hogeom {

enum class Method { Auto, HCSeries, Taylor, RankOne };

const char* to_string(Method m);
Method parse_method(const std::string& s);

struct EvalOptions {
  int max_height = 40;
  double delta = 0.3;
  int degree = 30;
  double trust_radius = 0.8;
};

// u(x) = prod_j cosh(beta_j(x) / 2)
double u_func(const RootSystem& rs, const Point& x);
Point rho_ell(const RootSystem& rs, const Mult& m, double ell);

// F_lam(m) and G_lam(m) for an arbitrary multiplicity, with cached engines.
class HOFunction {
 public:
  HOFunction(const RootSystem& rs, const Mult& m, const Covec& lam,
             Method method = Method::Auto, EvalOptions opt = {});

  Estimate F(const Point& x) const;
  Estimate G(const Point& x) const;

  const Mult& mult() const { return m_; }
  const Covec& lambda() const { return lam_; }
  const RootSystem& roots() const { return rs_; }

  const HCEvaluator& hc() const;
  const TaylorPoly& g_poly() const;
  const TaylorPoly& f_poly() const;

 private:
  Estimate via_rank_one(const Point& x, bool want_g) const;

  RootSystem rs_;
  Mult m_;
  Covec lam_;
  Method method_;
  EvalOptions opt_;
  mutable std::once_flag hc_once_, g_once_, f_once_;
  mutable std::unique_ptr<HCEvaluator> hc_;
  mutable std::unique_ptr<TaylorPoly> g_;
  mutable std::unique_ptr<TaylorPoly> f_;
};

struct TauRequest {
  Mult m;  // base multiplicity, m.l must equal 1
  double ell = 0.0;
  Covec lam;
  Method method = Method::Auto;
  EvalOptions opt;
};

// F_{ell,lam} = u^{-ell} F_lam(m(ell)), G_{ell,lam} = u^{-ell} G_lam(m(ell)).
class TauFunction {
 public:
  TauFunction(const RootSystem& rs, const TauRequest& req);

  Estimate f(const Point& x) const;
  Estimate g(const Point& x) const;

  const TauRequest& request() const { return req_; }
  const HOFunction& deformed() const { return ho_; }

 private:
  TauRequest req_;
  HOFunction ho_;
};

Estimate f_ell(const RootSystem& rs, const TauRequest& req, const Point& x);
Estimate g_ell(const RootSystem& rs, const TauRequest& req, const Point& x);

}  // namespace hogeom
