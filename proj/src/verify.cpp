#include "hogeom/verify.hpp"

#include <cmath>
#include <sstream>

namespace hogeom {

namespace {

void check_regular(const RootSystem& rs, const Point& x, double h) {
  for (const Root& a : rs.positive_roots()) {
    if (std::abs(a.vec.dot(x)) < 2 * h) {
      std::ostringstream os;
      os << "point (" << x.transpose() << ") too close to a wall for step " << h;
      throw Error(ErrorCode::SingularPoint, os.str());
    }
  }
}

Eigen::VectorXcd gradient(const Fn& f, const Point& x, double h) {
  Eigen::VectorXcd g(x.size());
  for (int i = 0; i < x.size(); ++i) {
    Point xp = x, xm = x;
    xp(i) += h;
    xm(i) -= h;
    g(i) = (f(xp) - f(xm)) / (2 * h);
  }
  return g;
}

}  // namespace

cplx apply_L(const RootSystem& rs, const Mult& m, const Fn& f, const Point& x,
             const FDConfig& cfg) {
  const double h = cfg.h;
  check_regular(rs, x, h);
  const cplx f0 = f(x);
  cplx lap = 0.0;
  for (int i = 0; i < x.size(); ++i) {
    Point xp = x, xm = x;
    xp(i) += h;
    xm(i) -= h;
    lap += (f(xp) - 2.0 * f0 + f(xm)) / (h * h);
  }
  const Eigen::VectorXcd g = gradient(f, x, h);
  cplx drift = 0.0;
  for (const Root& a : rs.positive_roots()) {
    const double ma = mult_of(m, a.cls);
    if (ma == 0.0) continue;
    drift += ma / std::tanh(a.vec.dot(x)) * bilinear(g, a.vec.cast<cplx>());
  }
  return lap + drift;
}

cplx apply_L_ell(const RootSystem& rs, const Mult& m, double ell, const Fn& f,
                 const Point& x, const FDConfig& cfg) {
  double pot = 0.0;
  for (int j = 0; j < x.size(); ++j) pot += 1.0 / std::pow(std::cosh(x(j)), 2);
  return apply_L(rs, m, f, x, cfg) + ell * ell * pot * f(x);
}

cplx apply_cherednik(const RootSystem& rs, const Mult& m, const Point& xi,
                     const Fn& f, const Point& x, const FDConfig& cfg, double ell) {
  const double h = cfg.h;
  check_regular(rs, x, h);
  const Mult ml = deform(m, ell);
  const cplx f0 = f(x);
  const cplx dxi = (f(x + h * xi) - f(x - h * xi)) / (2 * h);
  cplx out = dxi - rho(rs, ml).dot(xi) * f0;
  for (const Root& a : rs.positive_roots()) {
    const double ma = mult_of(ml, a.cls);
    if (ma == 0.0) continue;
    const double ax = a.vec.dot(x);
    out += ma * a.vec.dot(xi) / (1.0 - std::exp(-2 * ax)) *
           (f0 - f(a.reflection.apply(x)));
  }
  double tau = 0.0;
  for (int j = 0; j < x.size(); ++j) tau += xi(j) * std::tanh(x(j));
  return out + ell * tau * f0;
}

bool hull_membership(const RootSystem& rs, const Point& rho, const Point& re_lam,
                     double slack) {
  const Point xp = dominant_representative(rs, re_lam).point;
  const Point rp = dominant_representative(rs, rho).point;
  const double tol = slack * (1.0 + rp.norm());
  double acc = 0.0;
  for (int j = rs.rank() - 1; j >= 0; --j) {
    acc += rp(j) - xp(j);
    if (acc < -tol) return false;
  }
  return true;
}

namespace {

struct Halfspace {
  Point n;
  double c;
};

std::vector<Halfspace> orbit_facets(const RootSystem& rs, const Point& rho) {
  const int r = rs.rank();
  std::vector<Point> pts;
  rs.for_each_weyl([&](const WeylElem& w) {
    const Point p = w.apply(rho);
    for (const auto& q : pts)
      if ((q - p).norm() < 1e-12) return;
    pts.push_back(p);
  });
  std::vector<Halfspace> out;
  if (r == 1) {
    const double a = std::abs(rho(0));
    out.push_back({Point::Constant(1, 1.0), a});
    out.push_back({Point::Constant(1, -1.0), a});
    return out;
  }
  const int n = static_cast<int>(pts.size());
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  const double scale = 1.0 + rho.norm();
  while (n >= r) {
    Eigen::MatrixXd A(r - 1, r);
    for (int i = 1; i < r; ++i) A.row(i - 1) = (pts[idx[i]] - pts[idx[0]]).transpose();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    if (lu.rank() == r - 1) {
      Point nv = lu.kernel().col(0);
      nv.normalize();
      double c = nv.dot(pts[idx[0]]);
      double lo = 0, hi = 0;
      for (const auto& p : pts) {
        const double v = nv.dot(p) - c;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      const double tol = 1e-10 * scale;
      if (hi <= tol) out.push_back({nv, c});
      else if (lo >= -tol) out.push_back({-nv, -c});
    }
    // next r-subset in lexicographic order
    int k = r - 1;
    while (k >= 0 && idx[k] == n - r + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int i = k + 1; i < r; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

}  // namespace

bool hull_membership_bruteforce(const RootSystem& rs, const Point& rho,
                                const Point& re_lam, double slack) {
  if (rs.rank() > 3)
    throw Error(ErrorCode::RankUnsupported, "facet enumeration limited to rank <= 3");
  if (rho.norm() < 1e-14) return re_lam.norm() <= slack;
  const auto facets = orbit_facets(rs, rho);
  const double tol = slack * (1.0 + rho.norm());
  for (const auto& f : facets)
    if (f.n.dot(re_lam) > f.c + tol) return false;
  return true;
}

BoundednessResult classify_boundedness(const RootSystem& rs, const Mult& m, double ell,
                                       const Covec& lam,
                                       const BoundednessOptions& opt) {
  const int r = rs.rank();
  const Point rh = rho(rs, m);
  BoundednessResult res;
  res.in_tube = hull_membership(rs, rh, lam.real());

  const DominantRep dr = dominant_representative(rs, lam.real());
  const Covec lp = dr.w.apply(lam);  // F is W-invariant in lambda
  TauRequest req;
  req.m = m;
  req.ell = ell;
  req.lam = lp;
  req.opt = opt.eval;
  const TauFunction tf(rs, req);
  auto probe = [&](const Point& x) {
    res.sup_abs = std::max(res.sup_abs, std::abs(tf.f(x).value));
  };

  // Interior direction: tail indicator sum_{k>=j} e_k tilted into the open chamber.
  const Point d = dr.point - dominant_representative(rs, rh).point;
  Point best;
  double best_rate = -INFINITY;
  for (int j = 0; j < r; ++j) {
    Point x1 = Point::Zero(r);
    for (int k = j; k < r; ++k) x1(k) = 1.0;
    for (int k = 0; k < r; ++k) x1(k) += 0.25 * (k + 1) / r;
    x1.normalize();
    const double rate = d.dot(x1);
    if (rate > best_rate) {
      best_rate = rate;
      best = x1;
    }
  }
  res.growth_rate = best_rate;
  const double margin = rs.chamber_margin(best);
  const double t0 = (opt.eval.delta + 0.05) / margin;
  const double t1 = best_rate > 1e-9 ? std::max(t0 + 1.0, 25.0 / best_rate)
                                     : t0 + 8.0;
  for (int k = 0; k < opt.ray_points; ++k) {
    const double t = t0 + (t1 - t0) * k / (opt.ray_points - 1);
    probe(t * best);
    if (res.sup_abs > opt.threshold) break;
  }
  // A few points near the origin.
  for (double s : {0.1, 0.3, 0.5}) probe(s * best);
  res.bounded = res.sup_abs <= opt.threshold;
  return res;
}

double sharp_ratio(const RootSystem& rs, const Mult& m, const Point& lam0,
                   const Point& x, double value) {
  double poly = 1.0;
  for (const Root& a : rs.positive_roots()) {
    if (a.cls == RootClass::Long) continue;
    if (std::abs(a.vec.dot(lam0)) < 1e-12) poly *= 1.0 + a.vec.dot(x);
  }
  return value / (poly * std::exp((lam0 - rho(rs, m)).dot(x)));
}

}  // namespace hogeom
