#include "hogeom/suites.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "hogeom/parallel.hpp"

namespace hogeom {

namespace {

struct Outcome {
  double margin = INFINITY;
  std::string detail;

  // lhs <= rhs within tol
  void le(double lhs, double rhs, double tol, const std::string& what) {
    const double mg = rhs + tol - lhs;
    if (mg < margin) {
      margin = mg;
      std::ostringstream os;
      os.precision(12);
      os << what << ": " << lhs << " <= " << rhs;
      detail = os.str();
    }
  }
};

struct CaseSpec {
  std::string label;
  std::function<Outcome()> run;
};

SuiteReport run_cases(const std::string& name, std::vector<CaseSpec> specs,
                      const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.name = name;
  rep.cases.resize(specs.size());
  parallel_for(specs.size(), [&](std::size_t i) {
    SuiteCase& c = rep.cases[i];
    c.index = i;
    c.label = specs[i].label;
    try {
      const Outcome o = specs[i].run();
      c.margin = o.margin;
      c.detail = o.detail;
      c.passed = o.margin >= 0;
    } catch (const Error& e) {
      c.margin = -INFINITY;
      c.detail = std::string(to_string(e.code())) + ": " + e.what();
      c.passed = false;
    }
  }, cfg.threads > 0 ? cfg.threads : thread_count());
  rep.worst_margin = INFINITY;
  for (const auto& c : rep.cases) {
    rep.passed = rep.passed && c.passed;
    rep.worst_margin = std::min(rep.worst_margin, c.margin);
  }
  if (rep.cases.empty()) rep.worst_margin = 0.0;
  return rep;
}

std::string label_of(int r, const Mult& m, double ell) {
  std::ostringstream os;
  os << "r=" << r << " m=(" << m.s << "," << m.m << "," << m.l << ") ell=" << ell;
  return os.str();
}

std::string label_lam(const Covec& lam) {
  std::ostringstream os;
  os.precision(6);
  os << " lam=(";
  for (int i = 0; i < lam.size(); ++i) {
    if (i) os << ",";
    os << lam(i).real();
    if (lam(i).imag() != 0) os << (lam(i).imag() > 0 ? "+" : "") << lam(i).imag() << "i";
  }
  os << ")";
  return os.str();
}

std::vector<double> ell_grid(const Mult& m, int n) {
  const auto [lo, hi] = ell_range(m);
  std::vector<double> out;
  if (n <= 1) return {0.0};
  for (int k = 0; k < n; ++k) out.push_back(lo + (hi - lo) * k / (n - 1));
  return out;
}

using Rng = std::mt19937_64;

double unif(Rng& g, double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(g);
}

Point random_box(Rng& g, int r, double a) {
  Point p(r);
  for (int i = 0; i < r; ++i) p(i) = unif(g, -a, a);
  return p;
}

Point random_ball(Rng& g, int r, double radius) {
  Point p = random_box(g, r, 1.0);
  if (p.norm() > 1.0) p /= p.norm();
  return radius * p;
}

// Dominant point with every simple root value in [lo, lo + span].
Point random_chamber(Rng& g, int r, double lo, double span) {
  Point p(r);
  double acc = 0;
  for (int i = 0; i < r; ++i) {
    acc += lo + unif(g, 0, span);
    p(i) = acc;
  }
  return p;
}

WeylElem random_weyl(Rng& g, const RootSystem& rs) {
  const auto ws = rs.weyl_elements();
  return ws[std::uniform_int_distribution<std::size_t>(0, ws.size() - 1)(g)];
}

// Sample points: half near the origin (any chamber), half in the chamber
// interior moved by a random Weyl element.
std::vector<Point> sample_points(Rng& g, const RootSystem& rs, int n) {
  std::vector<Point> xs;
  for (int k = 0; k < n; ++k) {
    if (k % 2 == 0) {
      xs.push_back(random_ball(g, rs.rank(), 0.7));
    } else {
      xs.push_back(random_weyl(g, rs).apply(random_chamber(g, rs.rank(), 0.35, 1.0)));
    }
  }
  return xs;
}

// G lives on all of a; evaluation needs the Taylor disc unless rank is one.
std::vector<Point> g_points(Rng& g, const RootSystem& rs, int n) {
  std::vector<Point> xs;
  for (int k = 0; k < n; ++k)
    xs.push_back(rs.rank() == 1 ? random_box(g, 1, 2.5) : random_ball(g, rs.rank(), 0.7));
  return xs;
}

Covec real_lambda(Rng& g, int r, double a) { return to_covec(random_box(g, r, a)); }

Covec complex_lambda(Rng& g, int r, double a, double b) {
  Covec c(r);
  for (int i = 0; i < r; ++i) c(i) = cplx(unif(g, -a, a), unif(g, -b, b));
  return c;
}

double max_w_pairing(const RootSystem& rs, const Point& lam, const Point& x) {
  return dominant_representative(rs, lam).point.dot(dominant_representative(rs, x).point);
}

HOFunction ho(const RootSystem& rs, const Mult& m, const Covec& lam, const SuiteConfig& cfg) {
  return HOFunction(rs, m, lam, Method::Auto, cfg.eval);
}

TauFunction tau(const RootSystem& rs, const Mult& m, double ell, const Covec& lam,
                const SuiteConfig& cfg) {
  TauRequest req;
  req.m = m;
  req.ell = ell;
  req.lam = lam;
  req.opt = cfg.eval;
  return TauFunction(rs, req);
}

// Iterates rank, base multiplicity, ell grid and a per-combination rng.
template <class Fn>
void for_each_setting(const SuiteConfig& cfg, std::uint64_t salt, Fn&& fn,
                      double ell_lo_shift = 0.0) {
  Rng g(cfg.seed * 1000003u + salt);
  for (int r : cfg.ranks) {
    const RootSystem rs(r);
    for (const Mult& m : cfg.multiplicities) {
      auto ells = ell_grid(m, cfg.ell_points);
      if (ell_lo_shift != 0.0) ells.insert(ells.begin(), ells.front() + ell_lo_shift);
      for (double ell : ells) {
        for (int s = 0; s < cfg.lambda_samples; ++s) {
          Rng local(g());
          fn(rs, m, ell, local);
        }
      }
    }
  }
}

// F and G positive for real lam
std::vector<CaseSpec> positivity_cases(const SuiteConfig& cfg, bool tau_level) {
  std::vector<CaseSpec> specs;
  for_each_setting(cfg, 11, [&](const RootSystem& rs, const Mult& m, double ell, Rng& g) {
    const Covec lam = real_lambda(g, rs.rank(), 3.0);
    const auto xf = sample_points(g, rs, cfg.x_samples);
    const auto xg = g_points(g, rs, cfg.x_samples);
    specs.push_back({label_of(rs.rank(), m, ell) + label_lam(lam), [=, &cfg] {
      Outcome o;
      auto check = [&](const Estimate& e, const char* what) {
        o.le(1e-12, e.value.real(), 0.0, std::string(what) + " > 1e-12");
        o.le(std::abs(e.value.imag()), 0.0, cfg.tolerance, std::string(what) + " imaginary part");
      };
      if (tau_level) {
        const TauFunction t = tau(rs, m, ell, lam, cfg);
        for (const auto& x : xf) check(t.f(x), "F_ell");
        for (const auto& x : xg) check(t.g(x), "G_ell");
      } else {
        const HOFunction h = ho(rs, deform(m, ell), lam, cfg);
        for (const auto& x : xf) check(h.F(x), "F");
        for (const auto& x : xg) check(h.G(x), "G");
      }
      return o;
    }});
  });
  return specs;
}

// |F_lam| <= F_{Re lam}, |G_lam| <= G_{Re lam}
std::vector<CaseSpec> modulus_cases(const SuiteConfig& cfg, bool tau_level) {
  std::vector<CaseSpec> specs;
  for_each_setting(cfg, 23, [&](const RootSystem& rs, const Mult& m, double ell, Rng& g) {
    const Covec lam = complex_lambda(g, rs.rank(), 3.0, 3.0);
    const Covec lre = to_covec(lam.real());
    const auto xf = sample_points(g, rs, cfg.x_samples);
    const auto xg = g_points(g, rs, cfg.x_samples);
    specs.push_back({label_of(rs.rank(), m, ell) + label_lam(lam), [=, &cfg] {
      Outcome o;
      const double tol = cfg.tolerance;
      if (tau_level) {
        const TauFunction a = tau(rs, m, ell, lam, cfg), b = tau(rs, m, ell, lre, cfg);
        for (const auto& x : xf) o.le(std::abs(a.f(x).value), b.f(x).value.real(), tol, "|F_ell|");
        for (const auto& x : xg) o.le(std::abs(a.g(x).value), b.g(x).value.real(), tol, "|G_ell|");
      } else {
        const Mult ml = deform(m, ell);
        const HOFunction a = ho(rs, ml, lam, cfg), b = ho(rs, ml, lre, cfg);
        for (const auto& x : xf) o.le(std::abs(a.F(x).value), b.F(x).value.real(), tol, "|F|");
        for (const auto& x : xg) o.le(std::abs(a.G(x).value), b.G(x).value.real(), tol, "|G|");
      }
      return o;
    }});
  });
  return specs;
}

// sqrt|W| e^{max_w Re(w lam)(x)}
std::vector<CaseSpec> sqrt_w_cases(const SuiteConfig& cfg, bool tau_level) {
  std::vector<CaseSpec> specs;
  for_each_setting(cfg, 37, [&](const RootSystem& rs, const Mult& m, double ell, Rng& g) {
    const Covec lam = complex_lambda(g, rs.rank(), 3.0, 3.0);
    const auto xf = sample_points(g, rs, cfg.x_samples);
    const auto xg = g_points(g, rs, cfg.x_samples);
    specs.push_back({label_of(rs.rank(), m, ell) + label_lam(lam), [=, &cfg] {
      Outcome o;
      const double sw = std::sqrt(double(rs.weyl_order()));
      auto bound = [&](const Point& x) { return sw * std::exp(max_w_pairing(rs, lam.real(), x)); };
      const double tol = cfg.tolerance;
      if (tau_level) {
        // F_{ell} = F_{-ell} extends the F bound to |ell| <= ell_max.
        const TauFunction a = tau(rs, m, ell, lam, cfg), b = tau(rs, m, -ell, lam, cfg);
        for (const auto& x : xf) {
          o.le(std::abs(a.f(x).value), bound(x), tol, "|F_ell|");
          o.le(std::abs(b.f(x).value), bound(x), tol, "|F_-ell|");
        }
        for (const auto& x : xg) o.le(std::abs(a.g(x).value), bound(x), tol, "|G_ell|");
      } else {
        const HOFunction a = ho(rs, deform(m, ell), lam, cfg);
        for (const auto& x : xf) o.le(std::abs(a.F(x).value), bound(x), tol, "|F|");
        for (const auto& x : xg) o.le(std::abs(a.G(x).value), bound(x), tol, "|G|");
      }
      return o;
    }});
  }, tau_level ? 0.0 : -1.0);
  return specs;
}

// F_{lam+mu}(x) <= F_mu(x) e^{max_w (w lam)(x)} with mu dominant
std::vector<CaseSpec> shift_cases(const SuiteConfig& cfg, bool tau_level) {
  std::vector<CaseSpec> specs;
  for_each_setting(cfg, 41, [&](const RootSystem& rs, const Mult& m, double ell, Rng& g) {
    const Point lam = random_box(g, rs.rank(), 2.0);
    const Point mu = g() % 3 == 0 ? Point(Point::Zero(rs.rank()))
                                  : dominant_representative(rs, random_box(g, rs.rank(), 2.0)).point;
    const auto xf = sample_points(g, rs, cfg.x_samples);
    const auto xg = g_points(g, rs, cfg.x_samples);
    specs.push_back({label_of(rs.rank(), m, ell) + label_lam(to_covec(lam)) + " mu" +
                         label_lam(to_covec(mu)).substr(4),
                     [=, &cfg] {
      Outcome o;
      const double tol = cfg.tolerance;
      auto e = [&](const Point& x) { return std::exp(max_w_pairing(rs, lam, x)); };
      if (tau_level) {
        const TauFunction a = tau(rs, m, ell, to_covec(lam + mu), cfg);
        const TauFunction b = tau(rs, m, ell, to_covec(mu), cfg);
        for (const auto& x : xf) o.le(a.f(x).value.real(), b.f(x).value.real() * e(x), tol, "F_ell shift");
        for (const auto& x : xg) o.le(a.g(x).value.real(), b.g(x).value.real() * e(x), tol, "G_ell shift");
      } else {
        const Mult ml = deform(m, ell);
        const HOFunction a = ho(rs, ml, to_covec(lam + mu), cfg), b = ho(rs, ml, to_covec(mu), cfg);
        for (const auto& x : xf) o.le(a.F(x).value.real(), b.F(x).value.real() * e(x), tol, "F shift");
        for (const auto& x : xg) o.le(a.G(x).value.real(), b.G(x).value.real() * e(x), tol, "G shift");
      }
      return o;
    }});
  });
  return specs;
}

// F(x+x1) e^{-(lam+rho)(x1)} <= F(x) <= F(x+x1) e^{(lam+rho)(x1)}
std::vector<CaseSpec> subadditivity_cases(const SuiteConfig& cfg, bool tau_level) {
  std::vector<CaseSpec> specs;
  for_each_setting(cfg, 53, [&](const RootSystem& rs, const Mult& m, double ell, Rng& g) {
    const int r = rs.rank();
    const Point lam = dominant_representative(rs, random_box(g, r, 3.0)).point;
    std::vector<std::pair<Point, Point>> pts;
    for (int k = 0; k < cfg.x_samples; ++k) {
      const Point x1 = random_chamber(g, r, 0.02, 0.1);
      const Point x = k % 2 == 0 ? random_ball(g, r, 0.5)
                                 : random_chamber(g, r, 0.35, 1.0);
      pts.emplace_back(x, x1);
    }
    specs.push_back({label_of(r, m, ell) + label_lam(to_covec(lam)), [=, &cfg] {
      Outcome o;
      const double tol = cfg.tolerance;
      // For F_ell the exponent has to be rho(m): the factor u^{-ell} moves by
      // up to e^{|ell| sum beta_j(x1) / 2}, which rho(m(ell)) does not absorb.
      const Point rl = tau_level ? rho(rs, m) : rho(rs, deform(m, ell));
      const TauFunction t = tau(rs, m, ell, to_covec(lam), cfg);
      const HOFunction h = ho(rs, deform(m, ell), to_covec(lam), cfg);
      for (const auto& [x, x1] : pts) {
        const double e = std::exp((lam + rl).dot(x1));
        const double f0 = tau_level ? t.f(x).value.real() : h.F(x).value.real();
        const double f1 = tau_level ? t.f(x + x1).value.real() : h.F(x + x1).value.real();
        o.le(f1 / e, f0, tol, "lower");
        o.le(f0, f1 * e, tol, "upper");
      }
      return o;
    }});
  });
  return specs;
}

std::vector<CaseSpec> lemma42_cases(const SuiteConfig& cfg) {
  std::vector<CaseSpec> specs;
  std::vector<Mult> ms;
  for (const Mult& m : cfg.multiplicities)
    for (double ell : ell_grid(m, std::max(cfg.ell_points, 5))) ms.push_back(deform(m, ell));
  for (const Mult& m : ms) {
    specs.push_back({label_of(0, m, 0).substr(4), [m] {
      Outcome o;
      const auto f = region_flags(m);
      for (int k = -200; k <= 200; ++k) {
        const double t = (k < 0 ? -1.0 : 1.0) * (k == 0 ? 0.0 : std::pow(10.0, -6 + std::abs(k) * 0.04));
        if (f.in_Mplus || f.in_M3)
          o.le(0.0, m.s / 2 + m.l / (1 + std::exp(t)), 1e-12, "(a)");
        if (f.in_M2 || f.in_M3)
          o.le(0.0, m.s / 2 + m.l * (1 + std::exp(2 * t)) / std::pow(1 + std::exp(t), 2), 1e-12, "(b)");
      }
      if (!std::isfinite(o.margin)) o.margin = 1.0;
      return o;
    }});
  }
  return specs;
}

struct SharpSetting {
  int rank;
  Mult m;
  double ell;
  Point lam0;
  std::string name;
};

std::vector<SharpSetting> sharp_settings(const SuiteConfig& cfg) {
  std::vector<SharpSetting> out;
  for (int r : cfg.ranks) {
    const RootSystem rs(r);
    for (const Mult& m : cfg.sharp_multiplicities) {
      const auto [lo, hi] = ell_range(m);
      for (double ell : {0.0, 0.5 * hi, lo + 0.25 * (hi - lo)}) {
        const Point rh = rho(rs, deform(m, ell));
        std::vector<std::pair<std::string, Point>> lams = {
            {"0", Point::Zero(r)}, {"rho/2", 0.5 * rh}};
        if (r >= 2) {
          Point w = Point::Zero(r);
          w(r - 1) = 1.3;
          lams.push_back({"wall", w});
        }
        for (const auto& [nm, l0] : lams) out.push_back({r, m, ell, l0, nm});
      }
    }
  }
  return out;
}

// Ratio to prod(1 + alpha(x)) e^{(lam0 - rho)(x)} along a ray up to beta(x) = 8.
std::vector<CaseSpec> sharp_cases(const SuiteConfig& cfg, bool tau_level) {
  std::vector<CaseSpec> specs;
  for (const auto& st : sharp_settings(cfg)) {
    specs.push_back({label_of(st.rank, st.m, st.ell) + " lam0=" + st.name, [st, &cfg, tau_level] {
      const RootSystem rs(st.rank);
      const int r = st.rank;
      Point dir(r);
      for (int i = 0; i < r; ++i) dir(i) = i + 1.0;
      const Point x0 = (cfg.eval.delta + 0.05) * dir;
      const double beta_dir = rs.chamber_margin(dir);
      const Mult ml = deform(st.m, st.ell);
      const HOFunction h = ho(rs, ml, to_covec(st.lam0), cfg);
      const TauFunction t = tau(rs, st.m, st.ell, to_covec(st.lam0), cfg);
      double lo = INFINITY, hi = 0.0;
      const int n = 25;
      for (int k = 0; k < n; ++k) {
        const double s = (8.0 / beta_dir) * k / (n - 1);
        const Point x = x0 + s * dir;
        const double v = tau_level ? sharp_ratio(rs, st.m, st.lam0, x, t.f(x).value.real())
                                   : sharp_ratio(rs, ml, st.lam0, x, h.F(x).value.real());
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      Outcome o;
      o.le(hi / lo, 100.0, 0.0, "window C/c");
      if (!(lo > 0)) o.le(1.0, 0.0, 0.0, "ratio not positive");
      return o;
    }});
  }
  return specs;
}

// Minkowski gauge of the hull of W rho: largest partial-sum ratio.
double hull_gauge(const RootSystem& rs, const Point& rh, const Point& y) {
  const Point yp = dominant_representative(rs, y).point;
  const Point rp = dominant_representative(rs, rh).point;
  double g = 0, a = 0, b = 0;
  for (int j = rs.rank() - 1; j >= 0; --j) {
    a += yp(j);
    b += rp(j);
    g = std::max(g, a / b);
  }
  return g;
}

std::vector<CaseSpec> boundedness_cases(const SuiteConfig& cfg) {
  std::vector<CaseSpec> specs;
  Rng g(cfg.seed * 1000003u + 67);
  for (int r : cfg.ranks) {
    const RootSystem rs(r);
    for (const Mult& m : cfg.multiplicities) {
      const double lmax = ell_range(m).second;
      const Point rh = rho(rs, m);
      for (int s = 0; s < cfg.bounded_samples; ++s) {
        // |ell| < ell_max, plus ell = ell_max itself in rank one.
        double ell = unif(g, -0.9, 0.9) * lmax;
        if (r == 1 && s % 10 == 9) ell = lmax;
        const bool inside = s % 2 == 0;
        const double scale = inside ? unif(g, 0.1, 0.85) : unif(g, 1.25, 2.0);
        Point y = random_box(g, r, 1.0);
        if (y.norm() < 1e-3) y = Point::Ones(r);
        const Point re = y * (scale / hull_gauge(rs, rh, y));
        Covec lam = to_covec(re);
        if (s % 3 == 0)
          for (int i = 0; i < r; ++i) lam(i) += cplx(0.0, unif(g, -2.0, 2.0));
        specs.push_back({label_of(r, m, ell) + label_lam(lam), [=, &cfg] {
          BoundednessOptions bo;
          bo.eval = cfg.eval;
          const auto res = classify_boundedness(rs, m, ell, lam, bo);
          Outcome o;
          const bool hull = hull_membership(rs, rh, lam.real());
          o.le(hull == res.bounded ? 0.0 : 1.0, 0.0, 0.0, "verdict matches hull membership");
          if (hull) {
            // Sup of |F_{ell,lam}| over a grid in the closed chamber and near 0.
            TauRequest req;
            req.m = m;
            req.ell = ell;
            req.lam = lam;
            req.opt = cfg.eval;
            const TauFunction t(rs, req);
            Rng gg(static_cast<std::uint64_t>(std::abs(lam(0).real()) * 1e6) + 5);
            double sup = res.sup_abs;
            for (int k = 0; k < 8; ++k) {
              const Point x = k % 2 ? random_chamber(gg, r, 0.35, 2.0) : random_ball(gg, r, 0.7);
              sup = std::max(sup, std::abs(t.f(x).value));
            }
            o.le(sup, 1.0 + 1e-6, 0.0, "sup |F_ell|");
          }
          return o;
        }});
      }
    }
  }
  // Dominance criterion against explicit facets.
  for (int r = 1; r <= 3; ++r) {
    const RootSystem rs(r);
    const Point rh = rho(rs, Mult{2, 1, 1});
    std::vector<Point> pts;
    for (int k = 0; k < 500; ++k) {
      Point y = random_box(g, r, 1.0);
      const double gauge = hull_gauge(rs, rh, y);
      // Stay 1e-6 away from the boundary except for a few exact vertices.
      double sc = unif(g, 0.2, 1.8);
      if (std::abs(sc - 1.0) < 1e-6) sc += 1e-3;
      pts.push_back(k % 100 == 0 ? Point(random_weyl(g, rs).apply(rh)) : Point(y * (sc / gauge)));
    }
    specs.push_back({"hull r=" + std::to_string(r), [rs, rh, pts] {
      Outcome o;
      int mismatches = 0;
      for (const auto& p : pts)
        if (hull_membership(rs, rh, p) != hull_membership_bruteforce(rs, rh, p)) ++mismatches;
      o.le(mismatches, 0.0, 0.0, "mismatches over 500 points");
      return o;
    }});
  }
  return specs;
}

void append(std::vector<CaseSpec>& a, std::vector<CaseSpec> b, const std::string& prefix) {
  for (auto& c : b) {
    c.label = prefix + " " + c.label;
    a.push_back(std::move(c));
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "positivity", "modulus", "sqrt_w", "shift", "subadditivity",
      "sharp_ratio", "lemma42", "boundedness", "tau"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (cfg.schema_version != kSuiteSchemaVersion)
    throw Error(ErrorCode::InvalidArgument, "unsupported suite config schema version");
  std::vector<CaseSpec> specs;
  if (name == "positivity") specs = positivity_cases(cfg, false);
  else if (name == "modulus") specs = modulus_cases(cfg, false);
  else if (name == "sqrt_w") specs = sqrt_w_cases(cfg, false);
  else if (name == "shift") specs = shift_cases(cfg, false);
  else if (name == "subadditivity") specs = subadditivity_cases(cfg, false);
  else if (name == "sharp_ratio") specs = sharp_cases(cfg, false);
  else if (name == "lemma42") specs = lemma42_cases(cfg);
  else if (name == "boundedness") specs = boundedness_cases(cfg);
  else if (name == "tau") {
    append(specs, sqrt_w_cases(cfg, true), "(a)");
    append(specs, positivity_cases(cfg, true), "(b)");
    append(specs, modulus_cases(cfg, true), "(c)");
    append(specs, shift_cases(cfg, true), "(d)");
    append(specs, subadditivity_cases(cfg, true), "(e)");
    append(specs, sharp_cases(cfg, true), "(f)");
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
  }
  return run_cases(name, std::move(specs), cfg);
}

nlohmann::json to_json(const SuiteConfig& cfg) {
  nlohmann::json j;
  j["schema_version"] = cfg.schema_version;
  j["seed"] = cfg.seed;
  j["ranks"] = cfg.ranks;
  auto& ms = j["multiplicities"] = nlohmann::json::array();
  for (const auto& m : cfg.multiplicities) ms.push_back({m.s, m.m, m.l});
  auto& sm = j["sharp_multiplicities"] = nlohmann::json::array();
  for (const auto& m : cfg.sharp_multiplicities) sm.push_back({m.s, m.m, m.l});
  j["ell_points"] = cfg.ell_points;
  j["lambda_samples"] = cfg.lambda_samples;
  j["x_samples"] = cfg.x_samples;
  j["bounded_samples"] = cfg.bounded_samples;
  j["tolerance"] = cfg.tolerance;
  j["max_height"] = cfg.eval.max_height;
  j["degree"] = cfg.eval.degree;
  j["delta"] = cfg.eval.delta;
  j["trust_radius"] = cfg.eval.trust_radius;
  return j;
}

SuiteConfig suite_config_from_json(const nlohmann::json& j) {
  SuiteConfig cfg;
  try {
    cfg.schema_version = j.at("schema_version").get<int>();
    if (cfg.schema_version != kSuiteSchemaVersion)
      throw Error(ErrorCode::InvalidArgument, "unsupported schema_version");
    cfg.seed = j.value("seed", cfg.seed);
    cfg.ranks = j.value("ranks", cfg.ranks);
    auto mults = [&](const char* key, std::vector<Mult>& dst) {
      if (!j.contains(key)) return;
      dst.clear();
      for (const auto& t : j.at(key)) {
        const auto v = t.get<std::vector<double>>();
        if (v.size() != 3) throw Error(ErrorCode::InvalidArgument, "multiplicity needs 3 entries");
        dst.push_back({v[0], v[1], v[2]});
      }
    };
    mults("multiplicities", cfg.multiplicities);
    mults("sharp_multiplicities", cfg.sharp_multiplicities);
    cfg.ell_points = j.value("ell_points", cfg.ell_points);
    cfg.lambda_samples = j.value("lambda_samples", cfg.lambda_samples);
    cfg.x_samples = j.value("x_samples", cfg.x_samples);
    cfg.bounded_samples = j.value("bounded_samples", cfg.bounded_samples);
    cfg.tolerance = j.value("tolerance", cfg.tolerance);
    cfg.eval.max_height = j.value("max_height", cfg.eval.max_height);
    cfg.eval.degree = j.value("degree", cfg.eval.degree);
    cfg.eval.delta = j.value("delta", cfg.eval.delta);
    cfg.eval.trust_radius = j.value("trust_radius", cfg.eval.trust_radius);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad suite config: ") + e.what());
  }
  for (int r : cfg.ranks)
    if (r < 1 || r > kMaxRank) throw Error(ErrorCode::RankUnsupported, "bad rank in config");
  return cfg;
}

nlohmann::json to_json(const SuiteReport& rep, bool include_cases) {
  nlohmann::json j;
  j["suite"] = rep.name;
  j["passed"] = rep.passed;
  j["cases"] = rep.cases.size();
  j["worst_margin"] = std::isfinite(rep.worst_margin) ? nlohmann::json(rep.worst_margin)
                                                      : nlohmann::json(nullptr);
  int failed = 0;
  for (const auto& c : rep.cases) failed += !c.passed;
  j["failed"] = failed;
  if (include_cases) {
    auto& arr = j["details"] = nlohmann::json::array();
    for (const auto& c : rep.cases) {
      nlohmann::json cj;
      cj["index"] = c.index;
      cj["label"] = c.label;
      cj["passed"] = c.passed;
      cj["margin"] = std::isfinite(c.margin) ? nlohmann::json(c.margin) : nlohmann::json(nullptr);
      cj["detail"] = c.detail;
      arr.push_back(cj);
    }
  }
  return j;
}

}  // namespace hogeom
