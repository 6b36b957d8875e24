// One line per acceptance criterion. Tolerances and time budgets are fixed
// here; the binary exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hogeom/suites.hpp"

using namespace hogeom;

namespace {

using Rng = std::mt19937_64;

double unif(Rng& g, double a, double b) { return std::uniform_real_distribution<double>(a, b)(g); }

// Largest observed error relative to its tolerance.
struct Worst {
  double ratio = 0.0;
  double value = 0.0, tol = 0.0;
  std::string where;
  int checks = 0;

  void add(double err, double tol_, const std::string& at) {
    ++checks;
    const double r = std::isfinite(err) ? err / tol_ : INFINITY;
    if (r > ratio || checks == 1) ratio = r, value = err, tol = tol_, where = at;
  }
  bool ok() const { return checks > 0 && ratio <= 1.0; }
  std::string summary() const {
    std::ostringstream os;
    os << checks << " checks, worst " << value << " (tol " << tol << ")";
    if (!ok()) os << " at " << where;
    return os.str();
  }
};

struct Result {
  bool pass = false;
  std::string summary;
};

Result from(const Worst& w) { return {w.ok(), w.summary()}; }

std::string tag(int r, const Mult& m, double ell) {
  std::ostringstream os;
  os << "r=" << r << " m=(" << m.s << "," << m.m << "," << m.l << ") ell=" << ell;
  return os.str();
}

Covec random_lambda(Rng& g, int r, double re, double im) {
  Covec lam(r);
  for (int i = 0; i < r; ++i) lam(i) = cplx(unif(g, -re, re), unif(g, -im, im));
  return lam;
}

TauRequest tau_req(const Mult& m, double ell, const Covec& lam, Method method) {
  TauRequest q;
  q.m = m;
  q.ell = ell;
  q.lam = lam;
  q.method = method;
  return q;
}

// A point with every simple root at least `margin`.
Point chamber_point(Rng& g, int r, double margin, double spread) {
  Point x(r);
  double acc = 0.0;
  for (int i = 0; i < r; ++i) {
    acc += margin + unif(g, 0.0, spread);
    x(i) = acc;
  }
  return x;
}

// A point of norm `radius` away from the walls.
Point small_point(Rng& g, int r, double radius) {
  Point x = chamber_point(g, r, 0.3, 1.0);
  for (int i = 0; i < r; ++i)
    if (unif(g, 0, 1) < 0.5) x(i) = -x(i);
  return x * (radius / x.norm());
}

const std::vector<Mult> kMults{{2, 1, 1}, {4, 4, 1}, {0, 2, 1}};

// 1. F(0) = G(0) = 1 on the Taylor path.
Result normalization() {
  constexpr double kTol = 1e-12;
  Rng g(101);
  Worst w;
  for (int k = 0; k < 50; ++k) {
    const int r = 1 + k % 3;
    const Mult m{unif(g, 0.1, 5.0), unif(g, 0.1, 4.0), 1.0};
    const auto [lo, hi] = ell_range(m);
    const double ell = lo + (hi - lo) * unif(g, 0.05, 0.95);
    TauRequest q = tau_req(m, ell, random_lambda(g, r, 4, 3), Method::Taylor);
    q.opt.degree = 12;  // only the constant layer matters at 0
    const RootSystem rs(r);
    const TauFunction tf(rs, q);
    const Point zero = Point::Zero(r);
    w.add(std::abs(tf.f(zero).value - 1.0), kTol, tag(r, m, ell) + " F");
    w.add(std::abs(tf.g(zero).value - 1.0), kTol, tag(r, m, ell) + " G");
  }
  return from(w);
}

// 2. F_{rho(m(ell))}(m(ell)) = 1 through hcseries and localseries.
Result lambda_rho() {
  constexpr double kTol = 1e-8;
  Rng g(202);
  Worst w;
  for (int r = 1; r <= 2; ++r) {
    const RootSystem rs(r);
    for (const Mult& m : kMults) {
      const auto [lo, hi] = ell_range(m);
      for (double t : {0.1, 0.5, 0.9}) {
        const double ell = lo + t * (hi - lo);
        const Mult ml = deform(m, ell);
        const Covec lam = to_covec(rho(rs, ml));
        const HOFunction hc(rs, ml, lam, Method::HCSeries);
        const HOFunction ts(rs, ml, lam, Method::Taylor);
        for (int k = 0; k < 5; ++k) {
          const Point xc = chamber_point(g, r, 0.35, 1.5);
          w.add(std::abs(hc.F(xc).value - 1.0), kTol, tag(r, m, ell) + " hcseries");
          const Point xs = small_point(g, r, unif(g, 0.05, 0.5));
          w.add(std::abs(ts.F(xs).value - 1.0), kTol, tag(r, m, ell) + " taylor");
        }
      }
    }
  }
  return from(w);
}

// 3. Rank one: hcseries and localseries against the closed form.
Result rank_one_oracle() {
  constexpr double kTol = 1e-8;
  Rng g(303);
  Worst w;
  const RootSystem rs(1);
  for (int k = 0; k < 100; ++k) {
    const Mult m{unif(g, 0.2, 5.0), 0.0, 1.0};
    const auto [lo, hi] = ell_range(m);
    const double ell = lo + (hi - lo) * unif(g, 0.02, 0.98);
    const Covec lam = random_lambda(g, 1, 4, 3);
    const double xh = unif(g, 0.5, 4.0), xl = unif(g, 0.02, 0.5);
    for (auto [x, method] : {std::pair{xh, Method::HCSeries}, std::pair{xl, Method::Taylor}}) {
      Point p(1);
      p << x;
      const cplx got = f_ell(rs, tau_req(m, ell, lam, method), p).value;
      const cplx want = f_ell_r1(m, ell, lam(0), x).value;
      w.add(std::abs(got - want) / std::max(1.0, std::abs(want)), kTol,
            tag(1, m, ell) + (method == Method::Taylor ? " taylor" : " hcseries"));
    }
  }
  return from(w);
}

// 4. Euler integral against the closed form inside the strip.
Result integral_form() {
  constexpr double kTol = 1e-8;
  Rng g(404);
  Worst w;
  for (int k = 0; k < 30; ++k) {
    const Mult m{unif(g, 0.5, 5.0), 0.0, 1.0};
    const double rh = m.s / 2 + 1;
    const double ell = unif(g, -0.9, 0.9) * rh;
    const double a = -(rh - ell), b = rh + ell;
    const cplx lam(a + (b - a) * unif(g, 0.1, 0.9), unif(g, -2, 2));
    const double x = unif(g, 0.0, 3.0);
    const cplx want = f_ell_r1(m, ell, lam, x).value;
    const cplx got = f_ell_r1_integral(m, ell, lam, x).value;
    w.add(std::abs(got - want) / std::max(1.0, std::abs(want)), kTol, tag(1, m, ell));
  }
  return from(w);
}

// 5. Finite-difference residuals of the four eigen-equations at h = 1e-3,
// relative to (1 + |eigenvalue|) |f(x)|.
Result conjugation() {
  constexpr double kTol = 1e-4;
  const FDConfig fd{1e-3};
  Rng g(505);
  Worst w;
  for (int r = 1; r <= 2; ++r) {
    const RootSystem rs(r);
    for (const Mult& m : kMults) {
      const auto [lo, hi] = ell_range(m);
      for (int k = 0; k < 2; ++k) {
        const Covec lam = random_lambda(g, r, 2.5, 1.5);
        const double ell = lo + (hi - lo) * unif(g, 0.1, 0.9);
        const std::string at = tag(r, m, ell);
        const cplx eigL = bilinear(lam, lam);
        const double rr = rho(rs, m).squaredNorm();

        const HOFunction ho(rs, m, lam);
        const Fn F = [&](const Point& y) { return ho.F(y).value; };
        const Fn G = [&](const Point& y) { return ho.G(y).value; };
        const TauFunction tf(rs, tau_req(m, ell, lam, Method::Auto));
        const Fn Fl = [&](const Point& y) { return tf.f(y).value; };
        const Fn Gl = [&](const Point& y) { return tf.g(y).value; };

        for (const Point& x : {small_point(g, r, 0.4), chamber_point(g, r, 0.45, 1.0)}) {
          const cplx f0 = F(x);
          w.add(std::abs(apply_L(rs, m, F, x, fd) + rr * f0 - eigL * f0) /
                    ((1 + std::abs(eigL)) * std::abs(f0)),
                kTol, at + " L");
          const cplx fl = Fl(x);
          w.add(std::abs(apply_L_ell(rs, m, ell, Fl, x, fd) + rr * fl - eigL * fl) /
                    ((1 + std::abs(eigL)) * std::abs(fl)),
                kTol, at + " L_ell");
        }
        const Point xs = small_point(g, r, 0.4);
        for (int j = 0; j < r; ++j) {
          const Point xi = Point::Unit(r, j);
          const cplx g0 = G(xs), gl = Gl(xs);
          w.add(std::abs(apply_cherednik(rs, m, xi, G, xs, fd) - lam(j) * g0) /
                    ((1 + std::abs(lam(j))) * std::abs(g0)),
                kTol, at + " T");
          w.add(std::abs(apply_cherednik(rs, m, xi, Gl, xs, fd, ell) - lam(j) * gl) /
                    ((1 + std::abs(lam(j))) * std::abs(gl)),
                kTol, at + " T_ell");
        }
      }
    }
  }
  return from(w);
}

// 6. F_ell = F_{-ell}, W-invariance in x and lambda, and the G average.
Result symmetries() {
  constexpr double kTol = 1e-9, kAvgTol = 1e-8;
  Rng g(606);
  Worst w;
  for (int r = 1; r <= 2; ++r) {
    const RootSystem rs(r);
    const auto ws = rs.weyl_elements();
    for (const Mult& m : kMults) {
      const auto [lo, hi] = ell_range(m);
      const double span = std::min(-lo, hi);
      for (int k = 0; k < 2; ++k) {
        const Covec lam = random_lambda(g, r, 3, 2);
        const double ell = span * unif(g, 0.1, 0.9);
        const std::string at = tag(r, m, ell);
        const TauFunction fp(rs, tau_req(m, ell, lam, Method::Auto));
        const TauFunction fm(rs, tau_req(m, -ell, lam, Method::Auto));
        for (const Point& x : {small_point(g, r, 0.4), chamber_point(g, r, 0.4, 1.2)}) {
          const cplx v = fp.f(x).value;
          const double scale = std::max(1.0, std::abs(v));
          w.add(std::abs(v - fm.f(x).value) / scale, kTol, at + " ell");
          for (const auto& el : ws) {
            w.add(std::abs(fp.f(el.apply(x)).value - v) / scale, kTol, at + " W x");
            const TauFunction fw(rs, tau_req(m, ell, el.apply(lam), Method::Auto));
            w.add(std::abs(fw.f(x).value - v) / scale, kTol, at + " W lambda");
          }
        }
        const Point xs = small_point(g, r, 0.45);
        cplx avg = 0.0;
        for (const auto& el : ws) avg += fp.g(el.inverse().apply(xs)).value;
        avg /= double(ws.size());
        w.add(std::abs(avg - fp.f(xs).value), kAvgTol, at + " average");
      }
    }
  }
  return from(w);
}

Result suites(const std::vector<std::string>& names) {
  const SuiteConfig cfg;
  Result res{true, ""};
  std::ostringstream os;
  for (const auto& name : names) {
    const SuiteReport rep = run_suite(name, cfg);
    std::size_t failed = 0;
    for (const auto& c : rep.cases) failed += !c.passed;
    res.pass = res.pass && rep.passed;
    os << (os.tellp() > 0 ? "; " : "") << name << " " << rep.cases.size() - failed << "/"
       << rep.cases.size() << " worst margin " << rep.worst_margin;
    for (const auto& c : rep.cases)
      if (!c.passed) {
        os << " [first failure: " << c.label << ": " << c.detail << "]";
        break;
      }
  }
  res.summary = os.str();
  return res;
}

// Gamma table rebuilt from the recursion with its own lattice bookkeeping.
std::map<std::vector<int>, cplx> naive_gamma(const RootSystem& rs, const Mult& m,
                                             const Covec& lam, int max_height) {
  const int r = rs.rank();
  const Covec shift = to_covec(rho(rs, m)) - lam;
  std::map<std::vector<int>, cplx> gam;
  std::vector<std::vector<int>> by_height;
  // n with sum n = h, for h = 0..max_height
  std::function<void(std::vector<int>&, int, int)> gen = [&](std::vector<int>& n, int i, int left) {
    if (i == r - 1) {
      n[i] = left;
      by_height.push_back(n);
      return;
    }
    for (int v = left; v >= 0; --v) {
      n[i] = v;
      gen(n, i + 1, left - v);
    }
  };
  for (int h = 0; h <= max_height; ++h) {
    std::vector<int> n(r);
    gen(n, 0, h);
  }
  for (const auto& n : by_height) {
    Point mu = Point::Zero(r);
    for (int i = 0; i < r; ++i) mu += 2.0 * n[i] * rs.simple_roots().col(i);
    if (mu.isZero()) {
      gam[n] = 1.0;
      continue;
    }
    cplx acc = 0.0;
    for (const Root& a : rs.positive_roots()) {
      for (int k = 1;; ++k) {
        std::vector<int> nk(r);
        bool ok = true;
        for (int i = 0; i < r; ++i) ok = ok && (nk[i] = n[i] - k * a.simple_coords(i)) >= 0;
        if (!ok) break;
        const Point v = mu - 2.0 * k * a.vec;
        acc += mult_of(m, a.cls) * gam.at(nk) * (v.dot(a.vec) + bilinear(shift, a.vec.cast<cplx>()));
      }
    }
    gam[n] = 2.0 * acc / bilinear(mu.cast<cplx>(), mu.cast<cplx>() - 2.0 * lam);
  }
  return gam;
}

// 10. Gamma recursion re-check and shell telescoping at max_height 40.
Result gamma_recursion() {
  constexpr double kTol = 1e-12;
  constexpr int kHeight = 40;
  Rng g(1010);
  Worst w;
  for (int k = 0; k < 20; ++k) {
    const int r = 1 + k % 3;
    const RootSystem rs(r);
    const Mult m{unif(g, 0.1, 4.0), unif(g, 0.1, 4.0), unif(g, 0.1, 3.0)};
    const Covec lam = random_lambda(g, r, 3, 2);
    const HCSeriesState st = gamma_coeffs(rs, m, lam, kHeight);
    const std::string at = tag(r, m, 0.0);
    const auto ref = naive_gamma(rs, m, lam, kHeight);
    double worst = 0.0;
    for (std::size_t i = 0; i < st.gamma.size(); ++i) {
      const cplx want = ref.at(st.points()[i].n);
      worst = std::max(worst, std::abs(st.gamma[i] - want) / std::max(1.0, std::abs(want)));
      const cplx rv = recursion_value(rs, st, i);
      worst = std::max(worst, std::abs(rv - st.gamma[i]) / std::max(1.0, std::abs(st.gamma[i])));
    }
    w.add(worst, kTol, at + " recursion");
    // Shell sums telescope to the directly summed partial series, height by height.
    const Point x = chamber_point(g, r, 0.4, 1.0);
    const PhiEval pe = phi_shells(rs, st, x);
    std::vector<cplx> direct(kHeight + 1, 0.0);
    double mass = 0.0;
    for (const auto& [n, gv] : ref) {
      Point mu = Point::Zero(r);
      int h = 0;
      for (int i = 0; i < r; ++i) mu += 2.0 * n[i] * rs.simple_roots().col(i), h += n[i];
      direct[h] += gv * std::exp(-mu.dot(x));
      mass += std::abs(gv) * std::exp(-mu.dot(x));
    }
    cplx partial = 0.0, shells = 0.0;
    double tele = 0.0;
    for (int h = 0; h <= kHeight; ++h) {
      partial += direct[h];
      shells += pe.shells[h];
      tele = std::max(tele, std::abs(partial - shells) / mass);
    }
    const cplx pref = std::exp(bilinear(lam - to_covec(rho(rs, m)), x.cast<cplx>()));
    tele = std::max(tele, std::abs(pref * shells - pe.est.value) / (std::abs(pref) * mass));
    w.add(tele, kTol, at + " telescoping");
  }
  return from(w);
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Result()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> all{
      {1, "normalization F(0) = G(0) = 1", 10, normalization},
      {2, "lambda = rho gives F = 1", 60, lambda_rho},
      {3, "rank-one oracle agreement", 120, rank_one_oracle},
      {4, "integral representation", 30, integral_form},
      {5, "eigen-equation residuals", 120, conjugation},
      {6, "symmetries", 60, symmetries},
      {7, "estimate suites", 300,
       [] { return suites({"positivity", "modulus", "sqrt_w", "shift", "subadditivity", "lemma42", "tau"}); }},
      {8, "boundedness classifier", 300, [] { return suites({"boundedness"}); }},
      {9, "sharp asymptotics window", 120, [] { return suites({"sharp_ratio"}); }},
      {10, "gamma recursion and telescoping", 60, gamma_recursion},
  };
  int failures = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.budget_s;
    const bool pass = r.pass && in_time;
    failures += !pass;
    std::printf("criterion %2d %-34s %s  %.1fs/%.0fs%s  %s\n", c.id, c.name, pass ? "PASS" : "FAIL",
                secs, c.budget_s, in_time ? "" : " (over budget)", r.summary.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", int(all.size()) - failures, all.size());
  return failures == 0 ? 0 : 1;
}
