#include <doctest.h>

#include <cmath>

#include "hogeom/suites.hpp"
#include "hogeom/verify.hpp"

using namespace hogeom;

namespace {

Point pt(std::initializer_list<double> v) {
  Point p(v.size());
  int i = 0;
  for (double x : v) p(i++) = x;
  return p;
}

Covec cv(std::initializer_list<cplx> v) {
  Covec c(v.size());
  int i = 0;
  for (cplx x : v) c(i++) = x;
  return c;
}

}  // namespace

TEST_CASE("finite-difference operators on simple functions") {
  const RootSystem rs(2);
  const Mult m{2, 1, 1};
  const Fn one = [](const Point&) { return cplx(1.0); };
  const Point x = pt({0.7, 1.3});
  CHECK(std::abs(apply_L(rs, m, one, x)) < 1e-12);
  CHECK(std::abs(apply_L_ell(rs, m, 0.0, one, x)) < 1e-12);
  const Point rh = rho(rs, m);
  for (int j = 0; j < 2; ++j) {
    const Point xi = Point::Unit(2, j);
    CHECK(std::abs(apply_cherednik(rs, m, xi, one, x) + rh.dot(xi)) < 1e-10);
  }
  // Leading term e^{(lam - rho)(x)} far out: coth -> 1
  const Covec lam = cv({0.6, 1.7});
  const Fn lead = [&](const Point& y) { return std::exp(bilinear(lam - to_covec(rh), y.cast<cplx>())); };
  const Point far = pt({9.0, 19.0});
  const cplx want = (bilinear(lam, lam) - rh.squaredNorm()) * lead(far);
  CHECK(std::abs(apply_L(rs, m, lead, far) - want) < 1e-5 * std::abs(want));
}

TEST_CASE("hull membership examples") {
  const RootSystem r1(1), r2(2);
  CHECK(hull_membership(r1, pt({2}), pt({1.5})));
  CHECK(hull_membership(r1, pt({2}), pt({-2})));
  CHECK_FALSE(hull_membership(r1, pt({2}), pt({2.5})));
  CHECK(hull_membership(r2, pt({2, 3}), pt({2, 3})));
  CHECK(hull_membership(r2, pt({2, 3}), pt({2.5, 2.5})));
  CHECK(hull_membership_bruteforce(r2, pt({2, 3}), pt({2.5, 2.5})));
  CHECK_FALSE(hull_membership(r2, pt({2, 3}), pt({2.6, 2.6})));
  CHECK(hull_membership(r2, pt({2, 3}), pt({-3, 0.5})));
}

TEST_CASE("hull membership agrees with explicit facets") {
  for (int r = 1; r <= 3; ++r) {
    const RootSystem rs(r);
    const Point rh = rho(rs, Mult{1.5, 0.7, 1});
    std::uint64_t s = 12345;
    auto unif = [&] {
      s = s * 6364136223846793005ULL + 1442695040888963407ULL;
      return double(s >> 11) / double(1ULL << 53);
    };
    for (int k = 0; k < 300; ++k) {
      Point p(r);
      for (int i = 0; i < r; ++i) p(i) = (unif() * 2 - 1) * 1.3 * rh(r - 1);
      CHECK(hull_membership(rs, rh, p) == hull_membership_bruteforce(rs, rh, p));
    }
  }
}

TEST_CASE("boundedness classifier") {
  const RootSystem rs(1);
  const Mult m{2, 1, 1};
  const BoundednessResult out = classify_boundedness(rs, m, 0.5, cv({2.5}));
  CHECK_FALSE(out.in_tube);
  CHECK_FALSE(out.bounded);
  CHECK(out.sup_abs > 10);
  CHECK(out.growth_rate > 0);
  const BoundednessResult in = classify_boundedness(rs, m, 0.5, cv({{1.2, 3.0}}));
  CHECK(in.in_tube);
  CHECK(in.bounded);
  CHECK(in.sup_abs <= 1 + 1e-6);
}

TEST_CASE("sharp ratio is 1 at the origin") {
  const RootSystem rs(2);
  CHECK(std::abs(sharp_ratio(rs, Mult{2, 1, 1}, pt({0, 0}), pt({0, 0}), 1.0) - 1.0) < 1e-15);
}

TEST_CASE("subadditivity needs rho(m), not rho(m(ell))") {
  // F_ell(x) <= F_ell(x + x1) e^{(lam + rho)(x1)}: with rho(m(ell)) = 1.5 in
  // the exponent the inequality fails, with rho(m) = 2 it holds.
  const Mult m{2, 1, 1};
  const double fx = f_ell_r1(m, 0.5, 0.0, 3.0).value.real();
  const double fxx = f_ell_r1(m, 0.5, 0.0, 5.0).value.real();
  CHECK(std::abs(fx - 0.04282) < 1e-5);
  CHECK(fx > fxx * std::exp(1.5 * 2.0));
  CHECK(std::abs(fxx * std::exp(1.5 * 2.0) - 0.02881) < 1e-5);
  CHECK(fx <= fxx * std::exp(2.0 * 2.0));
}

TEST_CASE("suite config round trip and a small suite") {
  SuiteConfig cfg;
  cfg.seed = 11;
  cfg.ranks = {1};
  cfg.multiplicities = {{2, 1, 1}};
  cfg.ell_points = 2;
  cfg.lambda_samples = 1;
  cfg.x_samples = 3;
  const SuiteConfig back = suite_config_from_json(to_json(cfg));
  CHECK(to_json(back).dump() == to_json(cfg).dump());
  for (const auto& name : {"positivity", "modulus", "sqrt_w", "lemma42"}) {
    const SuiteReport rep = run_suite(name, cfg);
    CHECK_MESSAGE(rep.passed, name);
    CHECK_FALSE(rep.cases.empty());
    const SuiteReport again = run_suite(name, cfg);
    CHECK(to_json(again).dump() == to_json(rep).dump());
  }
  CHECK_THROWS_AS(run_suite("nope", cfg), Error);
}
