#include <doctest.h>

#include <cmath>

#include "hogeom/taufun.hpp"
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

TauRequest req(Mult m, double ell, Covec lam, Method method = Method::Auto) {
  TauRequest q;
  q.m = m;
  q.ell = ell;
  q.lam = std::move(lam);
  q.method = method;
  return q;
}

}  // namespace

TEST_CASE("u") {
  CHECK(u_func(RootSystem(3), Point::Zero(3)) == 1.0);
  CHECK(std::abs(u_func(RootSystem(1), pt({1.0})) - 1.5430806348152437) < 1e-15);
  const RootSystem rs(3);
  const Point x = pt({0.3, -1.2, 0.8});
  for (const auto& w : rs.weyl_elements()) CHECK(std::abs(u_func(rs, w.apply(x)) - u_func(rs, x)) < 1e-14);
}

TEST_CASE("rho_ell") {
  const RootSystem rs2(2);
  CHECK((rho_ell(rs2, Mult{2, 1, 1}, 1.0) - pt({1, 2})).norm() < 1e-15);
  CHECK((rho_ell(rs2, Mult{2, 1, 1}, 0.0) - rho(rs2, Mult{2, 1, 1})).norm() == 0.0);
  for (double ell : {-0.7, 0.4, 1.5}) {
    CHECK(std::abs(rho_ell(RootSystem(1), Mult{2, 0, 1}, ell)(0) - (2 - ell)) < 1e-15);
    const RootSystem rs3(3);
    CHECK((rho_ell(rs3, Mult{1.5, 0.5, 1}, ell) - rho(rs3, deform(Mult{1.5, 0.5, 1}, ell))).norm() < 1e-14);
  }
}

TEST_CASE("F_ell = F_{-ell} and rank-one agreement") {
  const Mult m{2, 1, 1};
  for (int r = 1; r <= 2; ++r) {
    const RootSystem rs(r);
    Covec lam(r);
    for (int i = 0; i < r; ++i) lam(i) = cplx(0.35 + 0.8 * i, 0.3);
    for (double ell : {0.4, 1.0}) {
      for (const Point& x : {Point(Point::LinSpaced(r, 0.2, 0.4)), Point(Point::LinSpaced(r, 0.9, 2.1))}) {
        const Estimate a = f_ell(rs, req(m, ell, lam), x);
        const Estimate b = f_ell(rs, req(m, -ell, lam), x);
        CHECK(std::abs(a.value - b.value) < 1e-9 * (1 + std::abs(a.value)));
      }
    }
  }
  const RootSystem rs(1);
  for (double x : {0.3, 1.0, 2.5}) {
    const cplx want = f_ell_r1(m, 0.6, {1.1, -0.5}, x).value;
    for (Method me : {Method::Auto, Method::HCSeries}) {
      if (me == Method::HCSeries && x < 0.5) continue;
      CHECK(std::abs(f_ell(rs, req(m, 0.6, cv({{1.1, -0.5}}), me), pt({x})).value - want) < 1e-8);
    }
    if (x < 0.8)
      CHECK(std::abs(f_ell(rs, req(m, 0.6, cv({{1.1, -0.5}}), Method::Taylor), pt({x})).value - want) < 1e-8);
  }
}

TEST_CASE("ell = 0 is the plain F") {
  const RootSystem rs(2);
  const Covec lam = cv({0.4, {1.3, 0.2}});
  const HOFunction ho(rs, Mult{2, 1, 1}, lam);
  const Point x = pt({0.8, 1.9});
  CHECK(std::abs(f_ell(rs, req(Mult{2, 1, 1}, 0.0, lam), x).value - ho.F(x).value) < 1e-14);
}

TEST_CASE("G_ell at 0 and Weyl average gives F_ell") {
  for (int r = 1; r <= 2; ++r) {
    const RootSystem rs(r);
    Covec lam(r);
    for (int i = 0; i < r; ++i) lam(i) = cplx(0.5 + 0.7 * i, -0.2);
    const TauFunction tf(rs, req(Mult{2, 1, 1}, 0.6, lam));
    CHECK(std::abs(tf.g(Point::Zero(r)).value - 1.0) < 1e-14);
    const Point x = Point::LinSpaced(r, 0.45, 0.15);
    cplx avg = 0;
    for (const auto& w : rs.weyl_elements()) avg += tf.g(w.inverse().apply(x)).value;
    avg /= double(rs.weyl_order());
    CHECK(std::abs(avg - tf.f(x).value) < 1e-8);
  }
}

TEST_CASE("rank one: G_ell differs from G_{-ell} by the closed-form difference") {
  const RootSystem rs(1);
  const Mult m{2, 1, 1};
  const cplx lam(0.8, 0.3);
  for (double x : {0.2, 0.7}) {
    const cplx gp = g_ell(rs, req(m, 0.9, cv({lam})), pt({x})).value;
    const cplx gm = g_ell(rs, req(m, -0.9, cv({lam})), pt({x})).value;
    CHECK(std::abs(gp - gm) > 1e-3);
    CHECK(std::abs((gm - gp) - g_ell_difference_r1(m, 0.9, lam, x)) < 1e-8);
  }
}

TEST_CASE("tau eigen-equations by finite differences") {
  const Mult m{2, 1, 1};
  for (int r = 1; r <= 2; ++r) {
    const RootSystem rs(r);
    Covec lam(r);
    for (int i = 0; i < r; ++i) lam(i) = cplx(0.3 + 0.9 * i, 0.4);
    const double ell = 0.7;
    const TauFunction tf(rs, req(m, ell, lam));
    const Fn F = [&](const Point& y) { return tf.f(y).value; };
    const Point x = Point::LinSpaced(r, 0.6, 1.5);
    const cplx lhs = apply_L_ell(rs, m, ell, F, x) + rho(rs, m).squaredNorm() * F(x);
    CHECK(std::abs(lhs - bilinear(lam, lam) * F(x)) < 1e-4 * (1 + std::abs(F(x))));
  }
  const RootSystem rs(1);
  const TauFunction tf(rs, req(m, -0.8, cv({{1.2, 0.5}})));
  const Fn G = [&](const Point& y) { return tf.g(y).value; };
  for (double x : {-0.5, 0.4}) {
    const cplx lhs = apply_cherednik(rs, m, Point::Ones(1), G, pt({x}), FDConfig{}, -0.8);
    CHECK(std::abs(lhs - cplx(1.2, 0.5) * G(pt({x}))) < 1e-4);
  }
}

TEST_CASE("method availability") {
  const RootSystem rs(2);
  auto code = [&](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  const TauRequest rq = req(Mult{2, 1, 1}, 0.5, cv({0.3, 1.1}), Method::RankOne);
  CHECK(code([&] { f_ell(rs, rq, pt({1, 2})); }) == ErrorCode::MethodUnavailable);
  const TauRequest hq = req(Mult{2, 1, 1}, 0.5, cv({0.3, 1.1}), Method::HCSeries);
  CHECK(code([&] { g_ell(rs, hq, pt({1, 2})); }) == ErrorCode::MethodUnavailable);
  CHECK_THROWS_AS(f_ell(rs, req(Mult{2, 1, 2}, 0.5, cv({0.3, 1.1})), pt({1, 2})), Error);
}
