#include <doctest.h>

#include <cmath>

#include "hogeom/rankone.hpp"
#include "hogeom/verify.hpp"

using namespace hogeom;

TEST_CASE("jacobi_phi special values") {
  CHECK(jacobi_phi(1.0, -0.5, {0.3, 0.2}, 0.0) == cplx(1.0));
  // lam = a + b + 1: first parameter vanishes
  for (double x : {0.2, 1.0, 3.0}) CHECK(std::abs(jacobi_phi(1.5, 0.25, 2.75, x) - 1.0) < 1e-14);
  // Legendre P_{1/2}(cosh 2) from an independent series
  CHECK(std::abs(jacobi_phi(0.0, 0.0, 2.0, 1.0) - 1.77650656502502943648) < 1e-13);
}

TEST_CASE("F_ell special values and symmetries") {
  const Mult m{2, 0, 1};
  CHECK(std::abs(f_ell_r1(m, 1.0, 1.0, 1.0).value - 0.648054273663885399575) < 1e-14);
  CHECK(std::abs(f_ell_r1(m, 0.0, 2.0, 1.7).value - 1.0) < 1e-13);
  for (double ell : {0.3, 1.0, 1.8})
    for (cplx lam : {cplx(0.4), cplx(1.3, 0.7), cplx(0.0, 3.0), cplx(-2.2, 0.1)})
      for (double x : {0.2, 1.1, 3.5}) {
        const cplx a = f_ell_r1(m, ell, lam, x).value;
        CHECK(std::abs(a - f_ell_r1(m, -ell, lam, x).value) < 1e-10 * (1 + std::abs(a)));
        CHECK(std::abs(a - f_ell_r1(m, ell, lam, -x).value) < 1e-10 * (1 + std::abs(a)));
      }
}

TEST_CASE("F_ell nonnegative for real lam and |ell| <= rho") {
  for (double ms : {0.0, 1.0, 2.0, 5.0}) {
    const Mult m{ms, 0, 1};
    const double rh = ms / 2 + 1;
    for (double ell : {0.0, 0.5 * rh, rh, -rh})
      for (double lam = -6; lam <= 6; lam += 0.75)
        for (double x = 0; x <= 6; x += 0.5) CHECK(f_ell_r1(m, ell, lam, x).value.real() >= -1e-12);
  }
}

TEST_CASE("G_ell at zero, slope, and eigen-equation") {
  const Mult m{2, 0, 1};
  CHECK(g_ell_r1(m, 0.7, {1.2, 0.3}, 0.0).value == cplx(1.0));
  const double h = 1e-5;
  const cplx d = (g_ell_r1(m, 0, 3.0, h).value - g_ell_r1(m, 0, 3.0, -h).value) / (2 * h);
  CHECK(std::abs(d - 1.25) < 1e-8);

  const RootSystem rs(1);
  for (double ell : {0.0, 0.6, -1.1}) {
    const cplx lam(0.9, 0.4);
    const Fn G = [&](const Point& y) { return g_ell_r1(m, ell, lam, y(0)).value; };
    for (double x : {-0.8, 0.3, 1.4}) {
      Point p(1);
      p << x;
      const cplx lhs = apply_cherednik(rs, m, Point::Ones(1), G, p, FDConfig{1e-3}, ell);
      CHECK(std::abs(lhs - lam * G(p)) < 1e-5 * (1 + std::abs(G(p))));
    }
  }
}

TEST_CASE("G_{-ell} - G_ell difference identity") {
  for (double ms : {1.0, 2.0, 3.5}) {
    const Mult m{ms, 0, 1};
    for (double ell : {0.3, 0.7, 1.4})
      for (cplx lam : {cplx(1.3), cplx(-0.4, 1.1)})
        for (double x : {0.2, 0.6, 1.5}) {
          const cplx lhs = g_ell_r1(m, -ell, lam, x).value - g_ell_r1(m, ell, lam, x).value;
          CHECK(std::abs(lhs - g_ell_difference_r1(m, ell, lam, x)) < 1e-10 * (1 + std::abs(lhs)));
        }
  }
  // The one-term form ell/(2(a+1)) sinh(2x) F_{ell}(m + 2 1_s) is 0.2108 here.
  const Mult m{2, 0, 1};
  const cplx lhs = g_ell_r1(m, -0.7, 1.3, 0.6).value - g_ell_r1(m, 0.7, 1.3, 0.6).value;
  CHECK(std::abs(lhs - 0.1430) < 1e-4);
  CHECK(std::abs(lhs - 0.21083321107106585) > 0.05);
}

TEST_CASE("integral representations") {
  const Mult m{2, 0, 1};
  const cplx want = f_ell_r1(m, 1.0, 0.5, 1.0).value;
  CHECK(std::abs(f_ell_r1_integral(m, 1.0, 0.5, 1.0).value - want) < 1e-8);
  CHECK(std::abs(f_ell_r1_integral_t(m, 1.0, 0.5, 1.0).value - want) < 1e-8);
  CHECK(std::abs(f_ell_r1_integral(m, 0.4, 0.3, 0.0).value - 1.0) < 1e-10);
  for (double ms : {1.0, 4.0})
    for (double ell : {-0.5, 0.0, 0.8})
      for (cplx lam : {cplx(0.2), cplx(-0.6, 0.9), cplx(0.5, -2.0)})
        for (double x : {0.3, 1.2, 2.5}) {
          const Mult mm{ms, 0, 1};
          const cplx a = f_ell_r1(mm, ell, lam, x).value;
          CHECK(std::abs(f_ell_r1_integral(mm, ell, lam, x).value - a) < 1e-8);
          CHECK(std::abs(f_ell_r1_integral_t(mm, ell, lam, x).value - a) < 1e-8);
        }
}

TEST_CASE("strip violation") {
  const Mult m{2, 0, 1};  // rho = 2, strip -(2 - ell) < Re lam < 2 + ell
  for (cplx lam : {cplx(3.5), cplx(-1.5, 1.0)}) {
    try {
      f_ell_r1_integral(m, 1.0, lam, 1.0);
      FAIL("expected StripViolation");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::StripViolation);
    }
  }
  CHECK_NOTHROW(f_ell_r1_integral(m, 1.0, 2.9, 1.0));
}
