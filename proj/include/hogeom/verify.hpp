#pragma once

#include <functional>
#include <vector>

#include "hogeom/taufun.hpp"

namespace hogeom {

using Fn = std::function<cplx(const Point&)>;

struct FDConfig {
  double h = 1e-3;
};

// L(m) f = Laplacian f + sum_alpha m_alpha coth(alpha) d_alpha f
cplx apply_L(const RootSystem& rs, const Mult& m, const Fn& f, const Point& x,
             const FDConfig& cfg = {});

// L_ell(m) = L(m) + ell^2 sum_j cosh^{-2}(beta_j / 2)
cplx apply_L_ell(const RootSystem& rs, const Mult& m, double ell, const Fn& f,
                 const Point& x, const FDConfig& cfg = {});

// T_{ell,xi}(m) f; ell = 0 gives the Cherednik operator T_xi(m).
cplx apply_cherednik(const RootSystem& rs, const Mult& m, const Point& xi,
                     const Fn& f, const Point& x, const FDConfig& cfg = {},
                     double ell = 0.0);

// Re lam in the convex hull of W rho, via dominance of the dominant representative.
bool hull_membership(const RootSystem& rs, const Point& rho, const Point& re_lam,
                     double slack = 1e-12);

// Same question answered from explicit facets of the orbit polytope (rank <= 3).
bool hull_membership_bruteforce(const RootSystem& rs, const Point& rho,
                                const Point& re_lam, double slack = 1e-9);

struct BoundednessResult {
  bool in_tube = false;   // hull membership of Re lam
  bool bounded = false;   // numerical verdict
  double sup_abs = 0.0;   // largest |F_{ell,lam}| seen
  double growth_rate = 0.0;  // (Re lam+ - rho)(x1) along the probe ray, if any
};

struct BoundednessOptions {
  double threshold = 10.0;
  int ray_points = 24;
  EvalOptions eval;
};

BoundednessResult classify_boundedness(const RootSystem& rs, const Mult& m, double ell,
                                       const Covec& lam,
                                       const BoundednessOptions& opt = {});

// F_lam0(m; x) / (prod_{alpha in Sigma0+} (1 + alpha(x)) e^{(lam0 - rho(m))(x)}),
// Sigma0+ = positive indivisible roots orthogonal to lam0.
double sharp_ratio(const RootSystem& rs, const Mult& m, const Point& lam0,
                   const Point& x, double value);

}  // namespace hogeom
