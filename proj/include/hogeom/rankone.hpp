#pragma once

#include "hogeom/multiplicity.hpp"
#include "hogeom/specfun.hpp"
#include "hogeom/types.hpp"

namespace hogeom {

// Jacobi function phi^{(a,b)}_{i lam}(x) = 2F1((a+b+1-lam)/2, (a+b+1+lam)/2; a+1; -sinh^2 x).
cplx jacobi_phi(double a, double b, cplx lam, double x);

// Rank-one tau functions for m = (m_s, *, 1); m_m is ignored.
// F is evaluated through the tanh^2 form and checked against the -sinh^2 form.
Estimate f_ell_r1(const Mult& m, double ell, cplx lam, double x);
Estimate g_ell_r1(const Mult& m, double ell, cplx lam, double x);

// G_{-ell} - G_ell written through Jacobi functions of parameter a + 1.
cplx g_ell_difference_r1(const Mult& m, double ell, cplx lam, double x);

// Euler integral for F_{ell,lam}; requires -(rho - ell) < Re lam < rho + ell.
Estimate f_ell_r1_integral(const Mult& m, double ell, cplx lam, double x,
                           const QuadratureRule& rule = default_rule());
// Same integral after u = tanh^2 t, over t in (0, infinity).
Estimate f_ell_r1_integral_t(const Mult& m, double ell, cplx lam, double x,
                             const QuadratureRule& rule = default_rule());

}  // namespace hogeom
