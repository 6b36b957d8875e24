#pragma once

#include <string>
#include <vector>

#include "hogeom/rootsys.hpp"

namespace hogeom {

constexpr double kPoleTolerance = 1e-9;

struct CFactor {
  std::size_t root_index = 0;  // index into positive_roots()
  cplx log_value{0.0, 0.0};    // meaningful only when the factor is finite and nonzero
  int numerator_poles = 0;
  int denominator_poles = 0;
};

struct CValue {
  cplx value{0.0, 0.0};
  cplx log_value{0.0, 0.0};
  std::vector<CFactor> factors;
  bool numerator_pole = false;    // value is infinite
  bool denominator_pole = false;  // value is zero
  std::string offending;          // description of the first singular root

  bool singular() const { return numerator_pole || denominator_pole; }
};

// Unnormalized c-function: product over indivisible positive roots.
CValue c_tilde(const RootSystem& rs, const Mult& m, const Covec& lam);

// c(lam) = c~(lam) / c~(rho(m)); throws CFunctionPole on a pole at lam or
// when c~(rho(m)) is zero or infinite.
cplx c_function(const RootSystem& rs, const Mult& m, const Covec& lam);

// True when no Gamma factor of b_0 at lam0 sits on a pole. Classes with zero
// multiplicity contribute no factors.
bool b0_regular(const RootSystem& rs, const Mult& m, const Covec& lam0);

// lam_alpha = <lam, alpha> / <alpha, alpha>
cplx root_coord(const Root& a, const Covec& lam);

}  // namespace hogeom
