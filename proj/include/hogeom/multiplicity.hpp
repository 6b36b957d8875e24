#pragma once

#include <optional>
#include <utility>

#include "hogeom/types.hpp"

namespace hogeom {

// Multiplicities on the short (e_j), medium (e_j +- e_i) and long (2 e_j) roots.
template <class T>
struct BasicMult {
  T s{};
  T m{};
  T l{};
};

using Mult = BasicMult<double>;
using ComplexMult = BasicMult<cplx>;

// m(ell): ell moves weight from the long roots to the short ones.
template <class T>
BasicMult<T> deform(const BasicMult<T>& m, T ell) {
  return {m.s + T(2) * ell, m.m, m.l - T(2) * ell};
}

struct RegionFlags {
  bool in_Mplus = false;
  bool in_M0 = false;
  bool in_M1 = false;
  bool in_M2 = false;
  bool in_M3 = false;
  double ell_min = 0.0;
  double ell_max = 0.0;
};

RegionFlags region_flags(const Mult& m);

// Interval of ell for which m(ell) stays in M2 union M3 (for m_l = 1 this is [-m_s/2, m_s/2 + 1]).
std::pair<double, double> ell_range(const Mult& m);

struct Standardized {
  Mult m;  // always has m.l == 0
  double ell = 0.0;
};

// Writes m0 in M+ or M3 as deform(m, ell) with m.l == 0.
std::optional<Standardized> try_standardize(const Mult& m0);
Standardized standardize(const Mult& m0);

struct ComplexRegionFlags {
  bool in_MCplus = false;
  bool in_MC0 = false;
};

ComplexRegionFlags complex_region_flags(const ComplexMult& m);

}  // namespace hogeom
