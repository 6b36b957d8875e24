#include "hogeom/multiplicity.hpp"

#include <sstream>
#include <tuple>

namespace hogeom {

RegionFlags region_flags(const Mult& m) {
  RegionFlags f;
  f.in_Mplus = m.s >= 0 && m.m >= 0 && m.l >= 0;
  f.in_M0 = m.m >= 0 && m.s + m.l >= 0;
  f.in_M1 = m.m > 0 && m.s > 0 && m.s + 2 * m.l > 0;
  f.in_M2 = m.m >= 0 && m.l >= 0 && m.s + m.l >= 0;
  f.in_M3 = m.m >= 0 && m.l <= 0 && m.s + 2 * m.l >= 0;
  std::tie(f.ell_min, f.ell_max) = ell_range(m);
  return f;
}

std::pair<double, double> ell_range(const Mult& m) {
  return {-m.s / 2, m.s / 2 + m.l};
}

std::optional<Standardized> try_standardize(const Mult& m0) {
  const auto f = region_flags(m0);
  if (!f.in_Mplus && !f.in_M3) return std::nullopt;
  Standardized out;
  out.m = {m0.s + m0.l, m0.m, 0.0};
  out.ell = -m0.l / 2;
  return out;
}

Standardized standardize(const Mult& m0) {
  if (auto st = try_standardize(m0)) return *st;
  std::ostringstream os;
  os << "multiplicity (" << m0.s << ", " << m0.m << ", " << m0.l
     << ") is neither in M+ nor in M3";
  throw Error(ErrorCode::NotRepresentable, os.str());
}

ComplexRegionFlags complex_region_flags(const ComplexMult& m) {
  ComplexRegionFlags f;
  f.in_MCplus = m.s.real() >= 0 && m.m.real() >= 0 && m.l.real() >= 0;
  // Indivisible roots: short (paired with long) and medium (no double).
  f.in_MC0 = (m.s + m.l).real() >= 0 && m.m.real() >= 0;
  return f;
}

}  // namespace hogeom
