#include "hogeom/cfunction.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hogeom/specfun.hpp"

namespace hogeom {

namespace {

// Returns n >= 0 when z is within tolerance of -n.
int pole_order(cplx z) {
  const double n = std::round(z.real());
  if (n <= 0 && std::abs(z - n) <= kPoleTolerance) return static_cast<int>(-n);
  return -1;
}

double log_factorial(int n) { return std::lgamma(n + 1.0); }

// log of Gamma(z) with a pole at -n replaced by its residue, i.e. the
// coefficient of 1/eps in Gamma(-n + s*eps).
cplx log_residue(int n, double s) {
  cplx v = -log_factorial(n) - std::log(s);
  if (n % 2) v += cplx(0.0, std::numbers::pi);
  return v;
}

}  // namespace

cplx root_coord(const Root& a, const Covec& lam) {
  return bilinear(lam, a.vec.cast<cplx>()) / a.norm2;
}

CValue c_tilde(const RootSystem& rs, const Mult& m, const Covec& lam) {
  CValue out;
  const auto& roots = rs.positive_roots();
  const double ln2 = std::log(2.0);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const Root& a = roots[k];
    if (a.cls == RootClass::Long) continue;
    const double ma = mult_of(m, a.cls);
    const double m2a = a.cls == RootClass::Short ? m.l : 0.0;
    const cplx la = root_coord(a, lam);
    // Gamma(la) / (Gamma(la/2 + ma/4 + 1/2) Gamma(la/2 + ma/4 + m2a/2)).
    // The numerator argument moves with slope 1 in la, the others with 1/2.
    const cplx num = la;
    const cplx den[2] = {la / 2.0 + ma / 4 + 0.5, la / 2.0 + ma / 4 + m2a / 2};
    CFactor f;
    f.root_index = k;
    cplx lv = -la * ln2;
    const int pn = pole_order(num);
    if (pn >= 0) {
      ++f.numerator_poles;
      lv += log_residue(pn, 1.0);
    } else {
      lv += log_gamma(num);
    }
    for (const cplx& d : den) {
      const int pd = pole_order(d);
      if (pd >= 0) {
        ++f.denominator_poles;
        lv -= log_residue(pd, 0.5);
      } else {
        lv -= log_gamma(d);
      }
    }
    f.log_value = lv;
    out.factors.push_back(f);
    const int excess = f.numerator_poles - f.denominator_poles;
    if (excess != 0 && out.offending.empty()) {
      std::ostringstream os;
      os << (excess > 0 ? "numerator" : "denominator") << " pole at "
         << to_string(a.cls) << " root #" << k;
      out.offending = os.str();
    }
    if (excess > 0) out.numerator_pole = true;
    if (excess < 0) out.denominator_pole = true;
    out.log_value += lv;
  }
  if (out.numerator_pole && out.denominator_pole) {
    out.value = cplx(std::nan(""), std::nan(""));
  } else if (out.numerator_pole) {
    out.value = cplx(INFINITY, 0.0);
  } else if (out.denominator_pole) {
    out.value = 0.0;
  } else {
    out.value = std::exp(out.log_value);
  }
  return out;
}

cplx c_function(const RootSystem& rs, const Mult& m, const Covec& lam) {
  const CValue num = c_tilde(rs, m, lam);
  const CValue den = c_tilde(rs, m, to_covec(rho(rs, m)));
  if (den.singular())
    throw Error(ErrorCode::CFunctionPole,
                "c~(rho) is singular: " + den.offending);
  if (num.numerator_pole)
    throw Error(ErrorCode::CFunctionPole, "c~(lambda) has a " + num.offending);
  if (num.denominator_pole) return 0.0;
  return std::exp(num.log_value - den.log_value);
}

bool b0_regular(const RootSystem& rs, const Mult& m, const Covec& lam0) {
  for (const Root& a : rs.positive_roots()) {
    if (a.cls == RootClass::Long) continue;
    const double ma = mult_of(m, a.cls);
    if (ma == 0.0) continue;
    const double m2a = a.cls == RootClass::Short ? m.l : 0.0;
    const cplx la = root_coord(a, lam0);
    const cplx args[2] = {la / 2.0 + ma / 4 + 0.5, la / 2.0 + ma / 4 + m2a / 2};
    for (const cplx& z : args)
      if (pole_order(z) >= 0) return false;
  }
  return true;
}

}  // namespace hogeom
