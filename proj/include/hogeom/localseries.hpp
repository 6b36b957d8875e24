#pragma once

#include <memory>
#include <vector>

#include "hogeom/polynomial.hpp"

namespace hogeom {

struct TaylorPoly {
  std::shared_ptr<const PolyRing> ring;
  std::vector<HomPoly> layers;  // layers[k] has degree k

  int degree() const { return static_cast<int>(layers.size()) - 1; }
  cplx coefficient(const std::vector<int>& exponent) const;
};

// Taylor expansion at 0 of the solution G of T_xi(m) G = lam(xi) G, G(0) = 1,
// solved degree by degree.
TaylorPoly g_taylor(const RootSystem& rs, const Mult& m, const Covec& lam,
                    int degree = 30);

// (1/|W|) sum_w P(w x)
TaylorPoly weyl_average(const RootSystem& rs, const TaylorPoly& p);

TaylorPoly f_taylor(const RootSystem& rs, const Mult& m, const Covec& lam,
                    int degree = 30);

Estimate eval_taylor(const TaylorPoly& p, const Point& x, double trust_radius = 0.8);

}  // namespace hogeom
