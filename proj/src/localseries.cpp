#include "hogeom/localseries.hpp"

#include <algorithm>
#include <map>

#include "hogeom/specfun.hpp"

namespace hogeom {

cplx TaylorPoly::coefficient(const std::vector<int>& exponent) const {
  int d = 0;
  for (int v : exponent) d += v;
  if (d > degree()) return 0.0;
  const int j = ring->index(exponent);
  return j < 0 ? cplx(0.0) : layers[d].coeffs(j);
}

namespace {

struct RootData {
  double mult;
  Eigen::VectorXd vec;     // alpha
  Eigen::VectorXd twice;   // 2 alpha as a linear form
  WeylElem reflection;
  std::vector<PolyRing::SignedMap> maps;  // per degree
  std::vector<HomPoly> scaled;  // (2 alpha)^{k-j} D_alpha G_{j+1}
};

// E = d + (1/2) sum_alpha m_alpha (1 - R_alpha) on degree-d polynomials,
// factored per orbit of exponent multisets.
class LayerOperator {
 public:
  LayerOperator(const PolyRing& ring, const std::vector<RootData>& roots, int d)
      : d_(d) {
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int j = 0; j < ring.size(d); ++j) {
      auto a = ring.monomials(d)[j];
      std::sort(a.begin(), a.end());
      groups[a].push_back(j);
    }
    for (auto& [key, members] : groups) {
      const int g = static_cast<int>(members.size());
      std::map<int, int> local;
      for (int i = 0; i < g; ++i) local[members[i]] = i;
      Eigen::MatrixXd E = double(d) * Eigen::MatrixXd::Identity(g, g);
      for (const auto& rd : roots) {
        if (rd.mult == 0.0) continue;
        const auto& map = rd.maps[d];
        for (int i = 0; i < g; ++i) {
          const int src = members[i];
          E(i, i) += 0.5 * rd.mult;
          E(local.at(map.target[src]), i) -= 0.5 * rd.mult * map.sign[src];
        }
      }
      Block b;
      b.members = members;
      b.lu.compute(E);
      if (!b.lu.isInvertible())
        throw Error(ErrorCode::InconsistentSystem,
                    "layer operator is singular for this multiplicity");
      blocks_.push_back(std::move(b));
    }
  }

  HomPoly solve(const PolyRing& ring, const HomPoly& rhs) const {
    HomPoly out = ring.zero(d_);
    for (const auto& b : blocks_) {
      const int g = static_cast<int>(b.members.size());
      Eigen::VectorXcd v(g);
      for (int i = 0; i < g; ++i) v(i) = rhs.coeffs(b.members[i]);
      const Eigen::VectorXd re = b.lu.solve(Eigen::VectorXd(v.real()));
      const Eigen::VectorXd im = b.lu.solve(Eigen::VectorXd(v.imag()));
      for (int i = 0; i < g; ++i) out.coeffs(b.members[i]) = cplx(re(i), im(i));
    }
    return out;
  }

 private:
  struct Block {
    std::vector<int> members;
    Eigen::FullPivLU<Eigen::MatrixXd> lu;
  };
  int d_;
  std::vector<Block> blocks_;
};

double sup_norm(const HomPoly& p) {
  return p.coeffs.size() ? p.coeffs.cwiseAbs().maxCoeff() : 0.0;
}

}  // namespace

TaylorPoly g_taylor(const RootSystem& rs, const Mult& m, const Covec& lam,
                    int degree) {
  const int r = rs.rank();
  auto ring = std::make_shared<PolyRing>(r, degree);
  const std::vector<double> K = bern_kernel_coeffs(degree + 1);
  const Covec lr = lam + to_covec(rho(rs, m));

  std::vector<RootData> roots;
  for (const Root& a : rs.positive_roots()) {
    RootData rd;
    rd.mult = mult_of(m, a.cls);
    rd.vec = a.vec;
    rd.twice = 2.0 * a.vec;
    rd.reflection = a.reflection;
    for (int d = 0; d <= degree; ++d) rd.maps.push_back(ring->compose_map(a.reflection, d));
    roots.push_back(std::move(rd));
  }

  TaylorPoly out;
  out.ring = ring;
  out.layers.push_back(ring->constant(1.0));
  std::vector<HomPoly> known(r);
  for (int k = 0; k < degree; ++k) {
    const HomPoly& Gk = out.layers[k];
    // S_alpha = sum_{j<k} K_{k-j} (2 alpha)^{k-j} D_alpha G_{j+1}
    std::vector<HomPoly> S(roots.size(), ring->zero(k));
    for (std::size_t a = 0; a < roots.size(); ++a) {
      auto& rd = roots[a];
      for (auto& t : rd.scaled) t = ring->mul_linear(t, rd.twice);
      for (int j = 0; j < k; ++j) {
        if (K[k - j] == 0.0) continue;
        S[a].coeffs += K[k - j] * rd.scaled[j].coeffs;
      }
    }
    for (int i = 0; i < r; ++i) {
      known[i] = Gk;
      known[i].coeffs *= lr(i);
      for (std::size_t a = 0; a < roots.size(); ++a) {
        const double w = roots[a].mult * roots[a].vec(i);
        if (w != 0.0) known[i].coeffs -= w * S[a].coeffs;
      }
    }
    // Euler identity: sum_i x_i D_i P = E P.
    HomPoly rhs = ring->zero(k + 1);
    for (int i = 0; i < r; ++i) rhs.coeffs += ring->mul_var(known[i], i).coeffs;
    const LayerOperator E(*ring, roots, k + 1);
    HomPoly P = E.solve(*ring, rhs);

    std::vector<HomPoly> D(roots.size());
    for (std::size_t a = 0; a < roots.size(); ++a) {
      HomPoly diff = P;
      diff.coeffs -= ring->compose(P, roots[a].maps[k + 1]).coeffs;
      D[a] = ring->divide_linear(diff, roots[a].twice);
    }
    // Each component of the system must hold, not only their Euler combination.
    for (int i = 0; i < r; ++i) {
      HomPoly lhs = ring->partial(P, i);
      for (std::size_t a = 0; a < roots.size(); ++a) {
        const double w = roots[a].mult * roots[a].vec(i);
        if (w != 0.0) lhs.coeffs += w * D[a].coeffs;
      }
      const double scale = std::max(sup_norm(known[i]), sup_norm(ring->partial(P, i)));
      const double res = (lhs.coeffs - known[i].coeffs).cwiseAbs().maxCoeff();
      if (res > 1e-10 * std::max(scale, 1e-300)) {
        throw Error(ErrorCode::InconsistentSystem,
                    "component equation fails at degree " + std::to_string(k + 1));
      }
    }
    for (std::size_t a = 0; a < roots.size(); ++a) roots[a].scaled.push_back(D[a]);
    out.layers.push_back(std::move(P));
  }
  return out;
}

TaylorPoly weyl_average(const RootSystem& rs, const TaylorPoly& p) {
  // W acts on monomials by signed permutations of exponents. Sign changes kill
  // every monomial with an odd exponent; the permutation average gives each
  // monomial the mean coefficient over its orbit. Assigning one computed mean
  // to the whole orbit makes the result exactly invariant.
  TaylorPoly out;
  out.ring = p.ring;
  const int r = rs.rank();
  for (const auto& layer : p.layers) {
    HomPoly q = p.ring->zero(layer.degree);
    const auto& mono = p.ring->monomials(layer.degree);
    std::map<std::vector<int>, std::pair<cplx, int>> orbit;
    std::vector<std::vector<int>> keys(mono.size());
    for (std::size_t i = 0; i < mono.size(); ++i) {
      bool even = true;
      for (int j = 0; j < r; ++j) even = even && mono[i][j] % 2 == 0;
      if (!even) continue;
      keys[i] = mono[i];
      std::sort(keys[i].begin(), keys[i].end());
      auto& slot = orbit[keys[i]];
      slot.first += layer.coeffs(i);
      slot.second += 1;
    }
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (keys[i].empty()) continue;
      const auto& slot = orbit.at(keys[i]);
      q.coeffs(i) = slot.first / double(slot.second);
    }
    out.layers.push_back(std::move(q));
  }
  return out;
}

TaylorPoly f_taylor(const RootSystem& rs, const Mult& m, const Covec& lam,
                    int degree) {
  return weyl_average(rs, g_taylor(rs, m, lam, degree));
}

Estimate eval_taylor(const TaylorPoly& p, const Point& x, double trust_radius) {
  Estimate out;
  out.method = "taylor";
  out.outside_trust_radius = x.norm() > trust_radius;
  const int D = p.degree();
  std::vector<double> mag(D + 1);
  double total_abs = 0.0;
  for (int k = 0; k <= D; ++k) {
    out.value += p.ring->evaluate(p.layers[k], x);
    mag[k] = p.ring->abs_evaluate(p.layers[k], x);
    total_abs += mag[k];
  }
  // Geometric tail from the decay of the top layers; odd or even layers may
  // vanish identically, so compare layers two apart.
  double q = 0.0, last = 0.0;
  for (int k = std::max(2, D - 3); k <= D; ++k) {
    last = std::max(last, mag[k]);
    if (mag[k - 2] > 0) q = std::max(q, std::sqrt(mag[k] / mag[k - 2]));
  }
  q = std::min(q, 0.95);
  out.error = last * (1.0 + q / (1.0 - q)) + 4e-16 * (D + 1) * total_abs;
  return out;
}

}  // namespace hogeom
