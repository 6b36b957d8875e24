#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <unordered_map>
#include <vector>

#include "hogeom/cfunction.hpp"
#include "hogeom/rootsys.hpp"

namespace hogeom {

struct HCOptions {
  int max_height = 40;
  double delta = 0.3;  // required chamber margin min_i alpha_i(x)
  // Below this distance to a singular hyperplane the evaluator switches to
  // averaging over a small circle in the spectral parameter.
  double generic_distance = 1e-2;
  double contour_radius = 0.25;
  int contour_points = 32;
};

// Lattice points of height <= max_height and, for each, the chain of
// predecessors mu - 2k alpha with <mu - 2k alpha, alpha>. Depends only on
// (rank, max_height) and is shared between tables.
struct HCLattice {
  struct Pred {
    std::uint32_t index;
    std::uint32_t root;
    double pairing;
  };
  int rank = 0;
  int max_height = 0;
  std::vector<LatticeVec> points;
  std::vector<Point> mu;
  std::vector<int> height;
  std::vector<std::uint32_t> pred_begin;  // preds of i: [pred_begin[i], pred_begin[i+1])
  std::vector<Pred> preds;
  std::unordered_map<std::uint64_t, std::size_t> index;

  std::uint64_t key(const std::vector<int>& n) const;
};

std::shared_ptr<const HCLattice> hc_lattice(const RootSystem& rs, int max_height);

// Gamma_mu(m, lam) for mu = sum n_i 2 alpha_i, height(mu) <= max_height.
struct HCSeriesState {
  int rank = 0;
  int max_height = 0;
  Mult m;
  Covec lam;
  std::shared_ptr<const HCLattice> lattice;
  std::vector<cplx> gamma;  // indexed like lattice->points
  // min_mu |<mu, mu - 2 lam>| / (1 + |mu|^2)
  double genericity_margin = std::numeric_limits<double>::infinity();

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
  std::size_t index_of(const std::vector<int>& n) const;
  const std::vector<LatticeVec>& points() const { return lattice->points; }
};

HCSeriesState gamma_coeffs(const RootSystem& rs, const Mult& m, const Covec& lam,
                           int max_height);

// Right-hand side of the recursion at point i divided by <mu, mu - 2 lam>,
// recomputed from the stored table.
cplx recursion_value(const RootSystem& rs, const HCSeriesState& st, std::size_t i);

struct PhiEval {
  Estimate est;
  std::vector<cplx> shells;  // sum over each height of Gamma_mu e^{-mu(x)}
};

PhiEval phi_shells(const RootSystem& rs, const HCSeriesState& st, const Point& x,
                   double delta = 0.3);

Estimate phi(const RootSystem& rs, const HCSeriesState& st, const Point& x,
             double delta = 0.3);

// Sum over W of c(w lam) Phi_{w lam}(x); lam must be regular and generic.
Estimate f_generic(const RootSystem& rs, const Mult& m, const Covec& lam,
                   const Point& x, const HCOptions& opt = {});

// Distance from lam to the nearest wall, c-function pole or Gamma_mu pole.
double singular_distance(const RootSystem& rs, const Mult& m, const Covec& lam,
                         int max_height);

// F_lam(m) on the closed chamber (or its W-translates) away from the walls,
// with the Gamma tables cached for repeated evaluation.
class HCEvaluator {
 public:
  HCEvaluator(const RootSystem& rs, const Mult& m, const Covec& lam,
              HCOptions opt = {});

  Estimate operator()(const Point& x) const;
  bool regularized() const { return !contour_.empty() && contour_.size() > 1; }
  double distance() const { return distance_; }

 private:
  struct Term {
    cplx c;
    HCSeriesState state;
  };
  using Sum = std::vector<Term>;

  Sum build_sum(const Covec& lam) const;
  Estimate eval_sum(const Sum& s, const Point& xplus) const;

  RootSystem rs_;
  Mult m_;
  Covec lam_;
  HCOptions opt_;
  double distance_ = 0.0;
  std::vector<Sum> contour_;
};

}  // namespace hogeom
