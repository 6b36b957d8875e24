#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hogeom/rootsys.hpp"

namespace hogeom {

// Homogeneous polynomial; coefficients indexed by PolyRing::monomials(degree).
struct HomPoly {
  int degree = 0;
  Eigen::VectorXcd coeffs;
};

// Monomial bookkeeping for homogeneous polynomials in `rank` variables.
class PolyRing {
 public:
  PolyRing(int rank, int max_degree);

  int rank() const { return rank_; }
  int max_degree() const { return max_degree_; }
  int size(int d) const { return static_cast<int>(mono_[d].size()); }
  const std::vector<std::vector<int>>& monomials(int d) const { return mono_[d]; }
  int index(const std::vector<int>& a) const;

  HomPoly zero(int d) const;
  HomPoly constant(cplx c) const;

  HomPoly mul_var(const HomPoly& p, int i) const;
  HomPoly mul_linear(const HomPoly& p, const Eigen::VectorXd& c) const;
  HomPoly partial(const HomPoly& p, int i) const;

  // For q(x) = p(w x): q[target[a]] = sign[a] * p[a].
  struct SignedMap {
    std::vector<int> target;
    std::vector<int> sign;
  };
  SignedMap compose_map(const WeylElem& w, int d) const;
  HomPoly compose(const HomPoly& p, const WeylElem& w) const;
  HomPoly compose(const HomPoly& p, const SignedMap& map) const;

  // Exact quotient p / (c . x); throws DivisionNotExact when the remainder
  // exceeds rel_tol * max|p|.
  HomPoly divide_linear(const HomPoly& p, const Eigen::VectorXd& c,
                        double rel_tol = 1e-10) const;

  cplx evaluate(const HomPoly& p, const Point& x) const;
  // sum |c_a| |x^a|
  double abs_evaluate(const HomPoly& p, const Point& x) const;

 private:
  std::uint64_t key(const std::vector<int>& a) const;

  int rank_;
  int max_degree_;
  std::vector<std::vector<std::vector<int>>> mono_;
  std::vector<std::unordered_map<std::uint64_t, int>> index_;
  // up_[d][a * rank + i]: index of a + e_i in degree d + 1
  std::vector<std::vector<int>> up_;
};

}  // namespace hogeom
