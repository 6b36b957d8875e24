#include "hogeom/polynomial.hpp"

#include <cmath>

namespace hogeom {

PolyRing::PolyRing(int rank, int max_degree)
    : rank_(rank), max_degree_(max_degree) {
  if (max_degree < 0 || max_degree > 127)
    throw Error(ErrorCode::InvalidArgument, "polynomial degree out of range");
  mono_.resize(max_degree + 1);
  index_.resize(max_degree + 1);
  for (int d = 0; d <= max_degree; ++d) {
    std::vector<int> a(rank, 0);
    a[0] = d;
    while (true) {
      index_[d].emplace(key(a), static_cast<int>(mono_[d].size()));
      mono_[d].push_back(a);
      int k = rank - 2;
      while (k >= 0 && a[k] == 0) --k;
      if (k < 0) break;
      a[k] -= 1;
      int rest = 1;
      for (int i = k + 1; i < rank; ++i) {
        rest += a[i];
        a[i] = 0;
      }
      a[k + 1] = rest;
    }
  }
  up_.resize(max_degree);
  for (int d = 0; d < max_degree; ++d) {
    up_[d].resize(mono_[d].size() * rank);
    for (std::size_t j = 0; j < mono_[d].size(); ++j) {
      std::vector<int> a = mono_[d][j];
      for (int i = 0; i < rank; ++i) {
        ++a[i];
        up_[d][j * rank + i] = index_[d + 1].at(key(a));
        --a[i];
      }
    }
  }
}

std::uint64_t PolyRing::key(const std::vector<int>& a) const {
  std::uint64_t k = 0;
  for (int v : a) k = (k << 7) | static_cast<std::uint64_t>(v);
  return k;
}

int PolyRing::index(const std::vector<int>& a) const {
  int d = 0;
  for (int v : a) d += v;
  auto it = index_[d].find(key(a));
  return it == index_[d].end() ? -1 : it->second;
}

HomPoly PolyRing::zero(int d) const {
  return {d, Eigen::VectorXcd::Zero(size(d))};
}

HomPoly PolyRing::constant(cplx c) const {
  HomPoly p = zero(0);
  p.coeffs(0) = c;
  return p;
}

HomPoly PolyRing::mul_var(const HomPoly& p, int i) const {
  HomPoly q = zero(p.degree + 1);
  const auto& up = up_[p.degree];
  for (int j = 0; j < size(p.degree); ++j) q.coeffs(up[j * rank_ + i]) += p.coeffs(j);
  return q;
}

HomPoly PolyRing::mul_linear(const HomPoly& p, const Eigen::VectorXd& c) const {
  HomPoly q = zero(p.degree + 1);
  const auto& up = up_[p.degree];
  for (int j = 0; j < size(p.degree); ++j) {
    const cplx v = p.coeffs(j);
    if (v == 0.0) continue;
    for (int i = 0; i < rank_; ++i)
      if (c(i) != 0.0) q.coeffs(up[j * rank_ + i]) += c(i) * v;
  }
  return q;
}

HomPoly PolyRing::partial(const HomPoly& p, int i) const {
  if (p.degree == 0) return zero(0);
  HomPoly q = zero(p.degree - 1);
  const auto& up = up_[p.degree - 1];
  for (int j = 0; j < size(p.degree - 1); ++j) {
    const int t = up[j * rank_ + i];
    q.coeffs(j) = double(mono_[p.degree - 1][j][i] + 1) * p.coeffs(t);
  }
  return q;
}

PolyRing::SignedMap PolyRing::compose_map(const WeylElem& w, int d) const {
  SignedMap map;
  map.target.resize(size(d));
  map.sign.resize(size(d));
  std::vector<int> b(rank_);
  for (int j = 0; j < size(d); ++j) {
    const auto& a = mono_[d][j];
    int sign = 1;
    for (int i = 0; i < rank_; ++i) {
      b[i] = a[w.perm()[i]];
      if (w.signs()[i] < 0 && (b[i] % 2)) sign = -sign;
    }
    map.target[j] = index_[d].at(key(b));
    map.sign[j] = sign;
  }
  return map;
}

HomPoly PolyRing::compose(const HomPoly& p, const SignedMap& map) const {
  HomPoly q = zero(p.degree);
  for (int j = 0; j < size(p.degree); ++j)
    q.coeffs(map.target[j]) = double(map.sign[j]) * p.coeffs(j);
  return q;
}

HomPoly PolyRing::compose(const HomPoly& p, const WeylElem& w) const {
  return compose(p, compose_map(w, p.degree));
}

HomPoly PolyRing::divide_linear(const HomPoly& p, const Eigen::VectorXd& c,
                                double rel_tol) const {
  if (p.degree == 0) {
    if (p.coeffs.cwiseAbs().maxCoeff() > 0)
      throw Error(ErrorCode::DivisionNotExact, "nonzero constant remainder");
    return zero(0);
  }
  int piv = 0;
  c.cwiseAbs().maxCoeff(&piv);
  const int d = p.degree;
  HomPoly rem = p;
  HomPoly q = zero(d - 1);
  const auto& up = up_[d - 1];
  // Eliminate monomials of p from the highest power of x_piv downwards; the
  // quotient monomial is a - e_piv.
  std::vector<std::vector<int>> by_power(d + 1);
  for (int j = 0; j < size(d); ++j) by_power[mono_[d][j][piv]].push_back(j);
  std::vector<int> b(rank_);
  for (int e = d; e >= 1; --e) {
    for (int j : by_power[e]) {
      const cplx v = rem.coeffs(j);
      if (v == 0.0) continue;
      b = mono_[d][j];
      --b[piv];
      const int qi = index_[d - 1].at(key(b));
      const cplx t = v / c(piv);
      q.coeffs(qi) += t;
      for (int i = 0; i < rank_; ++i)
        if (c(i) != 0.0) rem.coeffs(up[qi * rank_ + i]) -= c(i) * t;
      rem.coeffs(j) = 0.0;
    }
  }
  const double scale = p.coeffs.cwiseAbs().maxCoeff();
  const double r = rem.coeffs.cwiseAbs().maxCoeff();
  if (r > rel_tol * scale)
    throw Error(ErrorCode::DivisionNotExact, "division by a linear form left a remainder");
  return q;
}

cplx PolyRing::evaluate(const HomPoly& p, const Point& x) const {
  cplx s = 0.0;
  for (int j = 0; j < size(p.degree); ++j) {
    double m = 1.0;
    for (int i = 0; i < rank_; ++i) m *= std::pow(x(i), mono_[p.degree][j][i]);
    s += p.coeffs(j) * m;
  }
  return s;
}

double PolyRing::abs_evaluate(const HomPoly& p, const Point& x) const {
  double s = 0.0;
  for (int j = 0; j < size(p.degree); ++j) {
    double m = 1.0;
    for (int i = 0; i < rank_; ++i) m *= std::pow(std::abs(x(i)), mono_[p.degree][j][i]);
    s += std::abs(p.coeffs(j)) * m;
  }
  return s;
}

}  // namespace hogeom
