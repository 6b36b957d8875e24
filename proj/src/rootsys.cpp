#include "hogeom/rootsys.hpp"

#include <numeric>
#include <sstream>

namespace hogeom {

const char* to_string(RootClass c) {
  switch (c) {
    case RootClass::Short: return "short";
    case RootClass::Medium: return "medium";
    case RootClass::Long: return "long";
  }
  return "?";
}

WeylElem::WeylElem(std::vector<int> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {}

WeylElem WeylElem::identity(int rank) {
  std::vector<int> p(rank);
  std::iota(p.begin(), p.end(), 0);
  return WeylElem(p, std::vector<int>(rank, 1));
}

WeylElem WeylElem::compose(const WeylElem& other) const {
  const int r = rank();
  std::vector<int> p(r), s(r);
  for (int i = 0; i < r; ++i) {
    p[i] = perm_[other.perm_[i]];
    s[i] = signs_[other.perm_[i]] * other.signs_[i];
  }
  return WeylElem(p, s);
}

WeylElem WeylElem::inverse() const {
  const int r = rank();
  std::vector<int> p(r), s(r);
  for (int i = 0; i < r; ++i) {
    p[perm_[i]] = i;
    s[perm_[i]] = signs_[i];
  }
  return WeylElem(p, s);
}

Eigen::MatrixXd WeylElem::matrix() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rank(), rank());
  for (int i = 0; i < rank(); ++i) m(perm_[i], i) = signs_[i];
  return m;
}

namespace {

WeylElem sign_flip(int r, int j) {
  WeylElem id = WeylElem::identity(r);
  std::vector<int> s = id.signs();
  s[j] = -1;
  return WeylElem(id.perm(), s);
}

WeylElem transposition(int r, int i, int j, int sign) {
  WeylElem id = WeylElem::identity(r);
  std::vector<int> p = id.perm(), s = id.signs();
  std::swap(p[i], p[j]);
  s[i] = s[j] = sign;
  return WeylElem(p, s);
}

}  // namespace

RootSystem::RootSystem(int rank) : rank_(rank) {
  if (rank < 1 || rank > kMaxRank) {
    std::ostringstream os;
    os << "rank " << rank << " outside 1.." << kMaxRank;
    throw Error(ErrorCode::RankUnsupported, os.str());
  }
  const int r = rank;
  auto add = [&](Point v, RootClass c, WeylElem refl) {
    Root root;
    root.vec = std::move(v);
    root.cls = c;
    root.norm2 = root.vec.squaredNorm();
    Eigen::VectorXd sc = simple_coords(root.vec);
    root.simple_coords = sc.array().round().cast<int>();
    root.reflection = std::move(refl);
    roots_.push_back(std::move(root));
  };
  for (int j = 0; j < r; ++j)
    add(Point::Unit(r, j), RootClass::Short, sign_flip(r, j));
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < j; ++i) {
      add(Point::Unit(r, j) - Point::Unit(r, i), RootClass::Medium,
          transposition(r, i, j, 1));
      add(Point::Unit(r, j) + Point::Unit(r, i), RootClass::Medium,
          transposition(r, i, j, -1));
    }
  for (int j = 0; j < r; ++j)
    add(2.0 * Point::Unit(r, j), RootClass::Long, sign_flip(r, j));

  simple_ = Eigen::MatrixXd::Zero(r, r);
  simple_(0, 0) = 1.0;
  for (int i = 1; i < r; ++i) {
    simple_(i, i) = 1.0;
    simple_(i - 1, i) = -1.0;
  }
}

std::uint64_t RootSystem::weyl_order() const {
  std::uint64_t n = 1;
  for (int i = 1; i <= rank_; ++i) n *= 2u * static_cast<std::uint64_t>(i);
  return n;
}

std::vector<WeylElem> RootSystem::weyl_elements() const {
  std::vector<WeylElem> out;
  out.reserve(weyl_order());
  for_each_weyl([&](const WeylElem& w) { out.push_back(w); });
  return out;
}

Eigen::VectorXd RootSystem::simple_coords(const Point& v) const {
  Eigen::VectorXd c(rank_);
  double acc = 0.0;
  for (int j = rank_ - 1; j >= 0; --j) {
    acc += v(j);
    c(j) = acc;
  }
  return c;
}

double RootSystem::chamber_margin(const Point& x) const {
  double m = x(0);
  for (int i = 1; i < rank_; ++i) m = std::min(m, x(i) - x(i - 1));
  return m;
}

int RootSystem::length(const WeylElem& w) const {
  int n = 0;
  for (const auto& a : roots_) {
    if (a.cls == RootClass::Long) continue;
    if (simple_coords(w.apply(a.vec)).sum() < 0) ++n;
  }
  return n;
}

RootSystem build_bc(int rank) { return RootSystem(rank); }

namespace {

template <class T>
Eigen::Matrix<T, Eigen::Dynamic, 1> rho_impl(int r, const BasicMult<T>& m) {
  Eigen::Matrix<T, Eigen::Dynamic, 1> out(r);
  for (int j = 0; j < r; ++j)
    out(j) = m.s / T(2) + T(double(j)) * m.m + m.l;
  return out;
}

}  // namespace

Point rho(const RootSystem& rs, const Mult& m) { return rho_impl(rs.rank(), m); }

Covec rho(const RootSystem& rs, const ComplexMult& m) {
  return rho_impl(rs.rank(), m);
}

DominantRep dominant_representative(const RootSystem& rs, const Point& x) {
  const int r = rs.rank();
  std::vector<int> signs(r), order(r);
  Point ax(r);
  for (int i = 0; i < r; ++i) {
    signs[i] = x(i) < 0 ? -1 : 1;
    ax(i) = std::abs(x(i));
  }
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return ax(a) < ax(b); });
  std::vector<int> perm(r);
  for (int k = 0; k < r; ++k) perm[order[k]] = k;
  DominantRep out{Point(r), WeylElem(perm, signs)};
  out.point = out.w.apply(x);
  return out;
}

int LatticeVec::height() const {
  return std::accumulate(n.begin(), n.end(), 0);
}

std::vector<LatticeVec> lattice_shells(const RootSystem& rs, int max_height) {
  const int r = rs.rank();
  std::vector<LatticeVec> out;
  for (int h = 0; h <= max_height; ++h) {
    // Compositions of h into r parts, first entry descending.
    std::vector<int> n(r, 0);
    n[0] = h;
    while (true) {
      out.push_back({n});
      // Predecessor in lexicographic order among compositions of h.
      int k = r - 2;
      while (k >= 0 && n[k] == 0) --k;
      if (k < 0) break;
      n[k] -= 1;
      int rest = 1;
      for (int i = k + 1; i < r; ++i) {
        rest += n[i];
        n[i] = 0;
      }
      n[k + 1] = rest;
    }
  }
  return out;
}

Point lattice_point(const RootSystem& rs, const LatticeVec& v) {
  Eigen::VectorXd n(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) n(i) = 2.0 * v.n[i];
  return rs.simple_roots() * n;
}

}  // namespace hogeom
