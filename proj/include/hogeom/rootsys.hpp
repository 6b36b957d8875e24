#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hogeom/multiplicity.hpp"
#include "hogeom/types.hpp"

namespace hogeom {

constexpr int kMaxRank = 8;

enum class RootClass { Short, Medium, Long };

const char* to_string(RootClass c);

// Signed permutation acting on e-coordinates: (w v)[perm[i]] = signs[i] * v[i].
class WeylElem {
 public:
  WeylElem() = default;
  WeylElem(std::vector<int> perm, std::vector<int> signs);
  static WeylElem identity(int rank);

  int rank() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }

  template <class Derived>
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> apply(
      const Eigen::MatrixBase<Derived>& v) const {
    Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> out(v.size());
    for (int i = 0; i < rank(); ++i)
      out(perm_[i]) = typename Derived::Scalar(signs_[i]) * v(i);
    return out;
  }

  // (*this) o other
  WeylElem compose(const WeylElem& other) const;
  WeylElem inverse() const;
  Eigen::MatrixXd matrix() const;

  bool operator==(const WeylElem& o) const {
    return perm_ == o.perm_ && signs_ == o.signs_;
  }

 private:
  std::vector<int> perm_;
  std::vector<int> signs_;
};

struct Root {
  Point vec;
  RootClass cls = RootClass::Short;
  Eigen::VectorXi simple_coords;
  double norm2 = 0.0;
  WeylElem reflection;
};

template <class T>
T mult_of(const BasicMult<T>& m, RootClass c) {
  switch (c) {
    case RootClass::Short: return m.s;
    case RootClass::Medium: return m.m;
    case RootClass::Long: return m.l;
  }
  return T{};
}

class RootSystem {
 public:
  explicit RootSystem(int rank);

  int rank() const { return rank_; }
  const std::vector<Root>& positive_roots() const { return roots_; }
  // Columns are alpha_1 = e_1, alpha_i = e_i - e_{i-1}.
  const Eigen::MatrixXd& simple_roots() const { return simple_; }

  std::uint64_t weyl_order() const;

  // Visits every signed permutation in a fixed order, identity first.
  template <class Fn>
  void for_each_weyl(Fn&& fn) const {
    std::vector<int> perm(rank_);
    for (int i = 0; i < rank_; ++i) perm[i] = i;
    do {
      for (std::uint32_t mask = 0; mask < (1u << rank_); ++mask) {
        std::vector<int> signs(rank_);
        for (int i = 0; i < rank_; ++i) signs[i] = (mask >> i) & 1u ? -1 : 1;
        fn(WeylElem(perm, signs));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::vector<WeylElem> weyl_elements() const;

  // c_j = sum_{k >= j} v_k, so v = sum_j c_j alpha_j.
  Eigen::VectorXd simple_coords(const Point& v) const;
  // min_i alpha_i(x); positive iff x lies in the open positive chamber.
  double chamber_margin(const Point& x) const;
  // Number of positive roots of the reduced subsystem sent to negative roots.
  int length(const WeylElem& w) const;

 private:
  int rank_;
  std::vector<Root> roots_;
  Eigen::MatrixXd simple_;
};

RootSystem build_bc(int rank);

Point rho(const RootSystem& rs, const Mult& m);
Covec rho(const RootSystem& rs, const ComplexMult& m);

struct DominantRep {
  Point point;
  WeylElem w;  // w.apply(x) == point
};

DominantRep dominant_representative(const RootSystem& rs, const Point& x);

struct LatticeVec {
  std::vector<int> n;  // mu = sum_i n_i * 2 alpha_i
  int height() const;
};

// All n with height <= max_height, ordered by height and then with larger
// leading entries first (so 2 alpha_1 precedes 2 alpha_2).
std::vector<LatticeVec> lattice_shells(const RootSystem& rs, int max_height);

Point lattice_point(const RootSystem& rs, const LatticeVec& v);

}  // namespace hogeom
