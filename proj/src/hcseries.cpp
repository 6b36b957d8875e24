#include "hogeom/hcseries.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <cmath>
#include <numbers>
#include <sstream>

namespace hogeom {

std::uint64_t HCLattice::key(const std::vector<int>& n) const {
  std::uint64_t k = 0, base = 1;
  for (int i = 0; i < rank; ++i) {
    k += base * static_cast<std::uint64_t>(n[i]);
    base *= static_cast<std::uint64_t>(max_height + 1);
  }
  return k;
}

std::size_t HCSeriesState::index_of(const std::vector<int>& n) const {
  if (static_cast<int>(n.size()) != rank) return npos;
  for (int v : n)
    if (v < 0) return npos;
  auto it = lattice->index.find(lattice->key(n));
  return it == lattice->index.end() ? npos : it->second;
}

namespace {

std::shared_ptr<const HCLattice> build_lattice(const RootSystem& rs, int max_height) {
  auto L = std::make_shared<HCLattice>();
  const int r = rs.rank();
  L->rank = r;
  L->max_height = max_height;
  L->points = lattice_shells(rs, max_height);
  const std::size_t n_pts = L->points.size();
  L->mu.reserve(n_pts);
  for (std::size_t i = 0; i < n_pts; ++i) {
    L->mu.push_back(lattice_point(rs, L->points[i]));
    L->height.push_back(L->points[i].height());
    L->index.emplace(L->key(L->points[i].n), i);
  }
  const auto& roots = rs.positive_roots();
  std::vector<int> nk(r);
  L->pred_begin.push_back(0);
  for (std::size_t i = 0; i < n_pts; ++i) {
    const std::vector<int>& n = L->points[i].n;
    for (std::size_t ai = 0; ai < roots.size(); ++ai) {
      const Root& a = roots[ai];
      for (int k = 1;; ++k) {
        bool ok = true;
        for (int j = 0; j < r; ++j) {
          nk[j] = n[j] - k * a.simple_coords(j);
          if (nk[j] < 0) ok = false;
        }
        if (!ok) break;
        const std::size_t idx = L->index.at(L->key(nk));
        const double pair = (L->mu[i] - 2.0 * k * a.vec).dot(a.vec);
        L->preds.push_back({static_cast<std::uint32_t>(idx),
                            static_cast<std::uint32_t>(ai), pair});
      }
    }
    L->pred_begin.push_back(static_cast<std::uint32_t>(L->preds.size()));
  }
  return L;
}

// Sum of m_alpha sum_{k>=1} Gamma_{mu - 2k alpha} <mu + rho - 2k alpha - lam, alpha>
// over positive roots, restricted to mu - 2k alpha in 2 Lambda.
// weight[a] = m_alpha, shift[a] = <rho - lam, alpha>.
cplx recursion_sum(const HCLattice& L, const std::vector<cplx>& gamma, std::size_t i,
                   const std::vector<double>& weight, const std::vector<cplx>& shift) {
  cplx total = 0.0;
  for (std::uint32_t p = L.pred_begin[i]; p < L.pred_begin[i + 1]; ++p) {
    const HCLattice::Pred& q = L.preds[p];
    if (weight[q.root] == 0.0) continue;
    total += weight[q.root] * gamma[q.index] * (q.pairing + shift[q.root]);
  }
  return total;
}

void root_data(const RootSystem& rs, const Mult& m, const Covec& lam,
               std::vector<double>& weight, std::vector<cplx>& shift) {
  const Covec rl = to_covec(rho(rs, m)) - lam;
  for (const Root& a : rs.positive_roots()) {
    weight.push_back(mult_of(m, a.cls));
    shift.push_back(bilinear(rl, a.vec.cast<cplx>()));
  }
}

}  // namespace

std::shared_ptr<const HCLattice> hc_lattice(const RootSystem& rs, int max_height) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const HCLattice>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{rs.rank(), max_height}];
  if (!slot) slot = build_lattice(rs, max_height);
  return slot;
}

HCSeriesState gamma_coeffs(const RootSystem& rs, const Mult& m, const Covec& lam,
                           int max_height) {
  HCSeriesState st;
  st.rank = rs.rank();
  st.max_height = max_height;
  st.m = m;
  st.lam = lam;
  st.lattice = hc_lattice(rs, max_height);
  const HCLattice& L = *st.lattice;
  st.gamma.assign(L.points.size(), 0.0);
  std::vector<double> weight;
  std::vector<cplx> shift;
  root_data(rs, m, lam, weight, shift);
  st.gamma[0] = 1.0;
  for (std::size_t i = 1; i < L.points.size(); ++i) {
    const Point& mu = L.mu[i];
    const cplx d = mu.squaredNorm() - 2.0 * bilinear(mu.cast<cplx>(), lam);
    const double margin = std::abs(d) / (1.0 + mu.squaredNorm());
    st.genericity_margin = std::min(st.genericity_margin, margin);
    if (margin < 1e-10) {
      std::ostringstream os;
      os << "<mu, mu - 2 lambda> vanishes at mu = (" << mu.transpose() << ")";
      throw Error(ErrorCode::GenericityViolation, os.str());
    }
    st.gamma[i] = 2.0 * recursion_sum(L, st.gamma, i, weight, shift) / d;
  }
  return st;
}

cplx recursion_value(const RootSystem& rs, const HCSeriesState& st, std::size_t i) {
  if (i == 0) return 1.0;
  const HCLattice& L = *st.lattice;
  const Point& mu = L.mu[i];
  const cplx d = mu.squaredNorm() - 2.0 * bilinear(mu.cast<cplx>(), st.lam);
  std::vector<double> weight;
  std::vector<cplx> shift;
  root_data(rs, st.m, st.lam, weight, shift);
  return 2.0 * recursion_sum(L, st.gamma, i, weight, shift) / d;
}

PhiEval phi_shells(const RootSystem& rs, const HCSeriesState& st, const Point& x,
                   double delta) {
  const int r = rs.rank();
  const double margin = rs.chamber_margin(x);
  if (!(margin >= delta)) {
    std::ostringstream os;
    os << "chamber margin " << margin << " below " << delta;
    throw Error(ErrorCode::OutsideChamber, os.str());
  }
  const int H = st.max_height;
  // e^{-mu(x)} = prod_i q_i^{n_i}, q_i = e^{-2 alpha_i(x)}
  Eigen::MatrixXd pw(r, H + 1);
  for (int i = 0; i < r; ++i) {
    const double ai = rs.simple_roots().col(i).dot(x);
    const double q = std::exp(-2.0 * ai);
    pw(i, 0) = 1.0;
    for (int k = 1; k <= H; ++k) pw(i, k) = pw(i, k - 1) * q;
  }
  PhiEval out;
  out.shells.assign(H + 1, 0.0);
  std::vector<double> abs_shell(H + 1, 0.0);
  double abs_sum = 0.0;
  const HCLattice& L = *st.lattice;
  for (std::size_t j = 0; j < L.points.size(); ++j) {
    const auto& n = L.points[j].n;
    double e = 1.0;
    for (int i = 0; i < r; ++i) e *= pw(i, n[i]);
    const cplx t = st.gamma[j] * e;
    out.shells[L.height[j]] += t;
    abs_shell[L.height[j]] += std::abs(t);
    abs_sum += std::abs(t);
  }
  cplx total = 0.0;
  for (const cplx& s : out.shells) total += s;

  // Shells often alternate in size between even and odd heights, so the
  // decay rate is read off pairs of consecutive shells.
  double tail = 0.0;
  if (H >= 3) {
    const double last = abs_shell[H] + abs_shell[H - 1];
    const double prev = abs_shell[H - 2] + abs_shell[H - 3];
    const double q2 = prev > 0 ? last / prev : (last > 0 ? INFINITY : 0.0);
    if (q2 >= 1.0 && last > 1e-13 * abs_sum)
      throw Error(ErrorCode::TruncationNotConverged,
                  "last Harish-Chandra shells do not decay");
    const double qc = std::min(q2, 0.95);
    tail = last * qc / (1.0 - qc);
  } else {
    tail = abs_shell[H];
  }

  const cplx expo = bilinear(st.lam - to_covec(rho(rs, st.m)), x.cast<cplx>());
  const cplx pref = std::exp(expo);
  out.est.value = pref * total;
  out.est.error = std::abs(pref) * (tail +
                                    4e-16 * (H + 1) * abs_sum);
  out.est.method = "hcseries";
  return out;
}

Estimate phi(const RootSystem& rs, const HCSeriesState& st, const Point& x,
             double delta) {
  return phi_shells(rs, st, x, delta).est;
}

Estimate f_generic(const RootSystem& rs, const Mult& m, const Covec& lam,
                   const Point& x, const HCOptions& opt) {
  for (const Root& a : rs.positive_roots()) {
    if (std::abs(bilinear(lam, a.vec.cast<cplx>())) < 1e-10)
      throw Error(ErrorCode::GenericityViolation, "lambda is not regular");
  }
  Estimate out;
  out.method = "hcseries";
  double abs_sum = 0.0;
  rs.for_each_weyl([&](const WeylElem& w) {
    const Covec wl = w.apply(lam);
    const cplx c = c_function(rs, m, wl);
    if (c == 0.0) return;
    const HCSeriesState st = gamma_coeffs(rs, m, wl, opt.max_height);
    const Estimate p = phi(rs, st, x, opt.delta);
    out.value += c * p.value;
    out.error += std::abs(c) * p.error;
    abs_sum += std::abs(c * p.value);
  });
  out.error += 4e-16 * abs_sum;
  return out;
}

double singular_distance(const RootSystem& rs, const Mult& m, const Covec& lam,
                         int max_height) {
  double d = std::numeric_limits<double>::infinity();
  for (const Root& a : rs.positive_roots()) {
    const double na = std::sqrt(a.norm2);
    const cplx la = root_coord(a, lam);
    if (a.cls != RootClass::Long) {
      // Integer lam_alpha puts a pole of Gamma(lam_alpha) at some w lam.
      d = std::min(d, std::abs(la - std::round(la.real())) * na);
    } else {
      d = std::min(d, std::abs(la) * na);
    }
  }
  const auto pts = lattice_shells(rs, max_height);
  std::vector<Point> mus;
  mus.reserve(pts.size());
  for (const auto& p : pts) mus.push_back(lattice_point(rs, p));
  rs.for_each_weyl([&](const WeylElem& w) {
    const Covec wl = w.apply(lam);
    for (std::size_t i = 1; i < mus.size(); ++i) {
      const Point& mu = mus[i];
      const cplx v = bilinear(mu.cast<cplx>(), mu.cast<cplx>() - 2.0 * wl);
      d = std::min(d, std::abs(v) / (2.0 * mu.norm()));
    }
  });
  (void)m;
  return d;
}

HCEvaluator::HCEvaluator(const RootSystem& rs, const Mult& m, const Covec& lam,
                         HCOptions opt)
    : rs_(rs), m_(m), lam_(lam), opt_(opt) {
  distance_ = singular_distance(rs, m, lam, opt.max_height);
  if (distance_ >= opt.generic_distance) {
    contour_.push_back(build_sum(lam));
    return;
  }
  const int r = rs.rank();
  Point v(r);
  for (int j = 0; j < r; ++j) v(j) = std::sqrt(2.0 + j) + 0.1 * std::numbers::pi * (j + 1);
  v.normalize();
  const int N = opt.contour_points;
  for (int k = 0; k < N; ++k) {
    const double th = 2.0 * std::numbers::pi * (k + 0.5) / N;
    const Covec lk = lam + opt.contour_radius * std::polar(1.0, th) * v.cast<cplx>();
    contour_.push_back(build_sum(lk));
  }
}

HCEvaluator::Sum HCEvaluator::build_sum(const Covec& lam) const {
  Sum s;
  rs_.for_each_weyl([&](const WeylElem& w) {
    const Covec wl = w.apply(lam);
    const cplx c = c_function(rs_, m_, wl);
    if (c == 0.0) return;
    s.push_back({c, gamma_coeffs(rs_, m_, wl, opt_.max_height)});
  });
  return s;
}

Estimate HCEvaluator::eval_sum(const Sum& s, const Point& xplus) const {
  Estimate out;
  double abs_sum = 0.0;
  for (const Term& t : s) {
    const Estimate p = phi(rs_, t.state, xplus, opt_.delta);
    out.value += t.c * p.value;
    out.error += std::abs(t.c) * p.error;
    abs_sum += std::abs(t.c * p.value);
  }
  out.error += 4e-16 * abs_sum;
  return out;
}

Estimate HCEvaluator::operator()(const Point& x) const {
  const Point xp = dominant_representative(rs_, x).point;
  if (contour_.size() == 1) {
    Estimate e = eval_sum(contour_[0], xp);
    e.method = "hcseries";
    return e;
  }
  // Trapezoid rule on a circle: the N-point mean and the interleaved N/2-point
  // mean differ by roughly the error of the coarser one.
  const int N = static_cast<int>(contour_.size());
  cplx full = 0.0, half = 0.0;
  double err = 0.0;
  for (int k = 0; k < N; ++k) {
    const Estimate e = eval_sum(contour_[k], xp);
    full += e.value;
    if (k % 2 == 0) half += e.value;
    err += e.error;
  }
  full /= double(N);
  half /= double(N / 2);
  Estimate out;
  out.value = full;
  out.error = std::abs(full - half) + err / N;
  out.method = "hcseries-contour";
  return out;
}

}  // namespace hogeom
