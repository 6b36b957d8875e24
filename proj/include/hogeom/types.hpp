#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace hogeom {

using cplx = std::complex<double>;
using Point = Eigen::VectorXd;
using Covec = Eigen::VectorXcd;

enum class ErrorCode {
  InvalidArgument,
  RankUnsupported,
  NotRepresentable,
  PoleAtNonpositiveInteger,
  ParameterPole,
  NonConvergent,
  NonIntegrableEndpoint,
  GenericityViolation,
  OutsideChamber,
  TruncationNotConverged,
  CFunctionPole,
  InconsistentSystem,
  DivisionNotExact,
  StripViolation,
  MethodUnavailable,
  SingularPoint,
};

const char* to_string(ErrorCode code);

// Configuration problems map to CLI exit code 2, everything else to 3.
bool is_config_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct Estimate {
  cplx value{0.0, 0.0};
  double error = 0.0;
  std::string method;
  // Set when a Taylor evaluation is used beyond its trust radius.
  bool outside_trust_radius = false;
};

// Bilinear (not Hermitian) pairing; Eigen's dot() conjugates its left operand.
template <class A, class B>
auto bilinear(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return (a.transpose() * b).value();
}

inline Covec to_covec(const Point& p) { return p.cast<cplx>(); }

}  // namespace hogeom
