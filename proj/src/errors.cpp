#include "hogeom/types.hpp"

namespace hogeom {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::RankUnsupported: return "RankUnsupported";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::PoleAtNonpositiveInteger: return "PoleAtNonpositiveInteger";
    case ErrorCode::ParameterPole: return "ParameterPole";
    case ErrorCode::NonConvergent: return "NonConvergent";
    case ErrorCode::NonIntegrableEndpoint: return "NonIntegrableEndpoint";
    case ErrorCode::GenericityViolation: return "GenericityViolation";
    case ErrorCode::OutsideChamber: return "OutsideChamber";
    case ErrorCode::TruncationNotConverged: return "TruncationNotConverged";
    case ErrorCode::CFunctionPole: return "CFunctionPole";
    case ErrorCode::InconsistentSystem: return "InconsistentSystem";
    case ErrorCode::DivisionNotExact: return "DivisionNotExact";
    case ErrorCode::StripViolation: return "StripViolation";
    case ErrorCode::MethodUnavailable: return "MethodUnavailable";
    case ErrorCode::SingularPoint: return "SingularPoint";
  }
  return "Unknown";
}

bool is_config_error(ErrorCode code) {
  return code == ErrorCode::InvalidArgument ||
         code == ErrorCode::RankUnsupported ||
         code == ErrorCode::NotRepresentable ||
         code == ErrorCode::StripViolation ||
         code == ErrorCode::MethodUnavailable;
}

}  // namespace hogeom
