#include "gft/error.hpp"

namespace gft {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
    case Errc::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case Errc::ConstantTermNotOne: return "ConstantTermNotOne";
    case Errc::RadiusTooLarge: return "RadiusTooLarge";
    case Errc::TruncationUnreliable: return "TruncationUnreliable";
    case Errc::UnsupportedSpec: return "UnsupportedSpec";
    case Errc::MembershipCheckFailed: return "MembershipCheckFailed";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::PoleAtEvaluationPoint: return "PoleAtEvaluationPoint";
    case Errc::NoPositiveStart: return "NoPositiveStart";
    case Errc::HypothesisViolatedAtOrigin: return "HypothesisViolatedAtOrigin";
  }
  return "Unknown";
}

}  // namespace gft
