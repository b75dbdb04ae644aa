#include "quadproj/errors.hpp"

namespace quadproj {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NonPositiveAxis: return "NonPositiveAxis";
    case Errc::ParaboloidOriginUndefined: return "ParaboloidOriginUndefined";
    case Errc::PoleNotProjectable: return "PoleNotProjectable";
    case Errc::NotOnSurface: return "NotOnSurface";
    case Errc::DegenerateSection: return "DegenerateSection";
    case Errc::InvalidSampleCount: return "InvalidSampleCount";
    case Errc::SingularVelocity: return "SingularVelocity";
    case Errc::QuadratureNonConvergence: return "QuadratureNonConvergence";
    case Errc::DomainError: return "DomainError";
    case Errc::FocusCheckFailed: return "FocusCheckFailed";
    case Errc::TooFewPoints: return "TooFewPoints";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

GeometryError::GeometryError(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace quadproj
