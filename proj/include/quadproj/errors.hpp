#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quadproj {

enum class Errc {
  NonPositiveAxis,
  ParaboloidOriginUndefined,
  PoleNotProjectable,
  NotOnSurface,
  DegenerateSection,
  InvalidSampleCount,
  SingularVelocity,
  QuadratureNonConvergence,
  DomainError,
  FocusCheckFailed,
  TooFewPoints,
  InvalidArgument,
};

std::string_view to_string(Errc code) noexcept;

/// Raised by every library operation that rejects its input. The code
/// identifies the failure class; what() carries the detail.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace quadproj
