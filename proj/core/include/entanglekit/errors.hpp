#pragma once

#include <stdexcept>
#include <string>

namespace entanglekit {

/// Base class for every domain error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Schmidt-vector construction
struct EmptyInput : Error { using Error::Error; };
struct NegativeCoefficient : Error { using Error::Error; };
struct NotNormalized : Error { using Error::Error; };

// Density-matrix backend
struct RankExceedsDims : Error { using Error::Error; };
struct NotSymmetric : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };

// Majorization / conversion
struct TargetShorterThanInput : Error { using Error::Error; };
struct NotComparableInDirection : Error { using Error::Error; };

// Equi-entangled curves
struct InfeasibleTarget : Error { using Error::Error; };
struct NoOverlap : Error { using Error::Error; };

/// A numerical invariant that must hold by theorem was observed to fail.
/// Carries a description of the offending inputs.
struct PropertyViolation : Error { using Error::Error; };

}  // namespace entanglekit
