#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclo {

enum class ErrorKind {
  InvalidArgument,
  InvalidTriangulation,
  NotInteriorEdge,
  NotBoundaryEdge,
  DimMismatch,
  OutOfRange,
  DimensionTooSmall,
  ResourceLimit,
  ConstraintViolation,
  InvalidStaircase,
  NoSolution,
  Parse,
  Io,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidTriangulation: return "InvalidTriangulation";
    case ErrorKind::NotInteriorEdge: return "NotInteriorEdge";
    case ErrorKind::NotBoundaryEdge: return "NotBoundaryEdge";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::ConstraintViolation: return "ConstraintViolation";
    case ErrorKind::InvalidStaircase: return "InvalidStaircase";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace cyclo
