#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qha {

enum class ErrorCode {
  DivisionByZero,
  BackendMismatch,
  ZeroElement,
  WrongBackend,
  InvalidField,
  ParseError,
  SizeMismatch,
  NotDivisible,
  UnsupportedDenominator,
  OrbitMismatch,
  NonPolynomialImage,
  UnknownVertex,
  InvalidQuiver,
  InvalidParams,
  InvalidPFamily,
  NotComponentStable,
  NotFullOrbit,
  NotFiniteField,
  OverlappingOrbitSets,
  DegenerateQ,
  DegenerateParams,
  InvalidGenerator,
  NotInAlgebra,
  DescriptorMismatch,
  ParamsNotZero,
  CornerMismatch,
  NotInCorner,
  NotBlockSupported,
  ComponentEmpty,
  DEqualsOne,
  ConfigError,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qha
