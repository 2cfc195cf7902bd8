#include "qha/error.hpp"

namespace qha {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::BackendMismatch: return "BackendMismatch";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::WrongBackend: return "WrongBackend";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::UnsupportedDenominator: return "UnsupportedDenominator";
    case ErrorCode::OrbitMismatch: return "OrbitMismatch";
    case ErrorCode::NonPolynomialImage: return "NonPolynomialImage";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::InvalidQuiver: return "InvalidQuiver";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::InvalidPFamily: return "InvalidPFamily";
    case ErrorCode::NotComponentStable: return "NotComponentStable";
    case ErrorCode::NotFullOrbit: return "NotFullOrbit";
    case ErrorCode::NotFiniteField: return "NotFiniteField";
    case ErrorCode::OverlappingOrbitSets: return "OverlappingOrbitSets";
    case ErrorCode::DegenerateQ: return "DegenerateQ";
    case ErrorCode::DegenerateParams: return "DegenerateParams";
    case ErrorCode::InvalidGenerator: return "InvalidGenerator";
    case ErrorCode::NotInAlgebra: return "NotInAlgebra";
    case ErrorCode::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorCode::ParamsNotZero: return "ParamsNotZero";
    case ErrorCode::CornerMismatch: return "CornerMismatch";
    case ErrorCode::NotInCorner: return "NotInCorner";
    case ErrorCode::NotBlockSupported: return "NotBlockSupported";
    case ErrorCode::ComponentEmpty: return "ComponentEmpty";
    case ErrorCode::DEqualsOne: return "DEqualsOne";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace qha
