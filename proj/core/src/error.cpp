#include "lpi/error.hpp"

namespace lpi {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::RingTooSmall: return "RingTooSmall";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::InvalidTable: return "InvalidTable";
    case ErrorKind::SpecSyntaxError: return "SpecSyntaxError";
    case ErrorKind::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::SamplingExhausted: return "SamplingExhausted";
    case ErrorKind::OrderNotInvertible: return "OrderNotInvertible";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::MissingConstantTerm: return "MissingConstantTerm";
    case ErrorKind::AllNonconstantCancelled: return "AllNonconstantCancelled";
    case ErrorKind::NonPowerMonomial: return "NonPowerMonomial";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

static std::string decorate(ErrorKind kind, const std::string& message, std::size_t position) {
  std::string out = std::string(to_string(kind)) + ": " + message;
  if (position != Error::npos) out += " (at position " + std::to_string(position) + ")";
  return out;
}

Error::Error(ErrorKind kind, const std::string& message, std::size_t position)
    : std::runtime_error(decorate(kind, message, position)), kind_(kind), position_(position) {}

}  // namespace lpi
