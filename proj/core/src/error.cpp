#include "negacode/error.hpp"

namespace negacode {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::not_prime: return "NotPrime";
    case Errc::not_prime_power: return "NotPrimePower";
    case Errc::not_coprime: return "NotCoprime";
    case Errc::even_residue: return "EvenResidue";
    case Errc::even_q: return "EvenQ";
    case Errc::empty_set: return "EmptySet";
    case Errc::subfield_violation: return "SubfieldViolation";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::budget_exceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

}  // namespace negacode
