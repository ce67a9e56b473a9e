#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace negacode {

enum class Errc {
  invalid_argument,
  not_prime,
  not_prime_power,
  not_coprime,
  even_residue,
  even_q,
  empty_set,
  subfield_violation,
  length_mismatch,
  budget_exceeded,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map them onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace negacode
