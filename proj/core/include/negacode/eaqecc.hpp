#pragma once

#include <cstdint>
#include <string_view>

#include "negacode/negacyclic.hpp"

namespace negacode {

/// Z = Z1 u Z2 with Z1 = Z n (-qZ) and Z2 = Z \ Z1.
struct Decomposition {
  ResidueSet z1;
  ResidueSet z2;
};

Decomposition decompose(const DefiningSet& z);

enum class ParamSource { formula, direct, both };

std::string_view to_string(ParamSource s) noexcept;

/// [[n, k, d; c]]_q. Signed so that closed-form evaluations outside their
/// domain remain representable instead of wrapping.
struct EAParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t d = 0;
  std::int64_t c = 0;
  u64 q = 0;
  bool is_eaqmds = false;
  bool d_is_exact = false;
  ParamSource source = ParamSource::direct;

  bool degenerate() const noexcept { return k == 0; }

  /// Compares the quadruple only.
  bool same_quadruple(const EAParams& o) const noexcept {
    return n == o.n && k == o.k && d == o.d && c == o.c;
  }

  friend bool operator==(const EAParams&, const EAParams&) = default;
};

struct SingletonCheck {
  bool saturated = false;   // n + c - k == 2(d - 1)
  std::int64_t slack = 0;   // n + c - k - 2(d - 1)
  bool applicable = false;  // d <= (n + 2) / 2
};

SingletonCheck ea_singleton_check(const EAParams& p) noexcept;

/// EAQECC parameters from a defining set: k = n - 2|Z| + |Z1|, c = |Z1| and
/// d the BCH bound of Z, flagged exact when the classical code is MDS.
EAParams ea_params(const DefiningSet& z);

/// Same as above when the decomposition has already been computed.
EAParams ea_params(const DefiningSet& z, const Decomposition& dec);

}  // namespace negacode
