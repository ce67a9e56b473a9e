#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "negacode/eaqecc.hpp"
#include "negacode/error.hpp"

namespace negacode {

/// Case I: q = a*xi + a - m.  Case II: q = a*xi + m.  Here a = m^2 + 1.
enum class FamilyCase { I, II };

/// plain yields [[n, k, d; c]]; shifted yields [[n, k - 1, d; c - 1]].
enum class Branch { plain, shifted };

std::string_view to_string(FamilyCase c) noexcept;
std::string_view to_string(Branch b) noexcept;
std::optional<FamilyCase> parse_family_case(std::string_view text) noexcept;

struct FamilyInput {
  u64 m = 1;
  u64 xi = 1;
  u64 alpha = 1;
  FamilyCase family_case = FamilyCase::I;

  friend bool operator==(const FamilyInput&, const FamilyInput&) = default;
};

/// Whether q must be a genuine prime power. `combinatorial_only` lets the
/// coset/defining-set computation run for any odd q; no field exists then
/// and the result says nothing about an actual quantum code.
enum class Admissibility { prime_power_required, combinatorial_only };

struct FamilyContext {
  u64 a = 0;
  u64 q = 0;
  u64 n = 0;
  u64 s = 0;
  Branch branch = Branch::plain;
  std::optional<PrimePower> field;  // empty when q is not a prime power

  friend bool operator==(const FamilyContext&, const FamilyContext&) = default;
};

u64 family_q(u64 m, u64 xi, FamilyCase c) noexcept;
Branch family_branch(u64 m, u64 xi) noexcept;

/// Validates the input (m odd, 1 <= alpha <= xi) and derives q, n, s and the
/// parity branch. Throws Error{invalid_argument}, Error{not_prime_power} or
/// Error{even_q}.
FamilyContext derive_context(const FamilyInput& in,
                             Admissibility policy = Admissibility::prime_power_required);

/// Closed-form parameters, case I and case II respectively. Both throw
/// Error{invalid_argument} when handed the other case.
EAParams predicted_params_case1(const FamilyInput& in,
                                Admissibility policy = Admissibility::prime_power_required);
EAParams predicted_params_case2(const FamilyInput& in,
                                Admissibility policy = Admissibility::prime_power_required);
EAParams predicted_params(const FamilyInput& in,
                          Admissibility policy = Admissibility::prime_power_required);

/// Number of cosets C_s, C_{s+2}, ... in the defining set.
u64 run_length(const FamilyInput& in, const FamilyContext& ctx) noexcept;

DefiningSet build_defining_set(const FamilyInput& in,
                               Admissibility policy = Admissibility::prime_power_required);

struct FamilyReport {
  FamilyInput input;
  FamilyContext context;
  EAParams predicted;
  EAParams computed;
  u64 z_size = 0;
  u64 z1_size = 0;
  bool classical_mds = false;
  bool match = false;
  std::vector<std::string> warnings;

  friend bool operator==(const FamilyReport&, const FamilyReport&) = default;
};

/// Builds Z, decomposes it and compares the direct parameters against the
/// closed form.
FamilyReport verify(const FamilyInput& in,
                    Admissibility policy = Admissibility::prime_power_required);

struct Rejection {
  u64 m = 0;
  u64 xi = 0;
  FamilyCase family_case = FamilyCase::I;
  u64 q = 0;
  Errc reason = Errc::not_prime_power;
  std::string message;
};

struct SweepResult {
  std::vector<FamilyReport> reports;  // ordered by (m, xi, alpha, case)
  std::vector<Rejection> rejected;    // ordered by (m, xi, case)
};

/// One (m, xi, case) cell; every alpha in [1, xi] is evaluated.
struct GridCell {
  u64 m = 1;
  u64 xi = 1;
  FamilyCase family_case = FamilyCase::I;
};

/// All odd m <= m_max, xi <= xi_max, both cases. `threads == 0` picks the
/// hardware concurrency; the result does not depend on it.
SweepResult sweep(u64 m_max, u64 xi_max, unsigned threads = 0);

SweepResult sweep_cells(std::span<const GridCell> cells,
                        Admissibility policy = Admissibility::prime_power_required,
                        unsigned threads = 0);

/// The (m, xi, case) cells of the published explicit-code table. Case I and
/// case II coincide for m = 1; that block is listed once, as case I.
std::span<const GridCell> published_grid() noexcept;

}  // namespace negacode
