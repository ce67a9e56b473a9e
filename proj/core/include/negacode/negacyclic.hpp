#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "negacode/cosets.hpp"

namespace negacode {

/// Defining set of a negacyclic code: a union of whole q^2-cyclotomic
/// cosets. Always closed; constructed only through the factories below.
class DefiningSet {
 public:
  explicit DefiningSet(CosetContext ctx);

  const CosetContext& context() const noexcept { return ctx_; }
  const ResidueSet& residues() const noexcept { return residues_; }

  /// Canonical (minimum) representatives of the cosets making up the set.
  const std::vector<Residue>& coset_representatives() const noexcept { return reps_; }

  std::size_t size() const noexcept { return residues_.size(); }
  bool empty() const noexcept { return residues_.empty(); }
  bool contains(Residue x) const;

  friend DefiningSet make_defining_set(const CosetContext&, std::span<const Residue>);

 private:
  CosetContext ctx_;
  ResidueSet residues_;
  std::vector<Residue> reps_;
};

/// Closure of `reps` under the q^2-orbit. Throws Error{even_residue} for an
/// even representative. Representatives are reduced mod 2n.
DefiningSet make_defining_set(const CosetContext& ctx, std::span<const Residue> reps);

/// Union of the cosets containing s + 2j for j = start_j .. start_j + count - 1
/// (taken mod 2n). Requires even n and count >= 1.
DefiningSet consecutive_run_defining_set(const CosetContext& ctx, std::int64_t start_j,
                                         u64 count);

/// 1 + the longest run of consecutive odd exponents in Z, searched
/// cyclically. Throws Error{empty_set} on an empty set.
u64 bch_bound(const DefiningSet& z);

struct ClassicalParams {
  u64 n = 0;
  u64 k_dim = 0;
  u64 d_bch = 1;
  bool is_mds = false;
  bool degenerate = false;  // zero code, k_dim == 0
  std::optional<u64> d_exact;
};

ClassicalParams classical_params(const DefiningSet& z);

}  // namespace negacode
