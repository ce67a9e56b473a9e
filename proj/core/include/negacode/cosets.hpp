#pragma once

#include <optional>
#include <span>
#include <vector>

#include "negacode/numth.hpp"

namespace negacode {

using Residue = u64;

/// Sorted, duplicate-free residues modulo 2n.
using ResidueSet = std::vector<Residue>;

/// The ring Z/2nZ viewed through the odd residues (the exponents of the
/// roots of x^n + 1) together with the field-size base q.
///
/// q is not required to be a prime power here: the coset combinatorics only
/// need q to be invertible modulo 2n. Callers that build actual fields check
/// primality separately.
class CosetContext {
 public:
  /// Throws Error{invalid_argument} for n == 0 or q < 2 and
  /// Error{not_coprime} when gcd(q, 2n) != 1.
  CosetContext(u64 n, u64 q);

  u64 n() const noexcept { return n_; }
  u64 q() const noexcept { return q_; }
  u64 two_n() const noexcept { return two_n_; }

  /// n / 2, present only for even n.
  std::optional<u64> s() const noexcept;

  /// q^2 mod 2n, the orbit multiplier.
  u64 multiplier() const noexcept { return multiplier_; }

  /// x -> (2n - q x) mod 2n.
  Residue neg_q(Residue x) const noexcept;

  bool is_odd_residue(Residue x) const noexcept { return x < two_n_ && (x & 1U) == 1; }

  friend bool operator==(const CosetContext&, const CosetContext&) = default;

 private:
  u64 n_;
  u64 q_;
  u64 two_n_;
  u64 multiplier_;
};

/// One q^2-orbit on the odd residues modulo 2n. The representative is the
/// smallest member.
struct CyclotomicCoset {
  Residue representative = 0;
  ResidueSet elements;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(Residue x) const;

  friend bool operator==(const CyclotomicCoset&, const CyclotomicCoset&) = default;
};

/// Orbit of an odd residue i, 0 <= i < 2n. Throws Error{even_residue} for
/// even i and Error{invalid_argument} when i is out of range.
CyclotomicCoset coset(const CosetContext& ctx, Residue i);

/// Partition of the odd residues into cosets, sorted by representative.
std::vector<CyclotomicCoset> all_cosets(const CosetContext& ctx);

/// Elementwise image under x -> 2n - q x, returned sorted.
ResidueSet neg_q_image(const CosetContext& ctx, std::span<const Residue> residues);

/// Image of a whole coset under the -q map. The image is always a single
/// coset; a violation indicates a broken context and raises std::logic_error.
CyclotomicCoset neg_q_coset_image(const CosetContext& ctx, const CyclotomicCoset& c);

ResidueSet set_union(std::span<const Residue> a, std::span<const Residue> b);
ResidueSet set_intersection(std::span<const Residue> a, std::span<const Residue> b);
ResidueSet set_difference(std::span<const Residue> a, std::span<const Residue> b);

}  // namespace negacode
