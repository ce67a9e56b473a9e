#pragma once

#include <compare>
#include <span>
#include <utility>
#include <vector>

#include "negacode/numth.hpp"

namespace negacode {

/// An element of GF(p^k) in the polynomial basis, packed as the base-p
/// integer sum c_i p^i of its coefficients.
struct FieldElement {
  u64 code = 0;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// GF(p^k) = GF(p)[x] / (f) for a monic irreducible f of degree k.
class GaloisField {
 public:
  /// Field with the lexicographically smallest monic irreducible modulus,
  /// comparing coefficient tuples (c_0, c_1, ..., c_{k-1}) with c_0 most
  /// significant. Throws Error{not_prime} or Error{invalid_argument} when
  /// p^k does not fit the packed representation.
  static GaloisField build(u64 p, unsigned degree);

  /// Uses `modulus` (coefficients low degree first, monic). Throws
  /// Error{invalid_argument} if it is not monic irreducible.
  GaloisField(u64 p, std::vector<u64> modulus);

  u64 characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return degree_; }
  u64 order() const noexcept { return order_; }
  const std::vector<u64>& modulus() const noexcept { return modulus_; }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  /// Image of an integer under Z -> GF(p).
  FieldElement from_integer(std::int64_t v) const noexcept;
  FieldElement from_coefficients(std::span<const u64> coeffs) const;
  std::vector<u64> coefficients(FieldElement e) const;

  FieldElement add(FieldElement a, FieldElement b) const noexcept;
  FieldElement sub(FieldElement a, FieldElement b) const noexcept;
  FieldElement neg(FieldElement a) const noexcept;
  FieldElement mul(FieldElement a, FieldElement b) const noexcept;
  FieldElement pow(FieldElement a, u64 exponent) const noexcept;
  /// Throws Error{invalid_argument} for zero.
  FieldElement inv(FieldElement a) const;
  /// a^(p^power), the power-th iterate of the absolute Frobenius.
  FieldElement frobenius(FieldElement a, unsigned power = 1) const noexcept;

  /// Multiplicative order of a nonzero element.
  u64 element_order(FieldElement a) const;
  bool is_generator(FieldElement a) const;
  /// First element (by packed code) generating the multiplicative group.
  FieldElement multiplicative_generator() const;

  friend bool operator==(const GaloisField& x, const GaloisField& y) noexcept {
    return x.p_ == y.p_ && x.modulus_ == y.modulus_;
  }

 private:
  void unpack(u64 code, u64* out) const noexcept;
  u64 pack(const u64* digits) const noexcept;

  u64 p_;
  unsigned degree_;
  u64 order_;
  std::vector<u64> modulus_;
  std::vector<u64> place_;  // p^i
  std::vector<std::pair<u64, unsigned>> group_factors_;  // of order - 1
};

/// Polynomial over a GaloisField, coefficients low degree first, no
/// trailing zeros (the zero polynomial is empty).
struct Poly {
  std::vector<FieldElement> coeffs;

  bool is_zero() const noexcept { return coeffs.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs.size()) - 1; }

  friend bool operator==(const Poly&, const Poly&) = default;
};

namespace poly {

void normalize(Poly& f);
Poly constant(FieldElement c);
/// x^n + 1.
Poly x_pow_plus_one(const GaloisField& field, u64 n);
Poly add(const GaloisField& field, const Poly& f, const Poly& g);
Poly mul(const GaloisField& field, const Poly& f, const Poly& g);
/// Quotient and remainder. Throws Error{invalid_argument} on division by zero.
std::pair<Poly, Poly> divmod(const GaloisField& field, const Poly& f, const Poly& g);
FieldElement evaluate(const GaloisField& field, const Poly& f, FieldElement x);

}  // namespace poly

}  // namespace negacode
