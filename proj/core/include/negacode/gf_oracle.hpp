#pragma once

#include <span>
#include <vector>

#include "negacode/galois_field.hpp"
#include "negacode/negacyclic.hpp"

namespace negacode {

/// Largest extension field GF(q^{2t}) the oracle will construct.
inline constexpr u64 kMaxOracleFieldOrder = 100'000'000;

/// Default cap on enumerated codewords for brute_force_distance.
inline constexpr u64 kDefaultBruteForceBudget = 10'000'000;

/// GF(q^{2t}) with t = ord_{2n}(q^2), a generator of its multiplicative
/// group, and beta = generator^((q^{2t} - 1) / 2n) of exact order 2n.
/// GF(q^2) is the subfield of elements fixed by x -> x^{q^2}.
struct NegacyclicRoot {
  PrimePower q;
  u64 n = 0;
  u64 t = 0;
  GaloisField field;
  FieldElement generator;
  FieldElement beta;

  u64 subfield_order() const noexcept { return q.q * q.q; }
  bool in_subfield(FieldElement e) const noexcept;
};

/// Throws Error{not_coprime} if gcd(n, q) != 1 or q is even and
/// Error{budget_exceeded} if q^{2t} exceeds `max_field_order`.
NegacyclicRoot primitive_2n_root(const PrimePower& q, u64 n,
                                 u64 max_field_order = kMaxOracleFieldOrder);

/// prod_{t in C} (x - beta^t). Coefficients are checked to lie in GF(q^2);
/// Error{subfield_violation} otherwise.
Poly minimal_polynomial(const NegacyclicRoot& root, const CyclotomicCoset& c);

/// Product of the minimal polynomials of the cosets of Z.
Poly generator_polynomial(const NegacyclicRoot& root, const DefiningSet& z);

/// Exact minimum distance of the length-n code generated by g, found by
/// enumerating every message polynomial of degree < n - deg g over GF(q^2).
/// A constant g returns 1 without enumerating. Throws
/// Error{budget_exceeded} when (q^2)^(n - deg g) > budget and
/// Error{invalid_argument} for the zero code.
u64 brute_force_distance(const NegacyclicRoot& root, const Poly& g, u64 n,
                         u64 budget = kDefaultBruteForceBudget);

/// Componentwise a -> a^q. Entries must lie in GF(q^2).
std::vector<FieldElement> hermitian_conjugate(const NegacyclicRoot& root,
                                              std::span<const FieldElement> v);

/// sum x_i * y_i^q. Throws Error{length_mismatch}.
FieldElement hermitian_inner(const NegacyclicRoot& root, std::span<const FieldElement> x,
                             std::span<const FieldElement> y);

}  // namespace negacode
