#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace negacode {

using u64 = std::uint64_t;

/// A field size q = p^e.
struct PrimePower {
  u64 q = 0;
  u64 p = 0;
  unsigned e = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

u64 gcd(u64 a, u64 b) noexcept;

/// (a * b) mod m without overflow for any 64-bit operands. All modular
/// arithmetic in the library goes through this.
u64 mul_mod(u64 a, u64 b, u64 modulus) noexcept;

u64 mod_pow(u64 base, u64 exponent, u64 modulus) noexcept;

bool is_prime(u64 n) noexcept;

/// Prime factorization by trial division, primes ascending.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

/// Throws Error{not_prime_power} if q has two distinct prime factors and
/// Error{invalid_argument} if q < 2.
PrimePower factor_prime_power(u64 q);

std::optional<PrimePower> try_prime_power(u64 q) noexcept;

/// Smallest t >= 1 with b^t = 1 (mod modulus). Throws Error{not_coprime}.
u64 mult_order(u64 b, u64 modulus);

/// base^exponent, or nullopt when the result exceeds `limit`.
std::optional<u64> bounded_pow(u64 base, u64 exponent, u64 limit) noexcept;

}  // namespace negacode
