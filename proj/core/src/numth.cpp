#include "negacode/numth.hpp"

#include <string>

#include "negacode/error.hpp"

namespace negacode {

u64 gcd(u64 a, u64 b) noexcept {
  while (b != 0) {
    const u64 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

u64 mul_mod(u64 a, u64 b, u64 modulus) noexcept {
  __extension__ using u128 = unsigned __int128;
  return static_cast<u64>((static_cast<u128>(a) * b) % modulus);
}

u64 mod_pow(u64 base, u64 exponent, u64 modulus) noexcept {
  if (modulus == 1) return 0;
  u64 result = 1;
  base %= modulus;
  while (exponent > 0) {
    if (exponent & 1U) result = mul_mod(result, base, modulus);
    base = mul_mod(base, base, modulus);
    exponent >>= 1U;
  }
  return result;
}

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> factors;
  for (u64 d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    factors.emplace_back(d, e);
  }
  if (n > 1) factors.emplace_back(n, 1U);
  return factors;
}

std::optional<PrimePower> try_prime_power(u64 q) noexcept {
  if (q < 2) return std::nullopt;
  u64 p = q;
  for (u64 d = 2; d <= q / d; d += (d == 2 ? 1 : 2)) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  u64 rest = q;
  unsigned e = 0;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return std::nullopt;
  return PrimePower{q, p, e};
}

PrimePower factor_prime_power(u64 q) {
  if (q < 2) {
    throw Error(Errc::invalid_argument,
                "field size must be at least 2, got " + std::to_string(q));
  }
  if (auto pp = try_prime_power(q)) return *pp;
  throw Error(Errc::not_prime_power,
              std::to_string(q) + " is not a prime power");
}

u64 mult_order(u64 b, u64 modulus) {
  if (modulus < 2) {
    throw Error(Errc::invalid_argument, "modulus must be at least 2");
  }
  b %= modulus;
  if (gcd(b, modulus) != 1) {
    throw Error(Errc::not_coprime, std::to_string(b) + " is not invertible mod " +
                                       std::to_string(modulus));
  }
  // Euler's phi bounds the order; strip prime factors while the power stays 1.
  u64 phi = modulus;
  for (const auto& [p, e] : factorize(modulus)) phi = phi / p * (p - 1);

  u64 order = phi;
  for (const auto& [r, e] : factorize(phi)) {
    for (unsigned i = 0; i < e && order % r == 0; ++i) {
      if (mod_pow(b, order / r, modulus) != 1) break;
      order /= r;
    }
  }
  return order;
}

std::optional<u64> bounded_pow(u64 base, u64 exponent, u64 limit) noexcept {
  if (base <= 1) {
    const u64 value = exponent == 0 ? 1 : base;
    if (value > limit) return std::nullopt;
    return value;
  }
  u64 result = 1;
  for (u64 i = 0; i < exponent; ++i) {
    if (result > limit / base) return std::nullopt;
    result *= base;
    if (result > limit) return std::nullopt;
  }
  return result;
}

}  // namespace negacode
