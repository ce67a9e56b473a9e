#include "negacode/galois_field.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "negacode/error.hpp"

namespace negacode {

namespace {

constexpr unsigned kMaxDegree = 62;
constexpr u64 kMaxOrder = u64{1} << 62;
constexpr u64 kMaxFactorableOrder = 1'000'000'000'000ULL;

// Dense polynomials over the prime field, low degree first.
using PrimePoly = std::vector<u64>;

void trim(PrimePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PrimePoly prime_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + mul_mod(a[i], b[j], p)) % p;
    }
  }
  const std::size_t k = f.size() - 1;  // f monic
  for (std::size_t i = r.size(); i-- > k;) {
    const u64 c = r[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      r[i - k + j] = (r[i - k + j] + p - mul_mod(c, f[j], p)) % p;
    }
    r[i] = 0;
  }
  trim(r);
  return r;
}

PrimePoly prime_powmod(PrimePoly base, u64 e, const PrimePoly& f, u64 p) {
  PrimePoly result{1};
  while (e > 0) {
    if (e & 1U) result = prime_mulmod(result, base, f, p);
    base = prime_mulmod(base, base, f, p);
    e >>= 1U;
  }
  return result;
}

PrimePoly prime_rem(PrimePoly a, const PrimePoly& b, u64 p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const u64 lead_inv = mod_pow(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    const u64 c = mul_mod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) {
      a[shift + j] = (a[shift + j] + p - mul_mod(c, b[j], p)) % p;
    }
    trim(a);
  }
  return a;
}

PrimePoly prime_gcd(PrimePoly a, PrimePoly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PrimePoly r = prime_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test: f | x^(p^k) - x, and gcd(x^(p^(k/r)) - x, f) = 1 for every
// prime r dividing k.
bool is_irreducible(const PrimePoly& f, u64 p) {
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  const PrimePoly x{0, 1};

  auto x_pow_p_iter = [&](std::size_t times) {
    PrimePoly h = x;
    for (std::size_t i = 0; i < times; ++i) h = prime_powmod(h, p, f, p);
    return h;
  };
  auto minus_x = [&](PrimePoly h) {
    if (h.size() < 2) h.resize(2, 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    return h;
  };

  if (!minus_x(x_pow_p_iter(k)).empty()) return false;
  for (const auto& [r, e] : factorize(k)) {
    const PrimePoly g = prime_gcd(minus_x(x_pow_p_iter(k / r)), f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

GaloisField GaloisField::build(u64 p, unsigned degree) {
  if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
  if (degree == 0 || degree > kMaxDegree || !bounded_pow(p, degree, kMaxOrder)) {
    throw Error(Errc::invalid_argument, "GF(" + std::to_string(p) + "^" +
                                            std::to_string(degree) + ") is too large");
  }
  const u64 candidates = *bounded_pow(p, degree, kMaxOrder);
  PrimePoly f(degree + 1, 0);
  f[degree] = 1;
  for (u64 idx = 0; idx < candidates; ++idx) {
    // c_0 is the most significant digit of idx.
    u64 rest = idx;
    for (unsigned i = degree; i-- > 0;) {
      f[i] = rest % p;
      rest /= p;
    }
    if (f[0] == 0 && degree > 1) continue;  // divisible by x
    if (is_irreducible(f, p)) return GaloisField(p, f);
  }
  throw Error(Errc::invalid_argument, "no irreducible polynomial found");
}

GaloisField::GaloisField(u64 p, std::vector<u64> modulus)
    : p_(p), degree_(0), order_(0), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) throw Error(Errc::not_prime, std::to_string(p_) + " is not prime");
  if (modulus_.size() < 2 || modulus_.back() != 1) {
    throw Error(Errc::invalid_argument, "field modulus must be monic of degree >= 1");
  }
  for (u64 c : modulus_) {
    if (c >= p_) throw Error(Errc::invalid_argument, "modulus coefficient out of range");
  }
  degree_ = static_cast<unsigned>(modulus_.size() - 1);
  const auto order = bounded_pow(p_, degree_, kMaxOrder);
  if (degree_ > kMaxDegree || !order) {
    throw Error(Errc::invalid_argument, "field too large for packed elements");
  }
  if (!is_irreducible(modulus_, p_)) {
    throw Error(Errc::invalid_argument, "field modulus is reducible");
  }
  order_ = *order;
  place_.resize(degree_);
  u64 w = 1;
  for (unsigned i = 0; i < degree_; ++i, w *= p_) place_[i] = w;
  if (order_ <= kMaxFactorableOrder) group_factors_ = factorize(order_ - 1);
}

void GaloisField::unpack(u64 code, u64* out) const noexcept {
  for (unsigned i = 0; i < degree_; ++i) {
    out[i] = code % p_;
    code /= p_;
  }
}

u64 GaloisField::pack(const u64* digits) const noexcept {
  u64 code = 0;
  for (unsigned i = degree_; i-- > 0;) code = code * p_ + digits[i];
  return code;
}

FieldElement GaloisField::from_integer(std::int64_t v) const noexcept {
  const auto p = static_cast<std::int64_t>(p_);
  return {static_cast<u64>(((v % p) + p) % p)};
}

FieldElement GaloisField::from_coefficients(std::span<const u64> coeffs) const {
  if (coeffs.size() > degree_) {
    throw Error(Errc::length_mismatch, "too many coefficients for field element");
  }
  std::array<u64, kMaxDegree> d{};
  for (std::size_t i = 0; i < coeffs.size(); ++i) d[i] = coeffs[i] % p_;
  return {pack(d.data())};
}

std::vector<u64> GaloisField::coefficients(FieldElement e) const {
  std::vector<u64> out(degree_);
  unpack(e.code, out.data());
  return out;
}

FieldElement GaloisField::add(FieldElement a, FieldElement b) const noexcept {
  std::array<u64, kMaxDegree> x{};
  std::array<u64, kMaxDegree> y{};
  unpack(a.code, x.data());
  unpack(b.code, y.data());
  for (unsigned i = 0; i < degree_; ++i) x[i] = (x[i] + y[i]) % p_;
  return {pack(x.data())};
}

FieldElement GaloisField::neg(FieldElement a) const noexcept {
  std::array<u64, kMaxDegree> x{};
  unpack(a.code, x.data());
  for (unsigned i = 0; i < degree_; ++i) x[i] = (p_ - x[i]) % p_;
  return {pack(x.data())};
}

FieldElement GaloisField::sub(FieldElement a, FieldElement b) const noexcept {
  return add(a, neg(b));
}

FieldElement GaloisField::mul(FieldElement a, FieldElement b) const noexcept {
  if (a.code == 0 || b.code == 0) return zero();
  std::array<u64, kMaxDegree> x{};
  std::array<u64, kMaxDegree> y{};
  std::array<u64, 2 * kMaxDegree> r{};
  unpack(a.code, x.data());
  unpack(b.code, y.data());
  const unsigned k = degree_;
  for (unsigned i = 0; i < k; ++i) {
    if (x[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j) {
      r[i + j] = (r[i + j] + mul_mod(x[i], y[j], p_)) % p_;
    }
  }
  for (unsigned i = 2 * k - 1; i-- > k;) {
    const u64 c = r[i];
    if (c == 0) continue;
    for (unsigned j = 0; j < k; ++j) {
      r[i - k + j] = (r[i - k + j] + p_ - mul_mod(c, modulus_[j], p_)) % p_;
    }
  }
  return {pack(r.data())};
}

FieldElement GaloisField::pow(FieldElement a, u64 exponent) const noexcept {
  FieldElement result = one();
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, a);
    a = mul(a, a);
    exponent >>= 1U;
  }
  return result;
}

FieldElement GaloisField::inv(FieldElement a) const {
  if (a.code == 0) throw Error(Errc::invalid_argument, "zero has no inverse");
  return pow(a, order_ - 2);
}

FieldElement GaloisField::frobenius(FieldElement a, unsigned power) const noexcept {
  for (unsigned i = 0; i < power; ++i) a = pow(a, p_);
  return a;
}

u64 GaloisField::element_order(FieldElement a) const {
  if (a.code == 0) throw Error(Errc::invalid_argument, "zero has no multiplicative order");
  if (group_factors_.empty() && order_ > 2) {
    throw Error(Errc::invalid_argument, "field too large for order computations");
  }
  u64 ord = order_ - 1;
  for (const auto& [r, e] : group_factors_) {
    for (unsigned i = 0; i < e; ++i) {
      if (pow(a, ord / r) != one()) break;
      ord /= r;
    }
  }
  return ord;
}

bool GaloisField::is_generator(FieldElement a) const {
  return a.code != 0 && element_order(a) == order_ - 1;
}

FieldElement GaloisField::multiplicative_generator() const {
  for (u64 code = 1; code < order_; ++code) {
    if (is_generator({code})) return {code};
  }
  throw Error(Errc::invalid_argument, "no multiplicative generator found");
}

namespace poly {

void normalize(Poly& f) {
  while (!f.coeffs.empty() && f.coeffs.back().code == 0) f.coeffs.pop_back();
}

Poly constant(FieldElement c) {
  Poly f{{c}};
  normalize(f);
  return f;
}

Poly x_pow_plus_one(const GaloisField& field, u64 n) {
  Poly f;
  f.coeffs.assign(n + 1, field.zero());
  f.coeffs[0] = field.add(f.coeffs[0], field.one());
  f.coeffs[n] = field.add(f.coeffs[n], field.one());
  normalize(f);
  return f;
}

Poly add(const GaloisField& field, const Poly& f, const Poly& g) {
  Poly r;
  r.coeffs.resize(std::max(f.coeffs.size(), g.coeffs.size()), field.zero());
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) r.coeffs[i] = f.coeffs[i];
  for (std::size_t i = 0; i < g.coeffs.size(); ++i) r.coeffs[i] = field.add(r.coeffs[i], g.coeffs[i]);
  normalize(r);
  return r;
}

Poly mul(const GaloisField& field, const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  Poly r;
  r.coeffs.assign(f.coeffs.size() + g.coeffs.size() - 1, field.zero());
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i].code == 0) continue;
    for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
      r.coeffs[i + j] = field.add(r.coeffs[i + j], field.mul(f.coeffs[i], g.coeffs[j]));
    }
  }
  normalize(r);
  return r;
}

std::pair<Poly, Poly> divmod(const GaloisField& field, const Poly& f, const Poly& g) {
  if (g.is_zero()) throw Error(Errc::invalid_argument, "polynomial division by zero");
  Poly rem = f;
  normalize(rem);
  Poly quot;
  if (rem.degree() < g.degree()) return {quot, rem};
  quot.coeffs.assign(static_cast<std::size_t>(rem.degree() - g.degree() + 1), field.zero());
  const FieldElement lead_inv = field.inv(g.coeffs.back());
  while (!rem.is_zero() && rem.degree() >= g.degree()) {
    const auto shift = static_cast<std::size_t>(rem.degree() - g.degree());
    const FieldElement c = field.mul(rem.coeffs.back(), lead_inv);
    quot.coeffs[shift] = c;
    for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
      rem.coeffs[shift + j] = field.sub(rem.coeffs[shift + j], field.mul(c, g.coeffs[j]));
    }
    normalize(rem);
  }
  normalize(quot);
  return {quot, rem};
}

FieldElement evaluate(const GaloisField& field, const Poly& f, FieldElement x) {
  FieldElement acc = field.zero();
  for (std::size_t i = f.coeffs.size(); i-- > 0;) {
    acc = field.add(field.mul(acc, x), f.coeffs[i]);
  }
  return acc;
}

}  // namespace poly

}  // namespace negacode
