#include "negacode/galois_field.hpp"

#include <gtest/gtest.h>

#include "negacode/error.hpp"

namespace negacode {
namespace {

// Trial division by every monic polynomial of degree 1 .. deg/2 over GF(p).
bool naive_irreducible(const std::vector<u64>& f, u64 p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t dd = 1; dd <= deg / 2; ++dd) {
    u64 count = 1;
    for (std::size_t i = 0; i < dd; ++i) count *= p;
    for (u64 idx = 0; idx < count; ++idx) {
      std::vector<u64> g(dd + 1, 0);
      g[dd] = 1;
      u64 rest = idx;
      for (std::size_t i = 0; i < dd; ++i, rest /= p) g[i] = rest % p;
      std::vector<u64> r = f;
      for (std::size_t i = deg + 1; i-- > dd;) {
        const u64 c = r[i];
        for (std::size_t j = 0; j <= dd; ++j) r[i - dd + j] = (r[i - dd + j] + p * p - c * g[j]) % p;
      }
      bool zero = true;
      for (std::size_t i = 0; i < dd; ++i) zero = zero && r[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

// First monic irreducible in (c_0, ..., c_{k-1}) lexicographic order.
std::vector<u64> naive_first_irreducible(u64 p, std::size_t k) {
  u64 count = 1;
  for (std::size_t i = 0; i < k; ++i) count *= p;
  for (u64 idx = 0; idx < count; ++idx) {
    std::vector<u64> f(k + 1, 0);
    f[k] = 1;
    u64 rest = idx;
    for (std::size_t i = k; i-- > 0; rest /= p) f[i] = rest % p;
    if (naive_irreducible(f, p)) return f;
  }
  return {};
}

TEST(GaloisField, NineElementModulus) {
  const GaloisField f = GaloisField::build(3, 2);
  EXPECT_EQ(f.modulus(), (std::vector<u64>{1, 0, 1}));  // x^2 + 1
  EXPECT_EQ(f.order(), 9U);
}

TEST(GaloisField, PrimeFieldModulusIsX) {
  const GaloisField f = GaloisField::build(3, 1);
  EXPECT_EQ(f.modulus(), (std::vector<u64>{0, 1}));
  EXPECT_EQ(f.mul(f.from_integer(2), f.from_integer(2)), f.one());
}

TEST(GaloisField, ModulusMatchesNaiveScan) {
  for (auto [p, k] : {std::pair<u64, unsigned>{2, 3}, {2, 4}, {3, 3}, {3, 4}, {5, 2}, {5, 4}, {7, 2},
                      {2, 8}, {13, 2}}) {
    EXPECT_EQ(GaloisField::build(p, k).modulus(), naive_first_irreducible(p, k))
        << "GF(" << p << "^" << k << ")";
  }
}

TEST(GaloisField, RejectsBadInput) {
  try {
    GaloisField::build(9, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_prime);
  }
  EXPECT_THROW(GaloisField(3, std::vector<u64>{2, 0, 1}), Error);  // x^2 + 2 = (x-1)(x+1)
  EXPECT_THROW(GaloisField(3, std::vector<u64>{1, 0, 2}), Error);  // not monic
}

TEST(GaloisField, LagrangeAndInverses) {
  for (auto [p, k] : {std::pair<u64, unsigned>{3, 2}, {3, 4}, {5, 2}, {2, 5}, {7, 3}}) {
    const GaloisField f = GaloisField::build(p, k);
    for (u64 code = 1; code < f.order(); ++code) {
      const FieldElement e{code};
      ASSERT_EQ(f.pow(e, f.order() - 1), f.one());
      ASSERT_EQ(f.mul(e, f.inv(e)), f.one());
      ASSERT_EQ(f.add(e, f.neg(e)), f.zero());
    }
  }
}

TEST(GaloisField, RingAxiomsOnGf81) {
  const GaloisField f = GaloisField::build(3, 4);
  for (u64 a = 0; a < 81; a += 7) {
    for (u64 b = 0; b < 81; b += 5) {
      for (u64 c = 0; c < 81; c += 11) {
        const FieldElement x{a}, y{b}, z{c};
        ASSERT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
        ASSERT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
        ASSERT_EQ(f.mul(x, y), f.mul(y, x));
      }
    }
  }
}

TEST(GaloisField, FrobeniusIsAdditive) {
  const GaloisField f = GaloisField::build(5, 3);
  for (u64 a = 0; a < f.order(); a += 3) {
    for (u64 b = 0; b < f.order(); b += 17) {
      const FieldElement x{a}, y{b};
      ASSERT_EQ(f.frobenius(f.add(x, y)), f.add(f.frobenius(x), f.frobenius(y)));
    }
    ASSERT_EQ(f.frobenius(FieldElement{a}, 3), FieldElement{a});
  }
}

TEST(GaloisField, GeneratorHasFullOrder) {
  const GaloisField f = GaloisField::build(3, 4);
  const FieldElement g = f.multiplicative_generator();
  EXPECT_EQ(f.element_order(g), 80U);
  FieldElement x = f.one();
  for (u64 i = 1; i < 80; ++i) {
    x = f.mul(x, g);
    ASSERT_NE(x, f.one()) << i;
  }
}

TEST(GaloisField, CoefficientRoundTrip) {
  const GaloisField f = GaloisField::build(7, 3);
  const std::vector<u64> c{3, 0, 6};
  EXPECT_EQ(f.coefficients(f.from_coefficients(c)), c);
  EXPECT_THROW(f.from_coefficients(std::vector<u64>{1, 2, 3, 4}), Error);
}

TEST(Poly, DivisionIdentity) {
  const GaloisField f = GaloisField::build(5, 2);
  const Poly a{{FieldElement{3}, FieldElement{0}, FieldElement{7}, FieldElement{1}, FieldElement{12}}};
  const Poly b{{FieldElement{4}, FieldElement{9}, FieldElement{1}}};
  const auto [quot, rem] = poly::divmod(f, a, b);
  EXPECT_LT(rem.degree(), b.degree());
  EXPECT_EQ(poly::add(f, poly::mul(f, quot, b), rem), a);
  EXPECT_THROW(poly::divmod(f, a, Poly{}), Error);
}

TEST(Poly, XPowPlusOne) {
  const GaloisField f = GaloisField::build(3, 2);
  const Poly p = poly::x_pow_plus_one(f, 4);
  EXPECT_EQ(p.degree(), 4);
  EXPECT_EQ(poly::evaluate(f, p, f.one()), f.from_integer(2));
}

}  // namespace
}  // namespace negacode
