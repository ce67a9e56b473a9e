#include "negacode/gf_oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>

#include "negacode/error.hpp"

namespace negacode {

namespace {

// GF(q^2) in Zech-logarithm form: 0 is zero, v >= 1 stands for delta^(v-1)
// where delta generates the subfield's multiplicative group.
class SubfieldArithmetic {
 public:
  explicit SubfieldArithmetic(const NegacyclicRoot& root)
      : order_(root.subfield_order()), group_(order_ - 1) {
    const GaloisField& f = root.field;
    const FieldElement delta = f.pow(root.generator, (f.order() - 1) / group_);
    std::vector<FieldElement> powers(group_);
    log_.reserve(group_);
    FieldElement x = f.one();
    for (u64 i = 0; i < group_; ++i) {
      powers[i] = x;
      log_.emplace(x.code, i);
      x = f.mul(x, delta);
    }
    zech_.assign(group_, kNone);
    for (u64 i = 0; i < group_; ++i) {
      const FieldElement sum = f.add(powers[i], f.one());
      if (sum.code != 0) zech_[i] = log_.at(sum.code);
    }
  }

  u64 order() const noexcept { return order_; }

  /// Representation of an embedded element; Error{subfield_violation} if the
  /// element is outside GF(q^2).
  u64 encode(FieldElement e) const {
    if (e.code == 0) return 0;
    const auto it = log_.find(e.code);
    if (it == log_.end()) {
      throw Error(Errc::subfield_violation, "generator coefficient lies outside GF(q^2)");
    }
    return it->second + 1;
  }

  u64 mul(u64 a, u64 b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return 1 + ((a - 1) + (b - 1)) % group_;
  }

  u64 add(u64 a, u64 b) const noexcept {
    if (a == 0) return b;
    if (b == 0) return a;
    const u64 la = a - 1;
    const u64 diff = (b - 1 + group_ - la) % group_;
    const u64 z = zech_[diff];
    if (z == kNone) return 0;
    return 1 + (la + z) % group_;
  }

  u64 neg(u64 a) const noexcept {
    // -1 = delta^((q^2 - 1)/2) in odd characteristic.
    return mul(a, 1 + group_ / 2);
  }

 private:
  static constexpr u64 kNone = std::numeric_limits<u64>::max();

  u64 order_;
  u64 group_;
  std::unordered_map<u64, u64> log_;
  std::vector<u64> zech_;
};

void require_subfield(const NegacyclicRoot& root, std::span<const FieldElement> v) {
  for (FieldElement e : v) {
    if (!root.in_subfield(e)) {
      throw Error(Errc::subfield_violation, "vector entry lies outside GF(q^2)");
    }
  }
}

}  // namespace

bool NegacyclicRoot::in_subfield(FieldElement e) const noexcept {
  return field.pow(e, subfield_order()) == e;
}

NegacyclicRoot primitive_2n_root(const PrimePower& q, u64 n, u64 max_field_order) {
  const CosetContext ctx(n, q.q);  // validates gcd(q, 2n) = 1
  const u64 t = mult_order(ctx.multiplier(), ctx.two_n());
  const auto field_order = bounded_pow(q.q, 2 * t, max_field_order);
  if (!field_order) {
    throw Error(Errc::budget_exceeded,
                "extension field GF(" + std::to_string(q.q) + "^" + std::to_string(2 * t) +
                    ") exceeds the oracle limit of " + std::to_string(max_field_order) +
                    " elements");
  }
  GaloisField field = GaloisField::build(q.p, static_cast<unsigned>(q.e * 2 * t));
  const FieldElement gen = field.multiplicative_generator();
  const FieldElement beta = field.pow(gen, (field.order() - 1) / ctx.two_n());
  return NegacyclicRoot{q, n, t, std::move(field), gen, beta};
}

Poly minimal_polynomial(const NegacyclicRoot& root, const CyclotomicCoset& c) {
  const GaloisField& f = root.field;
  Poly m = poly::constant(f.one());
  for (Residue t : c.elements) {
    const Poly linear{{f.neg(f.pow(root.beta, t)), f.one()}};
    m = poly::mul(f, m, linear);
  }
  for (FieldElement coeff : m.coeffs) {
    if (!root.in_subfield(coeff)) {
      throw Error(Errc::subfield_violation, "minimal polynomial of C_" +
                                                std::to_string(c.representative) +
                                                " has a coefficient outside GF(q^2)");
    }
  }
  return m;
}

Poly generator_polynomial(const NegacyclicRoot& root, const DefiningSet& z) {
  const CosetContext& ctx = z.context();
  if (ctx.n() != root.n || ctx.q() != root.q.q) {
    throw Error(Errc::invalid_argument, "defining set and root belong to different codes");
  }
  Poly g = poly::constant(root.field.one());
  for (Residue rep : z.coset_representatives()) {
    g = poly::mul(root.field, g, minimal_polynomial(root, coset(ctx, rep)));
  }
  return g;
}

u64 brute_force_distance(const NegacyclicRoot& root, const Poly& g, u64 n, u64 budget) {
  if (g.is_zero()) throw Error(Errc::invalid_argument, "generator polynomial is zero");
  if (static_cast<u64>(g.degree()) >= n) {
    throw Error(Errc::invalid_argument, "zero code has no minimum distance");
  }
  for (const FieldElement c : g.coeffs) {
    if (!root.in_subfield(c)) {
      throw Error(Errc::subfield_violation, "generator coefficient lies outside GF(q^2)");
    }
  }
  // A constant generator spans the whole space, which has weight-1 words.
  if (g.degree() == 0) return 1;
  const u64 dim = n - static_cast<u64>(g.degree());
  const auto codewords = bounded_pow(root.subfield_order(), dim, budget);
  if (!codewords) {
    throw Error(Errc::budget_exceeded,
                "enumerating (" + std::to_string(root.subfield_order()) + ")^" +
                    std::to_string(dim) + " codewords exceeds the budget of " +
                    std::to_string(budget));
  }

  const SubfieldArithmetic gf(root);
  std::vector<std::pair<u64, u64>> taps;  // (offset, encoded coefficient)
  for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
    const u64 c = gf.encode(g.coeffs[j]);
    if (c != 0) taps.emplace_back(j, c);
  }

  // Stepping a message digit from value v to v + 1 adds delta[v] * x^i * g.
  const u64 radix = gf.order();
  std::vector<u64> delta(radix);
  for (u64 v = 0; v < radix; ++v) delta[v] = gf.add((v + 1) % radix, gf.neg(v));

  std::vector<u64> word(n, 0);
  std::vector<u64> digits(dim, 0);
  u64 weight = 0;
  u64 best = n;
  for (u64 step = 1; step < *codewords; ++step) {
    for (std::size_t i = 0;; ++i) {
      const u64 v = digits[i];
      for (const auto& [offset, coeff] : taps) {
        u64& slot = word[i + offset];
        const u64 updated = gf.add(slot, gf.mul(delta[v], coeff));
        weight += (updated != 0) - (slot != 0);
        slot = updated;
      }
      digits[i] = (v + 1) % radix;
      if (digits[i] != 0) break;
    }
    best = std::min(best, weight);
  }
  return best;
}

std::vector<FieldElement> hermitian_conjugate(const NegacyclicRoot& root,
                                              std::span<const FieldElement> v) {
  require_subfield(root, v);
  std::vector<FieldElement> out;
  out.reserve(v.size());
  for (FieldElement e : v) out.push_back(root.field.pow(e, root.q.q));
  return out;
}

FieldElement hermitian_inner(const NegacyclicRoot& root, std::span<const FieldElement> x,
                             std::span<const FieldElement> y) {
  if (x.size() != y.size()) {
    throw Error(Errc::length_mismatch, "Hermitian product of vectors of lengths " +
                                           std::to_string(x.size()) + " and " +
                                           std::to_string(y.size()));
  }
  const std::vector<FieldElement> y_bar = hermitian_conjugate(root, y);
  require_subfield(root, x);
  FieldElement acc = root.field.zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc = root.field.add(acc, root.field.mul(x[i], y_bar[i]));
  }
  return acc;
}

}  // namespace negacode
