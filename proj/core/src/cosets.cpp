#include "negacode/cosets.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

#include "negacode/error.hpp"

namespace negacode {

CosetContext::CosetContext(u64 n, u64 q) : n_(n), q_(q), two_n_(0), multiplier_(0) {
  if (n == 0) throw Error(Errc::invalid_argument, "code length n must be positive");
  if (n > (u64{1} << 40)) throw Error(Errc::invalid_argument, "code length n exceeds 2^40");
  if (q < 2) throw Error(Errc::invalid_argument, "q must be at least 2");
  two_n_ = 2 * n;
  if (gcd(q % two_n_, two_n_) != 1) {
    throw Error(Errc::not_coprime, "q = " + std::to_string(q) +
                                       " is not invertible modulo 2n = " +
                                       std::to_string(two_n_));
  }
  const u64 q_red = q % two_n_;
  multiplier_ = mul_mod(q_red, q_red, two_n_);
}

std::optional<u64> CosetContext::s() const noexcept {
  if (n_ % 2 != 0) return std::nullopt;
  return n_ / 2;
}

Residue CosetContext::neg_q(Residue x) const noexcept {
  const u64 qx = mul_mod(q_ % two_n_, x % two_n_, two_n_);
  return (two_n_ - qx) % two_n_;
}

bool CyclotomicCoset::contains(Residue x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

CyclotomicCoset coset(const CosetContext& ctx, Residue i) {
  if (i >= ctx.two_n()) {
    throw Error(Errc::invalid_argument, "residue " + std::to_string(i) +
                                            " is out of range for modulus " +
                                            std::to_string(ctx.two_n()));
  }
  if (i % 2 == 0) {
    throw Error(Errc::even_residue, "residue " + std::to_string(i) + " is even");
  }
  CyclotomicCoset c;
  Residue x = i;
  do {
    c.elements.push_back(x);
    x = mul_mod(x, ctx.multiplier(), ctx.two_n());
  } while (x != i);
  std::sort(c.elements.begin(), c.elements.end());
  c.representative = c.elements.front();
  return c;
}

std::vector<CyclotomicCoset> all_cosets(const CosetContext& ctx) {
  std::vector<CyclotomicCoset> result;
  std::vector<bool> seen(ctx.two_n(), false);
  for (Residue i = 1; i < ctx.two_n(); i += 2) {
    if (seen[i]) continue;
    CyclotomicCoset c = coset(ctx, i);
    for (Residue x : c.elements) seen[x] = true;
    result.push_back(std::move(c));
  }
  return result;
}

ResidueSet neg_q_image(const CosetContext& ctx, std::span<const Residue> residues) {
  ResidueSet image;
  image.reserve(residues.size());
  for (Residue x : residues) image.push_back(ctx.neg_q(x));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return image;
}

CyclotomicCoset neg_q_coset_image(const CosetContext& ctx, const CyclotomicCoset& c) {
  ResidueSet image = neg_q_image(ctx, c.elements);
  CyclotomicCoset target = coset(ctx, image.front());
  if (target.elements != image) {
    throw std::logic_error("-q image of coset C_" + std::to_string(c.representative) +
                           " is not a single coset");
  }
  return target;
}

ResidueSet set_union(std::span<const Residue> a, std::span<const Residue> b) {
  ResidueSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ResidueSet set_intersection(std::span<const Residue> a, std::span<const Residue> b) {
  ResidueSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ResidueSet set_difference(std::span<const Residue> a, std::span<const Residue> b) {
  ResidueSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace negacode
