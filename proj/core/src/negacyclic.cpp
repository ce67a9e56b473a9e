#include "negacode/negacyclic.hpp"

#include <algorithm>
#include <string>

#include "negacode/error.hpp"

namespace negacode {

DefiningSet::DefiningSet(CosetContext ctx) : ctx_(ctx) {}

bool DefiningSet::contains(Residue x) const {
  return std::binary_search(residues_.begin(), residues_.end(), x);
}

DefiningSet make_defining_set(const CosetContext& ctx, std::span<const Residue> reps) {
  DefiningSet z(ctx);
  for (Residue r : reps) {
    const Residue x = r % ctx.two_n();
    if (x % 2 == 0) {
      throw Error(Errc::even_residue, "defining-set representative " + std::to_string(r) +
                                          " is even");
    }
    if (z.contains(x)) continue;
    const CyclotomicCoset c = coset(ctx, x);
    z.residues_ = set_union(z.residues_, c.elements);
    z.reps_.insert(std::lower_bound(z.reps_.begin(), z.reps_.end(), c.representative),
                   c.representative);
  }
  return z;
}

DefiningSet consecutive_run_defining_set(const CosetContext& ctx, std::int64_t start_j,
                                         u64 count) {
  const auto s = ctx.s();
  if (!s) {
    throw Error(Errc::invalid_argument,
                "consecutive runs around s = n/2 need even n, got n = " +
                    std::to_string(ctx.n()));
  }
  if (count == 0) throw Error(Errc::invalid_argument, "run length must be at least 1");

  const auto two_n = static_cast<std::int64_t>(ctx.two_n());
  std::vector<Residue> reps;
  reps.reserve(count);
  for (u64 i = 0; i < count; ++i) {
    const std::int64_t j = start_j + static_cast<std::int64_t>(i);
    const std::int64_t shift = ((2 * j) % two_n + two_n) % two_n;
    reps.push_back(static_cast<Residue>((static_cast<std::int64_t>(*s) + shift) % two_n));
  }
  return make_defining_set(ctx, reps);
}

u64 bch_bound(const DefiningSet& z) {
  if (z.empty()) throw Error(Errc::empty_set, "BCH bound of an empty defining set");
  const u64 n = z.context().n();
  // Index odd residue x by j = (x - 1) / 2 so consecutive exponents are
  // adjacent; the run may wrap from j = n - 1 back to 0.
  std::vector<bool> present(n, false);
  for (Residue x : z.residues()) present[(x - 1) / 2] = true;
  if (z.size() == n) return n + 1;

  // Start scanning just after a gap so a wrapping run is seen in one piece.
  u64 gap = 0;
  while (present[gap]) ++gap;
  u64 best = 0;
  u64 run = 0;
  for (u64 step = 1; step <= n; ++step) {
    if (present[(gap + step) % n]) {
      best = std::max(best, ++run);
    } else {
      run = 0;
    }
  }
  return best + 1;
}

ClassicalParams classical_params(const DefiningSet& z) {
  ClassicalParams p;
  p.n = z.context().n();
  p.k_dim = p.n - z.size();
  p.d_bch = z.empty() ? 1 : bch_bound(z);
  p.degenerate = p.k_dim == 0;
  p.is_mds = p.d_bch == p.n - p.k_dim + 1;
  return p;
}

}  // namespace negacode
