#include "negacode/family.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <string>
#include <iterator>
#include <thread>
#include <tuple>
#include <variant>

namespace negacode {

namespace {

using i64 = std::int64_t;

void validate_input(const FamilyInput& in) {
  if (in.m == 0 || in.m % 2 == 0) {
    throw Error(Errc::invalid_argument, "m must be odd (got " + std::to_string(in.m) + ")");
  }
  if (in.xi == 0) throw Error(Errc::invalid_argument, "xi must be a positive integer");
  if (in.alpha == 0 || in.alpha > in.xi) {
    throw Error(Errc::invalid_argument, "alpha must satisfy 1 <= alpha <= xi (got alpha = " +
                                            std::to_string(in.alpha) +
                                            ", xi = " + std::to_string(in.xi) + ")");
  }
  // n = 2(q^2 + 1)/a must stay well inside the 2^40 residue range.
  if (in.m > 1000 || in.xi > 100000) {
    throw Error(Errc::invalid_argument, "family parameters out of supported range");
  }
}

EAParams make_formula_params(const FamilyContext& ctx, i64 k, i64 d, i64 c) {
  if (ctx.branch == Branch::shifted) {
    --k;
    --c;
  }
  EAParams p;
  p.n = static_cast<i64>(ctx.n);
  p.k = k;
  p.d = d;
  p.c = c;
  p.q = ctx.q;
  p.source = ParamSource::formula;
  // The formula codes come from MDS classical codes.
  p.d_is_exact = true;
  const SingletonCheck check = ea_singleton_check(p);
  p.is_eaqmds = check.saturated && check.applicable;
  return p;
}

}  // namespace

std::string_view to_string(FamilyCase c) noexcept { return c == FamilyCase::I ? "I" : "II"; }

std::string_view to_string(Branch b) noexcept {
  return b == Branch::plain ? "plain" : "shifted";
}

std::optional<FamilyCase> parse_family_case(std::string_view text) noexcept {
  if (text == "I" || text == "i" || text == "1") return FamilyCase::I;
  if (text == "II" || text == "ii" || text == "2") return FamilyCase::II;
  return std::nullopt;
}

u64 family_q(u64 m, u64 xi, FamilyCase c) noexcept {
  const u64 a = m * m + 1;
  return c == FamilyCase::I ? a * xi + a - m : a * xi + m;
}

Branch family_branch(u64 m, u64 xi) noexcept {
  const bool xi_odd = xi % 2 == 1;
  const bool plain = (m % 4 == 1 && xi_odd) || (m % 4 == 3 && !xi_odd);
  return plain ? Branch::plain : Branch::shifted;
}

FamilyContext derive_context(const FamilyInput& in, Admissibility policy) {
  validate_input(in);
  FamilyContext ctx;
  ctx.a = in.m * in.m + 1;
  ctx.q = family_q(in.m, in.xi, in.family_case);
  if (ctx.q % 2 == 0) {
    throw Error(Errc::even_q, "q = " + std::to_string(ctx.q) + " is even");
  }
  ctx.field = try_prime_power(ctx.q);
  if (!ctx.field && policy == Admissibility::prime_power_required) {
    throw Error(Errc::not_prime_power,
                "q = " + std::to_string(ctx.q) + " is not a prime power");
  }
  // q = +-m (mod a) gives q^2 = -1 (mod a), so a divides 2(q^2 + 1).
  const u64 twice = 2 * (ctx.q * ctx.q + 1);
  if (twice % ctx.a != 0) {
    throw Error(Errc::invalid_argument, "a does not divide 2(q^2 + 1)");
  }
  ctx.n = twice / ctx.a;
  ctx.s = ctx.n / 2;
  ctx.branch = family_branch(in.m, in.xi);
  return ctx;
}

EAParams predicted_params_case1(const FamilyInput& in, Admissibility policy) {
  if (in.family_case != FamilyCase::I) {
    throw Error(Errc::invalid_argument, "case I formula applied to a case II input");
  }
  const FamilyContext ctx = derive_context(in, policy);
  const i64 n = static_cast<i64>(ctx.n);
  const i64 q = static_cast<i64>(ctx.q);
  const i64 a = static_cast<i64>(ctx.a);
  const i64 m = static_cast<i64>(in.m);
  const i64 xi = static_cast<i64>(in.xi);
  const i64 al = static_cast<i64>(in.alpha);

  const i64 k = n - 4 * al * q + 4 * (a - m) * (al - xi) + 2 * a * al * al - 2 * a + 4 * m - 1;
  const i64 d = 2 * (al * q + (a - m) * xi + a - 2 * m + 1);
  const i64 c = 2 * al * (a * al + 2 * (a - m)) + 2 * a - 4 * m + 1;
  return make_formula_params(ctx, k, d, c);
}

EAParams predicted_params_case2(const FamilyInput& in, Admissibility policy) {
  if (in.family_case != FamilyCase::II) {
    throw Error(Errc::invalid_argument, "case II formula applied to a case I input");
  }
  const FamilyContext ctx = derive_context(in, policy);
  const i64 n = static_cast<i64>(ctx.n);
  const i64 q = static_cast<i64>(ctx.q);
  const i64 a = static_cast<i64>(ctx.a);
  const i64 m = static_cast<i64>(in.m);
  const i64 xi = static_cast<i64>(in.xi);
  const i64 al = static_cast<i64>(in.alpha);

  const i64 k = n - 4 * al * q + 4 * m * (al - xi) + 2 * a * al * al - 1;
  const i64 d = 2 * (al * q + m * xi + 1);
  const i64 c = 2 * al * (a * al + 2 * m) + 1;
  return make_formula_params(ctx, k, d, c);
}

EAParams predicted_params(const FamilyInput& in, Admissibility policy) {
  return in.family_case == FamilyCase::I ? predicted_params_case1(in, policy)
                                         : predicted_params_case2(in, policy);
}

u64 run_length(const FamilyInput& in, const FamilyContext& ctx) noexcept {
  const u64 a = ctx.a;
  const u64 m = in.m;
  if (in.family_case == FamilyCase::I) {
    // C_s .. C_{s + 2[alpha q + (a - m) xi + a - 2m]}
    return in.alpha * ctx.q + (a - m) * in.xi + a - 2 * m + 1;
  }
  // C_s .. C_{s + 2[alpha q + m xi]}
  return in.alpha * ctx.q + m * in.xi + 1;
}

DefiningSet build_defining_set(const FamilyInput& in, Admissibility policy) {
  const FamilyContext fctx = derive_context(in, policy);
  const CosetContext ctx(fctx.n, fctx.q);
  return consecutive_run_defining_set(ctx, 0, run_length(in, fctx));
}

FamilyReport verify(const FamilyInput& in, Admissibility policy) {
  FamilyReport r;
  r.input = in;
  r.context = derive_context(in, policy);
  r.predicted = predicted_params(in, policy);

  const CosetContext ctx(r.context.n, r.context.q);
  const DefiningSet z = consecutive_run_defining_set(ctx, 0, run_length(in, r.context));
  const Decomposition dec = decompose(z);
  r.computed = ea_params(z, dec);
  r.z_size = z.size();
  r.z1_size = dec.z1.size();
  r.classical_mds = classical_params(z).is_mds;
  r.match = r.predicted.same_quadruple(r.computed);

  if (r.computed.degenerate()) {
    r.warnings.emplace_back("degenerate code: k = 0 encodes no logical qudits");
  }
  if (!r.context.field) {
    r.warnings.emplace_back("q = " + std::to_string(r.context.q) +
                            " is not a prime power; parameters are combinatorial only");
  }
  if (!r.match) {
    r.warnings.emplace_back("closed-form parameters disagree with direct computation");
  }
  return r;
}

SweepResult sweep(u64 m_max, u64 xi_max, unsigned threads) {
  std::vector<GridCell> cells;
  for (u64 m = 1; m <= m_max; m += 2) {
    for (u64 xi = 1; xi <= xi_max; ++xi) {
      cells.push_back({m, xi, FamilyCase::I});
      cells.push_back({m, xi, FamilyCase::II});
    }
  }
  return sweep_cells(cells, Admissibility::prime_power_required, threads);
}

SweepResult sweep_cells(std::span<const GridCell> cells, Admissibility policy,
                        unsigned threads) {
  using CellOutcome = std::variant<std::vector<FamilyReport>, Rejection>;
  std::vector<CellOutcome> outcomes(cells.size());

  auto evaluate = [&](std::size_t idx) {
    const GridCell& cell = cells[idx];
    try {
      std::vector<FamilyReport> reports;
      for (u64 alpha = 1; alpha <= cell.xi; ++alpha) {
        reports.push_back(verify({cell.m, cell.xi, alpha, cell.family_case}, policy));
      }
      outcomes[idx] = std::move(reports);
    } catch (const Error& e) {
      outcomes[idx] = Rejection{cell.m, cell.xi, cell.family_case,
                                family_q(cell.m, cell.xi, cell.family_case), e.code(),
                                e.what()};
    }
  };

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cells.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) evaluate(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) evaluate(i);
      });
    }
  }

  SweepResult result;
  for (auto& outcome : outcomes) {
    if (auto* rejection = std::get_if<Rejection>(&outcome)) {
      result.rejected.push_back(std::move(*rejection));
    } else {
      auto& reports = std::get<std::vector<FamilyReport>>(outcome);
      std::move(reports.begin(), reports.end(), std::back_inserter(result.reports));
    }
  }
  auto report_key = [](const FamilyReport& r) {
    return std::tuple(r.input.m, r.input.xi, r.input.alpha, r.input.family_case);
  };
  std::stable_sort(result.reports.begin(), result.reports.end(),
                   [&](const auto& x, const auto& y) { return report_key(x) < report_key(y); });
  auto rejection_key = [](const Rejection& r) {
    return std::tuple(r.m, r.xi, r.family_case);
  };
  std::stable_sort(result.rejected.begin(), result.rejected.end(), [&](const auto& x, const auto& y) {
    return rejection_key(x) < rejection_key(y);
  });
  return result;
}

std::span<const GridCell> published_grid() noexcept {
  static constexpr std::array<GridCell, 22> cells{{
      {1, 1, FamilyCase::I},  {1, 2, FamilyCase::I},  {1, 3, FamilyCase::I},
      {1, 4, FamilyCase::I},  {1, 5, FamilyCase::I},  {1, 6, FamilyCase::I},
      {3, 1, FamilyCase::I},  {3, 3, FamilyCase::I},  {3, 4, FamilyCase::I},
      {3, 1, FamilyCase::II}, {3, 2, FamilyCase::II}, {3, 4, FamilyCase::II},
      {5, 1, FamilyCase::I},  {5, 2, FamilyCase::I},  {5, 4, FamilyCase::I},
      {5, 1, FamilyCase::II}, {5, 3, FamilyCase::II}, {5, 4, FamilyCase::II},
      {7, 2, FamilyCase::I},  {7, 3, FamilyCase::I},  {7, 2, FamilyCase::II},
      {7, 3, FamilyCase::II},
  }};
  return cells;
}

}  // namespace negacode
