// Acceptance suite: one PASS/FAIL line per criterion. argv[1] is the path of
// the negacode binary (used by the determinism criterion).

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "negacode/eaqecc.hpp"
#include "negacode/family.hpp"
#include "negacode/gf_oracle.hpp"

namespace {

using namespace negacode;
using Clock = std::chrono::steady_clock;

struct Quad {
  std::int64_t n, k, d, c;
};

struct PublishedCell {
  u64 m;
  u64 xi;
  FamilyCase family_case;
  u64 q;
  std::vector<Quad> codes;  // alpha = 1, 2, ...
};

// Every row of the published explicit-code table.
const std::vector<PublishedCell>& published_rows() {
  static const std::vector<PublishedCell> rows{
      {1, 1, FamilyCase::I, 3, {{10, 1, 10, 9}}},
      {1, 2, FamilyCase::I, 5, {{26, 4, 16, 8}, {26, 0, 26, 24}}},
      {1, 3, FamilyCase::I, 7, {{50, 17, 22, 9}, {50, 5, 36, 25}, {50, 1, 50, 49}}},
      {1, 4, FamilyCase::I, 9, {{82, 36, 28, 8}, {82, 16, 46, 24}, {82, 4, 64, 48}, {82, 0, 82, 80}}},
      {1, 5, FamilyCase::I, 11,
       {{122, 65, 34, 9}, {122, 37, 56, 25}, {122, 17, 78, 49}, {122, 5, 100, 81}, {122, 1, 122, 121}}},
      {1, 6, FamilyCase::I, 13,
       {{170, 100, 40, 8}, {170, 64, 66, 24}, {170, 36, 92, 48}, {170, 16, 118, 80}, {170, 4, 144, 120},
        {170, 0, 170, 168}}},
      {3, 1, FamilyCase::I, 17, {{58, 0, 58, 56}}},
      {3, 3, FamilyCase::I, 37, {{274, 80, 126, 56}, {274, 20, 200, 144}, {274, 0, 274, 272}}},
      {3, 4, FamilyCase::I, 47,
       {{442, 181, 160, 57}, {442, 81, 254, 145}, {442, 21, 348, 273}, {442, 1, 442, 441}}},
      {3, 1, FamilyCase::II, 13, {{34, 0, 34, 32}}},
      {3, 2, FamilyCase::II, 23, {{106, 21, 60, 33}, {106, 1, 106, 105}}},
      {3, 4, FamilyCase::II, 43,
       {{370, 181, 112, 33}, {370, 81, 198, 105}, {370, 21, 284, 217}, {370, 1, 370, 369}}},
      {5, 1, FamilyCase::I, 47, {{170, 1, 170, 169}}},
      {5, 2, FamilyCase::I, 73, {{410, 52, 264, 168}, {410, 0, 410, 408}}},
      {5, 4, FamilyCase::I, 125,
       {{1202, 468, 452, 168}, {1202, 208, 702, 408}, {1202, 52, 952, 752}, {1202, 0, 1202, 1200}}},
      {5, 1, FamilyCase::II, 31, {{74, 1, 74, 73}}},
      {5, 3, FamilyCase::II, 83, {{530, 209, 198, 73}, {530, 53, 364, 249}, {530, 1, 530, 529}}},
      {5, 4, FamilyCase::II, 109,
       {{914, 468, 260, 72}, {914, 208, 478, 248}, {914, 52, 696, 528}, {914, 0, 914, 912}}},
      {7, 2, FamilyCase::I, 143, {{818, 101, 532, 345}, {818, 1, 818, 817}}},
      {7, 3, FamilyCase::I, 193, {{1490, 400, 718, 344}, {1490, 100, 1104, 816}, {1490, 0, 1490, 1488}}},
      {7, 2, FamilyCase::II, 107, {{458, 101, 244, 129}, {458, 1, 458, 457}}},
      {7, 3, FamilyCase::II, 157, {{986, 400, 358, 128}, {986, 100, 672, 456}, {986, 0, 986, 984}}},
  };
  return rows;
}

struct WorkedExample {
  const char* name;
  PublishedCell cell;
  std::int64_t eaqmds_threshold;  // EAQMDS exactly when d <= threshold
};

const std::vector<WorkedExample>& worked_examples() {
  static const std::vector<WorkedExample> ex{
      {"m=1 xi=5 (q=11)",
       {1, 5, FamilyCase::I, 11,
        {{122, 65, 34, 9}, {122, 37, 56, 25}, {122, 17, 78, 49}, {122, 5, 100, 81}, {122, 1, 122, 121}}},
       62},
      {"m=3 xi=3 (q=37)",
       {3, 3, FamilyCase::I, 37, {{274, 80, 126, 56}, {274, 20, 200, 144}, {274, 0, 274, 272}}},
       138},
      {"m=7 xi=2 (q=107)", {7, 2, FamilyCase::II, 107, {{458, 101, 244, 129}, {458, 1, 458, 457}}}, 230},
      {"m=5 xi=4 (q=109)",
       {5, 4, FamilyCase::II, 109,
        {{914, 468, 260, 72}, {914, 208, 478, 248}, {914, 52, 696, 528}, {914, 0, 914, 912}}},
       458},
  };
  return ex;
}

bool same(const EAParams& p, const Quad& q) {
  return p.n == q.n && p.k == q.k && p.d == q.d && p.c == q.c;
}

std::string quad_text(const EAParams& p) {
  std::ostringstream os;
  os << "[[" << p.n << ',' << p.k << ',' << p.d << ';' << p.c << "]]_" << p.q;
  return os.str();
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Admissibility policy_for(u64 q) {
  // One published cell has q = 143 = 11 * 13; it is checked combinatorially.
  return try_prime_power(q) ? Admissibility::prime_power_required : Admissibility::combinatorial_only;
}

// 1. Every published row: predicted = computed = printed, exactly.
Outcome published_table() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t rows = 0;
  for (const auto& cell : published_rows()) {
    if (family_q(cell.m, cell.xi, cell.family_case) != cell.q) {
      o.fail("q mismatch for m=" + std::to_string(cell.m) + " xi=" + std::to_string(cell.xi));
    }
    if (cell.codes.size() != cell.xi) o.fail("row count differs from xi");
    for (u64 alpha = 1; alpha <= cell.codes.size(); ++alpha) {
      const FamilyReport r = verify({cell.m, cell.xi, alpha, cell.family_case}, policy_for(cell.q));
      ++rows;
      const Quad& expect = cell.codes[alpha - 1];
      if (!r.match || !same(r.predicted, expect) || !same(r.computed, expect)) {
        o.fail("q=" + std::to_string(cell.q) + " alpha=" + std::to_string(alpha) + ": computed " +
               quad_text(r.computed) + ", predicted " + quad_text(r.predicted));
      }
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 5.0) o.fail("took " + std::to_string(secs) + " s (limit 5 s)");
  if (o.pass) o.detail = std::to_string(rows) + " codes in " + std::to_string(secs) + " s";
  return o;
}

// 2. Worked example lists, including the k = 0 rows and their warning.
Outcome worked_example_lists() {
  Outcome o;
  std::size_t degenerate = 0;
  for (const auto& ex : worked_examples()) {
    for (u64 alpha = 1; alpha <= ex.cell.codes.size(); ++alpha) {
      const FamilyReport r = verify({ex.cell.m, ex.cell.xi, alpha, ex.cell.family_case});
      const Quad& expect = ex.cell.codes[alpha - 1];
      if (!r.match || !same(r.computed, expect)) {
        o.fail(std::string(ex.name) + " alpha=" + std::to_string(alpha) + " gave " + quad_text(r.computed));
      }
      if (r.computed.is_eaqmds != (r.computed.d <= ex.eaqmds_threshold)) {
        o.fail(std::string(ex.name) + ": EAQMDS threshold " + std::to_string(ex.eaqmds_threshold));
      }
      if (2 * ex.eaqmds_threshold != r.computed.n + 2) o.fail("threshold is not (n + 2)/2");
      const bool warned = !r.warnings.empty() && r.warnings.front().find("degenerate") != std::string::npos;
      if (expect.k == 0) {
        ++degenerate;
        if (!warned) o.fail(std::string(ex.name) + ": missing degeneracy warning");
      } else if (warned) {
        o.fail(std::string(ex.name) + ": spurious degeneracy warning");
      }
    }
  }
  if (degenerate != 2) o.fail("expected two degenerate rows, saw " + std::to_string(degenerate));
  if (o.pass) o.detail = "4 lists, 14 codes, 2 degenerate rows warned";
  return o;
}

// Shared by criteria 3, 4 and 7.
struct SweepData {
  SweepResult result;
  double seconds = 0;
};

const SweepData& full_sweep() {
  static const SweepData data = [] {
    const auto start = Clock::now();
    SweepData d;
    d.result = sweep(7, 6);
    d.seconds = seconds_since(start);
    return d;
  }();
  return data;
}

std::int64_t closed_form_z1(const FamilyReport& r) {
  const auto a = static_cast<std::int64_t>(r.context.a);
  const auto m = static_cast<std::int64_t>(r.input.m);
  const auto al = static_cast<std::int64_t>(r.input.alpha);
  std::int64_t z1 = r.input.family_case == FamilyCase::I
                        ? 2 * al * (a * al + 2 * (a - m)) + 2 * a - 4 * m + 1
                        : 2 * al * (a * al + 2 * m) + 1;
  if (r.context.branch == Branch::shifted) --z1;
  return z1;
}

// 3. |Z n (-qZ)| against the closed form over the full admissible sweep.
Outcome z1_sweep() {
  Outcome o;
  const auto start = Clock::now();
  const SweepData& data = full_sweep();
  std::size_t checked = 0;
  for (const auto& r : data.result.reports) {
    if (r.context.q > 1000 || r.context.q % 2 == 0 || !r.context.field) o.fail("inadmissible q in sweep");
    ++checked;
    if (static_cast<std::int64_t>(r.z1_size) != closed_form_z1(r)) {
      o.fail("m=" + std::to_string(r.input.m) + " xi=" + std::to_string(r.input.xi) +
             " alpha=" + std::to_string(r.input.alpha) + " case " + std::string(to_string(r.input.family_case)) +
             ": |Z1| = " + std::to_string(r.z1_size) + ", formula " + std::to_string(closed_form_z1(r)));
    }
  }
  // Every cell is either swept or rejected for a stated reason.
  std::size_t cells = 0;
  for (u64 m = 1; m <= 7; m += 2) cells += 6 * 2;
  std::map<std::tuple<u64, u64, FamilyCase>, int> seen;
  for (const auto& r : data.result.reports) seen[{r.input.m, r.input.xi, r.input.family_case}] = 1;
  for (const auto& rej : data.result.rejected) seen[{rej.m, rej.xi, rej.family_case}] = 1;
  if (seen.size() != cells) o.fail("sweep does not cover every (m, xi, case) cell");
  const double secs = data.seconds + seconds_since(start);
  if (secs >= 30.0) o.fail("took " + std::to_string(secs) + " s (limit 30 s)");
  if (o.pass) {
    o.detail = std::to_string(checked) + " codes, 0 mismatches, " +
               std::to_string(data.result.rejected.size()) + " cells rejected (q not a prime power), " +
               std::to_string(secs) + " s";
  }
  return o;
}

// 4. n + c - k = 2(d - 1) for every swept code; EAQMDS iff d <= (n + 2)/2.
Outcome singleton_saturation() {
  Outcome o;
  std::size_t eaqmds = 0;
  for (const auto& r : full_sweep().result.reports) {
    for (const EAParams* p : {&r.computed, &r.predicted}) {
      if (p->n + p->c - p->k != 2 * (p->d - 1)) o.fail("unsaturated " + quad_text(*p));
      const bool expected = 2 * p->d <= p->n + 2;
      if (p->is_eaqmds != expected) o.fail("EAQMDS flag wrong for " + quad_text(*p));
    }
    eaqmds += r.computed.is_eaqmds;
  }
  if (o.pass) {
    o.detail = std::to_string(full_sweep().result.reports.size()) + " codes saturated, " +
               std::to_string(eaqmds) + " EAQMDS";
  }
  return o;
}

// 5. Brute-force ground truth for the [10, 1] code over GF(9).
Outcome oracle_ground_truth() {
  Outcome o;
  const auto start = Clock::now();
  const FamilyInput in{1, 1, 1, FamilyCase::I};
  const FamilyContext fc = derive_context(in);
  const DefiningSet z = build_defining_set(in);
  const NegacyclicRoot root = primitive_2n_root(*fc.field, fc.n);
  const Poly g = generator_polynomial(root, z);
  const auto [quot, rem] = poly::divmod(root.field, poly::x_pow_plus_one(root.field, fc.n), g);
  const ClassicalParams cp = classical_params(z);
  const u64 d = brute_force_distance(root, g, fc.n);
  if (root.subfield_order() != 9) o.fail("code is not over GF(9)");
  if (fc.n != 10 || cp.k_dim != 1) o.fail("not a [10, 1] code");
  if (!rem.is_zero()) o.fail("g does not divide x^10 + 1");
  if (d != 10) o.fail("brute-force distance " + std::to_string(d));
  if (cp.d_bch != 10) o.fail("BCH bound " + std::to_string(cp.d_bch));
  if (d != fc.n - cp.k_dim + 1) o.fail("not MDS");
  const double secs = seconds_since(start);
  if (secs >= 1.0) o.fail("took " + std::to_string(secs) + " s (limit 1 s)");
  if (o.pass) o.detail = "d = BCH = n - k + 1 = 10, remainder 0, " + std::to_string(secs) + " s";
  return o;
}

// 6. Randomized invariants over arbitrary coset unions.
Outcome randomized_properties() {
  Outcome o;
  std::vector<u64> qs;
  for (u64 q = 3; q <= 100; q += 2) {
    if (try_prime_power(q)) qs.push_back(q);
  }
  std::mt19937_64 rng(0x5eed);
  constexpr int kTrials = 200;
  for (int trial = 0; trial < kTrials; ++trial) {
    u64 n = 0;
    u64 q = 0;
    do {
      n = 1 + rng() % 500;
      q = qs[rng() % qs.size()];
    } while (gcd(n, q) != 1);
    const CosetContext ctx(n, q);
    const auto cosets = all_cosets(ctx);

    // (a) partition of the odd residues
    std::vector<int> hits(ctx.two_n(), 0);
    for (const auto& c : cosets) {
      for (Residue x : c.elements) ++hits[x];
    }
    for (Residue x = 0; x < ctx.two_n(); ++x) {
      if (hits[x] != static_cast<int>(x % 2)) {
        o.fail("(a) n=" + std::to_string(n) + " q=" + std::to_string(q));
        break;
      }
    }
    // (b) -q sends cosets to cosets, involutively
    for (const auto& c : cosets) {
      const ResidueSet image = neg_q_image(ctx, c.elements);
      const CyclotomicCoset target = coset(ctx, image.front());
      if (target.elements != image || neg_q_image(ctx, image) != c.elements) {
        o.fail("(b) n=" + std::to_string(n) + " q=" + std::to_string(q));
      }
    }
    // (c), (d) on a random union of cosets
    std::vector<Residue> reps;
    const u64 density = 1 + rng() % 4;
    for (const auto& c : cosets) {
      if (rng() % 5 < density) reps.push_back(c.representative);
    }
    const DefiningSet z = make_defining_set(ctx, reps);
    const Decomposition dec = decompose(z);
    if (!set_intersection(dec.z2, neg_q_image(ctx, dec.z2)).empty()) {
      o.fail("(c) n=" + std::to_string(n) + " q=" + std::to_string(q));
    }
    const EAParams p = ea_params(z, dec);
    if (p.k + 2 * static_cast<std::int64_t>(z.size()) - static_cast<std::int64_t>(dec.z1.size()) != p.n) {
      o.fail("(d) n=" + std::to_string(n) + " q=" + std::to_string(q));
    }
  }
  if (o.pass) o.detail = std::to_string(kTrials) + " random instances, 0 failures";
  return o;
}

// 7. Coset partition shape {s}, {3s}, {s - 2l, s + 2l} for every swept context.
Outcome coset_structure() {
  Outcome o;
  std::map<std::pair<u64, u64>, bool> contexts;
  for (const auto& r : full_sweep().result.reports) contexts[{r.context.n, r.context.q}] = true;
  for (const auto& [key, unused] : contexts) {
    const auto [n, q] = key;
    const CosetContext ctx(n, q);
    const u64 s = n / 2;
    const u64 mod = 2 * n;
    std::vector<ResidueSet> expected{{s}, {3 * s}};
    for (u64 l = 1; l <= s - 1; ++l) {
      ResidueSet pair{(s + mod - (2 * l) % mod) % mod, s + 2 * l};
      std::sort(pair.begin(), pair.end());
      expected.push_back(pair);
    }
    std::sort(expected.begin(), expected.end());
    std::vector<ResidueSet> got;
    for (const auto& c : all_cosets(ctx)) got.push_back(c.elements);
    std::sort(got.begin(), got.end());
    if (got != expected) o.fail("n=" + std::to_string(n) + " q=" + std::to_string(q));
  }
  if (o.pass) o.detail = std::to_string(contexts.size()) + " contexts";
  return o;
}

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = ::pclose(pipe);
  return out;
}

// 8. Byte-identical CSV across three runs of the binary.
Outcome determinism(const std::string& binary) {
  Outcome o;
  if (binary.empty()) {
    o.fail("no negacode binary given");
    return o;
  }
  const std::string command = "'" + binary + "' table --paper-table4 --format csv 2>/dev/null";
  std::vector<std::string> outputs;
  for (int run = 0; run < 3; ++run) {
    int status = 0;
    outputs.push_back(capture(command, status));
    if (status != 0) o.fail("run " + std::to_string(run) + " exited with status " + std::to_string(status));
  }
  if (outputs[0].empty()) o.fail("empty output");
  if (outputs[0] != outputs[1] || outputs[1] != outputs[2]) o.fail("outputs differ");
  if (o.pass) o.detail = "3 runs, " + std::to_string(outputs[0].size()) + " identical bytes";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string binary = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 published table reproduction", published_table},
      {"AC2 worked example lists", worked_example_lists},
      {"AC3 |Z1| closed-form sweep", z1_sweep},
      {"AC4 EA-Singleton saturation", singleton_saturation},
      {"AC5 brute-force oracle ground truth", oracle_ground_truth},
      {"AC6 randomized property suite", randomized_properties},
      {"AC7 coset partition structure", coset_structure},
      {"AC8 table determinism", [&] { return determinism(binary); }},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << o.detail << '\n';
    failures += !o.pass;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
