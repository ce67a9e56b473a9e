#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <tuple>

#include "CLI11.hpp"

namespace negacode::cli {

using nlohmann::json;

namespace {

std::string quadruple(const EAParams& p) {
  std::ostringstream os;
  os << "[[" << p.n << ',' << p.k << ',' << p.d << ';' << p.c << "]]_" << p.q;
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(std::span<const Residue> xs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << '}';
  return os.str();
}

json params_json(const EAParams& p) {
  return {{"n", p.n},
          {"k", p.k},
          {"d", p.d},
          {"c", p.c},
          {"q", p.q},
          {"eaqmds", p.is_eaqmds},
          {"d_exact", p.d_is_exact},
          {"source", std::string(to_string(p.source))}};
}

EAParams params_from_json(const json& j) {
  EAParams p;
  p.n = j.at("n").get<std::int64_t>();
  p.k = j.at("k").get<std::int64_t>();
  p.d = j.at("d").get<std::int64_t>();
  p.c = j.at("c").get<std::int64_t>();
  p.q = j.at("q").get<u64>();
  p.is_eaqmds = j.at("eaqmds").get<bool>();
  p.d_is_exact = j.at("d_exact").get<bool>();
  const auto source = j.at("source").get<std::string>();
  if (source == "formula") {
    p.source = ParamSource::formula;
  } else if (source == "direct") {
    p.source = ParamSource::direct;
  } else if (source == "both") {
    p.source = ParamSource::both;
  } else {
    throw json::other_error::create(501, "unknown parameter source '" + source + "'", &j);
  }
  return p;
}

// Wording for the EA-Singleton classification of a parameter set.
std::string singleton_verdict(const EAParams& p) {
  const SingletonCheck check = ea_singleton_check(p);
  std::ostringstream os;
  if (check.saturated && check.applicable) {
    os << "EAQMDS (n + c - k = 2(d - 1), d <= (n + 2)/2)";
  } else if (check.saturated) {
    os << "Singleton-saturating but outside EAQMDS applicability (d > (n + 2)/2)";
  } else {
    os << "not EAQMDS (slack " << check.slack << ")";
  }
  return os.str();
}

int exit_code_for(const Error& e) {
  return e.code() == Errc::budget_exceeded ? kBudgetExceeded : kInvalidInput;
}

std::tuple<u64, u64, u64, FamilyCase> table_key(const FamilyReport& r) {
  return {r.input.m, r.context.q, r.input.alpha, r.input.family_case};
}

void render_report_table(const FamilyReport& r, std::ostream& out) {
  const FamilyContext& c = r.context;
  out << "family    case " << to_string(r.input.family_case) << ", m = " << r.input.m
      << ", xi = " << r.input.xi << ", alpha = " << r.input.alpha << " (a = " << c.a
      << ", branch " << to_string(c.branch) << ")\n";
  out << "field     q = " << c.q;
  if (c.field) {
    out << " = " << c.field->p << '^' << c.field->e;
  } else {
    out << " (not a prime power)";
  }
  out << ", n = " << c.n << ", s = " << c.s << '\n';
  out << "predicted " << quadruple(r.predicted) << '\n';
  out << "computed  " << quadruple(r.computed) << '\n';
  out << "|Z| = " << r.z_size << ", |Z1| = " << r.z1_size
      << ", classical MDS: " << yes_no(r.classical_mds)
      << ", d " << (r.computed.d_is_exact ? "exact" : "bound") << '\n';
  out << "class     " << singleton_verdict(r.computed) << '\n';
  out << "match     " << yes_no(r.match) << '\n';
  for (const auto& w : r.warnings) out << "warning   " << w << '\n';
}

void render_rows_table(std::span<const FamilyReport> rows, std::ostream& out) {
  out << std::left << std::setw(3) << "m" << std::setw(4) << "a" << std::setw(4) << "xi"
      << std::setw(6) << "alpha" << std::setw(5) << "case" << std::setw(9) << "branch"
      << std::right << std::setw(5) << "q" << std::setw(7) << "n" << std::setw(7) << "k"
      << std::setw(7) << "d" << std::setw(7) << "c" << "  " << std::left << std::setw(7)
      << "eaqmds" << "match\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(3) << r.input.m << std::setw(4) << r.context.a
        << std::setw(4) << r.input.xi << std::setw(6) << r.input.alpha << std::setw(5)
        << to_string(r.input.family_case) << std::setw(9) << to_string(r.context.branch)
        << std::right << std::setw(5) << r.context.q << std::setw(7) << r.computed.n
        << std::setw(7) << r.computed.k << std::setw(7) << r.computed.d << std::setw(7)
        << r.computed.c << "  " << std::left << std::setw(7) << yes_no(r.computed.is_eaqmds)
        << yes_no(r.match) << '\n';
  }
}

std::string poly_text(const Poly& g) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < g.coeffs.size(); ++i) os << (i ? "," : "") << g.coeffs[i].code;
  os << ']';
  return os.str();
}

std::vector<u64> poly_codes(const Poly& g) {
  std::vector<u64> codes;
  for (FieldElement e : g.coeffs) codes.push_back(e.code);
  return codes;
}

}  // namespace

json to_json(const FamilyReport& r) {
  json context = {{"a", r.context.a},
                  {"q", r.context.q},
                  {"n", r.context.n},
                  {"s", r.context.s},
                  {"branch", std::string(to_string(r.context.branch))},
                  {"prime_power", nullptr}};
  if (r.context.field) {
    context["prime_power"] = {{"p", r.context.field->p}, {"e", r.context.field->e}};
  }
  return {{"schema", kSchemaVersion},
          {"input",
           {{"m", r.input.m},
            {"xi", r.input.xi},
            {"alpha", r.input.alpha},
            {"case", std::string(to_string(r.input.family_case))}}},
          {"context", context},
          {"predicted", params_json(r.predicted)},
          {"computed", params_json(r.computed)},
          {"sizes", {{"z", r.z_size}, {"z1", r.z1_size}}},
          {"flags",
           {{"eaqmds", r.computed.is_eaqmds},
            {"mds", r.classical_mds},
            {"match", r.match},
            {"d_exact", r.computed.d_is_exact}}},
          {"warnings", r.warnings}};
}

FamilyReport report_from_json(const json& j) {
  if (j.at("schema").get<int>() != kSchemaVersion) {
    throw json::other_error::create(501, "unsupported report schema", &j);
  }
  FamilyReport r;
  const json& in = j.at("input");
  r.input.m = in.at("m").get<u64>();
  r.input.xi = in.at("xi").get<u64>();
  r.input.alpha = in.at("alpha").get<u64>();
  const auto fc = parse_family_case(in.at("case").get<std::string>());
  if (!fc) throw json::other_error::create(501, "unknown family case", &j);
  r.input.family_case = *fc;

  const json& ctx = j.at("context");
  r.context.a = ctx.at("a").get<u64>();
  r.context.q = ctx.at("q").get<u64>();
  r.context.n = ctx.at("n").get<u64>();
  r.context.s = ctx.at("s").get<u64>();
  r.context.branch = ctx.at("branch").get<std::string>() == "plain" ? Branch::plain
                                                                     : Branch::shifted;
  if (const json& pp = ctx.at("prime_power"); !pp.is_null()) {
    r.context.field = PrimePower{r.context.q, pp.at("p").get<u64>(), pp.at("e").get<unsigned>()};
  }

  r.predicted = params_from_json(j.at("predicted"));
  r.computed = params_from_json(j.at("computed"));
  r.z_size = j.at("sizes").at("z").get<u64>();
  r.z1_size = j.at("sizes").at("z1").get<u64>();
  const json& flags = j.at("flags");
  r.classical_mds = flags.at("mds").get<bool>();
  r.match = flags.at("match").get<bool>();
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  return r;
}

std::string csv_row(const FamilyReport& r) {
  std::ostringstream os;
  os << r.input.m << ',' << r.context.a << ',' << r.input.xi << ',' << r.input.alpha << ','
     << to_string(r.input.family_case) << ',' << to_string(r.context.branch) << ','
     << r.context.q << ',' << r.computed.n << ',' << r.computed.k << ',' << r.computed.d << ','
     << r.computed.c << ',' << (r.computed.is_eaqmds ? "true" : "false") << ','
     << (r.match ? "true" : "false");
  return os.str();
}

u64 budget_from_env(u64 fallback) {
  const char* raw = std::getenv(kBudgetEnvVar);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) return fallback;
  return v;
}

int cmd_construct(const FamilyInput& input, Format format, std::ostream& out,
                  std::ostream& err) {
  FamilyReport report;
  try {
    report = verify(input);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  switch (format) {
    case Format::json: out << to_json(report).dump(2) << '\n'; break;
    case Format::csv: out << kCsvHeader << '\n' << csv_row(report) << '\n'; break;
    case Format::table: render_report_table(report, out); break;
  }
  if (format != Format::table) {
    for (const auto& w : report.warnings) err << "warning: " << w << '\n';
  }
  return report.match ? kOk : kMismatch;
}

int cmd_table(u64 m_max, u64 xi_max, bool published_only, Format format, std::ostream& out,
              std::ostream& err) {
  SweepResult result;
  if (published_only) {
    std::vector<GridCell> cells;
    for (const GridCell& c : published_grid()) {
      if (c.m <= m_max && c.xi <= xi_max) cells.push_back(c);
    }
    // The published grid contains a q that is not a prime power; it is kept
    // here for diffing and flagged in the report warnings.
    result = sweep_cells(cells, Admissibility::combinatorial_only);
  } else {
    result = sweep(m_max, xi_max);
  }
  std::vector<FamilyReport> rows = std::move(result.reports);
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& x, const auto& y) { return table_key(x) < table_key(y); });
  const bool all_match =
      std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.match; });

  switch (format) {
    case Format::csv:
      out << kCsvHeader << '\n';
      for (const auto& r : rows) out << csv_row(r) << '\n';
      break;
    case Format::json: {
      json doc = {{"schema", kSchemaVersion}, {"rows", json::array()}, {"rejected", json::array()}};
      for (const auto& r : rows) doc["rows"].push_back(to_json(r));
      for (const auto& rej : result.rejected) {
        doc["rejected"].push_back({{"m", rej.m},
                                   {"xi", rej.xi},
                                   {"case", std::string(to_string(rej.family_case))},
                                   {"q", rej.q},
                                   {"reason", std::string(to_string(rej.reason))}});
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::table:
      render_rows_table(rows, out);
      if (!result.rejected.empty()) {
        out << "\nrejected (m, xi, case, q):\n";
        for (const auto& rej : result.rejected) {
          out << "  " << rej.m << ", " << rej.xi << ", " << to_string(rej.family_case) << ", "
              << rej.q << ": " << to_string(rej.reason) << '\n';
        }
      }
      break;
  }
  for (const auto& r : rows) {
    if (!r.context.field && r.input.alpha == 1) {
      err << "warning: q = " << r.context.q
          << " is not a prime power; its rows are combinatorial only\n";
    }
  }
  if (!all_match) err << "error: closed-form parameters disagree with direct computation\n";
  return all_match ? kOk : kMismatch;
}

int cmd_decompose(u64 n, u64 q, std::span<const Residue> reps, Format format,
                  std::ostream& out, std::ostream& err) {
  try {
    const CosetContext ctx(n, q);
    for (Residue r : reps) {
      if (r >= ctx.two_n()) {
        throw Error(Errc::invalid_argument, "residue " + std::to_string(r) +
                                                " is not below 2n = " +
                                                std::to_string(ctx.two_n()));
      }
    }
    const DefiningSet z = make_defining_set(ctx, reps);
    const ResidueSet image = neg_q_image(ctx, z.residues());
    const Decomposition dec = decompose(z);
    const EAParams p = ea_params(z, dec);
    const SingletonCheck check = ea_singleton_check(p);

    switch (format) {
      case Format::json: {
        json doc = {{"schema", kSchemaVersion},
                    {"n", n},
                    {"q", q},
                    {"z", z.residues()},
                    {"neg_q_z", image},
                    {"z1", dec.z1},
                    {"z2", dec.z2},
                    {"params",
                     {{"n", p.n},
                      {"k", p.k},
                      {"d", p.d},
                      {"c", p.c},
                      {"d_kind", p.d_is_exact ? "exact" : "bound"}}},
                    {"flags",
                     {{"eaqmds", p.is_eaqmds},
                      {"saturated", check.saturated},
                      {"applicable", check.applicable},
                      {"degenerate", p.degenerate()}}}};
        out << doc.dump(2) << '\n';
        break;
      }
      case Format::csv:
        out << "n,q,z_size,z1_size,z2_size,k,d,d_kind,c,eaqmds\n"
            << p.n << ',' << q << ',' << z.size() << ',' << dec.z1.size() << ','
            << dec.z2.size() << ',' << p.k << ',' << p.d << ','
            << (p.d_is_exact ? "exact" : "bound") << ',' << p.c << ','
            << (p.is_eaqmds ? "true" : "false") << '\n';
        break;
      case Format::table:
        out << "Z      " << join(z.residues()) << '\n';
        out << "-qZ    " << join(image) << '\n';
        out << "Z1     " << join(dec.z1) << '\n';
        out << "Z2     " << join(dec.z2) << '\n';
        out << "|Z| = " << z.size() << ", |Z1| = " << dec.z1.size() << '\n';
        out << "params " << quadruple(p) << " (d " << (p.d_is_exact ? "exact" : "bound")
            << ")\n";
        out << "class  " << singleton_verdict(p) << '\n';
        break;
    }
    if (p.degenerate()) err << "warning: degenerate code: k = 0\n";
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

int cmd_oracle(u64 n, u64 q, std::span<const Residue> reps, u64 budget, Format format,
               std::ostream& out, std::ostream& err) {
  try {
    const PrimePower pp = factor_prime_power(q);
    const CosetContext ctx(n, q);
    for (Residue r : reps) {
      if (r >= ctx.two_n()) {
        throw Error(Errc::invalid_argument, "residue " + std::to_string(r) +
                                                " is not below 2n = " +
                                                std::to_string(ctx.two_n()));
      }
    }
    const DefiningSet z = make_defining_set(ctx, reps);
    const ClassicalParams classical = classical_params(z);
    if (classical.degenerate) {
      throw Error(Errc::invalid_argument, "defining set covers every root; the code is zero");
    }
    // Reject oversize enumerations before building any field.
    if (!z.empty() && !bounded_pow(q * q, classical.k_dim, budget)) {
      throw Error(Errc::budget_exceeded,
                  "enumerating (" + std::to_string(q * q) + ")^" +
                      std::to_string(classical.k_dim) + " codewords exceeds the budget of " +
                      std::to_string(budget));
    }
    const NegacyclicRoot root = primitive_2n_root(pp, n);
    const Poly g = generator_polynomial(root, z);
    const auto [quot, rem] = poly::divmod(root.field, poly::x_pow_plus_one(root.field, n), g);
    const bool divides = rem.is_zero();
    const u64 distance = brute_force_distance(root, g, n, budget);
    const u64 singleton = n - classical.k_dim + 1;
    const bool mds = distance == singleton;

    switch (format) {
      case Format::json: {
        json doc = {{"schema", kSchemaVersion},
                    {"n", n},
                    {"q", q},
                    {"t", root.t},
                    {"field", {{"p", pp.p}, {"degree", root.field.degree()},
                               {"modulus", root.field.modulus()}}},
                    {"generator", poly_codes(g)},
                    {"degree", g.degree()},
                    {"dimension", classical.k_dim},
                    {"divides_x_n_plus_1", divides},
                    {"bch_bound", classical.d_bch},
                    {"distance", distance},
                    {"mds", mds}};
        out << doc.dump(2) << '\n';
        break;
      }
      case Format::csv:
        out << "n,q,t,dimension,bch_bound,distance,mds,divides\n"
            << n << ',' << q << ',' << root.t << ',' << classical.k_dim << ','
            << classical.d_bch << ',' << distance << ',' << (mds ? "true" : "false") << ','
            << (divides ? "true" : "false") << '\n';
        break;
      case Format::table: {
        out << "field      GF(" << pp.p << '^' << root.field.degree() << "), t = " << root.t
            << ", modulus (low degree first) ";
        out << '[';
        for (std::size_t i = 0; i < root.field.modulus().size(); ++i) {
          out << (i ? "," : "") << root.field.modulus()[i];
        }
        out << "]\n";
        out << "generator  " << poly_text(g) << " (packed coefficient codes)\n";
        out << "deg g = " << g.degree() << ", dimension = " << classical.k_dim
            << ", g | x^" << n << " + 1: " << yes_no(divides) << '\n';
        out << "BCH bound  " << classical.d_bch << '\n';
        out << "distance   " << distance << " (exact, brute force)\n";
        out << "MDS        " << yes_no(mds) << " (n - k + 1 = " << singleton << ")\n";
        break;
      }
    }
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement-assisted quantum codes from negacyclic codes of length 2(q^2+1)/a"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "table";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  u64 budget = budget_from_env();
  app.add_option("--budget", budget, "Maximum number of codewords the oracle may enumerate")
      ->check(CLI::PositiveNumber);

  FamilyInput input;
  std::string case_name = "I";
  auto* construct = app.add_subcommand("construct", "Build one code and check its closed form");
  construct->add_option("--m", input.m, "Odd integer m (a = m^2 + 1)")->required();
  construct->add_option("--xi", input.xi, "Positive integer xi")->required();
  construct->add_option("--alpha", input.alpha, "Nesting index, 1 <= alpha <= xi")->required();
  construct->add_option("--case", case_name, "I (q = a xi + a - m) or II (q = a xi + m)");

  u64 m_max = 7;
  u64 xi_max = 6;
  bool published_only = false;
  auto* table = app.add_subcommand("table", "Sweep the family and tabulate verified codes");
  table->add_option("--m-max", m_max, "Largest m");
  table->add_option("--xi-max", xi_max, "Largest xi");
  table->add_flag("--paper-table4", published_only,
                  "Restrict to the (m, xi, case) grid of the published explicit-code table");

  u64 n = 0;
  u64 q = 0;
  std::vector<std::string> rep_text;
  auto add_code_options = [&](CLI::App* sub) {
    sub->add_option("--n", n, "Code length")->required();
    sub->add_option("--q", q, "Field-size base q")->required();
    sub->add_option("--reps", rep_text, "Odd coset representatives, comma separated")
        ->expected(0, -1)
        ->delimiter(',');
  };
  auto* decompose_cmd = app.add_subcommand("decompose", "Decompose a defining set Z = Z1 u Z2");
  add_code_options(decompose_cmd);
  auto* oracle = app.add_subcommand("oracle", "Brute-force minimum distance over GF(q^2)");
  add_code_options(oracle);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  const Format format = format_name == "json"  ? Format::json
                        : format_name == "csv" ? Format::csv
                                               : Format::table;

  std::vector<Residue> reps;
  for (const auto& t : rep_text) {
    if (t.empty()) continue;
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(t, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != t.size() || v < 0) {
      err << "error: invalid residue '" << t << "'\n";
      return kInvalidInput;
    }
    reps.push_back(static_cast<Residue>(v));
  }

  if (construct->parsed()) {
    const auto fc = parse_family_case(case_name);
    if (!fc) {
      err << "error: case must be I or II\n";
      return kInvalidInput;
    }
    input.family_case = *fc;
    return cmd_construct(input, format, out, err);
  }
  if (table->parsed()) return cmd_table(m_max, xi_max, published_only, format, out, err);
  if (decompose_cmd->parsed()) return cmd_decompose(n, q, reps, format, out, err);
  return cmd_oracle(n, q, reps, budget, format, out, err);
}

}  // namespace negacode::cli
