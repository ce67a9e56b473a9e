#include "negacode/eaqecc.hpp"

namespace negacode {

std::string_view to_string(ParamSource s) noexcept {
  switch (s) {
    case ParamSource::formula: return "formula";
    case ParamSource::direct: return "direct";
    case ParamSource::both: return "both";
  }
  return "unknown";
}

Decomposition decompose(const DefiningSet& z) {
  const ResidueSet image = neg_q_image(z.context(), z.residues());
  Decomposition dec;
  dec.z1 = set_intersection(z.residues(), image);
  dec.z2 = set_difference(z.residues(), dec.z1);
  return dec;
}

SingletonCheck ea_singleton_check(const EAParams& p) noexcept {
  SingletonCheck r;
  r.slack = p.n + p.c - p.k - 2 * (p.d - 1);
  r.saturated = r.slack == 0;
  r.applicable = 2 * p.d <= p.n + 2;
  return r;
}

EAParams ea_params(const DefiningSet& z) { return ea_params(z, decompose(z)); }

EAParams ea_params(const DefiningSet& z, const Decomposition& dec) {
  const ClassicalParams classical = classical_params(z);
  EAParams p;
  p.n = static_cast<std::int64_t>(classical.n);
  p.c = static_cast<std::int64_t>(dec.z1.size());
  p.k = p.n - 2 * static_cast<std::int64_t>(z.size()) + p.c;
  p.d = static_cast<std::int64_t>(classical.d_bch);
  p.q = z.context().q();
  p.d_is_exact = classical.is_mds && !classical.degenerate;
  p.source = ParamSource::direct;
  const SingletonCheck check = ea_singleton_check(p);
  p.is_eaqmds = check.saturated && check.applicable;
  return p;
}

}  // namespace negacode
