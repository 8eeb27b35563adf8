#include "commands.hpp"
#include "zetakit/roots.hpp"

namespace zetakit::cli {

namespace {

Record list_record(const RootList& r, const RunConfig& cfg) {
  Record rec;
  rec["family"] = to_string(r.family);
  rec["m"] = r.m;
  Record values = Record::array(), residuals = Record::array();
  for (const Real& v : r.values) values.push_back(fmt(v, cfg));
  for (const Real& v : r.residuals) residuals.push_back(fmt(v, cfg));
  rec["values"] = values;
  rec["residuals"] = residuals;
  return rec;
}

void stamp(Record& rec, const RunConfig& cfg) {
  rec["bits"] = cfg.bits;
  rec["seed"] = cfg.seed;
}

std::size_t need_even_m(const RootsArgs& a, std::size_t min) {
  if (!a.m) throw UsageError("family '" + a.family + "' requires --m");
  if (*a.m < min || *a.m % 2 != 0) throw UsageError("--m must be even and >= " + std::to_string(min));
  return *a.m;
}

}  // namespace

CommandResult cmd_roots(const RootsArgs& a, const RunConfig& cfg) {
  const PrecisionContext ctx = cfg.context();
  CommandResult out;
  const std::string& f = a.family;
  if (f == "nu" || f == "tan49") {
    if (!a.n) throw UsageError("family '" + f + "' requires --n");
    const std::size_t n = *a.n;
    if (a.m) throw UsageError("family '" + f + "' takes --n, not --m");
    RootList r;
    if (f == "nu") {
      if (n < 3) throw UsageError("--n must be >= 3 for nu");
      r = nu_table(n, ctx).at(n);
    } else {
      if (n < 2) throw UsageError("--n must be >= 2 for tan49");
      r = tan_zeros49(n, ctx);
    }
    Record rec = list_record(r, cfg);
    stamp(rec, cfg);
    out.records.push_back(rec);
    return out;
  }
  if (a.n) throw UsageError("family '" + f + "' takes --m, not --n");
  if (f == "shifts") {
    const std::size_t m = need_even_m(a, 4);
    ShiftVector d = d_shifts(m, ctx);
    Record rec;
    rec["family"] = "shifts";
    rec["m"] = m;
    Record values = Record::array(), flags = Record::array();
    for (const Real& v : d.d) values.push_back(fmt(v, cfg));
    for (bool b : d.parity_ok) flags.push_back(b);
    rec["d"] = values;
    rec["parity_ok"] = flags;
    rec["all_in_unit"] = d.all_in_unit;
    rec["ordering_ok"] = d.ordering_ok;
    rec["findings"] = d.findings;
    stamp(rec, cfg);
    out.records.push_back(rec);
  } else if (f == "lambda-omega") {
    const std::size_t m = need_even_m(a, 4);
    ShiftVector d = d_shifts(m, ctx);
    LambdaOmega lo = lambda_omega(m, d, ctx);
    for (const RootList* r : {&lo.lambda, &lo.omega}) {
      Record rec = list_record(*r, cfg);
      stamp(rec, cfg);
      out.records.push_back(rec);
    }
    Record rep;
    rep["family"] = "interlace";
    rep["m"] = m;
    rep["left"] = lo.interlace.left_family;
    rep["right"] = lo.interlace.right_family;
    rep["pattern"] = lo.interlace.pattern;
    rep["strict"] = lo.interlace.strict;
    rep["orientation"] = lo.interlace.orientation;
    rep["min_gap"] = fmt(lo.interlace.min_gap, cfg);
    rep["first_break"] = lo.interlace.first_break;
    stamp(rep, cfg);
    out.records.push_back(rep);
  } else if (f == "theta-phi") {
    const std::size_t m = need_even_m(a, 4);
    ThetaPhi tp = theta_phi_roots(m, ctx);
    Record th = list_record(tp.theta, cfg);
    th["weight"] = fmt(tp.weight_even, cfg);
    stamp(th, cfg);
    Record ph = list_record(tp.phi, cfg);
    ph["weight"] = fmt(tp.weight_odd, cfg);
    stamp(ph, cfg);
    out.records.push_back(th);
    out.records.push_back(ph);
  } else if (f == "omega") {
    const std::size_t m = need_even_m(a, 8);
    OmegaResult om = omega_caps(m, ctx);
    Record rec = list_record(om.omega, cfg);
    Record cx = Record::array();
    for (const Complex& z : om.complex_omega) cx.push_back(fmt(z, cfg));
    rec["complex_values"] = cx;
    rec["complex_root_finding"] = om.complex_root_finding;
    rec["chi_m1"] = fmt(om.chi_m1, cfg);
    rec["lead"] = fmt(om.lead, cfg);
    rec["omega1"] = om.omega1 ? Record(fmt(*om.omega1, cfg)) : Record();
    rec["omega1_negative"] = om.omega1_negative;
    rec["omega1_le_quarter"] = om.omega1_le_quarter;
    rec["interlace_lambda"] = om.interlace84;
    rec["findings"] = om.findings;
    stamp(rec, cfg);
    out.records.push_back(rec);
  } else {
    throw UsageError("unknown family '" + f + "' (nu, tan49, lambda-omega, theta-phi, omega, shifts)");
  }
  return out;
}

}  // namespace zetakit::cli
