#include <sstream>

#include "commands.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/melzak.hpp"

namespace zetakit::cli {

namespace {

bool is_oracle(const std::string& name) { return name == "eta-ref" || name == "zeta-ref" || name == "zeta-quad"; }

std::size_t single_count(const std::string& name, const SchemeParams& p) {
  if (p.counts.size() != 1) throw UsageError(name + " takes exactly one term count (--m or --terms)");
  if (p.counts[0] == 0) throw UsageError(name + " needs a positive term count");
  return p.counts[0];
}

std::vector<std::size_t> parse_counts(const std::string& text, char sep) {
  std::vector<std::size_t> out;
  for (long v : parse_long_list(text, sep)) {
    if (v <= 0) throw UsageError("term counts must be positive");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

Record eval_record(const std::string& name, const Complex& s, const EvalResult& r, bool eta, long ms,
                   const RunConfig& cfg) {
  Record rec;
  rec["scheme"] = name;
  rec["quantity"] = eta ? "eta" : "zeta";
  rec["s"] = fmt(s, cfg);
  rec["value_re"] = fmt(r.value.re, cfg);
  rec["value_im"] = fmt(r.value.im, cfg);
  rec["terms"] = r.terms_used;
  rec["err_estimate"] = fmt(r.err_estimate, cfg);
  rec["bits"] = cfg.bits;
  rec["seed"] = cfg.seed;
  rec["wall_ms"] = ms;
  return rec;
}

}  // namespace

SchemeRequest build_request(const std::string& name, const SchemeParams& p) {
  SchemeRequest r;
  r.name = name;
  const bool has_extra = p.k || p.J || p.L || !p.k_set.empty() || p.kill;
  if (is_oracle(name)) {
    if (!p.counts.empty() || has_extra) throw UsageError(name + " takes no parameters");
    r.returns_eta = name == "eta-ref";
    return r;
  }
  if (name == "via66") {
    if (has_extra) throw UsageError("via66 takes only --m");
    r.m = single_count(name, p);
    if (r.m % 2 != 0) throw UsageError("via66 needs an even m");
    r.returns_eta = true;
    return r;
  }
  auto kind = parse_scheme_kind(name);
  if (!kind) throw UsageError("unknown scheme '" + name + "'");
  SchemeSpec spec;
  spec.kind = *kind;
  switch (*kind) {
    case SchemeKind::combined37: {
      if (p.k || p.J || p.L) throw UsageError("combined37 takes --k-set, --kill and --terms");
      spec.k_set = p.k_set.empty() ? std::vector<long>{2, 3, 5} : p.k_set;
      if (p.counts.size() != spec.k_set.size())
        throw UsageError("combined37 needs one term count per entry of the k set");
      spec.terms_per_series = p.counts;
      spec.N = p.kill ? *p.kill : 2 * static_cast<long>(spec.k_set.size());
      break;
    }
    case SchemeKind::fast31:
      if (p.J || p.L || !p.k_set.empty() || p.kill) throw UsageError("fast31 takes --k and --terms");
      spec.k = p.k.value_or(2);
      spec.m_or_terms = single_count(name, p);
      break;
    case SchemeKind::euler_product:
      if (!p.k) throw UsageError("euler_product requires --k");
      if (p.J || p.L || !p.k_set.empty() || p.kill) throw UsageError("euler_product takes --k and --terms");
      spec.k = p.k;
      spec.m_or_terms = single_count(name, p);
      break;
    case SchemeKind::generalized30:
      if (!p.J || !p.L) throw UsageError("generalized30 requires --J and --L");
      if (p.k || !p.k_set.empty() || p.kill) throw UsageError("generalized30 takes --m, --J and --L");
      spec.J = p.J;
      spec.L = p.L;
      spec.m_or_terms = single_count(name, p);
      break;
    default:
      if (has_extra) throw UsageError(name + " takes only a term count");
      spec.m_or_terms = single_count(name, p);
      break;
  }
  try {
    spec.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  r.returns_eta = scheme_returns_eta(*kind);
  r.spec = spec;
  return r;
}

EvalResult run_request(const SchemeRequest& r, const Complex& s, const PrecisionContext& ctx) {
  if (r.spec) return evaluate(*r.spec, s, ctx);
  if (r.name == "eta-ref") return eta_ref(s, ctx);
  if (r.name == "zeta-ref") return zeta_ref(s, ctx);
  if (r.name == "zeta-quad") return zeta_quad_oracle(s, ctx);
  return eta_via66(s, r.m, ctx);
}

CommandResult cmd_eval(const EvalArgs& a, const RunConfig& cfg) {
  const PrecisionContext ctx = cfg.context();
  SchemeParams p;
  if (a.m && !a.terms.empty()) throw UsageError("give either --m or --terms, not both");
  if (a.m) p.counts = {*a.m};
  if (!a.terms.empty()) p.counts = parse_counts(a.terms, ',');
  p.k = a.k;
  p.J = a.J;
  p.L = a.L;
  if (!a.k_set.empty()) p.k_set = parse_long_list(a.k_set, ',');
  p.kill = a.kill;
  const SchemeRequest req = build_request(a.scheme, p);
  const Complex s = parse_complex(a.s, ctx);

  const auto start = now_ns();
  EvalResult r = run_request(req, s, ctx);
  bool eta = req.returns_eta;
  if (eta && cfg.as_zeta) {
    r = eta_to_zeta(r, s, ctx);
    eta = false;
  }
  CommandResult out;
  out.records.push_back(eval_record(a.scheme, s, r, eta, elapsed_ms(start, cfg), cfg));
  return out;
}

CommandResult cmd_bench(const BenchArgs& a, const RunConfig& cfg) {
  const PrecisionContext ctx = cfg.context();
  std::vector<std::string> items;
  {
    std::stringstream ss(a.schemes);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) items.push_back(item);
  }
  if (items.empty()) throw UsageError("bench needs at least one scheme (--schemes name:terms,...)");
  std::vector<long> k_set;
  if (!a.k_set.empty()) k_set = parse_long_list(a.k_set, ',');

  std::vector<SchemeRequest> reqs;
  for (const std::string& item : items) {
    const auto colon = item.find(':');
    const std::string name = item.substr(0, colon);
    SchemeParams p;
    std::vector<std::size_t> nums;
    if (colon != std::string::npos) nums = parse_counts(item.substr(colon + 1), '/');
    if (name == "fast31") {
      if (nums.empty() || nums.size() > 2) throw UsageError("fast31 item is fast31:N or fast31:N/k");
      p.counts = {nums[0]};
      p.k = nums.size() == 2 ? static_cast<long>(nums[1]) : a.k.value_or(2);
    } else if (name == "euler_product") {
      if (nums.size() != 2) throw UsageError("euler_product item is euler_product:n/k");
      p.counts = {nums[0]};
      p.k = static_cast<long>(nums[1]);
    } else if (name == "generalized30") {
      if (nums.size() != 3) throw UsageError("generalized30 item is generalized30:m/J/L");
      p.counts = {nums[0]};
      p.J = static_cast<long>(nums[1]);
      p.L = static_cast<long>(nums[2]);
    } else if (name == "combined37") {
      p.counts = nums;
      p.k_set = k_set;
    } else {
      p.counts = nums;
    }
    reqs.push_back(build_request(name, p));
  }
  const Complex s = parse_complex(a.s, ctx);
  const EvalResult oracle = zeta_ref(s, ctx);

  CommandResult out;
  out.default_format = Format::csv;
  for (std::size_t i = 0; i < reqs.size(); ++i) {
    const auto start = now_ns();
    EvalResult r = run_request(reqs[i], s, ctx);
    if (reqs[i].returns_eta) r = eta_to_zeta(r, s, ctx);
    const long ms = elapsed_ms(start, cfg);
    Real err;
    {
      WorkingScope scope(ctx);
      err = abs(r.value - oracle.value);
    }
    Record rec;
    rec["scheme"] = items[i];
    rec["terms"] = r.terms_used;
    rec["value_re"] = fmt(r.value.re, cfg);
    rec["value_im"] = fmt(r.value.im, cfg);
    rec["abs_err_vs_oracle"] = fmt(err, cfg);
    rec["wall_ms"] = ms;
    rec["bits"] = cfg.bits;
    rec["seed"] = cfg.seed;
    out.records.push_back(rec);
  }
  return out;
}

}  // namespace zetakit::cli
