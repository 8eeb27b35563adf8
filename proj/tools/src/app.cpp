#include "zetakit/cli/app.hpp"

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "zetakit/errors.hpp"

namespace zetakit::cli {

namespace {

void error_json(std::ostream& out, const std::string& kind, const std::string& message, int code) {
  Record rec;
  rec["error"] = kind;
  rec["message"] = message;
  rec["exit_code"] = code;
  out << rec.dump() << '\n';
}

long resolve_bits(const std::optional<long>& flag) {
  long bits = PrecisionContext::kDefaultBits;
  if (flag) {
    bits = *flag;
  } else if (const char* env = std::getenv("ZETAKIT_BITS"); env && *env) {
    char* end = nullptr;
    bits = std::strtol(env, &end, 10);
    if (*end != '\0') throw UsageError(std::string("ZETAKIT_BITS is not an integer: ") + env);
  }
  if (bits < 64) throw UsageError("precision must be at least 64 bits");
  return bits;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"zetakit: eta/zeta series schemes, Melzak identities and symmetrized-factorial roots"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<long> bits;
  std::string format;
  RunConfig cfg;
  bool no_timing = false;
  app.add_option("--bits", bits, "working precision in bits (default 256, or ZETAKIT_BITS)");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", cfg.seed, "seed for randomized checks");
  app.add_flag("--no-timing", no_timing, "report wall_ms = 0 for reproducible output");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "evaluate one scheme at s");
  eval->add_option("--scheme", ea.scheme, "scheme name")->required();
  eval->add_option("--s", ea.s, "complex argument re,im")->required();
  eval->add_option("--m", ea.m, "order m / number of terms");
  eval->add_option("--terms", ea.terms, "term count, or a comma list for combined37");
  eval->add_option("--k", ea.k, "k for fast31 / euler_product");
  eval->add_option("--J", ea.J, "J for generalized30");
  eval->add_option("--L", ea.L, "L for generalized30");
  eval->add_option("--k-set", ea.k_set, "comma list of k for combined37 (default 2,3,5)");
  eval->add_option("--kill", ea.kill, "orders removed by combined37 (default 2 * |k set|)");
  eval->add_flag("--as-zeta", cfg.as_zeta, "convert eta results to zeta");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "compare schemes against the zeta oracle");
  bench->add_option("--s", ba.s, "complex argument re,im")->required();
  bench->add_option("--schemes", ba.schemes, "comma list of name:terms items, e.g. fast31:10000")->required();
  bench->add_option("--k", ba.k, "default k for fast31 items");
  bench->add_option("--k-set", ba.k_set, "k set for combined37 items");

  RootsArgs ra;
  auto* roots = app.add_subcommand("roots", "dump a root family");
  roots->add_option("--family", ra.family, "nu, tan49, lambda-omega, theta-phi, omega, shifts")->required();
  roots->add_option("--n", ra.n, "degree parameter for nu and tan49");
  roots->add_option("--m", ra.m, "even order for the other families");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", va.suite, "functional-eq, chi, melzak, interlace, reconstruct, all")->required();
  verify->add_option("--m", va.m, "single even m for the interlace suite");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("zetakit");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    error_json(out, "UsageError", e.what(), kExitUsage);
    return kExitUsage;
  }

  try {
    cfg.bits = resolve_bits(bits);
    cfg.timing = !no_timing;
    if (!format.empty()) cfg.format = format == "csv" ? Format::csv : Format::json;

    CommandResult result;
    if (eval->parsed())
      result = cmd_eval(ea, cfg);
    else if (bench->parsed())
      result = cmd_bench(ba, cfg);
    else if (roots->parsed())
      result = cmd_roots(ra, cfg);
    else
      result = cmd_verify(va, cfg);
    emit(result.records, cfg.format.value_or(result.default_format), out);
    return result.exit_code;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    error_json(out, "UsageError", e.what(), kExitUsage);
    return kExitUsage;
  } catch (const zetakit::Error& e) {
    err << e.kind() << ": " << e.what() << '\n';
    error_json(out, e.kind(), e.what(), kExitNumeric);
    return kExitNumeric;
  }
}

}  // namespace zetakit::cli
