#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "zetakit/cli/app.hpp"
#include "zetakit/complex.hpp"
#include "zetakit/precision.hpp"
#include "zetakit/reference.hpp"
#include "zetakit/schemes.hpp"

namespace zetakit::cli {

using Record = nlohmann::ordered_json;

enum class Format { json, csv };

struct RunConfig {
  long bits = PrecisionContext::kDefaultBits;
  std::optional<Format> format;
  std::uint64_t seed = 0;
  bool as_zeta = false;
  bool timing = true;

  PrecisionContext context() const { return PrecisionContext(bits); }
  int digits() const;  // decimal digits carried by `bits`
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandResult {
  std::vector<Record> records;
  int exit_code = 0;
  Format default_format = Format::json;
};

// "re,im" or "re".
Complex parse_complex(const std::string& text, const PrecisionContext& ctx);
std::vector<long> parse_long_list(const std::string& text, char sep);
std::string fmt(const Real& x, const RunConfig& cfg);
std::string fmt(const Complex& z, const RunConfig& cfg);  // "re,im"
long elapsed_ms(std::int64_t start_ns, const RunConfig& cfg);
std::int64_t now_ns();

// Library scheme or one of the oracle/extra names (eta-ref, zeta-ref,
// zeta-quad, via66).
struct SchemeRequest {
  std::string name;
  std::optional<SchemeSpec> spec;
  std::size_t m = 0;  // via66 order
  bool returns_eta = false;
};

struct SchemeParams {
  std::vector<std::size_t> counts;  // --m / --terms, or the numbers of a bench item
  std::optional<long> k;
  std::optional<long> J;
  std::optional<long> L;
  std::vector<long> k_set;
  std::optional<long> kill;
};

SchemeRequest build_request(const std::string& name, const SchemeParams& p);
EvalResult run_request(const SchemeRequest& r, const Complex& s, const PrecisionContext& ctx);

struct EvalArgs {
  std::string scheme;
  std::string s;
  std::optional<std::size_t> m;
  std::string terms;
  std::optional<long> k;
  std::optional<long> J;
  std::optional<long> L;
  std::string k_set;
  std::optional<long> kill;
};
CommandResult cmd_eval(const EvalArgs& a, const RunConfig& cfg);

struct BenchArgs {
  std::string s;
  std::string schemes;  // comma list of name:a/b/c items
  std::optional<long> k;
  std::string k_set;
};
CommandResult cmd_bench(const BenchArgs& a, const RunConfig& cfg);

struct RootsArgs {
  std::string family;
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
};
CommandResult cmd_roots(const RootsArgs& a, const RunConfig& cfg);

struct VerifyArgs {
  std::string suite;
  std::optional<std::size_t> m;
};
CommandResult cmd_verify(const VerifyArgs& a, const RunConfig& cfg);

void emit(const std::vector<Record>& records, Format f, std::ostream& out);

}  // namespace zetakit::cli
