#include <chrono>
#include <cmath>
#include <sstream>

#include "commands.hpp"

namespace zetakit::cli {

int RunConfig::digits() const { return static_cast<int>(std::ceil(static_cast<double>(bits) * std::log10(2.0))) + 1; }

std::string fmt(const Real& x, const RunConfig& cfg) { return x.to_string(cfg.digits()); }

std::string fmt(const Complex& z, const RunConfig& cfg) { return fmt(z.re, cfg) + "," + fmt(z.im, cfg); }

std::int64_t now_ns() {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

long elapsed_ms(std::int64_t start_ns, const RunConfig& cfg) {
  if (!cfg.timing) return 0;
  return static_cast<long>((now_ns() - start_ns) / 1000000);
}

Complex parse_complex(const std::string& text, const PrecisionContext& ctx) {
  WorkingScope scope(ctx);
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return Complex(Real::parse(text));
    return Complex(Real::parse(text.substr(0, comma)), Real::parse(text.substr(comma + 1)));
  } catch (const std::exception&) {
    throw UsageError("cannot parse complex number '" + text + "' (expected re,im)");
  }
}

std::vector<long> parse_long_list(const std::string& text, char sep) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError("not an integer: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q.push_back('"');
    q.push_back(c);
  }
  q.push_back('"');
  return q;
}

std::string csv_scalar(const Record& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_field(const Record& v) {
  if (v.is_array()) {
    std::string joined;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) joined.push_back(';');
      joined += v[i].is_structured() ? v[i].dump() : csv_scalar(v[i]);
    }
    return csv_quote(joined);
  }
  if (v.is_object()) return csv_quote(v.dump());
  return csv_quote(csv_scalar(v));
}

}  // namespace

void emit(const std::vector<Record>& records, Format f, std::ostream& out) {
  if (f == Format::json) {
    for (const Record& r : records) out << r.dump() << '\n';
    return;
  }
  std::vector<std::string> header;
  bool first = true;
  for (const Record& r : records) {
    std::vector<std::string> keys;
    for (auto it = r.begin(); it != r.end(); ++it) keys.push_back(it.key());
    if (first || keys != header) {
      if (!first) out << '\n';  // a new table starts when the columns change
      for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << csv_quote(keys[i]);
      out << '\n';
      header = keys;
    }
    first = false;
    std::size_t i = 0;
    for (auto it = r.begin(); it != r.end(); ++it, ++i) out << (i ? "," : "") << csv_field(it.value());
    out << '\n';
  }
}

}  // namespace zetakit::cli
