#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "zetakit/cli/app.hpp"

namespace {

using nlohmann::json;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome r;
  r.code = zetakit::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<json> lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(json::parse(line));  // throws on invalid JSON
  return out;
}

double num(const json& j, const char* key) { return std::stod(j.at(key).get<std::string>()); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

class EnvGuard {
 public:
  explicit EnvGuard(const char* value) {
    if (value)
      setenv("ZETAKIT_BITS", value, 1);
    else
      unsetenv("ZETAKIT_BITS");
  }
  ~EnvGuard() { unsetenv("ZETAKIT_BITS"); }
};

}  // namespace

TEST(CliEval, MelzakAsZeta) {
  Outcome r = run({"eval", "--scheme", "melzak29", "--m", "32", "--s", "0.5,0", "--as-zeta"});
  ASSERT_EQ(r.code, zetakit::cli::kExitOk) << r.err;
  auto v = lines(r.out);
  ASSERT_EQ(v.size(), 1u);
  for (const char* key : {"scheme", "s", "value_re", "value_im", "terms", "err_estimate", "bits", "wall_ms", "seed"})
    EXPECT_TRUE(v[0].contains(key)) << key;
  EXPECT_NEAR(num(v[0], "value_re"), -1.4603482809068523, 1e-13);
  EXPECT_EQ(v[0]["bits"], 256);
}

TEST(CliEval, DirichletSingleTermAndCombined) {
  auto d = lines(run({"eval", "--scheme", "dirichlet", "--terms", "1", "--s", "2,0"}).out);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_DOUBLE_EQ(num(d[0], "value_re"), 2.0);
  EXPECT_DOUBLE_EQ(num(d[0], "value_im"), 0.0);

  auto c = lines(run({"eval", "--scheme", "combined37", "--s", "0.2,2", "--terms", "15,25,45"}).out);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_NEAR(num(c[0], "value_re"), 0.36010259, 1e-7);
  EXPECT_NEAR(num(c[0], "value_im"), -0.26624619, 1e-7);
}

TEST(CliEval, ExitCodes) {
  EXPECT_EQ(run({"eval", "--scheme", "nope", "--s", "0.5"}).code, zetakit::cli::kExitUsage);
  EXPECT_EQ(run({"eval", "--scheme", "dirichlet", "--terms", "10", "--s", "0.5", "--bits", "32"}).code,
            zetakit::cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, zetakit::cli::kExitUsage);
  EXPECT_EQ(run({"eval", "--scheme", "fast31", "--terms", "10", "--s", "abc"}).code, zetakit::cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, zetakit::cli::kExitOk);

  Outcome bad = run({"eval", "--scheme", "eta-ref", "--s", "-1,0"});
  EXPECT_EQ(bad.code, zetakit::cli::kExitNumeric);
  auto e = lines(bad.out);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0]["error"], "DomainError");
  EXPECT_EQ(e[0]["exit_code"], 3);
  EXPECT_FALSE(bad.err.empty());

  Outcome pole = run({"eval", "--scheme", "zeta-ref", "--s", "1,0"});
  EXPECT_EQ(pole.code, zetakit::cli::kExitNumeric);
  EXPECT_EQ(lines(pole.out)[0]["error"], "PoleError");
}

TEST(CliConfig, BitsFromEnvironmentAndFlagWins) {
  {
    EnvGuard g("100");
    auto v = lines(run({"eval", "--scheme", "dirichlet", "--terms", "3", "--s", "2,0"}).out);
    EXPECT_EQ(v.at(0)["bits"], 100);
    auto w = lines(run({"eval", "--scheme", "dirichlet", "--terms", "3", "--s", "2,0", "--bits", "128"}).out);
    EXPECT_EQ(w.at(0)["bits"], 128);
  }
  {
    EnvGuard g("12");
    EXPECT_EQ(run({"eval", "--scheme", "dirichlet", "--terms", "3", "--s", "2,0"}).code, zetakit::cli::kExitUsage);
  }
}

TEST(CliConfig, DeterministicOutputAndSeedRecorded) {
  std::vector<std::string> args = {"--bits", "96", "--seed", "42", "--no-timing", "eval", "--scheme", "fast31",
                                   "--terms", "200", "--k", "2", "--s", "0.3,4"};
  Outcome a = run(args), b = run(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(lines(a.out).at(0)["seed"], 42);
  EXPECT_EQ(lines(a.out).at(0)["wall_ms"], 0);

  std::vector<std::string> v = {"--bits", "64", "--seed", "9", "verify", "--suite", "functional-eq"};
  EXPECT_EQ(run(v).out, run(v).out);
}

TEST(CliBench, CsvTable) {
  Outcome r = run({"--bits", "96", "--no-timing", "bench", "--s", "0.2,2", "--schemes",
                   "dirichlet:100,fast31:50,combined37:15/25/45"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rows = split(r.out, '\n');
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], "scheme,terms,value_re,value_im,abs_err_vs_oracle,wall_ms,bits,seed");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    auto cols = split(rows[i], ',');
    ASSERT_EQ(cols.size(), 8u) << rows[i];
    const double re = std::stod(cols[2]), im = std::stod(cols[3]), err = std::stod(cols[4]);
    const double direct = std::hypot(re - 0.36010259002259059, im + 0.26624619976557441);
    EXPECT_NEAR(err, direct, 1e-12) << rows[i];
  }
  EXPECT_LT(std::stod(split(rows[3], ',')[4]), 1e-7);

  Outcome j = run({"--format", "json", "--bits", "64", "bench", "--s", "0.2,2", "--schemes", "dirichlet:10"});
  EXPECT_EQ(lines(j.out).size(), 1u);
}

TEST(CliBench, EmptyListIsUsageError) {
  EXPECT_EQ(run({"bench", "--s", "0.2,2", "--schemes", ""}).code, zetakit::cli::kExitUsage);
  EXPECT_EQ(run({"bench", "--s", "0.2,2"}).code, zetakit::cli::kExitUsage);
  EXPECT_EQ(run({"bench", "--s", "0.2,2", "--schemes", "fast31"}).code, zetakit::cli::kExitUsage);
}

TEST(CliRoots, Families) {
  auto nu = lines(run({"roots", "--family", "nu", "--n", "4"}).out);
  ASSERT_FALSE(nu.empty());
  const json& last = nu.back();
  EXPECT_NEAR(std::stod(last["values"].at(0).get<std::string>()), std::sqrt(7.0) / 2, 1e-15);

  auto sh = lines(run({"--bits", "128", "roots", "--family", "shifts", "--m", "16"}).out);
  ASSERT_EQ(sh.size(), 1u);
  EXPECT_EQ(sh[0]["d"].size(), 16u);
  EXPECT_EQ(sh[0]["parity_ok"].size(), 16u);

  Outcome lo = run({"--bits", "128", "roots", "--family", "lambda-omega", "--m", "8"});
  ASSERT_EQ(lo.code, 0);
  auto l = lines(lo.out);
  ASSERT_EQ(l.size(), 3u);
  EXPECT_EQ(l[2]["family"], "interlace");
  EXPECT_TRUE(l[2].contains("strict"));
  EXPECT_EQ(l[2]["pattern"].get<std::string>().size(), 8u);

  Outcome om = run({"--bits", "128", "roots", "--family", "omega", "--m", "8"});
  ASSERT_EQ(om.code, 0);
  EXPECT_TRUE(lines(om.out).back().contains("findings"));

  EXPECT_EQ(run({"roots", "--family", "tan49", "--n", "6"}).code, 0);
  EXPECT_EQ(run({"--bits", "96", "roots", "--family", "theta-phi", "--m", "8"}).code, 0);
  EXPECT_EQ(run({"roots", "--family", "shifts", "--m", "7"}).code, zetakit::cli::kExitUsage);
  EXPECT_EQ(run({"roots", "--family", "bogus", "--m", "8"}).code, zetakit::cli::kExitUsage);
}

TEST(CliVerify, ExitCodeFollowsCheckRecords) {
  for (const char* suite : {"functional-eq", "chi", "melzak", "interlace", "reconstruct"}) {
    Outcome r = run({"--bits", "128", "verify", "--suite", suite});
    auto recs = lines(r.out);
    ASSERT_FALSE(recs.empty()) << suite;
    int fails = 0, findings = 0;
    for (const json& j : recs) {
      if (!j.contains("status")) continue;
      fails += j["status"] == "fail";
      findings += j["status"] == "finding";
    }
    const json& summary = recs.back();
    EXPECT_EQ(summary["failed"], fails) << suite;
    EXPECT_EQ(summary["findings"], findings) << suite;
    EXPECT_EQ(r.code, fails ? zetakit::cli::kExitCheckFailed : zetakit::cli::kExitOk) << suite;
  }
}

TEST(CliVerify, FindingsNeverFail) {
  Outcome r = run({"--bits", "128", "verify", "--suite", "reconstruct"});
  EXPECT_EQ(r.code, 0);
  int findings = 0;
  for (const json& j : lines(r.out)) findings += j.contains("status") && j["status"] == "finding";
  EXPECT_GT(findings, 0);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, zetakit::cli::kExitUsage);
}
