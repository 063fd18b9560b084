#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "etacrit/cli.hpp"
#include "etacrit/complex_verify.hpp"
#include "etacrit/io.hpp"

using namespace etacrit;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "etacrit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("etacrit_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

// Clears ETACRIT_OUTPUT_DIR for the scope unless a value is given.
struct OutputDirEnv {
  explicit OutputDirEnv(const char* value = nullptr) {
    if (value)
      setenv("ETACRIT_OUTPUT_DIR", value, 1);
    else
      unsetenv("ETACRIT_OUTPUT_DIR");
  }
  ~OutputDirEnv() { unsetenv("ETACRIT_OUTPUT_DIR"); }
};

}  // namespace

TEST_CASE("parse_complex forms") {
  CHECK(parse_complex("2+0i") == std::complex<double>(2.0, 0.0));
  CHECK(parse_complex("0.6+14.134725i") == std::complex<double>(0.6, 14.134725));
  CHECK(parse_complex("1.5-3i") == std::complex<double>(1.5, -3.0));
  CHECK(parse_complex("-2i") == std::complex<double>(0.0, -2.0));
  CHECK(parse_complex("i") == std::complex<double>(0.0, 1.0));
  CHECK(parse_complex("1.1") == std::complex<double>(1.1, 0.0));
  CHECK(parse_complex("1e-3+2e+1i") == std::complex<double>(1e-3, 20.0));
  CHECK(parse_complex(" 2 + 1i ") == std::complex<double>(2.0, 1.0));
  CHECK_THROWS(parse_complex(""));
  CHECK_THROWS(parse_complex("abc"));
  CHECK_THROWS(parse_complex("1+2j"));
}

TEST_CASE("sweep CSV round-trips rationals exactly") {
  const MobiusTable mu = mobius_sieve(12);
  const auto rows = sweep(12, CutoffPolicy{Rational(997, 3)}, 1000, mu);
  std::stringstream buffer;
  io::write_sweep_csv(buffer, rows);
  const auto records = io::read_sweep_csv(buffer);
  REQUIRE(records.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(records[i].n == rows[i].n);
    CHECK(records[i].main == rows[i].main);
    CHECK(records[i].cutoff == rows[i].cutoff);
    CHECK(records[i].tail_high == rows[i].tail_high);
    CHECK(records[i].exact_tail == rows[i].exact_tail);
    CHECK(records[i].period == rows[i].period);
    CHECK(records[i].runtime_ms.has_value());
  }
  std::istringstream bad("n,cutoff\n1,2\n");
  CHECK_THROWS(io::read_sweep_csv(bad));
}

TEST_CASE("sweep JSON layout") {
  const MobiusTable mu = mobius_sieve(3);
  const auto rows = sweep(3, CutoffPolicy{}, 10, mu);
  std::ostringstream out;
  io::write_sweep_json(out, rows, {{"subcommand", "sweep"}}, {false});
  const auto doc = nlohmann::json::parse(out.str());
  CHECK(doc["config"]["subcommand"] == "sweep");
  REQUIRE(doc["rows"].size() == 3);
  CHECK(doc["rows"][0]["n"] == 1);
  CHECK(doc["rows"][0]["exact_tail"].is_number());
  CHECK(doc["rows"][2]["exact_tail"].is_null());
  CHECK(doc["rows"][2]["runtime_ms"].is_null());
  CHECK(Rational(BigInt(doc["rows"][1]["main_num"].get<std::string>()),
                 BigInt(doc["rows"][1]["main_den"].get<std::string>())) == rows[1].main);
}

TEST_CASE("report writers") {
  std::vector<VerificationReport> reports{verify_thm21(2.0, 1000),
                                          substitution_equivalence_check(3, Rational(50), mobius_sieve(3))};
  std::ostringstream csv;
  io::write_reports_csv(csv, reports);
  std::istringstream lines(csv.str());
  std::string header, first, second;
  std::getline(lines, header);
  std::getline(lines, first);
  std::getline(lines, second);
  CHECK(header == "check,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_error,rigorous_bound,pass,exact_lhs,exact_rhs");
  CHECK(first.rfind("thm21,s=2+0i;T=1000,", 0) == 0);
  CHECK(second.find(",true,") != std::string::npos);

  std::ostringstream json;
  io::write_reports_json(json, reports, {{"subcommand", "x"}});
  const auto doc = nlohmann::json::parse(json.str());
  CHECK(doc["reports"][0]["parameters"]["T"] == "1000");
  CHECK(doc["reports"][0]["exact_lhs"].is_null());
  CHECK(doc["reports"][1]["exact_lhs"] == doc["reports"][1]["exact_rhs"]);
  CHECK(io::format_double(0.1) == "0.1");
}

TEST_CASE("cli nu and exit codes") {
  OutputDirEnv env;
  auto r = run({"nu", "--t", "7/3"});
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");
  CHECK(run({"nu", "--t", "3/2"}).out == "1\n");
  CHECK(run({"nu", "--samples", "2000", "--seed", "5"}).code == 0);

  CHECK(run({"verify-thm21", "--s", "2+0i", "--trunc", "1000000"}).code == 0);
  CHECK(run({"verify-thm21", "--s", "2+0i,1+0i", "--trunc", "1000"}).out.find("T=1000") != std::string::npos);
  CHECK(run({"verify-lemma31", "--theta", "3/10", "--s", "0.75+5i", "--eps", "1e-6"}).code == 0);
  CHECK(run({"verify-eq9", "--m", "5", "--s", "2", "--eps", "1e-6"}).code == 0);
  CHECK(run({"verify-eq16", "--m", "5", "--s", "1.5,0.75+2i"}).code == 0);
  CHECK(run({"check-equivalence", "--n", "3", "--cutoff", "50"}).code == 0);

  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"nu", "--t", "-1"}).code == 2);
  CHECK(run({"nu"}).code == 2);
  CHECK(run({"verify-thm21", "--s", "2+1j"}).code == 2);
  CHECK(run({"verify-thm21", "--s", "2", "--trunc", "7"}).code == 2);
  CHECK(run({"check-equivalence", "--n", "3", "--cutoff", "2"}).code == 2);
  CHECK(run({"sweep", "--n-max", "2", "--format", "xml"}).code == 2);
  const auto unwritable = run({"nu", "--t", "1", "--out", "/nonexistent_dir_etacrit/x.csv"});
  CHECK(unwritable.code == 2);
  CHECK(unwritable.err.find("cannot open") != std::string::npos);

  VerificationReport failing = verify_thm21(2.0, 10);
  CHECK(exit_code_for(std::vector{failing}) == 0);
  failing.pass = false;
  CHECK(exit_code_for(std::vector{verify_thm21(2.0, 10), failing}) == 1);
}

TEST_CASE("cli sweep writes a 10-row file and is reproducible without timing") {
  OutputDirEnv env;
  const fs::path dir = scratch_dir("sweep");
  const std::string a = (dir / "a.csv").string(), b = (dir / "b.csv").string();
  REQUIRE(run({"sweep", "--n-max", "10", "--cutoff", "1000", "--out", a, "--no-timing"}).code == 0);
  REQUIRE(run({"sweep", "--n-max", "10", "--cutoff", "1000", "--out", b, "--no-timing"}).code == 0);
  const std::string text = slurp(a);
  CHECK(text == slurp(b));
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  CHECK(line == io::kSweepHeader);
  int count = 0;
  while (std::getline(in, line)) ++count;
  CHECK(count == 10);

  const std::string ja = (dir / "a.json").string(), jb = (dir / "b.json").string();
  run({"sweep", "--n-max", "4", "--format", "json", "--out", ja, "--no-timing"});
  run({"sweep", "--n-max", "4", "--format", "json", "--out", jb, "--no-timing"});
  CHECK(slurp(ja) == slurp(jb));
  CHECK(nlohmann::json::parse(slurp(ja))["config"]["n_max"] == "4");

  const std::string sa = (dir / "s1.csv").string(), sb = (dir / "s2.csv").string();
  run({"nu", "--samples", "500", "--seed", "42", "--out", sa});
  run({"nu", "--samples", "500", "--seed", "42", "--out", sb});
  CHECK(slurp(sa) == slurp(sb));
  fs::remove_all(dir);
}

TEST_CASE("ETACRIT_OUTPUT_DIR redirects output") {
  const fs::path dir = scratch_dir("env");
  OutputDirEnv env(dir.c_str());
  auto r = run({"verify-thm21", "--s", "2", "--trunc", "1000"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(fs::exists(dir / "verify-thm21.csv"));

  run({"nu", "--t", "5/2", "--format", "json", "--out", "nu_value.json"});
  CHECK(nlohmann::json::parse(slurp(dir / "nu_value.json"))["nu"] == 0);
  fs::remove_all(dir);
}
