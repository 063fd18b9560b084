#include "etacrit/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "etacrit/complex_verify.hpp"
#include "etacrit/criterion.hpp"
#include "etacrit/io.hpp"
#include "etacrit/mobius.hpp"
#include "etacrit/nu_step.hpp"

namespace etacrit {

namespace {

constexpr const char* kOutputDirEnv = "ETACRIT_OUTPUT_DIR";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  std::int64_t n_max = 0;
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::string cutoff;
  std::int64_t period_limit = kDefaultPeriodLimit;
  std::int64_t truncation = 1'000'000;
  std::vector<std::string> s_list;
  std::string theta;
  std::string eps;
  std::string t;
  std::int64_t samples = 0;
  std::string output_path;
  std::string format = "csv";
  std::uint64_t seed = 0;
  bool no_timing = false;
};

double parse_component(std::string_view text, std::string_view whole) {
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  std::size_t used = 0;
  const std::string s(text);
  double value = 0.0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) throw std::invalid_argument("malformed complex number: " + std::string(whole));
  return value;
}

io::ConfigEcho config_echo(const RunConfig& c) {
  io::ConfigEcho echo{{"subcommand", c.subcommand}, {"format", c.format}, {"seed", std::to_string(c.seed)}};
  auto add = [&](const char* key, const std::string& value) {
    if (!value.empty()) echo.emplace_back(key, value);
  };
  if (c.n_max) add("n_max", std::to_string(c.n_max));
  if (c.m) add("m", std::to_string(c.m));
  if (c.n) add("n", std::to_string(c.n));
  add("cutoff", c.cutoff);
  echo.emplace_back("period_limit", std::to_string(c.period_limit));
  if (c.subcommand == "verify-thm21") add("trunc", std::to_string(c.truncation));
  std::string s_joined;
  for (const auto& s : c.s_list) s_joined += (s_joined.empty() ? "" : ",") + s;
  add("s", s_joined);
  add("theta", c.theta);
  add("eps", c.eps);
  add("t", c.t);
  if (c.samples) add("samples", std::to_string(c.samples));
  return echo;
}

std::vector<ComplexValue> parse_s_list(const RunConfig& c) {
  if (c.s_list.empty()) throw UsageError("--s is required");
  std::vector<ComplexValue> out;
  for (const auto& s : c.s_list) out.push_back(parse_complex(s));
  return out;
}

Rational cutoff_or_default(const RunConfig& c, std::int64_t n) {
  return c.cutoff.empty() ? CutoffPolicy{}.cutoff_for(n) : parse_rational(c.cutoff);
}

std::string render_reports(const RunConfig& c, const std::vector<VerificationReport>& reports) {
  std::ostringstream buffer;
  if (c.format == "json")
    io::write_reports_json(buffer, reports, config_echo(c));
  else
    io::write_reports_csv(buffer, reports);
  return buffer.str();
}

// Returns the rendered output and whether every check passed.
std::pair<std::string, bool> execute(const RunConfig& c, std::ostream& err) {
  std::vector<VerificationReport> reports;

  if (c.subcommand == "sweep") {
    if (c.n_max < 1) throw UsageError("--n-max must be >= 1");
    const MobiusTable mu = mobius_sieve(c.n_max);
    CutoffPolicy policy;
    if (!c.cutoff.empty()) policy.fixed = parse_rational(c.cutoff);
    const auto rows = sweep(c.n_max, policy, c.period_limit, mu, [&](const CriterionRow& row, std::size_t done, std::size_t total) {
      err << fmt::format("[sweep] {}/{} n={} main={} tail_high={:.3e}{}\n", done, total, row.n, to_decimal(row.main, 12),
                         row.tail_high, row.exact_tail ? " (exact tail)" : "");
    });
    bool ok = true;
    for (const auto& row : rows)
      if (sgn(row.main) < 0 || !(row.tail_high >= 0.0)) ok = false;
    std::ostringstream buffer;
    const io::SweepWriteOptions options{!c.no_timing};
    if (c.format == "json")
      io::write_sweep_json(buffer, rows, config_echo(c), options);
    else
      io::write_sweep_csv(buffer, rows, options);
    return {buffer.str(), ok};
  }

  if (c.subcommand == "verify-thm21") {
    for (const auto& s : parse_s_list(c)) reports.push_back(verify_thm21(s, c.truncation));
  } else if (c.subcommand == "verify-lemma31") {
    if (c.theta.empty()) throw UsageError("--theta is required");
    const Rational theta = parse_rational(c.theta);
    const Rational eps = parse_rational(c.eps.empty() ? "1e-10" : c.eps);
    for (const auto& s : parse_s_list(c)) reports.push_back(verify_lemma31(theta, s, eps));
  } else if (c.subcommand == "verify-eq9") {
    if (c.m < 1) throw UsageError("--m must be >= 1");
    const MobiusTable mu = mobius_sieve(c.m);
    const Rational eps = parse_rational(c.eps.empty() ? "1e-8" : c.eps);
    for (const auto& s : parse_s_list(c)) reports.push_back(verify_eq9_finite(c.m, s, eps, mu));
  } else if (c.subcommand == "verify-eq16") {
    if (c.m < 1) throw UsageError("--m must be >= 1");
    const MobiusTable mu = mobius_sieve(c.m);
    const Rational cutoff = cutoff_or_default(c, c.m);
    for (const auto& s : parse_s_list(c)) {
      if (s.real() > 1.0)
        reports.push_back(verify_eq16(c.m, s, cutoff, mu, c.period_limit));
      else
        reports.push_back(eq16_rhs_bound(c.m, s, cutoff, mu, c.period_limit));
    }
  } else if (c.subcommand == "check-equivalence") {
    if (c.n < 1) throw UsageError("--n must be >= 1");
    if (c.cutoff.empty()) throw UsageError("--cutoff is required");
    const MobiusTable mu = mobius_sieve(c.n);
    reports.push_back(substitution_equivalence_check(c.n, parse_rational(c.cutoff), mu));
  } else if (c.subcommand == "nu") {
    if (!c.t.empty()) {
      const Rational t = parse_rational(c.t);
      const int value = nu_eval(t);
      if (c.format == "json") return {fmt::format("{{\"t\": \"{}\", \"nu\": {}}}\n", to_string(t), value), true};
      return {fmt::format("{}\n", value), true};
    }
    if (c.samples < 1) throw UsageError("nu needs --t or --samples");
    std::mt19937_64 rng(c.seed);
    std::uniform_int_distribution<long> den_dist(1, 1000);
    std::int64_t mismatches = 0;
    for (std::int64_t i = 0; i < c.samples; ++i) {
      const long den = den_dist(rng);
      const long num = std::uniform_int_distribution<long>(0, 100 * den)(rng);
      const Rational t = make_rational(num, den);
      const int floor_parity = nu_eval(t);
      if (Rational(floor_parity) != nu_fractional_form(t) || nu_eval(t + 2) != floor_parity) ++mismatches;
    }
    VerificationReport report;
    report.check_name = "nu_dual_formula";
    report.parameters = {{"samples", std::to_string(c.samples)}, {"seed", std::to_string(c.seed)}};
    report.lhs = static_cast<double>(mismatches);
    report.rhs = 0.0;
    report.abs_error = static_cast<double>(mismatches);
    report.rigorous_bound = 0.0;
    reports.push_back(finalize(std::move(report)));
  } else {
    throw UsageError("unknown subcommand " + c.subcommand);
  }
  return {render_reports(c, reports), exit_code_for(reports) == 0};
}

std::optional<std::filesystem::path> resolve_output(const RunConfig& c) {
  const char* dir = std::getenv(kOutputDirEnv);
  if (c.output_path.empty()) {
    if (!dir || !*dir) return std::nullopt;
    return std::filesystem::path(dir) / (c.subcommand + "." + c.format);
  }
  std::filesystem::path p(c.output_path);
  if (p.is_relative() && dir && *dir) p = std::filesystem::path(dir) / p;
  return p;
}

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--out", c.output_path, "Output file (default: standard output, or $ETACRIT_OUTPUT_DIR/<cmd>.<fmt>)");
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--seed", c.seed, "Seed for randomized sampling");
  sub->add_option("--period-limit", c.period_limit, "Largest period for exact digamma tails")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int exit_code_for(std::span<const VerificationReport> reports) {
  for (const auto& r : reports)
    if (!r.pass) return 1;
  return 0;
}

std::complex<double> parse_complex(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty complex number");
  if (s.back() != 'i') return {parse_component(s, text), 0.0};

  const std::string_view body(s.data(), s.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_component(body, text)};
  return {parse_component(body.substr(0, split), text), parse_component(body.substr(split), text)};
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Exact criterion integrals and identity checks for the eta-function analogue of the Nyman-Beurling criterion"};
  app.require_subcommand(1);

  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate d_n brackets for n = 1..n_max");
  sweep_cmd->add_option("--n-max", c.n_max, "Largest n")->required();
  sweep_cmd->add_option("--cutoff", c.cutoff, "Fixed cutoff X (default max(1000, 10(n+1)))");
  sweep_cmd->add_flag("--no-timing", c.no_timing, "Leave runtime_ms empty for reproducible files");

  auto* thm = app.add_subcommand("verify-thm21", "Truncated Mellin integral of nu against eta(s)");
  thm->add_option("--s", c.s_list, "Points s = a+bi")->delimiter(',');
  thm->add_option("--trunc", c.truncation, "Truncation T (even)");

  auto* lemma = app.add_subcommand("verify-lemma31", "Dilated Mellin integral of nu(theta/x)");
  lemma->add_option("--theta", c.theta, "theta in (0, 1]");
  lemma->add_option("--s", c.s_list, "Points s = a+bi")->delimiter(',');
  lemma->add_option("--eps", c.eps, "Lower truncation (default 1e-10)");

  auto* eq9 = app.add_subcommand("verify-eq9", "Finite-m identity for int_0^{1/2} (1 + f_m(1/x)) x^{s-1} dx");
  eq9->add_option("--m", c.m, "Truncation m")->required();
  eq9->add_option("--s", c.s_list, "Points s = a+bi")->delimiter(',');
  eq9->add_option("--eps", c.eps, "Lower truncation (default 1e-8)");

  auto* eq16 = app.add_subcommand("verify-eq16", "Hoelder bound on the Dirichlet-series remainder");
  eq16->add_option("--m", c.m, "Truncation m")->required();
  eq16->add_option("--s", c.s_list, "Points s = a+bi")->delimiter(',');
  eq16->add_option("--cutoff", c.cutoff, "Cutoff X for the norm bracket (default max(1000, 10(m+1)))");

  auto* equiv = app.add_subcommand("check-equivalence", "Exact x = 1/t substitution check");
  equiv->add_option("--n", c.n, "n")->required();
  equiv->add_option("--cutoff", c.cutoff, "Cutoff X")->required();

  auto* nu_cmd = app.add_subcommand("nu", "Evaluate nu(t), or sample the two formulas for nu against each other");
  nu_cmd->add_option("--t", c.t, "Nonnegative rational t");
  nu_cmd->add_option("--samples", c.samples, "Number of random rationals in [0, 100]");

  for (auto* sub : {sweep_cmd, thm, lemma, eq9, eq16, equiv, nu_cmd}) add_common(sub, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }
  c.subcommand = app.get_subcommands().front()->get_name();

  std::pair<std::string, bool> result;
  try {
    result = execute(c, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (const auto path = resolve_output(c)) {
      std::ofstream file(*path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open output file " + path->string());
      file << result.first;
      file.flush();
      if (!file) throw std::runtime_error("failed writing output file " + path->string());
      err << "wrote " << path->string() << '\n';
    } else {
      out << result.first;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return result.second ? 0 : 1;
}

}  // namespace etacrit
