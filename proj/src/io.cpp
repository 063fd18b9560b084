#include "etacrit/io.hpp"

#include <sstream>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

namespace etacrit::io {

namespace {

using nlohmann::ordered_json;

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string optional_field(const std::optional<double>& x) { return x ? format_double(*x) : std::string(); }

std::string params_text(const VerificationReport& r) {
  std::string text;
  for (const auto& [key, value] : r.parameters) {
    if (!text.empty()) text += ';';
    text += key + '=' + value;
  }
  return text;
}

ordered_json row_json(const CriterionRow& row, const SweepWriteOptions& options) {
  ordered_json j;
  j["n"] = row.n;
  j["cutoff"] = to_string(row.cutoff);
  j["main_num"] = row.main.get_num().get_str();
  j["main_den"] = row.main.get_den().get_str();
  j["main_dec"] = to_decimal(row.main);
  j["tail_high"] = row.tail_high;
  j["exact_tail"] = row.exact_tail ? ordered_json(*row.exact_tail) : ordered_json(nullptr);
  j["period"] = row.period ? ordered_json(*row.period) : ordered_json(nullptr);
  j["runtime_ms"] = options.include_timing ? ordered_json(row.runtime_ms) : ordered_json(nullptr);
  return j;
}

ordered_json config_json(const ConfigEcho& config) {
  ordered_json j = ordered_json::object();
  for (const auto& [key, value] : config) j[key] = value;
  return j;
}

}  // namespace

std::string format_double(double x) { return fmt::format("{}", x); }

void write_sweep_csv(std::ostream& out, const std::vector<CriterionRow>& rows, const SweepWriteOptions& options) {
  out << kSweepHeader << '\n';
  for (const CriterionRow& row : rows) {
    out << row.n << ',' << to_string(row.cutoff) << ',' << row.main.get_num().get_str() << ','
        << row.main.get_den().get_str() << ',' << to_decimal(row.main) << ',' << format_double(row.tail_high) << ','
        << optional_field(row.exact_tail) << ',' << (row.period ? std::to_string(*row.period) : std::string()) << ','
        << (options.include_timing ? fmt::format("{:.3f}", row.runtime_ms) : std::string()) << '\n';
  }
}

void write_sweep_json(std::ostream& out, const std::vector<CriterionRow>& rows, const ConfigEcho& config,
                      const SweepWriteOptions& options) {
  ordered_json doc;
  doc["config"] = config_json(config);
  doc["rows"] = ordered_json::array();
  for (const CriterionRow& row : rows) doc["rows"].push_back(row_json(row, options));
  out << doc.dump(2) << '\n';
}

std::vector<SweepRecord> read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSweepHeader) throw std::runtime_error("sweep csv: unexpected header");
  std::vector<SweepRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 9) throw std::runtime_error("sweep csv: expected 9 fields in: " + line);
    SweepRecord rec;
    rec.n = std::stoll(f[0]);
    rec.cutoff = parse_rational(f[1]);
    rec.main = make_rational(BigInt(f[2], 10), BigInt(f[3], 10));
    rec.tail_high = std::stod(f[5]);
    if (!f[6].empty()) rec.exact_tail = std::stod(f[6]);
    if (!f[7].empty()) rec.period = std::stoll(f[7]);
    if (!f[8].empty()) rec.runtime_ms = std::stod(f[8]);
    records.push_back(std::move(rec));
  }
  return records;
}

void write_reports_csv(std::ostream& out, const std::vector<VerificationReport>& reports) {
  out << "check,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_error,rigorous_bound,pass,exact_lhs,exact_rhs\n";
  for (const VerificationReport& r : reports) {
    out << r.check_name << ',' << params_text(r) << ',' << format_double(r.lhs.real()) << ','
        << format_double(r.lhs.imag()) << ',' << format_double(r.rhs.real()) << ',' << format_double(r.rhs.imag())
        << ',' << format_double(r.abs_error) << ',' << format_double(r.rigorous_bound) << ','
        << (r.pass ? "true" : "false") << ',' << r.exact_lhs.value_or("") << ',' << r.exact_rhs.value_or("") << '\n';
  }
}

void write_reports_json(std::ostream& out, const std::vector<VerificationReport>& reports, const ConfigEcho& config) {
  ordered_json doc;
  doc["config"] = config_json(config);
  doc["reports"] = ordered_json::array();
  for (const VerificationReport& r : reports) {
    ordered_json j;
    j["check"] = r.check_name;
    j["parameters"] = ordered_json::object();
    for (const auto& [key, value] : r.parameters) j["parameters"][key] = value;
    j["lhs"] = {r.lhs.real(), r.lhs.imag()};
    j["rhs"] = {r.rhs.real(), r.rhs.imag()};
    j["abs_error"] = r.abs_error;
    j["rigorous_bound"] = r.rigorous_bound;
    j["pass"] = r.pass;
    j["exact_lhs"] = r.exact_lhs ? ordered_json(*r.exact_lhs) : ordered_json(nullptr);
    j["exact_rhs"] = r.exact_rhs ? ordered_json(*r.exact_rhs) : ordered_json(nullptr);
    doc["reports"].push_back(std::move(j));
  }
  out << doc.dump(2) << '\n';
}

}  // namespace etacrit::io
