#include "fibcong/report.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fibcong::report {

using nlohmann::json;
using verify::CheckResult;
using verify::Status;
using verify::SweepReport;

Format format_from_string(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format: " + name + " (expected text, json or csv)");
}

namespace {

constexpr std::string_view kSchemaVersion = "1";

// "47" with modulus "49" gets the signed twin "-2" appended for display.
std::string with_signed_twin(const std::string& value, const std::string& modulus) {
  std::uint64_t m = 0, v = 0;
  auto [mp, merr] = std::from_chars(modulus.data(), modulus.data() + modulus.size(), m);
  auto [vp, verr] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (merr != std::errc{} || verr != std::errc{} ||
      mp != modulus.data() + modulus.size() || vp != value.data() + value.size() ||
      m == 0 || v >= m) {
    return value;
  }
  if (2 * v <= m) return value;
  return value + " (" + std::to_string(static_cast<std::int64_t>(v) - static_cast<std::int64_t>(m)) + ")";
}

std::string emit_text(const SweepReport& report) {
  std::ostringstream os;
  os << "check      param          status  lhs                   rhs                   modulus\n";
  for (const auto& r : report.results) {
    std::string param = verify::param_to_string(r.id, r.param);
    os << std::left << std::setw(10) << verify::to_string(r.id) << " "
       << std::setw(14) << param << " "
       << std::setw(7) << verify::to_string(r.status) << " "
       << std::setw(21) << with_signed_twin(r.lhs, r.modulus) << " "
       << std::setw(21) << with_signed_twin(r.rhs, r.modulus) << " "
       << r.modulus << "\n";
  }
  os << "summary: " << report.pass << " pass, " << report.fail << " fail, "
     << report.skip << " skip (" << report.results.size() << " results, range ["
     << report.lo << ", " << report.hi << "])\n";
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string emit_csv(const SweepReport& report) {
  std::ostringstream os;
  os << "id,param,status,lhs,rhs,modulus\n";
  for (const auto& r : report.results) {
    os << verify::to_string(r.id) << ","
       << csv_field(verify::param_to_string(r.id, r.param)) << ","
       << verify::to_string(r.status) << ","
       << csv_field(r.lhs) << "," << csv_field(r.rhs) << ","
       << csv_field(r.modulus) << "\n";
  }
  return os.str();
}

std::string emit_json(const SweepReport& report) {
  json checks = json::array();
  for (const auto& r : report.results) {
    checks.push_back(json{{"id", std::string(verify::to_string(r.id))},
                          {"param", verify::param_to_string(r.id, r.param)},
                          {"status", std::string(verify::to_string(r.status))},
                          {"lhs", r.lhs},
                          {"rhs", r.rhs},
                          {"modulus", r.modulus}});
  }
  json doc{{"version", std::string(kSchemaVersion)},
           {"range", json{{"lo", std::to_string(report.lo)},
                          {"hi", std::to_string(report.hi)}}},
           {"checks", std::move(checks)},
           {"summary", json{{"pass", report.pass},
                            {"fail", report.fail},
                            {"skip", report.skip},
                            {"total", report.results.size()}}}};
  return doc.dump(2) + "\n";
}

verify::Param parse_param(verify::CheckId id, const std::string& text) {
  verify::Param param;
  auto kind = verify::param_kind(id);
  if (kind == verify::ParamKind::Prime || kind == verify::ParamKind::Index) {
    param.first = std::stoll(text);
    return param;
  }
  auto comma = text.find(',');
  auto eq1 = text.find('=');
  auto eq2 = text.find('=', comma);
  if (comma == std::string::npos || eq1 == std::string::npos ||
      eq2 == std::string::npos) {
    throw std::invalid_argument("bad pair parameter: " + text);
  }
  param.first = std::stoll(text.substr(eq1 + 1, comma - eq1 - 1));
  param.second = std::stoll(text.substr(eq2 + 1));
  return param;
}

}  // namespace

std::string emit(const SweepReport& report, Format format) {
  switch (format) {
    case Format::Text: return emit_text(report);
    case Format::Json: return emit_json(report);
    case Format::Csv: return emit_csv(report);
  }
  throw std::logic_error("emit: bad format");
}

SweepReport parse_json(const std::string& text) {
  json doc = json::parse(text);
  if (doc.at("version").get<std::string>() != kSchemaVersion) {
    throw std::invalid_argument("unsupported report version");
  }
  SweepReport report;
  report.lo = std::stoll(doc.at("range").at("lo").get<std::string>());
  report.hi = std::stoll(doc.at("range").at("hi").get<std::string>());
  for (const auto& entry : doc.at("checks")) {
    CheckResult r;
    auto id = verify::check_id_from_string(entry.at("id").get<std::string>());
    if (!id) throw std::invalid_argument("unknown check id in report");
    r.id = *id;
    r.param = parse_param(r.id, entry.at("param").get<std::string>());
    std::string status = entry.at("status").get<std::string>();
    if (status == "PASS") r.status = Status::Pass;
    else if (status == "FAIL") r.status = Status::Fail;
    else if (status == "SKIP") r.status = Status::Skip;
    else throw std::invalid_argument("unknown status in report");
    r.lhs = entry.at("lhs").get<std::string>();
    r.rhs = entry.at("rhs").get<std::string>();
    r.modulus = entry.at("modulus").get<std::string>();
    report.results.push_back(std::move(r));
  }
  report.pass = doc.at("summary").at("pass").get<std::size_t>();
  report.fail = doc.at("summary").at("fail").get<std::size_t>();
  report.skip = doc.at("summary").at("skip").get<std::size_t>();
  return report;
}

}  // namespace fibcong::report
