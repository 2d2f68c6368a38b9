#include "hcmc/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hcmc {

namespace {

using json = nlohmann::ordered_json;

json to_json(const Fields& fields) {
  json obj = json::object();
  for (const auto& [key, value] : fields)
    std::visit([&, k = key](const auto& v) { obj[k] = v; }, value);
  return obj;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out << text;
  if (!out) throw IoError(path.string(), "write failed");
}

}  // namespace

std::string report_json(const std::vector<CheckReport>& reports) {
  json checks = json::array();
  for (const CheckReport& r : reports) {
    json measured = json::object();
    for (const auto& [k, v] : r.measured) measured[k] = v;
    checks.push_back({{"name", r.name},
                      {"inputs", to_json(r.inputs)},
                      {"measured", measured},
                      {"bound", r.bound},
                      {"tolerance", r.tolerance},
                      {"pass", r.pass},
                      {"resolution", to_json(r.resolution)}});
  }
  json doc = {{"version", 1}, {"checks", checks}};
  return doc.dump(2) + "\n";
}

std::string report_checks_csv(const std::vector<CheckReport>& reports) {
  std::ostringstream out;
  out << "check,measured,bound,pass\n";
  for (const CheckReport& r : reports) {
    const std::string measured = r.primary.empty() ? "" : num(r.value(r.primary));
    out << r.name << ',' << measured << ',' << num(r.bound) << ',' << (r.pass ? "true" : "false")
        << '\n';
  }
  return out.str();
}

std::string report_convergence_csv(const std::vector<CheckReport>& reports) {
  std::ostringstream out;
  out << "series,check,h,value,error\n";
  for (const CheckReport& r : reports)
    for (const SeriesPoint& p : r.series)
      out << p.series << ',' << r.name << ',' << num(p.h) << ',' << num(p.value) << ','
          << num(p.error) << '\n';
  return out.str();
}

void emit_report(const std::vector<CheckReport>& reports, const std::string& dir) {
  const std::filesystem::path root(dir);
  std::error_code ec;
  std::filesystem::create_directories(root, ec);
  if (ec) throw IoError(dir, "cannot create directory: " + ec.message());
  write_file(root / "report.json", report_json(reports));
  write_file(root / "checks.csv", report_checks_csv(reports));
  write_file(root / "convergence.csv", report_convergence_csv(reports));
}

bool all_pass(const std::vector<CheckReport>& reports) {
  for (const CheckReport& r : reports)
    if (!r.pass) return false;
  return true;
}

}  // namespace hcmc
