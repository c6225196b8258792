#include <filesystem>
#include <fstream>
#include <sstream>

#include "cck/verify.hpp"

namespace cck {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fact_text(const nlohmann::ordered_json& facts, const char* key) {
  if (!facts.contains(key) || facts[key].is_null()) return "";
  const auto& v = facts[key];
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

std::string table(const std::vector<VerificationRecord>& records, const std::string& suite, const char* last) {
  std::ostringstream out;
  out << "group,order,j,m,exact," << last << "\n";
  for (const auto& r : records) {
    if (r.suite != suite || !r.facts.contains("m")) continue;
    out << csv_field(r.group) << ',' << r.order << ',' << (r.j ? std::to_string(*r.j) : "") << ','
        << fact_text(r.facts, "m") << ',' << fact_text(r.facts, "exact") << ',' << fact_text(r.facts, last)
        << "\n";
  }
  return out.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path.string());
  f << text;
  if (!f) throw Error("write failed for " + path.string());
}

}  // namespace

std::string records_to_json(const std::vector<VerificationRecord>& records) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json o;
    o["group"] = r.group;
    o["order"] = r.order;
    o["suite"] = r.suite;
    o["j"] = r.j ? nlohmann::ordered_json(*r.j) : nlohmann::ordered_json(nullptr);
    o["facts"] = r.facts;
    o["verdict"] = to_string(r.verdict);
    o["reason"] = r.reason;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::string theorem1_csv(const std::vector<VerificationRecord>& records) {
  return table(records, "theorem1", "delta_min");
}

std::string theorem2_csv(const std::vector<VerificationRecord>& records) {
  return table(records, "theorem2", "delta_star_order");
}

void write_reports(const VerifyReport& report, const std::string& dir) {
  const std::filesystem::path root(dir);
  std::filesystem::create_directories(root);
  write_file(root / "report.json", records_to_json(report.records));
  write_file(root / "theorem1.csv", theorem1_csv(report.records));
  write_file(root / "theorem2.csv", theorem2_csv(report.records));
}

}  // namespace cck
