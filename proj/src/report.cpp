#include "polyinv/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <json.hpp>

namespace polyinv {

namespace {

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void Report::finalize() {
  summary.clear();
  failures.clear();
  for (std::size_t i = 0; i < records.size(); ++i) {
    ++summary[records[i].check_id];
    if (!records[i].holds) failures.push_back(i);
  }
}

void write_csv(const Report& report, std::ostream& out) {
  out << "check_id,n,x,k,lhs,mid,rhs,holds,margin\n";
  for (const auto& r : report.records) {
    out << r.check_id << ',';
    if (r.n) out << *r.n;
    out << ',' << fmt17(r.x) << ',';
    if (r.k) out << *r.k;
    out << ',';
    if (r.lhs) out << fmt17(*r.lhs);
    out << ',';
    if (r.mid) out << fmt17(*r.mid);
    out << ',';
    if (r.rhs) out << fmt17(*r.rhs);
    out << ',' << (r.holds ? "true" : "false") << ',' << fmt17(r.margin) << '\n';
  }
}

void write_json(const Report& report, std::ostream& out) {
  nlohmann::json j;
  j["metadata"] = report.metadata;
  j["summary"] = report.summary;
  j["failures"] = report.failures;
  auto& records = j["records"] = nlohmann::json::array();
  for (const auto& r : report.records) {
    nlohmann::json e;
    e["check_id"] = r.check_id;
    e["n"] = r.n ? nlohmann::json(*r.n) : nlohmann::json(nullptr);
    e["x"] = r.x;
    e["k"] = r.k ? nlohmann::json(*r.k) : nlohmann::json(nullptr);
    e["lhs"] = r.lhs ? nlohmann::json(*r.lhs) : nlohmann::json(nullptr);
    e["mid"] = r.mid ? nlohmann::json(*r.mid) : nlohmann::json(nullptr);
    e["rhs"] = r.rhs ? nlohmann::json(*r.rhs) : nlohmann::json(nullptr);
    e["holds"] = r.holds;
    e["margin"] = r.margin;
    records.push_back(std::move(e));
  }
  out << j.dump(2) << '\n';
}

void write_report(const Report& report, const std::string& path, const std::string& format) {
  const bool json = format == "json";
  if (!json && format != "csv")
    throw std::invalid_argument("write_report: format must be 'csv' or 'json'");

  if (path == "-") {
    json ? write_json(report, std::cout) : write_csv(report, std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_report: cannot open '" + path + "'");
  json ? write_json(report, out) : write_csv(report, out);
  if (!out) throw std::runtime_error("write_report: write failed for '" + path + "'");
}

}  // namespace polyinv
