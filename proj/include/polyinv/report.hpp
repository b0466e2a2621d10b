#ifndef POLYINV_REPORT_HPP
#define POLYINV_REPORT_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace polyinv {

// One verified predicate at one sweep point. For chain checks holds means
// lhs < mid < rhs (strict) and margin is the minimum slack; one-sided and
// threshold checks leave the unused fields empty and document their margin
// in the check's description.
struct VerificationRecord {
  std::string check_id;
  std::optional<int> n;
  double x = 0.0;  // the sweep coordinate (x, y, t or u, depending on check)
  std::optional<long> k;
  std::optional<double> lhs;
  std::optional<double> mid;
  std::optional<double> rhs;
  bool holds = false;
  double margin = 0.0;
};

struct Report {
  std::vector<VerificationRecord> records;   // deterministic input order
  std::map<std::string, long> summary;       // records per check_id
  std::vector<std::size_t> failures;         // indices of records with !holds
  std::map<std::string, std::string> metadata;  // version, grids, tolerances

  bool all_hold() const { return failures.empty(); }
  // Recomputes summary/failures from records (call after filling records).
  void finalize();
};

// CSV with the fixed header check_id,n,x,k,lhs,mid,rhs,holds,margin; empty
// fields for unused dimensions; 17 significant digits.
void write_csv(const Report& report, std::ostream& out);

// JSON object mirroring the field names above, plus metadata/summary/failures.
void write_json(const Report& report, std::ostream& out);

// Writes to a file path, or to stdout when path is "-". format: "csv"|"json".
void write_report(const Report& report, const std::string& path, const std::string& format);

}  // namespace polyinv

#endif  // POLYINV_REPORT_HPP
