#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace carter {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;
  bool ok() const;
  nlohmann::json to_json() const;
  /// One "PASS name: detail" / "FAIL name: detail" line per check.
  std::string text() const;
};

/// Totals, component sizes and orbit structure for every member of D4..D9.
SuiteResult verify_table1();
/// Linkage criterion over every ambient; all D-type catalog diagrams when
/// `diagram` is empty.
SuiteResult verify_criterion(const std::optional<std::string>& diagram = std::nullopt);
SuiteResult verify_e8d7();
SuiteResult verify_pairing();
SuiteResult verify_spectrum();
SuiteResult verify_transitions();
SuiteResult verify_reduce_all();

}  // namespace carter
