#pragma once

// Command-line front end. Commands: bounds, spectrum, table, verify, lp.
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource guard.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "altbounds/bounds.hpp"
#include "altbounds/spectra.hpp"

namespace altbounds::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct TableRequest {
  std::vector<long> qs;
  int n_min = 4;
  int n_max = 4;
  std::optional<std::pair<int, int>> d_range;  // nullopt means every valid d
  std::vector<std::string> bounds;             // empty means all
  bool json = false;
};

// Rows in (q, n, d) order; invalid cells are skipped and logged to err.
std::vector<BoundReport> evaluate_table(const TableRequest& req, std::ostream& err);

std::string render_report_text(const BoundReport& rep);
nlohmann::json report_json(const BoundReport& rep);
nlohmann::json spectrum_json(const SpectrumTable& st, const IntersectionArray& ia);
std::string render_csv(const std::vector<BoundReport>& rows, const std::vector<std::string>& bounds);
nlohmann::json table_json(const std::vector<BoundReport>& rows, const std::vector<std::string>& bounds);

// RFC 4180 field quoting
std::string csv_field(const std::string& s);

}  // namespace altbounds::cli
