#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace swapgate::cli {

/// Round-trip exact decimal form.
std::string num(double x);

/// Comma-separated rows under a '#' metadata header.
class CsvWriter {
 public:
  CsvWriter(std::ostream& os, std::string_view subcommand, const nlohmann::json& config);

  void comment(std::string_view key, const std::string& value);
  void header(const std::vector<std::string>& columns);
  void row(const std::vector<std::string>& cells);

 private:
  std::ostream& os_;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Index of `name` in columns; throws InvalidArgument when absent.
  std::size_t column(std::string_view name) const;
};

/// Reads a CsvWriter file back: '#' lines skipped, first remaining line is
/// the header.
Table read_csv(std::istream& is);

struct Range {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t n = 0;

  std::vector<double> values() const;
};

/// "a:b:n" with n >= 1.
Range parse_range(const std::string& s);

/// "a:b" with a < b.
std::pair<double, double> parse_window(const std::string& s);

}  // namespace swapgate::cli
