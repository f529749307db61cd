#include "cli/output.hpp"

#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <istream>
#include <ostream>
#include <sstream>

#include "swapgate/error.hpp"

namespace swapgate::cli {

std::string num(double x) { return fmt::format("{:.17g}", x); }

CsvWriter::CsvWriter(std::ostream& os, std::string_view subcommand, const nlohmann::json& config) : os_(os) {
  os_ << "# swapgate " << subcommand << '\n';
  os_ << "# config: " << config.dump() << '\n';
}

void CsvWriter::comment(std::string_view key, const std::string& value) {
  os_ << "# " << key << ": " << value << '\n';
}

void CsvWriter::header(const std::vector<std::string>& columns) { row(columns); }

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os_ << ',';
    os_ << cells[i];
  }
  os_ << '\n';
}

std::size_t Table::column(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw Error(ErrorCode::InvalidArgument, "input has no column '" + std::string(name) + "'");
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

double to_double(const std::string& s) {
  double x = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  while (first < last && *first == ' ') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, x);
  if (ec != std::errc{} || ptr != last) throw Error(ErrorCode::InvalidArgument, "not a number: '" + s + "'");
  return x;
}

}  // namespace

Table read_csv(std::istream& is) {
  Table t;
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (line.empty() || line.front() == '#') continue;
    if (!have_header) {
      t.columns = split(line, ',');
      have_header = true;
      continue;
    }
    const auto cells = split(line, ',');
    if (cells.size() != t.columns.size()) throw Error(ErrorCode::InvalidArgument, "ragged CSV row");
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) row.push_back(to_double(c));
    t.rows.push_back(std::move(row));
  }
  if (!have_header) throw Error(ErrorCode::InvalidArgument, "input has no header line");
  return t;
}

std::vector<double> Range::values() const {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return v;
}

Range parse_range(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 3) throw Error(ErrorCode::InvalidArgument, "expected a:b:n, got '" + s + "'");
  const double n = to_double(parts[2]);
  if (!(n >= 1.0) || n != std::floor(n)) throw Error(ErrorCode::InvalidArgument, "point count must be a positive integer");
  Range r{to_double(parts[0]), to_double(parts[1]), static_cast<std::size_t>(n)};
  if (!(r.lo <= r.hi)) throw Error(ErrorCode::InvalidArgument, "range needs a <= b");
  return r;
}

std::pair<double, double> parse_window(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 2) throw Error(ErrorCode::InvalidArgument, "expected a:b, got '" + s + "'");
  const double a = to_double(parts[0]), b = to_double(parts[1]);
  if (!(a < b)) throw Error(ErrorCode::InvalidArgument, "window needs a < b");
  return {a, b};
}

}  // namespace swapgate::cli
