#include "aseopt/table.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace aseopt {

std::string fmt17(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void SweepTable::write_csv(std::ostream& os) const {
  if (!row_status.empty() && row_status.size() != rows.size())
    throw std::invalid_argument("SweepTable: row_status size mismatch");
  for (std::size_t i = 0; i < header.size(); ++i)
    os << (i ? "," : "") << header[i];
  if (!row_status.empty()) os << ",status";
  os << "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      os << (c ? "," : "") << fmt17(rows[r][c]);
    if (!row_status.empty()) os << "," << row_status[r];
    os << "\n";
  }
}

namespace {
std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

bool parse_double(const std::string& s, double& out) {
  if (s == "inf") { out = std::numeric_limits<double>::infinity(); return true; }
  if (s == "-inf") { out = -std::numeric_limits<double>::infinity(); return true; }
  if (s == "nan") { out = std::numeric_limits<double>::quiet_NaN(); return true; }
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end && *end == '\0' && end != s.c_str();
}
}  // namespace

SweepTable SweepTable::read_csv(std::istream& is) {
  SweepTable t;
  std::string line;
  if (!std::getline(is, line))
    throw std::invalid_argument("read_csv: missing header row");
  t.header = split_line(line);
  const bool has_status = !t.header.empty() && t.header.back() == "status";
  if (has_status) t.header.pop_back();

  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells = split_line(line);
    const std::size_t want = t.header.size() + (has_status ? 1 : 0);
    if (cells.size() != want)
      throw std::invalid_argument("read_csv: ragged row");
    std::vector<double> row(t.header.size());
    for (std::size_t c = 0; c < t.header.size(); ++c)
      if (!parse_double(cells[c], row[c]))
        throw std::invalid_argument("read_csv: non-numeric cell '" + cells[c] + "'");
    t.rows.push_back(std::move(row));
    if (has_status) t.row_status.push_back(cells.back());
  }
  return t;
}

}  // namespace aseopt
