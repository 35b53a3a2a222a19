#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aseopt {

// shortest representation that round-trips a double exactly; inf -> "inf"
std::string fmt17(double v);

// rectangular numeric table with an optional trailing status column;
// CSV uses '.' decimals, a mandatory header, "inf" for divergent delay,
// and a newline after the last row
struct SweepTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> row_status;  // empty, or one entry per row

  void write_csv(std::ostream& os) const;
  static SweepTable read_csv(std::istream& is);
};

}  // namespace aseopt
