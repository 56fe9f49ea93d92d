#include "superb/csv.hpp"

#include <cstdio>

namespace superb::csv {

std::string format_value(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return buf;
}

void write_header(std::ostream& os, const std::vector<std::string>& columns) {
  write_row(os, columns);
}

void write_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os << ',';
    os << fields[i];
  }
  os << '\n';
}

}  // namespace superb::csv
