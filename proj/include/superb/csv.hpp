#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace superb::csv {

/// Fixed formatting contract for exported data: 15 significant digits,
/// '.' decimal separator, '\n' line endings. Identical configs produce
/// byte-identical files.
std::string format_value(double x);

void write_header(std::ostream& os, const std::vector<std::string>& columns);
void write_row(std::ostream& os, const std::vector<std::string>& fields);

}  // namespace superb::csv
