#pragma once

#include <string>
#include <vector>

namespace finq {

// 17 significant digits, '.' decimal point, no separators; round-trips
// doubles exactly and keeps emitted files byte-stable.
std::string format_double(double v);

std::string csv_row(const std::vector<std::string>& cells);

} // namespace finq
