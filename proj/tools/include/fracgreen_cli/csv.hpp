#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fracgreen::cli {

/// Shortest-independent, locale-free decimal with 17 significant digits.
std::string format_double(double v);

struct Row {
  double arg;
  double value;
  double abs_err;
};

/// Header `arg,value,abs_err` followed by one line per row, '\n' terminated.
void write_csv(std::ostream& out, const std::vector<Row>& rows);

/// Parses a whole string as a double (no locale, no trailing junk).
bool parse_double(const std::string& text, double& out);

}  // namespace fracgreen::cli
