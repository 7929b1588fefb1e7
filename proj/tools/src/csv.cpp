#include "fracgreen_cli/csv.hpp"

#include <charconv>
#include <system_error>

namespace fracgreen::cli {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 16);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const std::vector<Row>& rows) {
  out << "arg,value,abs_err\n";
  for (const Row& r : rows) {
    out << format_double(r.arg) << ',' << format_double(r.value) << ',' << format_double(r.abs_err) << '\n';
  }
}

bool parse_double(const std::string& text, double& out) {
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last && first != last;
}

}  // namespace fracgreen::cli
