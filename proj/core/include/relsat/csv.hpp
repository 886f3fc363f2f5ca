#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

namespace relsat {

/// Shortest round-trip-safe rendering: 17 significant digits.
inline std::string formatReal(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// RFC 4180 field quoting.
inline std::string csvEscape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

/// Writes rows with LF endings. Reals use 17 significant digits.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}

  template <typename... Fields>
  void row(const Fields&... fields) {
    bool first = true;
    ((os_ << (first ? "" : ",") << render(fields), first = false), ...);
    os_ << '\n';
  }

 private:
  template <typename T>
  static std::string render(const T& v) {
    if constexpr (std::is_floating_point_v<T>) {
      return formatReal(static_cast<double>(v));
    } else if constexpr (std::is_integral_v<T>) {
      return std::to_string(v);
    } else {
      return csvEscape(std::string_view(v));
    }
  }

  std::ostream& os_;
};

}  // namespace relsat
