#pragma once

#include <cstdio>
#include <string>

namespace melodynet {

// All floats in CSV artifacts carry 9 significant digits.
inline std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

// Minimal CSV quoting: wrap when the field contains a comma, quote or
// newline; embedded quotes are doubled.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace melodynet
