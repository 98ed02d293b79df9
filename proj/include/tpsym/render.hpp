#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "tpsym/perm_engine.hpp"
#include "tpsym/spectral.hpp"

namespace tpsym {

/// 12 significant digits, '.' decimal separator.
inline std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

/// Parenthesized cycle notation over basis labels: "((0),(1,2,4,3),(5))".
inline std::string cycles_to_string(const std::vector<std::vector<label_t>>& cycles) {
  std::string out = "(";
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    if (c) out += ",";
    out += "(";
    for (std::size_t i = 0; i < cycles[c].size(); ++i) {
      if (i) out += ",";
      out += std::to_string(cycles[c][i]);
    }
    out += ")";
  }
  out += ")";
  return out;
}

inline std::string dims_csv(const Dims& d) {
  std::string out;
  for (int r = 0; r < d.size(); ++r) {
    if (r) out += ",";
    out += std::to_string(d[r]);
  }
  return out;
}

/// "[2,2,3]"
inline std::string dims_bracket(const Dims& d) {
  return "[" + dims_csv(d) + "]";
}

}  // namespace tpsym
