#pragma once

#include <charconv>
#include <cmath>
#include <string>

#include <json.hpp>

namespace solvable::fmt {

/// printf("%.12g") without locale dependence.
inline std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

/// JSON value rounded to 12 significant digits; non-finite values become strings.
inline nlohmann::json json_num(double v) {
  if (!std::isfinite(v)) return num(v);
  const std::string s = num(v);
  double back = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), back);
  return back;
}

}  // namespace solvable::fmt
