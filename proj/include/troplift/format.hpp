#pragma once

#include <string>

namespace troplift::detail {

// Appends `coeff * mono` to a sum being built in `out`. `coeff` is the
// printed coefficient; compound coefficients (containing + or -) are
// parenthesized. An empty `mono` means the constant monomial.
inline void append_term(std::string& out, std::string coeff,
                        const std::string& mono) {
  bool compound = coeff.find(" + ") != std::string::npos ||
                  coeff.find(" - ") != std::string::npos;
  bool negative = !compound && !coeff.empty() && coeff.front() == '-';
  if (negative) coeff.erase(0, 1);
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (mono.empty()) {
    out += compound ? "(" + coeff + ")" : coeff;
    return;
  }
  if (coeff == "1") {
    out += mono;
  } else if (compound) {
    out += "(" + coeff + ")*" + mono;
  } else {
    out += coeff + "*" + mono;
  }
}

inline std::string power(const std::string& var, long e) {
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace troplift::detail
