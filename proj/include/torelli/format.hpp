#pragma once

#include <string>

#include "torelli/free_vec.hpp"

namespace torelli {

/// Renders a linear combination as "x - 2*y + 3/4*z" (or "0"), keys in order.
template <typename Key, typename KeyPrinter>
std::string format_combination(const FreeVec<Key>& v, KeyPrinter&& print_key) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, coeff] : v) {
    const Scalar mag = abs(coeff);
    if (first) {
      if (sgn(coeff) < 0) out += "-";
    } else {
      out += sgn(coeff) < 0 ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += print_key(key);
    first = false;
  }
  return out;
}

}  // namespace torelli
