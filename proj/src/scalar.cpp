#include "torelli/scalar.hpp"

#include <stdexcept>

namespace torelli {

Scalar make_scalar(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  Scalar value(numerator, denominator);
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  auto valid = [](std::string_view part) {
    if (!part.empty() && (part.front() == '-' || part.front() == '+')) part.remove_prefix(1);
    if (part.empty()) return false;
    for (char c : part)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("not a rational literal: " + s);
  if (num.front() == '+') num.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Scalar value(n, d);
  value.canonicalize();
  return value;
}

}  // namespace torelli
