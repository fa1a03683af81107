#include "torelli/symplectic.hpp"

#include <algorithm>

#include "torelli/format.hpp"

namespace torelli {

std::string to_string(const BasisLabel& label) {
  return (label.is_a() ? "a" : "b") + std::to_string(label.index);
}

namespace {

template <typename Pairing>
Scalar bilinear(const HVec& u, const HVec& v, Pairing pairing) {
  Scalar sum = 0;
  for (const auto& [lu, cu] : u)
    for (const auto& [lv, cv] : v)
      if (int p = pairing(lu, lv); p != 0) sum += p * cu * cv;
  return sum;
}

}  // namespace

Scalar omega(const HVec& u, const HVec& v) {
  return bilinear(u, v, [](BasisLabel x, BasisLabel y) { return omega(x, y); });
}

Scalar omega_bar(const HVec& u, const HVec& v) {
  return bilinear(u, v, [](BasisLabel x, BasisLabel y) { return omega_bar(x, y); });
}

HVec project_lagrangian(const HVec& u, Family family) {
  return u.filter([family](const BasisLabel& l) { return l.family == family; });
}

int max_index(const HVec& u) {
  int m = 0;
  for (const auto& [l, c] : u) m = std::max(m, l.index);
  return m;
}

std::string to_string(const HVec& u) {
  return format_combination(u, [](const BasisLabel& l) { return to_string(l); });
}

}  // namespace torelli
