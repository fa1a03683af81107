#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "torelli/free_vec.hpp"
#include "torelli/scalar.hpp"

namespace torelli {

enum class Family : std::uint8_t { A = 0, B = 1 };

/// One of the symplectic basis classes a_i, b_i of H.
///
/// Ordered a1 < b1 < a2 < b2 < ...; every sorting sign in the library is
/// taken with respect to this order.
struct BasisLabel {
  Family family = Family::A;
  int index = 1;

  static constexpr BasisLabel a(int i) { return {Family::A, i}; }
  static constexpr BasisLabel b(int i) { return {Family::B, i}; }

  constexpr bool is_a() const { return family == Family::A; }
  constexpr bool is_b() const { return family == Family::B; }

  friend constexpr std::strong_ordering operator<=>(const BasisLabel& l, const BasisLabel& r) {
    if (auto c = l.index <=> r.index; c != 0) return c;
    return l.family <=> r.family;
  }
  friend constexpr bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

std::string to_string(const BasisLabel& label);

/// Element of H_Q = A + B.
using HVec = FreeVec<BasisLabel>;

inline HVec hvec(BasisLabel label) { return HVec::basis(label); }

/// Intersection form on basis labels: w(a_i, b_i) = 1 = -w(b_i, a_i), all else 0.
constexpr int omega(BasisLabel u, BasisLabel v) {
  if (u.index != v.index || u.family == v.family) return 0;
  return u.is_a() ? 1 : -1;
}

/// Symmetric A-B pairing with block matrix (0 Id; Id 0).
constexpr int omega_bar(BasisLabel u, BasisLabel v) {
  return (u.index == v.index && u.family != v.family) ? 1 : 0;
}

Scalar omega(const HVec& u, const HVec& v);
Scalar omega_bar(const HVec& u, const HVec& v);

/// Projection onto the Lagrangian `family`, parallel to the other one.
HVec project_lagrangian(const HVec& u, Family family);

/// Largest index occurring in u, 0 for the zero vector.
int max_index(const HVec& u);

/// Canonical text form, e.g. "a2 - b1 + b2", "3/2*a1", "0".
std::string to_string(const HVec& u);

}  // namespace torelli
