#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torelli/scalar.hpp"
#include "torelli/symplectic.hpp"

namespace torelli {

/// Integer Laurent polynomial, exponent -> nonzero coefficient.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::initializer_list<std::pair<int, long>> terms);

  void add_term(int exponent, const Integer& coeff);
  Integer coeff(int exponent) const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Integer>& terms() const { return terms_; }

  Integer evaluate_at_one() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<int, Integer> terms_;
};

/// Printed in the variable `var`, highest degree first: "-t^4 + t^3 + t".
std::string to_string(const LaurentPoly& p, char var);

struct KnotRecord {
  std::string name;
  LaurentPoly conway;  // in z
  LaurentPoly jones;   // in t
  /// Homology classes of a symplectic basis of the genus-1 surface the knot bounds.
  std::optional<std::pair<HVec, HVec>> bscc_basis;
};

/// Right-handed trefoil: z^2 + 1, t + t^3 - t^4, basis (a1 + b1, a2 - b1 + b2).
const KnotRecord& trefoil();
/// Figure-eight: 1 - z^2, t^2 - t + 1 - t^-1 + t^-2, basis (a1 + b1, a2 + b1 - b2).
const KnotRecord& figure_eight();
/// Looks up "trefoil" or "figure-eight"; nullptr otherwise.
const KnotRecord* builtin_knot(const std::string& name);

Integer conway_coefficient(const LaurentPoly& p, int k);

/// i-th derivative of V(e^{-h}) at h = 0, i.e. sum_n c_n (-n)^i.
Integer jones_h_derivative(const LaurentPoly& p, int i);

/// Casson invariant of 1/n surgery: -n/6 v_2.
Scalar casson_surgery(const KnotRecord& k, long n);

/// lambda_2 of 1/n surgery: n/2 v_2 - n/3 v_3 + n^2 (v_2 + 5/3 v_2^2 - 60 c_4).
Scalar lambda2_surgery(const KnotRecord& k, long n);

struct SphereInvariants {
  Scalar lambda;
  Scalar lambda2;

  bool is_integral() const { return is_integer(lambda) && is_integer(lambda2); }
  friend bool operator==(const SphereInvariants&, const SphereInvariants&) = default;
};

/// lambda = 1, lambda_2 = 39.
SphereInvariants poincare_sphere();

SphereInvariants surgery_invariants(const KnotRecord& k, long n);

SphereInvariants connected_sum(const SphereInvariants& m1, const SphereInvariants& m2);
SphereInvariants reverse_orientation(const SphereInvariants& m);

/// lambda_2 - 18 lambda^2.
Scalar d2_value(const SphereInvariants& m);
/// lambda_2 + 3 lambda - 18 lambda^2.
Scalar vanishing_combo(const SphereInvariants& m);

struct AlphaR {
  Scalar alpha;
  Scalar r;
};

/// Fits lambda_2 = r lambda + alpha lambda^2 against the connected-sum and
/// orientation-reversal rules and solves the resulting 2x2 system.
AlphaR solve_alpha_r();

/// One equation j * r1 + q * r2 = b of the cocycle system.
struct CocycleEquation {
  std::string knot;
  Scalar j;
  Scalar q;
  Scalar b;
};

struct CocycleCoefficients {
  std::vector<CocycleEquation> equations;
  Scalar r1;  // coefficient of J
  Scalar r2;  // coefficient of Q
};

/// Surgery-side B values of the two built-in knots,
///   lambda_2(T^2) - 2 lambda_2(T) - 36 lambda(T)^2,
/// equated with r1 J + r2 Q on their tau_2 images and solved exactly.
/// Throws std::invalid_argument for genus < 5, std::logic_error if singular.
CocycleCoefficients cocycle_coefficients(int genus);

/// Surgery-side B value of one knot (needs no tree data).
Scalar surgery_b_value(const KnotRecord& k);

}  // namespace torelli
