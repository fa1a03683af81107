#include "torelli/surgery.hpp"

#include <stdexcept>

#include "torelli/forms.hpp"
#include "torelli/linear.hpp"
#include "torelli/tree_algebra.hpp"

namespace torelli {

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<int, long>> terms) {
  for (const auto& [e, c] : terms) add_term(e, Integer(c));
}

void LaurentPoly::add_term(int exponent, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer LaurentPoly::evaluate_at_one() const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

std::string to_string(const LaurentPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const Integer mag = abs(c);
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (e == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str();
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
    first = false;
  }
  return out;
}

const KnotRecord& trefoil() {
  static const KnotRecord k{
      "trefoil",
      {{0, 1}, {2, 1}},
      {{1, 1}, {3, 1}, {4, -1}},
      std::pair{hvec(BasisLabel::a(1)) + hvec(BasisLabel::b(1)),
                hvec(BasisLabel::a(2)) - hvec(BasisLabel::b(1)) + hvec(BasisLabel::b(2))}};
  return k;
}

const KnotRecord& figure_eight() {
  static const KnotRecord k{
      "figure-eight",
      {{0, 1}, {2, -1}},
      {{2, 1}, {1, -1}, {0, 1}, {-1, -1}, {-2, 1}},
      std::pair{hvec(BasisLabel::a(1)) + hvec(BasisLabel::b(1)),
                hvec(BasisLabel::a(2)) + hvec(BasisLabel::b(1)) - hvec(BasisLabel::b(2))}};
  return k;
}

const KnotRecord* builtin_knot(const std::string& name) {
  if (name == "trefoil") return &trefoil();
  if (name == "figure-eight" || name == "figure_eight") return &figure_eight();
  return nullptr;
}

Integer conway_coefficient(const LaurentPoly& p, int k) { return p.coeff(k); }

Integer jones_h_derivative(const LaurentPoly& p, int i) {
  if (i < 0) throw std::invalid_argument("derivative order must be nonnegative");
  Integer sum = 0;
  for (const auto& [n, c] : p.terms()) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), Integer(-n).get_mpz_t(), static_cast<unsigned long>(i));
    sum += c * power;
  }
  return sum;
}

Scalar casson_surgery(const KnotRecord& k, long n) {
  return Scalar(-n) / 6 * Scalar(jones_h_derivative(k.jones, 2));
}

Scalar lambda2_surgery(const KnotRecord& k, long n) {
  const Scalar v2(jones_h_derivative(k.jones, 2));
  const Scalar v3(jones_h_derivative(k.jones, 3));
  const Scalar c4(conway_coefficient(k.conway, 4));
  const Scalar nn(n);
  return nn / 2 * v2 - nn / 3 * v3 + nn * nn * (v2 + make_scalar(5, 3) * v2 * v2 - 60 * c4);
}

SphereInvariants poincare_sphere() { return {Scalar(1), Scalar(39)}; }

SphereInvariants surgery_invariants(const KnotRecord& k, long n) {
  return {casson_surgery(k, n), lambda2_surgery(k, n)};
}

SphereInvariants connected_sum(const SphereInvariants& m1, const SphereInvariants& m2) {
  return {m1.lambda + m2.lambda, m1.lambda2 + m2.lambda2 + 36 * m1.lambda * m2.lambda};
}

SphereInvariants reverse_orientation(const SphereInvariants& m) {
  return {-m.lambda, m.lambda2 + 6 * m.lambda};
}

Scalar d2_value(const SphereInvariants& m) { return m.lambda2 - 18 * m.lambda * m.lambda; }

Scalar vanishing_combo(const SphereInvariants& m) { return d2_value(m) + 3 * m.lambda; }

namespace {

// lambda_2 under the ansatz r lambda + alpha lambda^2, as an affine form in (r, alpha).
struct AnsatzForm {
  Scalar r, alpha, constant;

  static AnsatzForm at(const Scalar& lambda) { return {lambda, lambda * lambda, Scalar(0)}; }

  AnsatzForm operator+(const AnsatzForm& o) const { return {r + o.r, alpha + o.alpha, constant + o.constant}; }
  AnsatzForm operator-(const AnsatzForm& o) const { return {r - o.r, alpha - o.alpha, constant - o.constant}; }
  AnsatzForm plus(const Scalar& c) const { return {r, alpha, constant + c}; }
};

// The rules are applied to symbolic lambda_2 values of the form above.
struct SymbolicSphere {
  Scalar lambda;
  AnsatzForm lambda2;
};

SymbolicSphere symbolic_sum(const SymbolicSphere& m1, const SymbolicSphere& m2) {
  return {m1.lambda + m2.lambda, (m1.lambda2 + m2.lambda2).plus(36 * m1.lambda * m2.lambda)};
}

SymbolicSphere symbolic_reverse(const SymbolicSphere& m) { return {-m.lambda, m.lambda2.plus(6 * m.lambda)}; }

}  // namespace

AlphaR solve_alpha_r() {
  const Scalar lam(1);
  const SymbolicSphere f{lam, AnsatzForm::at(lam)};

  // The sphere of f # f satisfies the ansatz at 2 lambda(f).
  const SymbolicSphere sum = symbolic_sum(f, f);
  const AnsatzForm eq1 = AnsatzForm::at(sum.lambda) - sum.lambda2;

  // The reversed sphere satisfies it at -lambda(f).
  const SymbolicSphere rev = symbolic_reverse(f);
  const AnsatzForm eq2 = AnsatzForm::at(rev.lambda) - rev.lambda2;

  // eq.r * r + eq.alpha * alpha + eq.constant = 0, unknowns ordered (alpha, r).
  const Matrix m{{eq1.alpha, eq1.r}, {eq2.alpha, eq2.r}};
  const std::vector<Scalar> rhs{-eq1.constant, -eq2.constant};
  const auto x = solve_linear(m, rhs);
  return {x[0], x[1]};
}

Scalar surgery_b_value(const KnotRecord& k) {
  const Scalar lam = casson_surgery(k, 1);
  return lambda2_surgery(k, 2) - 2 * lambda2_surgery(k, 1) - 36 * lam * lam;
}

CocycleCoefficients cocycle_coefficients(int genus) {
  if (genus < 5) throw std::invalid_argument("cocycle coefficients need genus >= 5");
  CocycleCoefficients out;
  Matrix m;
  std::vector<Scalar> rhs;
  for (const KnotRecord* k : {&trefoil(), &figure_eight()}) {
    if (!k->bscc_basis) throw std::logic_error("knot without surface data: " + k->name);
    const A2Vec t = tau2_bscc_twist(k->bscc_basis->first, k->bscc_basis->second, genus);
    CocycleEquation eq{k->name, j_form(t, t), q_form(t, t), surgery_b_value(*k)};
    m.push_back({eq.j, eq.q});
    rhs.push_back(eq.b);
    out.equations.push_back(std::move(eq));
  }
  try {
    const auto x = solve_linear(m, rhs);
    out.r1 = x[0];
    out.r2 = x[1];
  } catch (const LinearSystemError& e) {
    throw std::logic_error(std::string("cocycle system is singular: ") + e.what());
  }
  return out;
}

}  // namespace torelli
