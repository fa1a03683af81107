#include "torelli/forms.hpp"

#include <array>
#include <stdexcept>

#include "torelli/format.hpp"

namespace torelli {
namespace {

using Slots = std::array<BasisLabel, 4>;

Slots slots_of(const WedgePair& p) { return {p.first.lo, p.first.hi, p.second.lo, p.second.hi}; }

// The tree symmetries that bring slot k to the front, with their signs.
struct Arrangement {
  std::array<int, 4> order;
  int sign;
};
constexpr std::array<Arrangement, 4> kToFront{{
    {{0, 1, 2, 3}, 1},
    {{1, 0, 2, 3}, -1},
    {{2, 3, 0, 1}, 1},
    {{3, 2, 0, 1}, -1},
}};

S2HVec lagrangian_trace(const S2L2Vec& v, Family family) {
  S2HVec out;
  for (const auto& [term, coeff] : v) {
    const Slots s = slots_of(term);
    int slot = 0;
    while (slot < 4 && s[slot].family != family) ++slot;
    if (slot == 4)
      throw std::invalid_argument(std::string("trace_") + (family == Family::A ? "A" : "B") +
                                  " undefined on " + to_string(term));
    out.add_scaled(trace_at_slot(family, term, slot), coeff);
  }
  return out;
}

}  // namespace

std::string to_string(const SymPair& p) { return to_string(p.lo) + to_string(p.hi); }

std::string to_string(const S2HVec& v) {
  return format_combination(v, [](const SymPair& p) { return to_string(p); });
}

Bidegree bidegree(const WedgePair& p) { return {p.count(Family::A), p.count(Family::B)}; }

S2L2Vec project_bidegree(const S2L2Vec& v, int s, int t) {
  if (s < 0 || t < 0 || s + t != 4)
    throw std::invalid_argument("invalid bidegree (" + std::to_string(s) + "," + std::to_string(t) + ")");
  return v.filter([s](const WedgePair& p) { return p.count(Family::A) == s; });
}

S2HVec trace_at_slot(Family family, const WedgePair& term, int slot) {
  const Slots s = slots_of(term);
  if (slot < 0 || slot > 3 || s[slot].family != family)
    throw std::invalid_argument("slot does not hold a label of the traced family");
  const Arrangement& arr = kToFront[slot];
  const BasisLabel head = s[arr.order[0]];
  const BasisLabel c = s[arr.order[1]];
  const BasisLabel d = s[arr.order[2]];
  const BasisLabel e = s[arr.order[3]];
  const Family other = family == Family::A ? Family::B : Family::A;

  S2HVec out;
  if (c.family != other) return out;  // p(c) = 0 kills both terms
  if (d.family == other) out.add_term(SymPair::of(d, c), Scalar(arr.sign * omega(head, e)));
  if (e.family == other) out.add_term(SymPair::of(e, c), Scalar(-arr.sign * omega(head, d)));
  return out;
}

S2HVec trace_A(const S2L2Vec& v) { return lagrangian_trace(v, Family::A); }

S2HVec trace_B(const S2L2Vec& v) { return lagrangian_trace(v, Family::B); }

bool w0_member(const S2L2Vec& v, Family family) {
  const Bidegree want = family == Family::A ? Bidegree{1, 3} : Bidegree{3, 1};
  for (const auto& [term, coeff] : v)
    if (bidegree(term) != want)
      throw std::invalid_argument("w0_member: " + to_string(term) + " has the wrong bidegree");
  return (family == Family::A ? trace_A(v) : trace_B(v)).is_zero();
}

S2HVec contract_cs(const S2L2Vec& v) {
  S2HVec out;
  for (const auto& [term, coeff] : v) {
    const BasisLabel a = term.first.lo, b = term.first.hi, c = term.second.lo, d = term.second.hi;
    if (int w = omega_bar(a, d)) out.add_term(SymPair::of(b, c), w * coeff);
    if (int w = omega_bar(a, c)) out.add_term(SymPair::of(b, d), -w * coeff);
    if (int w = omega_bar(b, d)) out.add_term(SymPair::of(a, c), -w * coeff);
    if (int w = omega_bar(b, c)) out.add_term(SymPair::of(a, d), w * coeff);
  }
  return out;
}

Scalar eta_s(const S2HVec& x, const S2HVec& y) {
  Scalar sum = 0;
  for (const auto& [p, cp] : x)
    for (const auto& [q, cq] : y) {
      const int v = omega(p.lo, q.lo) * omega(p.hi, q.hi) + omega(p.lo, q.hi) * omega(p.hi, q.lo);
      if (v != 0) sum += v * cp * cq;
    }
  return sum;
}

Scalar upsilon(const S2L2Vec& x, const S2L2Vec& y) { return eta_s(contract_cs(x), contract_cs(y)); }

Scalar nabla_trees(const BasisLabel (&x)[4], const BasisLabel (&y)[4]) {
  static constexpr std::array<std::array<int, 4>, 4> klein{{
      {0, 1, 2, 3},
      {1, 0, 3, 2},
      {2, 3, 0, 1},
      {3, 2, 1, 0},
  }};
  // Twice the value, so the half-weighted terms stay integral.
  int twice = 0;
  for (const auto& sigma : klein)
    for (int tau = 0; tau < 2; ++tau) {
      const int sgn_tau = tau == 0 ? 1 : -1;
      const BasisLabel x3 = tau == 0 ? x[2] : x[3];
      const BasisLabel x4 = tau == 0 ? x[3] : x[2];
      const BasisLabel y1 = y[sigma[0]], y2 = y[sigma[1]], y3 = y[sigma[2]], y4 = y[sigma[3]];
      const int w1 = omega(x[0], y1);
      if (w1 == 0) continue;
      twice += sgn_tau * w1 *
               (2 * omega(x[1], y2) * omega(x3, y3) * omega(x4, y4) -
                omega(x[1], y3) * omega(x3, y4) * omega(x4, y2) +
                omega(x[1], y4) * omega(x3, y3) * omega(x4, y2));
    }
  return make_scalar(twice, 2);
}

Scalar nabla(const S2L2Vec& x, const S2L2Vec& y) {
  Scalar sum = 0;
  for (const auto& [p, cp] : x) {
    const BasisLabel xs[4] = {p.first.lo, p.first.hi, p.second.lo, p.second.hi};
    for (const auto& [q, cq] : y) {
      const BasisLabel ys[4] = {q.first.lo, q.first.hi, q.second.lo, q.second.hi};
      const Scalar v = nabla_trees(xs, ys);
      if (sgn(v) != 0) sum += v * cp * cq;
    }
  }
  return sum;
}

Scalar q_form(const S2L2Vec& x, const S2L2Vec& y) {
  return upsilon(project_bidegree(x, 1, 3), project_bidegree(y, 3, 1));
}

Scalar j_form(const S2L2Vec& x, const S2L2Vec& y) {
  return nabla(project_bidegree(x, 0, 4), project_bidegree(y, 4, 0));
}

Scalar b_form(const S2L2Vec& x, const S2L2Vec& y) {
  return 3 * j_form(x, y) + make_scalar(3, 4) * q_form(x, y);
}

Scalar cocycle(const Scalar& lam_x, const S2L2Vec& x, const Scalar& lam_y, const S2L2Vec& y) {
  return 36 * lam_x * lam_y + b_form(x, y);
}

}  // namespace torelli
