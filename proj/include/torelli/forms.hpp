#pragma once

#include <compare>
#include <string>

#include "torelli/free_vec.hpp"
#include "torelli/symplectic.hpp"
#include "torelli/tree_algebra.hpp"

namespace torelli {

/// Basis element lo*hi of S^2(H), lo <= hi.
struct SymPair {
  BasisLabel lo;
  BasisLabel hi;

  static SymPair of(BasisLabel u, BasisLabel v) { return v < u ? SymPair{v, u} : SymPair{u, v}; }

  friend auto operator<=>(const SymPair&, const SymPair&) = default;
  friend bool operator==(const SymPair&, const SymPair&) = default;
};

using S2HVec = FreeVec<SymPair>;

std::string to_string(const SymPair& p);
std::string to_string(const S2HVec& v);

/// Numbers of A- and B-labels in a tree term; s + t = 4.
struct Bidegree {
  int s = 0;
  int t = 0;

  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

Bidegree bidegree(const WedgePair& p);

/// pi_st: the W(a^s b^t) component. Throws std::invalid_argument unless s + t == 4.
S2L2Vec project_bidegree(const S2L2Vec& v, int s, int t);

/// Lagrangian trace to S^2(B):
///   Tr^A(T(a,c;d,e)) = w(a,e) p_B(d) p_B(c) - w(a,d) p_B(e) p_B(c),
/// applied after moving the first A-label of each term to slot 1 with the
/// tree symmetries. Throws std::invalid_argument on a term without A-labels.
S2HVec trace_A(const S2L2Vec& v);

/// Mirror of trace_A with the roles of A and B exchanged, valued in S^2(A).
S2HVec trace_B(const S2L2Vec& v);

/// Trace of the single basis tree (x1,x2;x3,x4) with the admissible label in
/// `slot` (0..3) moved to the front. Exposed so the choice of slot can be tested.
S2HVec trace_at_slot(Family family, const WedgePair& term, int slot);

/// Membership in W_0(ab^3) = ker Tr^A (family A) or W_0(a^3b) = ker Tr^B
/// (family B). Throws std::invalid_argument on the wrong bidegree.
bool w0_member(const S2L2Vec& v, Family family);

/// C_S((a^b)(c^d)) = wb(a,d) bc - wb(a,c) bd - wb(b,d) ac + wb(b,c) ad.
S2HVec contract_cs(const S2L2Vec& v);

/// eta_S((ab),(cd)) = w(a,c) w(b,d) + w(a,d) w(b,c).
Scalar eta_s(const S2HVec& x, const S2HVec& y);

Scalar upsilon(const S2L2Vec& x, const S2L2Vec& y);

/// Inner product on A_2 induced by w, summed over the Klein four-group on
/// the y-slots and the transposition of the last two x-slots.
Scalar nabla(const S2L2Vec& x, const S2L2Vec& y);

/// nabla on two basis trees, given by their slot labels.
Scalar nabla_trees(const BasisLabel (&x)[4], const BasisLabel (&y)[4]);

Scalar q_form(const S2L2Vec& x, const S2L2Vec& y);
Scalar j_form(const S2L2Vec& x, const S2L2Vec& y);
/// Tree part of the lambda_2 cocycle: 3 J + 3/4 Q.
Scalar b_form(const S2L2Vec& x, const S2L2Vec& y);
/// 36 lam_x lam_y + b_form(x, y).
Scalar cocycle(const Scalar& lam_x, const S2L2Vec& x, const Scalar& lam_y, const S2L2Vec& y);

inline Scalar q_form(const A2Vec& x, const A2Vec& y) { return q_form(x.representative(), y.representative()); }
inline Scalar j_form(const A2Vec& x, const A2Vec& y) { return j_form(x.representative(), y.representative()); }
inline Scalar b_form(const A2Vec& x, const A2Vec& y) { return b_form(x.representative(), y.representative()); }
inline Scalar cocycle(const Scalar& lam_x, const A2Vec& x, const Scalar& lam_y, const A2Vec& y) {
  return cocycle(lam_x, x.representative(), lam_y, y.representative());
}

}  // namespace torelli
