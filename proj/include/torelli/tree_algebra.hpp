#pragma once

#include <compare>
#include <string>

#include "torelli/free_vec.hpp"
#include "torelli/gl_action.hpp"
#include "torelli/linear.hpp"
#include "torelli/symplectic.hpp"

namespace torelli {

inline constexpr int kDefaultGenus = 5;

/// Basis two-form lo ^ hi with lo < hi.
struct Wedge {
  BasisLabel lo;
  BasisLabel hi;

  friend auto operator<=>(const Wedge&, const Wedge&) = default;
  friend bool operator==(const Wedge&, const Wedge&) = default;
};

/// Basis element (first)(second) of S^2(Lambda^2 H), first <= second.
struct WedgePair {
  Wedge first;
  Wedge second;

  int count(Family family) const;

  friend auto operator<=>(const WedgePair&, const WedgePair&) = default;
  friend bool operator==(const WedgePair&, const WedgePair&) = default;
};

using S2L2Vec = FreeVec<WedgePair>;

/// H-shaped tree with legs (x1, x2) and (x3, x4).
struct HTree {
  HVec x1, x2, x3, x4;
};

/// (u ^ v)(w ^ z) on basis labels as a signed single term (zero on repeats).
S2L2Vec tree_term(BasisLabel u, BasisLabel v, BasisLabel w, BasisLabel z);

/// Multilinear expansion of (x1 ^ x2)(x3 ^ x4).
S2L2Vec tree_expand(const HTree& t);

/// (w^x)(y^z) - (w^y)(x^z) + (w^z)(x^y), alternating in its four arguments.
S2L2Vec lambda4_embed(const HVec& w, const HVec& x, const HVec& y, const HVec& z);

int max_index(const S2L2Vec& v);

/// Diagonal GL_g(Z) action on S^2(Lambda^2 H).
S2L2Vec gl_generator_action(const GLGenerator& gen, const S2L2Vec& v);

/// Terms printed as trees, e.g. "2*T(a1,b1;a2,b2) - T(b1,b2;b3,b4)".
std::string to_string(const WedgePair& p);
std::string to_string(const S2L2Vec& v);

/// Canonical representative of a class in A_2(H_Q) = S^2(Lambda^2 H_Q) / Lambda^4 H_Q.
class A2Vec {
 public:
  A2Vec() = default;

  const S2L2Vec& representative() const { return rep_; }
  int genus() const { return genus_; }
  bool is_zero() const { return rep_.is_zero(); }

  friend bool operator==(const A2Vec& l, const A2Vec& r) { return l.rep_ == r.rep_; }

 private:
  friend A2Vec a2_normalize(const S2L2Vec& v, int genus);
  A2Vec(S2L2Vec rep, int genus) : rep_(std::move(rep)), genus_(genus) {}

  S2L2Vec rep_;
  int genus_ = kDefaultGenus;
};

/// Echelon form of the Lambda^4 images of all increasing basis 4-tuples at
/// this genus. Built once per genus; thread-safe.
const SpanReducer<WedgePair>& lambda4_reducer(int genus);

/// Residual of v against lambda4_reducer(genus). Throws std::invalid_argument
/// when v uses an index above the genus.
A2Vec a2_normalize(const S2L2Vec& v, int genus = kDefaultGenus);

bool a2_equal(const S2L2Vec& x, const S2L2Vec& y, int genus = kDefaultGenus);

/// tau_2 of the Dehn twist on a genus-1 bounding curve whose subsurface has
/// symplectic basis (x, y): the class of 2 (x ^ y)(x ^ y).
A2Vec tau2_bscc_twist(const HVec& x, const HVec& y, int genus = kDefaultGenus);

}  // namespace torelli
