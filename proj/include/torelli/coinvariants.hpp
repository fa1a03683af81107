#pragma once

#include <compare>
#include <string>
#include <vector>

#include "torelli/gl_action.hpp"

namespace torelli {

/// A balanced basic tensor in which every index contributes exactly one a
/// and one b, with indices renamed 1, 2, ... in order of first occurrence.
///
/// Two chord classes that differ by a permutation of slots are kept apart;
/// the classes generate the coinvariants but no relation between them is
/// imposed here.
struct ChordClass {
  std::vector<BasisLabel> slots;

  /// Renames indices of a chord-shaped tensor. Throws std::invalid_argument
  /// if some index does not occur as exactly one a and one b.
  static ChordClass canonical(const BasicTensor& t);

  friend auto operator<=>(const ChordClass&, const ChordClass&) = default;
  friend bool operator==(const ChordClass&, const ChordClass&) = default;
};

using ChordVec = FreeVec<ChordClass>;

std::string to_string(const ChordClass& c);
std::string to_string(const ChordVec& v);

/// Class of t in the GL_g(Z)-coinvariants of the 2n-th tensor power of H_Q,
/// written on chord generators.
///
/// Per basic tensor: an index with odd total multiplicity, or with unequal
/// numbers of a's and b's, gives 0. Otherwise the lowest index carrying more
/// than one a is split: its first a moves to the smallest index absent from
/// the tensor, and the result is the sum over its b slots of the tensor with
/// that b moved to the same fresh index.
///
/// Requires every basic tensor of t to have the same even degree 2n with
/// 1 <= n < genus and all indices in 1..genus; throws std::invalid_argument.
ChordVec coinvariant_reduce(const TensorVec& t, int genus);

}  // namespace torelli
