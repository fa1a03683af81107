#pragma once

#include <string>
#include <vector>

#include "torelli/free_vec.hpp"
#include "torelli/symplectic.hpp"

namespace torelli {

/// Ordered sequence of basis labels, one per tensor factor.
using BasicTensor = std::vector<BasisLabel>;
using TensorVec = FreeVec<BasicTensor>;

/// Generators of GL_g(Z) acting on H by G on A and by the inverse transpose on B.
struct GLGenerator {
  enum class Kind { transposition, sign_flip, elementary };

  Kind kind = Kind::transposition;
  int i = 1;
  int j = 1;
  int sign = 1;  // elementary only: Id + sign * E_{i,j}

  static GLGenerator transposition(int i, int j) { return {Kind::transposition, i, j, 1}; }
  static GLGenerator sign_flip(int j) { return {Kind::sign_flip, j, j, -1}; }
  static GLGenerator elementary(int i, int j, int sign) { return {Kind::elementary, i, j, sign}; }

  /// Throws std::invalid_argument when indices fall outside 1..genus or i == j where required.
  void validate(int genus) const;
};

std::string to_string(const GLGenerator& gen);

/// Image of a single basis label.
HVec gl_apply(const GLGenerator& gen, BasisLabel label);
HVec gl_apply(const GLGenerator& gen, const HVec& u);

/// Diagonal action on tensors; factors of differing length are allowed.
TensorVec gl_generator_action(const GLGenerator& gen, const TensorVec& t);

/// Every transposition, sign flip and elementary L_{i,j}(+-1) at this genus.
std::vector<GLGenerator> all_generators(int genus);

std::string to_string(const BasicTensor& t);
std::string to_string(const TensorVec& t);

}  // namespace torelli
