#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "torelli/gl_action.hpp"
#include "torelli/symplectic.hpp"
#include "torelli/tree_algebra.hpp"

namespace torelli {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

  /// Byte offset into the parsed text.
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Grammar (whitespace ignored between tokens):
//   coeff  := int ('/' int)?
//   label  := ('a'|'b') int
//   hvec   := '0' | ['-'] term (('+'|'-') term)*        term := [coeff '*'] label
//   tree   := 'T(' hvec ',' hvec ';' hvec ',' hvec ')'
//   trees  := '0' | ['-'] [coeff '*'] tree (('+'|'-') [coeff '*'] tree)*
//   tensor := '0' | ['-'] [coeff '*'] label ('*' label)* (('+'|'-') ...)*
//   twist  := 'twist(' hvec ';' hvec ')'

HVec parse_hvec(std::string_view text);
HTree parse_tree(std::string_view text);
/// Signed sum of trees, expanded into S^2(Lambda^2 H).
S2L2Vec parse_tree_sum(std::string_view text);
TensorVec parse_tensor(std::string_view text);
std::pair<HVec, HVec> parse_twist(std::string_view text);

}  // namespace torelli
