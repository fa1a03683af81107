#include "torelli/gl_action.hpp"

#include <stdexcept>

#include "torelli/format.hpp"

namespace torelli {

void GLGenerator::validate(int genus) const {
  auto in_range = [genus](int k) { return k >= 1 && k <= genus; };
  if (!in_range(i) || !in_range(j))
    throw std::invalid_argument("generator index outside 1.." + std::to_string(genus));
  if (kind != Kind::sign_flip && i == j)
    throw std::invalid_argument("generator needs two distinct indices");
  if (kind == Kind::elementary && sign != 1 && sign != -1)
    throw std::invalid_argument("elementary generator sign must be +1 or -1");
}

std::string to_string(const GLGenerator& gen) {
  switch (gen.kind) {
    case GLGenerator::Kind::transposition:
      return "S(" + std::to_string(gen.i) + "," + std::to_string(gen.j) + ")";
    case GLGenerator::Kind::sign_flip:
      return "D" + std::to_string(gen.j) + "(-1)";
    case GLGenerator::Kind::elementary:
      return "L" + std::to_string(gen.i) + "," + std::to_string(gen.j) + "(" +
             (gen.sign > 0 ? "1" : "-1") + ")";
  }
  return {};
}

HVec gl_apply(const GLGenerator& gen, BasisLabel label) {
  const int k = label.index;
  switch (gen.kind) {
    case GLGenerator::Kind::transposition:
      if (k == gen.i) return hvec({label.family, gen.j});
      if (k == gen.j) return hvec({label.family, gen.i});
      return hvec(label);
    case GLGenerator::Kind::sign_flip:
      return k == gen.j ? HVec::basis(label, Scalar(-1)) : hvec(label);
    case GLGenerator::Kind::elementary: {
      // G = Id + s E_{ij}:  a_j -> a_j + s a_i,  and (G^{-1})^T = Id - s E_{ji}:  b_i -> b_i - s b_j.
      HVec out = hvec(label);
      if (label.is_a() && k == gen.j) out.add_term(BasisLabel::a(gen.i), Scalar(gen.sign));
      if (label.is_b() && k == gen.i) out.add_term(BasisLabel::b(gen.j), Scalar(-gen.sign));
      return out;
    }
  }
  return hvec(label);
}

HVec gl_apply(const GLGenerator& gen, const HVec& u) {
  HVec out;
  for (const auto& [l, c] : u) out.add_scaled(gl_apply(gen, l), c);
  return out;
}

TensorVec gl_generator_action(const GLGenerator& gen, const TensorVec& t) {
  TensorVec out;
  for (const auto& [tensor, coeff] : t) {
    // Expand the product of factor images one slot at a time.
    std::vector<std::pair<BasicTensor, Scalar>> partial{{BasicTensor{}, coeff}};
    for (const BasisLabel& slot : tensor) {
      const HVec image = gl_apply(gen, slot);
      std::vector<std::pair<BasicTensor, Scalar>> next;
      next.reserve(partial.size() * image.size());
      for (const auto& [prefix, c] : partial)
        for (const auto& [l, lc] : image) {
          BasicTensor extended = prefix;
          extended.push_back(l);
          next.emplace_back(std::move(extended), c * lc);
        }
      partial = std::move(next);
    }
    for (const auto& [k, c] : partial) out.add_term(k, c);
  }
  return out;
}

std::vector<GLGenerator> all_generators(int genus) {
  std::vector<GLGenerator> gens;
  for (int i = 1; i <= genus; ++i)
    for (int j = i + 1; j <= genus; ++j) gens.push_back(GLGenerator::transposition(i, j));
  for (int j = 1; j <= genus; ++j) gens.push_back(GLGenerator::sign_flip(j));
  for (int i = 1; i <= genus; ++i)
    for (int j = 1; j <= genus; ++j)
      if (i != j)
        for (int s : {1, -1}) gens.push_back(GLGenerator::elementary(i, j, s));
  return gens;
}

std::string to_string(const BasicTensor& t) {
  std::string out;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) out += "*";
    out += to_string(t[k]);
  }
  return out;
}

std::string to_string(const TensorVec& t) {
  return format_combination(t, [](const BasicTensor& k) { return to_string(k); });
}

}  // namespace torelli
