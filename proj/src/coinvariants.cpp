#include "torelli/coinvariants.hpp"

#include <map>
#include <stdexcept>

#include "torelli/format.hpp"

namespace torelli {
namespace {

struct Multiplicity {
  int a = 0;
  int b = 0;
};

std::map<int, Multiplicity> multiplicities(const BasicTensor& t) {
  std::map<int, Multiplicity> counts;
  for (const BasisLabel& l : t) {
    auto& m = counts[l.index];
    (l.is_a() ? m.a : m.b) += 1;
  }
  return counts;
}

void reduce_basic(const BasicTensor& t, const Scalar& coeff, int genus, ChordVec& out) {
  const auto counts = multiplicities(t);
  for (const auto& [index, m] : counts) {
    if ((m.a + m.b) % 2 != 0) return;                // odd total: D_j(-1) kills it
    if ((m.a == 0) != (m.b == 0)) return;            // only a's or only b's
    if ((m.a == 1) != (m.b == 1)) return;            // one a against several b's, or the reverse
  }

  int split = 0;
  for (const auto& [index, m] : counts)
    if (m.a > 1) {
      split = index;
      break;
    }
  if (split == 0) {
    out.add_term(ChordClass::canonical(t), coeff);
    return;
  }

  int fresh = 1;
  while (counts.count(fresh)) ++fresh;
  if (fresh > genus) throw std::logic_error("no free index for the chord split");

  BasicTensor base = t;
  for (BasisLabel& l : base)
    if (l == BasisLabel::a(split)) {
      l = BasisLabel::a(fresh);
      break;
    }
  for (std::size_t k = 0; k < base.size(); ++k) {
    if (base[k] != BasisLabel::b(split)) continue;
    BasicTensor term = base;
    term[k] = BasisLabel::b(fresh);
    reduce_basic(term, coeff, genus, out);
  }
}

}  // namespace

ChordClass ChordClass::canonical(const BasicTensor& t) {
  std::map<int, int> rename;
  std::map<int, Multiplicity> counts = multiplicities(t);
  for (const auto& [index, m] : counts)
    if (m.a != 1 || m.b != 1)
      throw std::invalid_argument("not a chord tensor: " + to_string(t));
  ChordClass c;
  c.slots.reserve(t.size());
  for (const BasisLabel& l : t) {
    auto [it, inserted] = rename.try_emplace(l.index, static_cast<int>(rename.size()) + 1);
    c.slots.push_back({l.family, it->second});
  }
  return c;
}

std::string to_string(const ChordClass& c) { return to_string(BasicTensor(c.slots)); }

std::string to_string(const ChordVec& v) {
  return format_combination(v, [](const ChordClass& c) { return to_string(c); });
}

ChordVec coinvariant_reduce(const TensorVec& t, int genus) {
  ChordVec out;
  if (t.is_zero()) return out;
  const std::size_t degree = t.begin()->first.size();
  if (degree % 2 != 0) throw std::invalid_argument("tensor degree must be even");
  const int n = static_cast<int>(degree / 2);
  if (n < 1 || n >= genus)
    throw std::invalid_argument("need 1 <= degree/2 < genus (degree " + std::to_string(degree) +
                                ", genus " + std::to_string(genus) + ")");
  for (const auto& [tensor, coeff] : t) {
    if (tensor.size() != degree) throw std::invalid_argument("mixed tensor degrees");
    for (const BasisLabel& l : tensor)
      if (l.index < 1 || l.index > genus)
        throw std::invalid_argument("label " + to_string(l) + " outside genus " + std::to_string(genus));
    reduce_basic(tensor, coeff, genus, out);
  }
  return out;
}

}  // namespace torelli
