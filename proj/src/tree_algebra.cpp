#include "torelli/tree_algebra.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "torelli/format.hpp"

namespace torelli {

int WedgePair::count(Family family) const {
  int n = 0;
  for (const BasisLabel& l : {first.lo, first.hi, second.lo, second.hi}) n += l.family == family;
  return n;
}

S2L2Vec tree_term(BasisLabel u, BasisLabel v, BasisLabel w, BasisLabel z) {
  if (u == v || w == z) return {};
  int sign = 1;
  if (v < u) {
    std::swap(u, v);
    sign = -sign;
  }
  if (z < w) {
    std::swap(w, z);
    sign = -sign;
  }
  Wedge left{u, v}, right{w, z};
  if (right < left) std::swap(left, right);
  return S2L2Vec::basis(WedgePair{left, right}, Scalar(sign));
}

S2L2Vec tree_expand(const HTree& t) {
  S2L2Vec out;
  for (const auto& [l1, c1] : t.x1)
    for (const auto& [l2, c2] : t.x2) {
      if (l1 == l2) continue;
      const Scalar c12 = c1 * c2;
      for (const auto& [l3, c3] : t.x3)
        for (const auto& [l4, c4] : t.x4) out.add_scaled(tree_term(l1, l2, l3, l4), c12 * c3 * c4);
    }
  return out;
}

S2L2Vec lambda4_embed(const HVec& w, const HVec& x, const HVec& y, const HVec& z) {
  S2L2Vec out = tree_expand({w, x, y, z});
  out -= tree_expand({w, y, x, z});
  out += tree_expand({w, z, x, y});
  return out;
}

int max_index(const S2L2Vec& v) {
  int m = 0;
  for (const auto& [p, c] : v) m = std::max({m, p.first.hi.index, p.second.hi.index});
  return m;
}

S2L2Vec gl_generator_action(const GLGenerator& gen, const S2L2Vec& v) {
  S2L2Vec out;
  for (const auto& [p, c] : v)
    out.add_scaled(tree_expand({gl_apply(gen, p.first.lo), gl_apply(gen, p.first.hi), gl_apply(gen, p.second.lo),
                                gl_apply(gen, p.second.hi)}),
                   c);
  return out;
}

std::string to_string(const WedgePair& p) {
  return "T(" + to_string(p.first.lo) + "," + to_string(p.first.hi) + ";" + to_string(p.second.lo) +
         "," + to_string(p.second.hi) + ")";
}

std::string to_string(const S2L2Vec& v) {
  return format_combination(v, [](const WedgePair& p) { return to_string(p); });
}

const SpanReducer<WedgePair>& lambda4_reducer(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be positive");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const SpanReducer<WedgePair>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[genus];
  if (!slot) {
    std::vector<BasisLabel> labels;
    for (int i = 1; i <= genus; ++i) {
      labels.push_back(BasisLabel::a(i));
      labels.push_back(BasisLabel::b(i));
    }
    std::vector<S2L2Vec> images;
    const std::size_t n = labels.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          for (std::size_t l = k + 1; l < n; ++l)
            images.push_back(
                lambda4_embed(hvec(labels[i]), hvec(labels[j]), hvec(labels[k]), hvec(labels[l])));
    slot = std::make_unique<const SpanReducer<WedgePair>>(std::span<const S2L2Vec>(images));
  }
  return *slot;
}

A2Vec a2_normalize(const S2L2Vec& v, int genus) {
  if (max_index(v) > genus)
    throw std::invalid_argument("element uses index " + std::to_string(max_index(v)) +
                                " above genus " + std::to_string(genus));
  return A2Vec(lambda4_reducer(genus).residual(v), genus);
}

bool a2_equal(const S2L2Vec& x, const S2L2Vec& y, int genus) { return a2_normalize(x - y, genus).is_zero(); }

A2Vec tau2_bscc_twist(const HVec& x, const HVec& y, int genus) {
  return a2_normalize(Scalar(2) * tree_expand({x, y, x, y}), genus);
}

}  // namespace torelli
