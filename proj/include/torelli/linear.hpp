#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "torelli/free_vec.hpp"
#include "torelli/scalar.hpp"

namespace torelli {

using Matrix = std::vector<std::vector<Scalar>>;

class LinearSystemError : public std::runtime_error {
 public:
  enum class Kind { inconsistent, underdetermined, malformed };

  LinearSystemError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Exact solution of matrix * x = rhs. Throws LinearSystemError when the
/// system has no solution or more than one (inconsistency is reported first).
std::vector<Scalar> solve_linear(const Matrix& matrix, std::span<const Scalar> rhs);

std::size_t matrix_rank(const Matrix& matrix);

template <typename Key>
struct SpanDecomposition {
  std::vector<Scalar> coefficients;
  FreeVec<Key> residual;
};

/// Reduced row echelon form of the span of a list of vectors.
///
/// The pivot of each row is its smallest key and no row contains another
/// row's pivot, so the residual of a reduction is the unique representative
/// of v modulo the span that avoids all pivot keys.
template <typename Key>
class SpanReducer {
 public:
  SpanReducer() = default;

  explicit SpanReducer(std::span<const FreeVec<Key>> basis) : basis_size_(basis.size()) {
    for (std::size_t i = 0; i < basis.size(); ++i) insert(basis[i], i);
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t basis_size() const { return basis_size_; }

  SpanDecomposition<Key> reduce(const FreeVec<Key>& v) const {
    SpanDecomposition<Key> out;
    out.coefficients.assign(basis_size_, Scalar(0));
    FreeVec<std::size_t> combo;
    out.residual = eliminate(v, &combo);
    // eliminate() tracks -(combination); flip the sign so that
    // v = sum coefficients[i] * basis[i] + residual.
    for (const auto& [i, c] : combo) out.coefficients[i] = -c;
    return out;
  }

  FreeVec<Key> residual(const FreeVec<Key>& v) const { return eliminate(v, nullptr); }

  bool contains(const FreeVec<Key>& v) const { return residual(v).is_zero(); }

 private:
  struct Row {
    FreeVec<Key> vec;             // pivot coefficient is 1
    FreeVec<std::size_t> combo;   // vec = sum combo[i] * basis[i]
  };

  FreeVec<Key> eliminate(const FreeVec<Key>& v, FreeVec<std::size_t>* combo) const {
    std::vector<std::pair<const Row*, Scalar>> hits;
    for (const auto& [k, c] : v) {
      auto it = rows_.find(k);
      if (it != rows_.end()) hits.emplace_back(&it->second, c);
    }
    FreeVec<Key> r = v;
    for (const auto& [row, c] : hits) {
      r.add_scaled(row->vec, -c);
      if (combo) combo->add_scaled(row->combo, -c);
    }
    return r;
  }

  void insert(const FreeVec<Key>& v, std::size_t index) {
    FreeVec<std::size_t> combo = FreeVec<std::size_t>::basis(index);
    FreeVec<std::size_t> elim;
    FreeVec<Key> r = eliminate(v, &elim);
    if (r.is_zero()) return;
    combo += elim;
    const Key pivot = r.begin()->first;
    const Scalar inv = 1 / r.begin()->second;
    r *= inv;
    combo *= inv;
    for (auto& [p, row] : rows_) {
      Scalar c = row.vec.coeff(pivot);
      if (sgn(c) == 0) continue;
      row.vec.add_scaled(r, -c);
      row.combo.add_scaled(combo, -c);
    }
    rows_.emplace(pivot, Row{std::move(r), std::move(combo)});
  }

  std::map<Key, Row> rows_;
  std::size_t basis_size_ = 0;
};

/// v = sum coefficients[i] * basis[i] + residual, residual canonical modulo the span.
template <typename Key>
SpanDecomposition<Key> span_reduce(std::span<const FreeVec<Key>> basis, const FreeVec<Key>& v) {
  return SpanReducer<Key>(basis).reduce(v);
}

template <typename Key>
SpanDecomposition<Key> span_reduce(const std::vector<FreeVec<Key>>& basis, const FreeVec<Key>& v) {
  return span_reduce(std::span<const FreeVec<Key>>(basis), v);
}

}  // namespace torelli
