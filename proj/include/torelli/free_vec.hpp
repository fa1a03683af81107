#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "torelli/scalar.hpp"

namespace torelli {

/// Finite linear combination of basis keys with exact rational coefficients.
///
/// Zero coefficients are never stored, so two vectors compare equal exactly
/// when they have the same support and coefficients. Iteration follows the
/// key order, which every canonical form in the library relies on.
template <typename Key>
class FreeVec {
 public:
  using key_type = Key;
  using map_type = std::map<Key, Scalar>;
  using const_iterator = typename map_type::const_iterator;

  FreeVec() = default;

  static FreeVec basis(const Key& key, const Scalar& coeff = Scalar(1)) {
    FreeVec v;
    v.add_term(key, coeff);
    return v;
  }

  void add_term(const Key& key, const Scalar& coeff) {
    if (sgn(coeff) == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Scalar coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool contains(const Key& key) const { return terms_.count(key) != 0; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  /// Adds factor * other.
  void add_scaled(const FreeVec& other, const Scalar& factor) {
    if (sgn(factor) == 0) return;
    for (const auto& [k, c] : other.terms_) add_term(k, factor * c);
  }

  FreeVec& operator+=(const FreeVec& other) {
    add_scaled(other, Scalar(1));
    return *this;
  }
  FreeVec& operator-=(const FreeVec& other) {
    add_scaled(other, Scalar(-1));
    return *this;
  }
  FreeVec& operator*=(const Scalar& factor) {
    if (sgn(factor) == 0) {
      terms_.clear();
    } else {
      for (auto& entry : terms_) entry.second *= factor;
    }
    return *this;
  }

  friend FreeVec operator+(FreeVec lhs, const FreeVec& rhs) { return lhs += rhs; }
  friend FreeVec operator-(FreeVec lhs, const FreeVec& rhs) { return lhs -= rhs; }
  friend FreeVec operator-(FreeVec v) { return v *= Scalar(-1); }
  friend FreeVec operator*(const Scalar& factor, FreeVec v) { return v *= factor; }
  friend FreeVec operator*(FreeVec v, const Scalar& factor) { return v *= factor; }

  friend bool operator==(const FreeVec& lhs, const FreeVec& rhs) { return lhs.terms_ == rhs.terms_; }

  /// Keeps the terms whose key satisfies pred.
  template <typename Pred>
  FreeVec filter(Pred pred) const {
    FreeVec out;
    for (const auto& [k, c] : terms_)
      if (pred(k)) out.terms_.emplace_hint(out.terms_.end(), k, c);
    return out;
  }

 private:
  map_type terms_;
};

}  // namespace torelli
