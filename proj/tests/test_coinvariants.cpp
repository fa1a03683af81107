#include "doctest.h"
#include "support/oracles.hpp"
#include "support/properties.hpp"
#include "torelli/coinvariants.hpp"
#include "torelli/parse.hpp"

using namespace torelli;

namespace {

ChordVec reduce(const char* text, int genus = 5) { return coinvariant_reduce(parse_tensor(text), genus); }

ChordVec chord(const char* text) {
  return ChordVec::basis(ChordClass::canonical(parse_tensor(text).begin()->first));
}

}  // namespace

TEST_CASE("chord generators are fixed points") {
  CHECK(reduce("a1*b1*a2*b2") == chord("a1*b1*a2*b2"));
  CHECK(reduce("b1*a1") == chord("b1*a1"));
  CHECK(to_string(reduce("a1*b1*a2*b2")) == "a1*b1*a2*b2");
}

TEST_CASE("imbalanced tensors vanish") {
  CHECK(reduce("a1*a1*b2*b2").is_zero());
  CHECK(reduce("a1*a1").is_zero());
  CHECK(reduce("a1*b2").is_zero());
  CHECK(reduce("a1*a1*a1*b1").is_zero());
}

TEST_CASE("case 4 splits a repeated index") {
  // The two b-slots of index 1 each move to the fresh index 2.
  const ChordVec got = reduce("a1*a1*b1*b1");
  CHECK(got == chord("a1*a2*b1*b2") + chord("a1*a2*b2*b1"));
  CHECK(to_string(got) == "a1*a2*b1*b2 + a1*a2*b2*b1");
  CHECK(got == testing::matching_coinvariants(parse_tensor("a1*a1*b1*b1")));
  // Total weight 2 splits across the two chord patterns.
  Scalar total = 0;
  for (const auto& [c, coeff] : got) total += coeff;
  CHECK(total == 2);
}

TEST_CASE("canonical renaming by first occurrence") {
  CHECK(ChordClass::canonical(parse_tensor("b3*a2*a3*b2").begin()->first) ==
        ChordClass::canonical(parse_tensor("b1*a2*a1*b2").begin()->first));
  CHECK_THROWS_AS(ChordClass::canonical(parse_tensor("a1*a1*b1*b1").begin()->first), std::invalid_argument);
}

TEST_CASE("linear on combinations") {
  CHECK(reduce("a1*b1 + 2*a3*b3 - a1*a1") == 3 * chord("a1*b1"));
  CHECK(reduce("a1*b1*a2*b2 - a2*b2*a1*b1").is_zero());
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(reduce("a1*b1*a2"), std::invalid_argument);
  CHECK_THROWS_AS(reduce("a1*b1 + a1*b1*a2*b2"), std::invalid_argument);
  CHECK_THROWS_AS(reduce("a1*b1*a2*b2", 2), std::invalid_argument);
  CHECK_THROWS_AS(reduce("a6*b6"), std::invalid_argument);
  CHECK_NOTHROW(reduce("a1*b1*a2*b2", 3));
}

TEST_CASE("agreement with the contraction oracle") { CHECK(testing::prop_coinvariants_match_contractions().ok); }

TEST_CASE("GL invariance on all degree-4 basic tensors at genus 4") {
  const auto r = testing::prop_coinvariants_gl_invariant(4);
  CHECK_MESSAGE(r.ok, r.failure);
  CHECK(r.cases == 4096 * 34);
}
