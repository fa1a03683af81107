#include <string>

#include "doctest.h"
#include "support/generators.hpp"
#include "torelli/parse.hpp"

using namespace torelli;

namespace {

std::size_t error_offset(void (*f)(std::string_view), std::string_view text) {
  try {
    f(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("expected a ParseError for " << std::string(text));
  return 0;
}

void hvec_of(std::string_view t) { (void)parse_hvec(t); }
void tree_of(std::string_view t) { (void)parse_tree(t); }
void trees_of(std::string_view t) { (void)parse_tree_sum(t); }
void tensor_of(std::string_view t) { (void)parse_tensor(t); }
void twist_of(std::string_view t) { (void)parse_twist(t); }

}  // namespace

TEST_CASE("parse_hvec") {
  CHECK(parse_hvec("a1 + b1") == hvec(BasisLabel::a(1)) + hvec(BasisLabel::b(1)));
  CHECK(parse_hvec("a2 - b1 + b2") == hvec(BasisLabel::a(2)) - hvec(BasisLabel::b(1)) + hvec(BasisLabel::b(2)));
  CHECK(parse_hvec("-3/2*a1") == make_scalar(-3, 2) * hvec(BasisLabel::a(1)));
  CHECK(parse_hvec("  a1+a1 ") == 2 * hvec(BasisLabel::a(1)));
  CHECK(parse_hvec("0").is_zero());
  CHECK(parse_hvec("a1 - a1").is_zero());
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK(error_offset(hvec_of, "2*q7") == 2);
  CHECK(error_offset(hvec_of, "") == 0);
  CHECK(error_offset(hvec_of, "a1 +") == 4);
  CHECK(error_offset(hvec_of, "a1 b1") == 3);
  CHECK(error_offset(hvec_of, "a0") == 1);
  CHECK(error_offset(hvec_of, "1/0*a1") == 2);
  CHECK(error_offset(tree_of, "T(a1,b1;a2)") == 10);
  CHECK(error_offset(tree_of, "T(a1,b1,a2,b2)") == 7);
  CHECK(error_offset(trees_of, "T(a1,b1;a2,b2) +") == 16);
  CHECK(error_offset(tensor_of, "a1*") == 3);
  CHECK(error_offset(twist_of, "twist(a1, b1)") == 8);
}

TEST_CASE("parse_tree and sums") {
  const HTree t = parse_tree("T(a1+b1, a2; b1, 2*b2)");
  CHECK(t.x1 == parse_hvec("a1 + b1"));
  CHECK(t.x4 == parse_hvec("2*b2"));
  CHECK(parse_tree_sum("T(a1,b1;a2,b2) - T(a2,b2;a1,b1)").is_zero());
  CHECK(parse_tree_sum("0").is_zero());
  CHECK(parse_tensor(" 0 ").is_zero());
  CHECK(parse_tree_sum("-1/2*T(a1,b1;a2,b2)") == make_scalar(-1, 2) * tree_expand(parse_tree("T(a1,b1;a2,b2)")));
  const auto [x, y] = parse_twist("twist(a1 + b1; a2 - b1 + b2)");
  CHECK(x == parse_hvec("a1 + b1"));
  CHECK(y == parse_hvec("a2 - b1 + b2"));
}

TEST_CASE("parse_tensor") {
  const TensorVec t = parse_tensor("a1*b1 - 2*a2*b2*a1");
  CHECK(t.coeff({BasisLabel::a(1), BasisLabel::b(1)}) == 1);
  CHECK(t.coeff({BasisLabel::a(2), BasisLabel::b(2), BasisLabel::a(1)}) == -2);
  CHECK(to_string(t) == "a1*b1 - 2*a2*b2*a1");
}

TEST_CASE("printing then parsing is the identity") {
  testing::Gen gen(31);
  for (int k = 0; k < 200; ++k) {
    const HVec v = k % 7 == 0 ? HVec{} : gen.hvec(6, 5) * gen.scalar();
    const std::string text = to_string(v);
    CHECK(parse_hvec(text) == v);
    CHECK(to_string(parse_hvec(text)) == text);
    const S2L2Vec t = gen.element(4);
    CHECK(parse_tree_sum(to_string(t)) == t);
  }
}
