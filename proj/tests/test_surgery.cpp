#include "doctest.h"
#include "support/oracles.hpp"
#include "support/properties.hpp"
#include "torelli/knot_io.hpp"
#include "torelli/surgery.hpp"

using namespace torelli;

namespace {

const SphereInvariants P{Scalar(1), Scalar(39)};

Integer c4(std::initializer_list<std::pair<int, long>> terms) { return conway_coefficient(LaurentPoly(terms), 4); }

}  // namespace

TEST_CASE("conway coefficients") {
  CHECK(c4({{2, 1}, {0, 1}}) == 0);
  CHECK(c4({{0, 1}, {2, -1}}) == 0);
  CHECK(c4({{4, 1}, {2, 1}, {0, 1}}) == 1);
  CHECK(conway_coefficient(trefoil().conway, 2) == 1);
  CHECK(conway_coefficient(figure_eight().conway, 2) == -1);
}

TEST_CASE("jones derivatives") {
  const LaurentPoly& vk = trefoil().jones;
  const LaurentPoly& vl = figure_eight().jones;
  CHECK(jones_h_derivative(vk, 2) == -6);
  CHECK(jones_h_derivative(vl, 2) == 6);
  CHECK(jones_h_derivative(vk, 3) == 36);
  CHECK(jones_h_derivative(vl, 3) == 0);
  CHECK(jones_h_derivative(vk, 0) == 1);
  CHECK(jones_h_derivative(vk, 1) == 0);
  CHECK(testing::jones_series_derivative(vk, 3) == 36);
  CHECK_THROWS_AS(jones_h_derivative(vk, -1), std::invalid_argument);
  CHECK(to_string(vk, 't') == "-t^4 + t^3 + t");
  CHECK(to_string(vl, 't') == "t^2 - t + 1 - t^-1 + t^-2");
  CHECK(testing::prop_jones_series().ok);
}

TEST_CASE("surgery formulas") {
  const KnotRecord& K = trefoil();
  const KnotRecord& L = figure_eight();
  CHECK(casson_surgery(K, 1) == 1);
  CHECK(casson_surgery(L, 1) == -1);
  CHECK(casson_surgery(K, 2) == 2);
  CHECK(lambda2_surgery(K, 1) == 39);
  CHECK(lambda2_surgery(K, 1) == poincare_sphere().lambda2);
  CHECK(lambda2_surgery(K, 2) - 2 * lambda2_surgery(K, 1) == 108);
  CHECK(lambda2_surgery(L, 2) - 2 * lambda2_surgery(L, 1) == 132);
  CHECK(surgery_invariants(K, 0) == SphereInvariants{Scalar(0), Scalar(0)});
  CHECK(surgery_invariants(L, 1) == SphereInvariants{Scalar(-1), Scalar(69)});
  CHECK(surgery_invariants(K, -3).is_integral());
  CHECK(surgery_b_value(K) == 72);
  CHECK(surgery_b_value(L) == 96);
  CHECK(testing::prop_surgery_polynomial_in_n().ok);
}

TEST_CASE("sphere operations") {
  CHECK(connected_sum(P, P) == SphereInvariants{Scalar(2), Scalar(114)});
  CHECK(connected_sum(P, {Scalar(0), Scalar(0)}) == P);
  CHECK(reverse_orientation(P) == SphereInvariants{Scalar(-1), Scalar(45)});
  CHECK(reverse_orientation({Scalar(0), Scalar(7)}) == SphereInvariants{Scalar(0), Scalar(7)});
  CHECK(vanishing_combo(P) == 24);
  CHECK(d2_value({Scalar(0), Scalar(5)}) == 5);
  CHECK(d2_value(P) == 21);
  for (long l = -5; l <= 5; ++l) {
    const Scalar lam(l);
    CHECK(vanishing_combo({lam, -3 * lam + 18 * lam * lam}) == 0);
  }
  CHECK(vanishing_combo({make_scalar(1, 3), Scalar(1)}) == 0);  // -3/3 + 18/9
  for (const auto& r : {testing::prop_d2_additive(), testing::prop_reverse_involution()}) CHECK_MESSAGE(r.ok, r.failure);
}

TEST_CASE("coefficient derivations") {
  const AlphaR ar = solve_alpha_r();
  CHECK(ar.alpha == 18);
  CHECK(ar.r == -3);
  const CocycleCoefficients cc = cocycle_coefficients(5);
  CHECK(cc.r1 == 3);
  CHECK(cc.r2 == make_scalar(3, 4));
  REQUIRE(cc.equations.size() == 2);
  CHECK(cc.equations[0].j == 12);
  CHECK(cc.equations[0].q == 48);
  CHECK(cc.equations[0].b == 72);
  CHECK(cc.equations[1].q == 80);
  CHECK(cc.equations[1].b == 96);
  CHECK(cocycle_coefficients(6).r2 == make_scalar(3, 4));
  CHECK_THROWS_AS(cocycle_coefficients(4), std::invalid_argument);
}

TEST_CASE("knot documents") {
  const KnotRecord k = parse_knot_document(knot_document(trefoil()));
  CHECK(k.name == "trefoil");
  CHECK(k.conway == trefoil().conway);
  CHECK(k.jones == trefoil().jones);
  REQUIRE(k.bscc_basis.has_value());
  CHECK(k.bscc_basis->second == trefoil().bscc_basis->second);

  const KnotRecord bare = parse_knot_document(R"({"name": "x", "conway": [[0, 1]], "jones": [[0, 1]]})");
  CHECK_FALSE(bare.bscc_basis.has_value());
  CHECK(lambda2_surgery(bare, 3) == 0);

  CHECK_THROWS_AS(parse_knot_document("{"), KnotDocumentError);
  CHECK_THROWS_AS(parse_knot_document("[]"), KnotDocumentError);
  CHECK_THROWS_AS(parse_knot_document(R"({"conway": [[0, 1]], "jones": [[0, 1]]})"), KnotDocumentError);
  CHECK_THROWS_AS(parse_knot_document(R"({"name": "x", "conway": [[0, 1]]})"), KnotDocumentError);
  CHECK_THROWS_AS(parse_knot_document(R"({"name": "x", "conway": [[0]], "jones": [[0, 1]]})"), KnotDocumentError);
  CHECK_THROWS_AS(parse_knot_document(R"({"name": "x", "conway": [[0, 1]], "jones": [[0, 2]]})"), KnotDocumentError);
  CHECK_THROWS_AS(parse_knot_document(
                      R"({"name": "x", "conway": [[0, 1]], "jones": [[0, 1]], "bscc_basis": ["a1", "q2"]})"),
                  KnotDocumentError);
  CHECK_THROWS_AS(load_knot_document("/nonexistent/knot.json"), KnotDocumentError);
  CHECK(builtin_knot("figure_eight") == &figure_eight());
  CHECK(builtin_knot("unknot") == nullptr);
}
