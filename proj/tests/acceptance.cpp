// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "support/properties.hpp"
#include "torelli/forms.hpp"
#include "torelli/parse.hpp"
#include "torelli/surgery.hpp"
#include "torelli/tree_algebra.hpp"

using namespace torelli;
using namespace torelli::testing;

namespace {

int failures = 0;

void report(const std::string& label, bool pass, const std::string& detail) {
  std::printf("[%s] %s%s%s\n", pass ? "PASS" : "FAIL", label.c_str(), detail.empty() ? "" : ": ", detail.c_str());
  if (!pass) ++failures;
}

// Collects named exact comparisons; the criterion passes iff all match.
struct Criterion {
  std::string label;
  std::vector<std::string> mismatches;
  std::vector<std::string> shown;

  void expect(const std::string& what, const Scalar& computed, const Scalar& expected) {
    shown.push_back(what + "=" + to_string(computed));
    if (computed != expected) mismatches.push_back(what + " expected " + to_string(expected));
  }
  void expect_true(const std::string& what, bool ok) {
    if (!ok) mismatches.push_back(what);
  }
  void finish() {
    std::string detail;
    for (const auto& s : mismatches.empty() ? shown : mismatches) detail += (detail.empty() ? "" : ", ") + s;
    report(label, mismatches.empty(), detail);
  }
};

A2Vec twist_of(const KnotRecord& k, int genus) {
  return tau2_bscc_twist(k.bscc_basis->first, k.bscc_basis->second, genus);
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const int g = kDefaultGenus;
  const KnotRecord& K = trefoil();
  const KnotRecord& L = figure_eight();
  const A2Vec tk = twist_of(K, g), tl = twist_of(L, g);

  {
    Criterion c{"1. cocycle coefficient system"};
    const CocycleCoefficients cc = cocycle_coefficients(g);
    c.expect_true("two equations", cc.equations.size() == 2);
    if (cc.equations.size() == 2) {
      const Scalar expected[2][3] = {{12, 48, 72}, {12, 80, 96}};
      for (int i = 0; i < 2; ++i) {
        const auto& eq = cc.equations[static_cast<std::size_t>(i)];
        const std::string tag = eq.knot + ":";
        c.expect(tag + "J", eq.j, expected[i][0]);
        c.expect(tag + "Q", eq.q, expected[i][1]);
        c.expect(tag + "B", eq.b, expected[i][2]);
      }
    }
    c.expect("r1", cc.r1, 3);
    c.expect("r2", cc.r2, make_scalar(3, 4));
    c.finish();
  }
  {
    Criterion c{"2. form values on twist data at genus 5"};
    c.expect("Q(K)", q_form(tk, tk), 48);
    c.expect("J(K)", j_form(tk, tk), 12);
    c.expect("B(K)", b_form(tk, tk), 72);
    c.expect("Q(L)", q_form(tl, tl), 80);
    c.expect("J(L)", j_form(tl, tl), 12);
    c.expect("B(L)", b_form(tl, tl), 96);
    c.finish();
  }
  {
    Criterion c{"3. cross-route cocycle equality"};
    for (const auto* k : {&K, &L}) {
      const A2Vec t = twist_of(*k, g);
      const Scalar lam = casson_surgery(*k, 1);
      const Scalar tree_side = cocycle(lam, t, lam, t);
      const Scalar surgery_side = lambda2_surgery(*k, 2) - 2 * lambda2_surgery(*k, 1);
      const Scalar expected = k == &K ? 108 : 132;
      c.expect(k->name + ":tree", tree_side, expected);
      c.expect(k->name + ":surgery", surgery_side, expected);
    }
    c.finish();
  }
  {
    Criterion c{"4. knot-side scalars"};
    c.expect("c4(K)", Scalar(conway_coefficient(K.conway, 4)), 0);
    c.expect("c4(L)", Scalar(conway_coefficient(L.conway, 4)), 0);
    c.expect("v2(K)", Scalar(jones_h_derivative(K.jones, 2)), -6);
    c.expect("v2(L)", Scalar(jones_h_derivative(L.jones, 2)), 6);
    c.expect("lambda(K,1)", casson_surgery(K, 1), 1);
    c.expect("lambda(L,1)", casson_surgery(L, 1), -1);
    c.expect("lambda2(K,1)", lambda2_surgery(K, 1), 39);
    c.expect("lambda2(P)", poincare_sphere().lambda2, lambda2_surgery(K, 1));
    c.finish();
  }
  {
    Criterion c{"5. obstruction value"};
    c.expect("combo(1,39)", vanishing_combo({Scalar(1), Scalar(39)}), 24);
    c.finish();
  }
  {
    Criterion c{"6. coefficient derivation"};
    const AlphaR ar = solve_alpha_r();
    c.expect("alpha", ar.alpha, 18);
    c.expect("r", ar.r, -3);
    c.finish();
  }
  {
    Criterion c{"7. projection regressions"};
    struct Display {
      const A2Vec* tau;
      const char* tag;
      int s, t;
      const char* text;
    };
    const Display displays[] = {
        {&tk, "K", 0, 4, "2*T(b1,b2;b1,b2)"},
        {&tk, "K", 1, 3, "4*T(a1,-b1+b2;b1,b2) + 4*T(b1,a2;b1,b2)"},
        {&tk, "K", 4, 0, "2*T(a1,a2;a1,a2)"},
        {&tk, "K", 3, 1, "4*T(b1,a2;a1,a2) + 4*T(a1,-b1+b2;a1,a2)"},
        {&tl, "L", 0, 4, "2*T(b1,b2;b1,b2)"},
        {&tl, "L", 1, 3, "-4*T(a1,b1-b2;b1,b2) - 4*T(b1,a2;b1,b2)"},
        {&tl, "L", 4, 0, "2*T(a1,a2;a1,a2)"},
        {&tl, "L", 3, 1, "4*T(b1,a2;a1,a2) + 4*T(a1,b1-b2;a1,a2)"},
    };
    for (const auto& d : displays) {
      const S2L2Vec computed = project_bidegree(d.tau->representative(), d.s, d.t);
      const A2Vec want = a2_normalize(parse_tree_sum(d.text), g);
      const A2Vec got = a2_normalize(computed, g);
      c.expect_true(std::string("pi") + std::to_string(d.s) + std::to_string(d.t) + "(" + d.tag + ") = " +
                        to_string(got.representative()),
                    got == want);
    }
    c.shown.push_back("8 projections match");
    c.finish();
  }

  const std::vector<std::function<PropertyResult()>> suites = {
      [] { return prop_tree_multilinear_and_as(); },
      [] { return prop_ihx_is_lambda4(4); },
      [] { return prop_a2_normal_form(); },
      [] { return prop_contraction_kills_lambda4(4); },
      [] { return prop_nabla_kills_lambda4(); },
      [] { return prop_nabla_slot_symmetry(); },
      [] { return prop_eta_symmetric_and_perfect(); },
      [] { return prop_forms_gl_invariant(); },
      [] { return prop_trace_matches_contraction(4); },
      [] { return prop_trace_slot_independent(); },
      [] { return prop_forms_vanish_on_handlebody_images(); },
      [] { return prop_coinvariants_gl_invariant(4); },
      [] { return prop_coinvariants_match_contractions(); },
      [] { return prop_disjoint_supports(); },
      [] { return prop_genus_stability(); },
      [] { return prop_d2_additive(); },
      [] { return prop_reverse_involution(); },
      [] { return prop_jones_series(); },
  };
  char sub = 'a';
  for (const auto& run : suites) {
    const PropertyResult r = run();
    report(std::string("8") + sub++ + ". " + r.name, r.ok,
           r.ok ? std::to_string(r.cases) + " cases" : r.failure);
  }

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s (%d failing, %.2f s)\n", failures == 0 ? "ALL PASS" : "FAILURES", failures, secs);
  return failures == 0 ? 0 : 1;
}
