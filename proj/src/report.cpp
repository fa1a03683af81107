#include "torelli/report.hpp"

#include <stdexcept>

#include "json.hpp"
#include "torelli/forms.hpp"
#include "torelli/parse.hpp"
#include "torelli/surgery.hpp"
#include "torelli/tree_algebra.hpp"

namespace torelli {
namespace {

void add_value(ReplicationReport& r, std::string name, const std::string& expected, const std::string& computed) {
  r.checks.push_back({std::move(name), expected, computed, expected == computed});
}

void add_value(ReplicationReport& r, std::string name, long expected, const Scalar& computed) {
  add_value(r, std::move(name), std::to_string(expected), to_string(computed));
}

std::string pair_string(const Scalar& x, const Scalar& y) { return "(" + to_string(x) + ", " + to_string(y) + ")"; }

std::string equation_string(const CocycleEquation& eq) {
  return to_string(eq.j) + "*r1 + " + to_string(eq.q) + "*r2 = " + to_string(eq.b);
}

struct TwistData {
  const KnotRecord* knot;
  const char* tag;
  A2Vec tau;
};

void add_projection(ReplicationReport& r, const TwistData& d, int s, int t, const char* display, int genus) {
  const S2L2Vec computed = project_bidegree(d.tau.representative(), s, t);
  const bool same = a2_equal(parse_tree_sum(display), computed, genus);
  r.checks.push_back({"pi" + std::to_string(s) + std::to_string(t) + "(" + d.tag + ")", display,
                      to_string(a2_normalize(computed, genus).representative()), same});
}

}  // namespace

bool ReplicationReport::overall_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

ReplicationReport build_report(int genus) {
  if (genus < 5) throw std::invalid_argument("report needs genus >= 5");
  ReplicationReport r;
  r.genus = genus;

  const KnotRecord& K = trefoil();
  const KnotRecord& L = figure_eight();
  auto twist = [genus](const KnotRecord& k, int g) {
    return tau2_bscc_twist(k.bscc_basis->first, k.bscc_basis->second, g);
  };
  const TwistData dk{&K, "K", twist(K, genus)};
  const TwistData dl{&L, "L", twist(L, genus)};

  const CocycleCoefficients cc = cocycle_coefficients(genus);
  add_value(r, "equation(K)", "12*r1 + 48*r2 = 72", equation_string(cc.equations.at(0)));
  add_value(r, "equation(L)", "12*r1 + 80*r2 = 96", equation_string(cc.equations.at(1)));
  add_value(r, "r1,r2", "(3, 3/4)", pair_string(cc.r1, cc.r2));

  add_value(r, "Q(K,K)", 48, q_form(dk.tau, dk.tau));
  add_value(r, "J(K,K)", 12, j_form(dk.tau, dk.tau));
  add_value(r, "B(K,K)", 72, b_form(dk.tau, dk.tau));
  add_value(r, "Q(L,L)", 80, q_form(dl.tau, dl.tau));
  add_value(r, "J(L,L)", 12, j_form(dl.tau, dl.tau));
  add_value(r, "B(L,L)", 96, b_form(dl.tau, dl.tau));

  for (const TwistData* d : {&dk, &dl}) {
    const long expected = d == &dk ? 108 : 132;
    const Scalar lam = casson_surgery(*d->knot, 1);
    const std::string tag = d->tag;
    add_value(r, "C(" + tag + "," + tag + ") forms", expected, cocycle(lam, d->tau, lam, d->tau));
    add_value(r, "C(" + tag + "," + tag + ") surgery", expected,
              lambda2_surgery(*d->knot, 2) - 2 * lambda2_surgery(*d->knot, 1));
  }

  add_value(r, "c4(K)", 0, Scalar(conway_coefficient(K.conway, 4)));
  add_value(r, "c4(L)", 0, Scalar(conway_coefficient(L.conway, 4)));
  add_value(r, "v2(K)", -6, Scalar(jones_h_derivative(K.jones, 2)));
  add_value(r, "v2(L)", 6, Scalar(jones_h_derivative(L.jones, 2)));
  add_value(r, "lambda(S3_K,1)", 1, casson_surgery(K, 1));
  add_value(r, "lambda(S3_L,1)", -1, casson_surgery(L, 1));
  add_value(r, "lambda2(S3_K,1)", 39, lambda2_surgery(K, 1));
  add_value(r, "lambda2(S3_K,1) = lambda2(P)", to_string(poincare_sphere().lambda2), to_string(lambda2_surgery(K, 1)));
  add_value(r, "poincare_obstruction", 24, vanishing_combo(poincare_sphere()));

  const AlphaR ar = solve_alpha_r();
  add_value(r, "alpha,r", "(18, -3)", pair_string(ar.alpha, ar.r));

  add_projection(r, dk, 0, 4, "2*T(b1,b2;b1,b2)", genus);
  add_projection(r, dk, 1, 3, "4*T(a1,-b1+b2;b1,b2) + 4*T(b1,a2;b1,b2)", genus);
  add_projection(r, dk, 4, 0, "2*T(a1,a2;a1,a2)", genus);
  add_projection(r, dk, 3, 1, "4*T(b1,a2;a1,a2) + 4*T(a1,-b1+b2;a1,a2)", genus);
  add_projection(r, dl, 0, 4, "2*T(b1,b2;b1,b2)", genus);
  add_projection(r, dl, 1, 3, "-4*T(a1,b1-b2;b1,b2) - 4*T(b1,a2;b1,b2)", genus);
  add_projection(r, dl, 4, 0, "2*T(a1,a2;a1,a2)", genus);
  add_projection(r, dl, 3, 1, "4*T(b1,a2;a1,a2) + 4*T(a1,b1-b2;a1,a2)", genus);

  // Stability: the same form values one genus up.
  for (const TwistData* d : {&dk, &dl}) {
    const A2Vec up = twist(*d->knot, genus + 1);
    const std::string tag = d->tag;
    const std::string lo = pair_string(q_form(d->tau, d->tau), j_form(d->tau, d->tau));
    const std::string hi = pair_string(q_form(up, up), j_form(up, up));
    add_value(r, "stability (Q,J)(" + tag + "," + tag + ") genus " + std::to_string(genus + 1), lo, hi);
  }
  return r;
}

std::string report_text(const ReplicationReport& r) {
  std::string out = "replication report, genus " + std::to_string(r.genus) + "\n";
  for (const auto& c : r.checks)
    out += std::string(c.pass ? "PASS " : "FAIL ") + c.name + ": expected " + c.expected + ", computed " +
           c.computed + "\n";
  out += r.overall_pass() ? "overall: PASS\n" : "overall: FAIL\n";
  return out;
}

std::string report_json(const ReplicationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
  nlohmann::json doc{{"genus", r.genus}, {"overall_pass", r.overall_pass()}, {"checks", checks}};
  return doc.dump(2);
}

ReplicationReport report_from_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    ReplicationReport r;
    r.genus = doc.at("genus").get<int>();
    for (const auto& c : doc.at("checks"))
      r.checks.push_back({c.at("name").get<std::string>(), c.at("expected").get<std::string>(),
                          c.at("computed").get<std::string>(), c.at("pass").get<bool>()});
    if (doc.at("overall_pass").get<bool>() != r.overall_pass())
      throw std::invalid_argument("overall_pass disagrees with the checks");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

}  // namespace torelli
