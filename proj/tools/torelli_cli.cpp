// Command-line front end: replication report, cocycle values, surgery
// invariants, coinvariant reduction and Lagrangian traces.
//
// Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage or parse error.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "torelli/coinvariants.hpp"
#include "torelli/forms.hpp"
#include "torelli/knot_io.hpp"
#include "torelli/parse.hpp"
#include "torelli/report.hpp"
#include "torelli/surgery.hpp"
#include "torelli/tree_algebra.hpp"

namespace {

using namespace torelli;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

KnotRecord resolve_knot(const std::string& arg) {
  if (const KnotRecord* k = builtin_knot(arg)) return *k;
  if (std::filesystem::exists(arg)) return load_knot_document(arg);
  throw UsageError("unknown knot '" + arg + "' (built-ins: trefoil, figure-eight)");
}

// A twist operand: a BSCC twist given by its surface basis, and its Casson value.
struct TwistOperand {
  HVec x, y;
  Scalar lambda;
};

TwistOperand resolve_twist(const std::string& arg, const std::optional<std::string>& lambda_flag) {
  TwistOperand op;
  if (arg.rfind("twist(", 0) == 0) {
    std::tie(op.x, op.y) = parse_twist(arg);
    op.lambda = 0;
  } else {
    const KnotRecord k = resolve_knot(arg);
    if (!k.bscc_basis) throw UsageError("knot '" + k.name + "' has no bscc_basis");
    op.x = k.bscc_basis->first;
    op.y = k.bscc_basis->second;
    op.lambda = casson_surgery(k, 1);
  }
  if (lambda_flag) op.lambda = parse_scalar(*lambda_flag);
  return op;
}

void require_genus(int genus, int needed) {
  if (genus < needed)
    throw UsageError("genus " + std::to_string(genus) + " too small, need at least " + std::to_string(needed));
}

bool want_json(const std::string& format) { return format == "json"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with tree algebras, Lagrangian traces and surgery invariants"};
  app.require_subcommand(1);

  int genus = kDefaultGenus;
  std::string format = "text";
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--genus,-g", genus, "ambient genus")->capture_default_str();
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  };

  auto* report = app.add_subcommand("report", "recompute the reference values, exit 0 iff all match");
  add_common(report);

  std::string left, right;
  std::optional<std::string> lambda_left, lambda_right;
  auto* cocycle_cmd = app.add_subcommand("cocycle", "Q, J, B and the lambda_2 cocycle of two twists");
  cocycle_cmd->add_option("left", left, "knot name, knot document or twist(x; y)")->required();
  cocycle_cmd->add_option("right", right, "knot name, knot document or twist(x; y)")->required();
  cocycle_cmd->add_option("--lambda-left", lambda_left, "Casson value of the left twist");
  cocycle_cmd->add_option("--lambda-right", lambda_right, "Casson value of the right twist");
  add_common(cocycle_cmd);

  std::string knot_arg;
  long n = 1;
  auto* surgery_cmd = app.add_subcommand("surgery", "lambda, lambda_2, d_2 and lambda_2 + 3 lambda - 18 lambda^2 of 1/n surgery");
  surgery_cmd->add_option("knot", knot_arg, "trefoil, figure-eight or a knot document path")->required();
  surgery_cmd->add_option("-n", n, "surgery parameter (1/n)")->capture_default_str();
  surgery_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string tensor_text;
  auto* coinv_cmd = app.add_subcommand("coinvariants", "reduce a tensor to chord generators of the GL_g(Z) coinvariants");
  coinv_cmd->add_option("tensor", tensor_text, "e.g. a1*a1*b1*b1")->required();
  add_common(coinv_cmd);

  std::string which, trees_text;
  auto* trace_cmd = app.add_subcommand("trace", "Lagrangian trace (A, B) or contraction C_S (C) of a sum of trees");
  trace_cmd->add_option("which", which, "A, B or C")->required()->check(CLI::IsMember({"A", "B", "C"}));
  trace_cmd->add_option("trees", trees_text, "e.g. \"T(b2,b3;b4,a2) - T(b2,b4;b3,a2)\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*report) {
      require_genus(genus, 5);
      const ReplicationReport r = build_report(genus);
      std::cout << (want_json(format) ? report_json(r) + "\n" : report_text(r));
      return r.overall_pass() ? 0 : kExitFail;
    }

    if (*cocycle_cmd) {
      const TwistOperand x = resolve_twist(left, lambda_left);
      const TwistOperand y = resolve_twist(right, lambda_right);
      require_genus(genus, std::max({max_index(x.x), max_index(x.y), max_index(y.x), max_index(y.y), 1}));
      const A2Vec tx = tau2_bscc_twist(x.x, x.y, genus);
      const A2Vec ty = tau2_bscc_twist(y.x, y.y, genus);
      const Scalar q = q_form(tx, ty), j = j_form(tx, ty), b = b_form(tx, ty);
      const Scalar c = cocycle(x.lambda, tx, y.lambda, ty);
      if (want_json(format)) {
        nlohmann::json doc{{"Q", to_string(q)}, {"J", to_string(j)}, {"B", to_string(b)}, {"C", to_string(c)}};
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "Q = " << to_string(q) << "\nJ = " << to_string(j) << "\nB = " << to_string(b)
                  << "\nC = " << to_string(c) << "\n";
      }
      return 0;
    }

    if (*surgery_cmd) {
      const KnotRecord k = resolve_knot(knot_arg);
      const SphereInvariants m = surgery_invariants(k, n);
      if (want_json(format)) {
        nlohmann::json doc{{"knot", k.name},
                            {"n", n},
                            {"lambda", to_string(m.lambda)},
                            {"lambda2", to_string(m.lambda2)},
                            {"d2", to_string(d2_value(m))},
                            {"combo", to_string(vanishing_combo(m))}};
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "lambda = " << to_string(m.lambda) << "\nlambda2 = " << to_string(m.lambda2)
                  << "\nd2 = " << to_string(d2_value(m)) << "\ncombo = " << to_string(vanishing_combo(m)) << "\n";
      }
      return 0;
    }

    if (*coinv_cmd) {
      const ChordVec out = coinvariant_reduce(parse_tensor(tensor_text), genus);
      if (want_json(format)) {
        nlohmann::json doc = nlohmann::json::object();
        for (const auto& [chord, coeff] : out) doc[to_string(chord)] = to_string(coeff);
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << to_string(out) << "\n";
      }
      return 0;
    }

    if (*trace_cmd) {
      const S2L2Vec trees = parse_tree_sum(trees_text);
      const S2HVec out = which == "A" ? trace_A(trees) : which == "B" ? trace_B(trees) : contract_cs(trees);
      std::cout << to_string(out) << "\n";
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const KnotDocumentError& e) {
    std::cerr << "knot document: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
