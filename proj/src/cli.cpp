#include "annular/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>

#include "annular/arc_algebra.hpp"
#include "annular/diagram.hpp"
#include "annular/error.hpp"
#include "annular/ktheory.hpp"
#include "annular/matching.hpp"
#include "annular/relations.hpp"

namespace annular {

namespace {

constexpr int kMaxSize = 24;

Matching matching_arg(const std::string& signs, int m, int n, const std::string& what) {
  Matching a = from_signs(signs);
  if (a.m() != m || a.n() != n)
    throw ParseError(what + " '" + signs + "' is an (" + std::to_string(a.m()) + ", " +
                     std::to_string(a.m() + 2 * a.n()) + ") matching, expected m=" + std::to_string(m) +
                     " n=" + std::to_string(n));
  return a;
}

// A basis diagram, or an element {"terms":[{"coeff":c,"diagram":{...}}]}.
ArcAlgebraElement element_arg(const std::string& text, int m, int n) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("element JSON: ") + e.what());
  }
  ArcAlgebraElement out(m, n);
  if (!j.is_object() || !j.contains("terms")) {
    out.add(basis_diagram_from_json(text), 1);
    return out;
  }
  try {
    for (const auto& t : j.at("terms")) out.add(basis_diagram_from_json(t.at("diagram").dump()), t.at("coeff").get<std::int64_t>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("element JSON: ") + e.what());
  }
  return out;
}

std::string sign_label(int eps) { return eps > 0 ? "+1" : "-1"; }

int cmd_enumerate(int m, int n, bool json, std::ostream& out) {
  for (const auto& a : enumerate(m, n)) out << (json ? matching_to_json(a) : a.signs()) << "\n";
  return kExitOk;
}

int cmd_extdim(int m, int n, const std::string& alpha, const std::string& beta, bool poincare,
               std::ostream& out) {
  const Laurent p = ext_poincare(matching_arg(alpha, m, n, "alpha"), matching_arg(beta, m, n, "beta"));
  if (poincare) out << p.to_string() << "\n";
  else out << p.at_unit(1) << "\n";
  return kExitOk;
}

int cmd_multiply(int m, int n, const std::string& x, const std::string& y, std::ostream& out) {
  out << multiply(element_arg(x, m, n), element_arg(y, m, n)).to_json() << "\n";
  return kExitOk;
}

int cmd_check(int m, int n, const std::string& suite, std::ostream& out) {
  const PropertyResult r = check_property(m, n, parse_suite(suite));
  nlohmann::json j = {{"suite", suite}, {"m", m}, {"n", n}, {"cases", r.cases}, {"failures", r.failures},
                      {"passed", r.passed()}};
  if (!r.passed()) j["counterexample"] = nlohmann::json::parse(r.counterexample);
  out << j.dump() << "\n";
  return r.passed() ? kExitOk : kExitCounterexample;
}

int cmd_verify_relations(int max_size, bool json, std::ostream& out) {
  const RelationReport rep = relation_report(max_size);
  const auto signs = rep.satisfying_signs();
  if (json) {
    for (const auto& f : rep.families)
      out << nlohmann::json{{"family", rule_name(f.rule)},
                            {"instances", f.instances},
                            {"failures_plus", f.failures[0]},
                            {"failures_minus", f.failures[1]}}
                 .dump()
          << "\n";
    out << nlohmann::json{{"max_size", max_size}, {"satisfying_signs", signs}}.dump() << "\n";
  } else {
    char line[128];
    std::snprintf(line, sizeof line, "%-22s %9s  %-8s %-8s\n", "family", "instances", "eps=+1", "eps=-1");
    out << line;
    for (const auto& f : rep.families) {
      std::snprintf(line, sizeof line, "%-22s %9d  %-8s %-8s\n", rule_name(f.rule).c_str(), f.instances,
                    f.failures[0] ? "FAIL" : "pass", f.failures[1] ? "FAIL" : "pass");
      out << line;
      for (int slot = 0; slot < 2; ++slot)
        if (f.failures[slot])
          out << "  eps=" << sign_label(slot == 0 ? 1 : -1) << " first failure: " << f.first_failure[slot] << "\n";
    }
    out << "satisfying eps:";
    if (signs.empty()) out << " none";
    for (int e : signs) out << " " << sign_label(e);
    out << "\n";
  }
  return signs.empty() ? kExitCounterexample : kExitOk;
}

int cmd_decat(const std::string& word, int m, int eps, std::ostream& out) {
  const IntMatrix M = psi_hat(parse_word(word), m, eps);
  for (const auto& row : M.to_rows()) out << nlohmann::json(row).dump() << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Annular crossingless matchings, affine tangles and their arc algebras"};
  app.name("annular");
  app.require_subcommand(1);

  int m = 0, n = 0, max_size = 8, eps = kRotationSign;
  bool json = false, text = false, poincare = false;
  std::string alpha, beta, x, y, suite, word;
  auto size_opts = [&](CLI::App* sub) {
    sub->add_option("--m", m, "number of rays")->required()->check(CLI::Range(0, kMaxSize));
    sub->add_option("--n", n, "number of cups")->required()->check(CLI::Range(0, kMaxSize / 2));
  };

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list every (m, m+2n) crossingless matching");
  size_opts(enumerate_cmd);
  auto* json_flag = enumerate_cmd->add_flag("--json", json, "one JSON object per line");
  enumerate_cmd->add_flag("--text", text, "one sign string per line (default)")->excludes(json_flag);

  auto* extdim_cmd = app.add_subcommand("extdim", "total dimension of Ext between two irreducibles");
  size_opts(extdim_cmd);
  extdim_cmd->add_option("--alpha", alpha, "sign string")->required();
  extdim_cmd->add_option("--beta", beta, "sign string")->required();
  extdim_cmd->add_flag("--poincare", poincare, "print the graded dimension as a Laurent polynomial");

  auto* multiply_cmd = app.add_subcommand("multiply", "product of two arc algebra elements");
  size_opts(multiply_cmd);
  multiply_cmd->add_option("--x", x, "basis diagram or element JSON")->required();
  multiply_cmd->add_option("--y", y, "basis diagram or element JSON")->required();

  auto* check_cmd = app.add_subcommand("check", "exhaustive property sweep of the arc algebra");
  size_opts(check_cmd);
  check_cmd->add_option("--suite", suite, "property to check")
      ->required()
      ->check(CLI::IsMember({"assoc", "unit", "order", "degree", "ranks"}));

  auto* verify_cmd = app.add_subcommand("verify-relations", "check every tangle relation on tensor powers");
  verify_cmd->add_option("--max-size", max_size, "largest boundary size")->check(CLI::Range(0, 10));
  verify_cmd->add_flag("--json", json, "one JSON object per family");

  auto* decat_cmd = app.add_subcommand("decat", "weight-space matrix of a tangle word");
  decat_cmd->add_option("--word", word, "\"tangle P -> Q: tokens\"")->required();
  decat_cmd->add_option("--m", m, "weight")->required()->check(CLI::Range(-64, 64));
  decat_cmd->add_option("--eps", eps, "rotation sign")->check(CLI::IsMember({1, -1}));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*enumerate_cmd) return cmd_enumerate(m, n, json, out);
    if (*extdim_cmd) return cmd_extdim(m, n, alpha, beta, poincare, out);
    if (*multiply_cmd) return cmd_multiply(m, n, x, y, out);
    if (*check_cmd) return cmd_check(m, n, suite, out);
    if (*verify_cmd) return cmd_verify_relations(max_size, json, out);
    if (*decat_cmd) return cmd_decat(word, m, eps, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BoundaryMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ArityMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MixedContext& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConjectureViolation& e) {
    err << "counterexample: " << e.what() << "\n";
    return kExitCounterexample;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitCounterexample;
  }
  return kExitUsage;
}

}  // namespace annular
