// One line per acceptance criterion.  Exit status is 0 when every criterion
// passes or fails only in the documented way (see README, "Known failures").
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <json.hpp>

#include "annular/arc_algebra.hpp"
#include "annular/diagram.hpp"
#include "annular/error.hpp"
#include "annular/int_matrix.hpp"
#include "annular/ktheory.hpp"
#include "annular/matching.hpp"

using namespace annular;

namespace {

long binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

struct Outcome {
  bool pass = false;
  std::string detail;
  bool known = false;  // a failure with exactly the documented shape
};

Outcome counting() {
  int bad = 0;
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) bad += enumerate(m, n).size() != static_cast<std::size_t>(binomial(m + 2 * n, n));
  return {bad == 0, "25 cases, " + std::to_string(bad) + " mismatches"};
}

IntMatrix ext_table(int m, int n) {
  const auto ms = enumerate(m, n);
  const int k = static_cast<int>(ms.size());
  IntMatrix t(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t(i, j) = ext_poincare(ms[i], ms[j]).at_unit(1);
  return t;
}

Outcome ext_tables() {
  IntMatrix circ(4, 4);
  const int row[4] = {2, 1, 0, 1};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) circ(i, j) = row[(j - i + 4) % 4];
  // Enumeration order is not cyclic order, so compare after sorting by the
  // position of the cup.
  const auto ms = enumerate(2, 1);
  std::vector<int> by_pos(4);
  for (int i = 0; i < 4; ++i) by_pos[ms[i].cups()[0].end] = i;
  const IntMatrix t = ext_table(2, 1);
  bool ok2 = true;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) ok2 = ok2 && t(by_pos[i], by_pos[j]) == circ(i, j);

  const auto m0 = enumerate(0, 1);
  bool ok0 = ext_table(0, 1) == IntMatrix::from_rows({{2, 2}, {2, 2}});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const MLinkClass c = classify(compose_matchings(m0[i], m0[j]));
      ok0 = ok0 && c.good && c.omega == (i == j) && c.omega0 == (i != j);
    }
  return {ok2 && ok0, std::string("m=2 circulant(2,1,0,1) ") + (ok2 ? "ok" : "differs") +
                          ", m=0 all-2 with (1,0)/(0,1) " + (ok0 ? "ok" : "differs")};
}

Outcome relations() {
  const RelationReport rep = relation_report(8);
  std::ostringstream d;
  int instances = 0;
  for (const auto& f : rep.families) instances += f.instances;
  d << rep.families.size() << " families, " << instances << " instances, satisfying eps:";
  const auto signs = rep.satisfying_signs();
  for (int e : signs) d << (e > 0 ? " +1" : " -1");
  if (signs.empty()) {
    d << " none; failing:";
    for (const auto& f : rep.families)
      if (f.failures[0] && f.failures[1]) d << " " << rule_name(f.rule) << " (" << f.first_failure[0] << ")";
  }
  return {!signs.empty(), d.str()};
}

Outcome shadows() {
  long checked = 0, bad = 0;
  auto expect = [&](const TangleWord& w, const IntMatrix& want) {
    ++checked;
    bad += !(full_matrix(w) == want);
  };
  for (int k = 0; k <= 8; ++k) {
    const IntMatrix id = IntMatrix::identity(1 << k);
    if (k + 2 <= 8)
      for (int i = 1; i <= k + 1; ++i) {
        expect(WordBuilder(k).g(i).f(i), id.scaled(-2));
        if (i <= k) {
          expect(WordBuilder(k).g(i + 1).f(i), id);
          expect(WordBuilder(k).g(i).f(i + 1), id);
        }
        for (int l = 1; l <= 2; ++l) {
          if (i <= k) expect(WordBuilder(k).g(i).t(i + 1, l).f(i), id.scaled(-1));
          if (i >= 2) expect(WordBuilder(k).g(i).t(i - 1, l).f(i), id.scaled(-1));
        }
      }
    for (int i = 1; i < k; ++i)
      for (int l = 1; l <= 2; ++l) expect(WordBuilder(k).t(i, l).t(i, l), id);
  }
  return {bad == 0, std::to_string(checked) + " identities for k <= 8, " + std::to_string(bad) + " fail"};
}

Outcome basis_claim() {
  // Every generator commutes with sl2 at q = 1, so the classes can only span
  // the highest-weight vectors.  The failure is "known" when the rank is
  // exactly that bound everywhere.
  std::ostringstream d;
  int full = 0, total = 0;
  bool at_bound = true;
  for (int m = 0; m <= 8; ++m)
    for (int n = 0; m + 2 * n <= 8; ++n) {
      if (m == 0 && n == 0) continue;
      ++total;
      const int r = rank(irreducible_classes(m, n));
      const long want = binomial(m + 2 * n, n), bound = want - binomial(m + 2 * n, n - 1);
      full += r == want;
      at_bound = at_bound && r == bound;
      if (r != want) d << " (" << m << "," << n << "):" << r << "/" << want;
    }
  const bool pass = full == total;
  std::string detail = std::to_string(full) + " of " + std::to_string(total) + " blocks at full rank";
  if (!pass) detail += "; rank/expected" + d.str() + (at_bound ? "; every rank equals the highest-weight multiplicity" : "");
  return {pass, detail, !pass && at_bound};
}

// Recomputes a stored associativity counterexample from its JSON with the
// other routing and without the memo table.
bool assoc_reproduces(const std::string& json) {
  const auto j = nlohmann::json::parse(json);
  auto elem = [](const nlohmann::json& b) { return ArcAlgebraElement::of(basis_diagram_from_json(b.dump())); };
  SurgeryOptions sub;
  sub.routing = Routing::Subdivided;
  const auto x = elem(j.at("x")), y = elem(j.at("y")), z = elem(j.at("z"));
  const auto left = multiply(multiply(x, y, sub), z, sub), right = multiply(x, multiply(y, z, sub), sub);
  return !(left == right) && nlohmann::json::parse(left.to_json()) == j.at("xy_z") &&
         nlohmann::json::parse(right.to_json()) == j.at("x_yz");
}

Outcome arc_properties() {
  std::ostringstream d, ce;
  bool ok = true;
  int failing = 0;
  for (auto [m, n] : {std::pair{0, 1}, {0, 2}, {1, 1}, {2, 1}, {3, 1}})
    for (auto s : {PropertySuite::Order, PropertySuite::Assoc, PropertySuite::Unit, PropertySuite::Degree,
                   PropertySuite::Ranks}) {
      const PropertyResult r = check_property(m, n, s);
      if (r.passed()) continue;
      ++failing;
      d << "; " << suite_name(s) << " fails at (" << m << "," << n << ") in " << r.failures << " of " << r.cases
        << " cases";
      ce << "  counterexample " << r.counterexample << "\n";
      SurgeryOptions sub;
      sub.routing = Routing::Subdivided;
      const PropertyResult again = check_property(m, n, s, sub);
      bool reproduced = again.failures == r.failures && again.counterexample == r.counterexample;
      if (s == PropertySuite::Assoc) reproduced = reproduced && assoc_reproduces(r.counterexample);
      d << (reproduced ? " (reproduced)" : " (NOT reproducible)");
      ok = ok && reproduced;
    }
  std::string detail = "25 suite runs, no crash, " + std::to_string(failing) + " with counterexamples" + d.str();
  if (failing) detail += "; a reproducible counterexample is an accepted outcome, the multiplication is not associative";
  if (!ce.str().empty()) detail += "\n" + ce.str().substr(0, ce.str().size() - 1);
  return {ok, detail};
}

Outcome one_cup() {
  int blocks = 0, bad = 0;
  for (int m = 1; m <= 8; ++m)
    for (const Matching& a : enumerate(m, 1)) {
      ++blocks;
      const auto one = make_basis_diagram(a, a, {LoopLabel::One}), x = make_basis_diagram(a, a, {LoopLabel::Ex});
      const auto e1 = ArcAlgebraElement::of(one), ex = ArcAlgebraElement::of(x);
      const bool good = multiply(e1, e1) == e1 && multiply(e1, ex) == ex && multiply(ex, e1) == ex &&
                        multiply(ex, ex).is_zero() && x.degree() == 2 && one.degree() == 0;
      bad += !good;
    }
  return {bad == 0, std::to_string(blocks) + " blocks for 1 <= m <= 8, " + std::to_string(bad) + " differ"};
}

Outcome euler() {
  std::ostringstream d;
  bool ok = true;
  for (auto [m, n] : {std::pair{0, 1}, {0, 2}, {2, 1}}) {
    const auto rep = euler_pairing_check(m, n);
    ok = ok && rep.passed();
    d << "(" << m << "," << n << "): " << rep.entries.size() << " pairs, sign "
      << (rep.global_sign > 0 ? "+1" : rep.global_sign < 0 ? "-1" : "inconsistent") << "; ";
  }
  std::string s = d.str();
  return {ok, s.substr(0, s.size() - 2)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"matching counts", counting},
      {"Ext tables at n=1", ext_tables},
      {"tangle relations on tensor powers", relations},
      {"decategorified shadows", shadows},
      {"irreducible classes form a basis", basis_claim},
      {"arc algebra properties", arc_properties},
      {"one-cup subalgebra", one_cup},
      {"Euler pairing", euler},
  };
  int passed = 0, known = 0, unexpected = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("crashed: ") + e.what()};
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first << " ["
              << ms << " ms] " << o.detail << "\n";
    if (o.pass) ++passed;
    else if (o.known) ++known;
    else ++unexpected;
  }
  std::cout << passed << " of " << criteria.size() << " criteria pass";
  if (known) std::cout << "; " << known << " fail(s) as documented";
  if (unexpected) std::cout << "; " << unexpected << " unexpected failure(s)";
  std::cout << "\n";
  return unexpected ? 1 : 0;
}
