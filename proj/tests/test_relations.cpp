#include <doctest.h>

#include <set>

#include "annular/error.hpp"
#include "annular/ktheory.hpp"
#include "annular/relations.hpp"
#include "helpers.hpp"

using namespace annular;

namespace {

RelationInstance instance_with_lhs(RuleId id, const TangleWord& lhs) {
  for (const auto& r : relation_corpus(6, id))
    if (r.lhs == lhs) return r;
  FAIL("no instance with that left side");
  throw NoMatch("unreachable");
}

}  // namespace

TEST_CASE("rule names are unique role names") {
  std::set<std::string> names;
  for (int k = 0; k < kRuleCount; ++k) names.insert(rule_name(rule_from_index(k)));
  CHECK(names.size() == static_cast<std::size_t>(kRuleCount));
  CHECK(rule_name(RuleId::Reidemeister0) == "reidemeister-0");
  CHECK(rule_name(RuleId::WrapCap) == "wrap-cap");
}

TEST_CASE("every rule family has instances and each instance is boundary-consistent") {
  std::vector<int> count(kRuleCount, 0);
  for (const auto& r : relation_corpus(6)) {
    ++count[static_cast<int>(r.rule_id)];
    CHECK(r.lhs.source_size() == r.rhs.source_size());
    CHECK(r.lhs.target_size() == r.rhs.target_size());
    const RelationInstance back = r.reversed();
    CHECK(back.lhs == r.rhs);
    CHECK(back.rhs == r.lhs);
  }
  for (int k = 0; k < kRuleCount; ++k) {
    INFO(rule_name(rule_from_index(k)));
    CHECK(count[k] > 0);
  }
}

TEST_CASE("restricting the corpus to one family") {
  for (const auto& r : relation_corpus(5, RuleId::Pitchfork)) CHECK(r.rule_id == RuleId::Pitchfork);
}

TEST_CASE("cup then cap cancels by reidemeister-0") {
  const TangleWord w = WordBuilder(2).g(2).f(1);
  const RelationInstance r0 = instance_with_lhs(RuleId::Reidemeister0, w);
  CHECK(rewrite_step(w, r0, 0) == TangleWord(2));
}

TEST_CASE("crossing cancels its inverse by reidemeister-2") {
  const TangleWord w = WordBuilder(2).t(1, 2).t(1, 1);
  CHECK(rewrite_step(w, instance_with_lhs(RuleId::Reidemeister2, w), 0) == TangleWord(2));
}

TEST_CASE("rewrite reports a missing match") {
  const TangleWord good = WordBuilder(2).g(2).f(1);
  const RelationInstance r0 = instance_with_lhs(RuleId::Reidemeister0, good);
  const TangleWord w = WordBuilder(2).g(1).f(1);
  CHECK_THROWS_AS(rewrite_step(w, r0, 0), NoMatch);
  CHECK_THROWS_AS(rewrite_step(good, r0, 1), NoMatch);
  CHECK_THROWS_AS(rewrite_step(compose(TangleWord(WordBuilder(2).r()), good), r0, 0), NoMatch);
}

TEST_CASE("rewriting in the middle of a word") {
  const TangleWord w = WordBuilder(2).r().g(2).f(1).rp();
  const RelationInstance r0 = instance_with_lhs(RuleId::Reidemeister0, WordBuilder(2).g(2).f(1));
  CHECK(rewrite_step(w, r0, 1) == TangleWord(WordBuilder(2).r().rp()));
}

TEST_CASE("greedy simplification") {
  CHECK(greedy_simplify(WordBuilder(2).g(2).f(1).g(2).f(1)).empty());
  CHECK(greedy_simplify(WordBuilder(3).w(1, 2).w(1, 1)).empty());
  CHECK(greedy_simplify(WordBuilder(3).w(2, 1).w(2, 2)).empty());
  CHECK(greedy_simplify(WordBuilder(4).r().rp().rp().r()).empty());
  const TangleWord reduced = WordBuilder(2).g(1).t(2, 1).w(3, 1);
  CHECK(greedy_simplify(reduced) == reduced);
}

TEST_CASE("greedy simplification is idempotent and keeps the class") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const TangleWord w = testing::random_word(rng, 2 + trial % 3, 10, 0, 6);
    const TangleWord s = greedy_simplify(w);
    CHECK(s.length() <= w.length());
    CHECK(greedy_simplify(s) == s);
    CHECK(full_matrix(s) == full_matrix(w));
  }
}

TEST_CASE("relation instances hold on tensor powers up to size 6") {
  for (const auto& r : relation_corpus(6))
    for (int eps : {1, -1}) {
      INFO(rule_name(r.rule_id), " ", r.label, " eps=", eps);
      CHECK(full_matrix(r.lhs, eps) == full_matrix(r.rhs, eps));
    }
}
