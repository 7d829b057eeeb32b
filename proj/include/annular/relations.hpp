#pragma once

#include <string>
#include <vector>

#include "annular/tangle.hpp"

namespace annular {

// The defining relations of framed affine tangles, followed by the four wrap
// relations that replace the rotation moves, and the identity expressing r via
// the wrap generator.
enum class RuleId {
  Reidemeister0,
  Reidemeister1,
  Reidemeister2,
  Reidemeister3,
  CupCup,
  CapCap,
  CupCap,
  CupCrossing,
  CapCrossing,
  CrossingCrossing,
  Pitchfork,
  RotationInverse,
  CapRotation,
  CupRotation,
  CrossingRotation,
  TwistTwist,
  TwistCup,
  TwistCap,
  TwistCrossing,
  TwistCrossingOther,
  TwistRotation,
  WrapCommute,
  WrapCap,
  WrapCup,
  WrapBraid,
  RotationViaWrap,
};

inline constexpr int kRuleCount = 26;

std::string rule_name(RuleId id);
RuleId rule_from_index(int k);

struct RelationInstance {
  TangleWord lhs;
  TangleWord rhs;
  RuleId rule_id;
  std::string label;  // parameters, e.g. "n=4 i=2 l=1"

  RelationInstance(TangleWord l, TangleWord r, RuleId id, std::string lab);
  RelationInstance reversed() const;
};

// Every instance of every rule whose words only touch boundary sizes <= max_size.
std::vector<RelationInstance> relation_corpus(int max_size);
std::vector<RelationInstance> relation_corpus(int max_size, RuleId only);

// Replaces the factor gens[position .. position+|lhs|) by rule.rhs.
TangleWord rewrite_step(const TangleWord& w, const RelationInstance& rule, std::size_t position);

// Applies length-decreasing rules (cup/cap cancellation, crossing
// cancellation, twist cancellation, rotation cancellation and contraction of
// the crossing word for r) until none applies.
TangleWord greedy_simplify(const TangleWord& w);

}  // namespace annular
