#include "annular/relations.hpp"

#include <array>
#include <functional>
#include <optional>

#include "annular/error.hpp"

namespace annular {

namespace {

using B = WordBuilder;

std::string lab(int n, int i = 0, int k = 0, int l = 0) {
  std::string s = "n=" + std::to_string(n);
  if (i) s += " i=" + std::to_string(i);
  if (k) s += " k=" + std::to_string(k);
  if (l) s += " l=" + std::to_string(l);
  return s;
}

// Index of the twisted strand after a cup or cap at j removes/inserts two
// strands ahead of it.
int shift_past(int i, int j) { return i < j ? i : i - 2; }

using Sink = std::function<void(TangleWord, TangleWord, RuleId, std::string)>;

void gen_reidemeister(int N, const Sink& add) {
  for (int n = 3; n <= N; ++n)
    for (int i = 1; i <= n - 1; ++i) {
      add(B(n - 2).g(i + 1).f(i), TangleWord(n - 2), RuleId::Reidemeister0, lab(n, i) + " a");
      add(B(n - 2).g(i).f(i + 1), TangleWord(n - 2), RuleId::Reidemeister0, lab(n, i) + " b");
    }
  for (int n = 3; n <= N; ++n)
    for (int l = 1; l <= 2; ++l) {
      for (int i = 1; i <= n - 2; ++i)
        add(B(n - 2).g(i).t(i + 1, l).f(i), B(n - 2).w(i, l), RuleId::Reidemeister1,
            lab(n, i, 0, l) + " +");
      for (int i = 2; i <= n - 1; ++i)
        add(B(n - 2).g(i).t(i - 1, l).f(i), B(n - 2).w(i - 1, l), RuleId::Reidemeister1,
            lab(n, i, 0, l) + " -");
    }
  for (int n = 2; n <= N; ++n)
    for (int i = 1; i <= n - 1; ++i) {
      add(B(n).t(i, 1).t(i, 2), TangleWord(n), RuleId::Reidemeister2, lab(n, i) + " a");
      add(B(n).t(i, 2).t(i, 1), TangleWord(n), RuleId::Reidemeister2, lab(n, i) + " b");
    }
  for (int n = 3; n <= N; ++n)
    for (int i = 1; i <= n - 2; ++i)
      for (int l = 1; l <= 2; ++l)
        add(B(n).t(i, l).t(i + 1, l).t(i, l), B(n).t(i + 1, l).t(i, l).t(i + 1, l),
            RuleId::Reidemeister3, lab(n, i, 0, l));
}

void gen_isotopies(int N, const Sink& add) {
  for (int n = 2; n + 2 <= N; ++n)
    for (int k = 2; k <= n + 1; ++k)
      for (int i = 1; i + k <= n + 1; ++i) {
        add(B(n - 2).g(i).g(i + k), B(n - 2).g(i + k - 2).g(i), RuleId::CupCup, lab(n, i, k));
        add(B(n + 2).f(i).f(i + k - 2), B(n + 2).f(i + k).f(i), RuleId::CapCap, lab(n, i, k));
        add(B(n).f(i).g(i + k - 2), B(n).g(i + k).f(i), RuleId::CupCap, lab(n, i, k) + " a");
        add(B(n).f(i + k - 2).g(i), B(n).g(i).f(i + k), RuleId::CupCap, lab(n, i, k) + " b");
      }
  for (int n = 4; n <= N; ++n)
    for (int k = 2; k <= n; ++k)
      for (int i = 1; i + k <= n - 1; ++i)
        for (int q = 1; q <= 2; ++q) {
          add(B(n - 2).t(i + k - 2, q).g(i), B(n - 2).g(i).t(i + k, q), RuleId::CupCrossing,
              lab(n, i, k, q) + " a");
          add(B(n - 2).t(i, q).g(i + k), B(n - 2).g(i + k).t(i, q), RuleId::CupCrossing,
              lab(n, i, k, q) + " b");
          add(B(n).t(i + k, q).f(i), B(n).f(i).t(i + k - 2, q), RuleId::CapCrossing,
              lab(n, i, k, q) + " a");
          add(B(n).t(i, q).f(i + k), B(n).f(i + k).t(i, q), RuleId::CapCrossing,
              lab(n, i, k, q) + " b");
        }
  for (int n = 2; n <= N; ++n)
    for (int k = 2; k <= n; ++k)
      for (int i = 1; i + k <= n - 1; ++i)
        for (int p = 1; p <= 2; ++p)
          for (int q = 1; q <= 2; ++q)
            add(B(n).t(i + k, q).t(i, p), B(n).t(i, p).t(i + k, q), RuleId::CrossingCrossing,
                lab(n, i, k) + " p=" + std::to_string(p) + " q=" + std::to_string(q));
  for (int n = 3; n <= N; ++n)
    for (int i = 1; i + 1 <= n - 1; ++i) {
      add(B(n - 2).g(i + 1).t(i, 1), B(n - 2).g(i).t(i + 1, 2), RuleId::Pitchfork, lab(n, i) + " a");
      add(B(n - 2).g(i + 1).t(i, 2), B(n - 2).g(i).t(i + 1, 1), RuleId::Pitchfork, lab(n, i) + " b");
    }
}

void gen_rotations(int N, const Sink& add) {
  for (int n = 1; n <= N; ++n) {
    add(B(n).r().rp(), TangleWord(n), RuleId::RotationInverse, lab(n) + " a");
    add(B(n).rp().r(), TangleWord(n), RuleId::RotationInverse, lab(n) + " b");
  }
  for (int n = 2; n <= N; ++n) {
    for (int i = 1; n >= 3 && i <= n - 2; ++i) {
      add(B(n).r().f(i).rp(), B(n).f(i + 1), RuleId::CapRotation, lab(n, i));
      add(B(n - 2).r().g(i).rp(), B(n - 2).g(i + 1), RuleId::CupRotation, lab(n, i));
      for (int l = 1; l <= 2; ++l)
        add(B(n).r().t(i, l).rp(), B(n).t(i + 1, l), RuleId::CrossingRotation, lab(n, i, 0, l));
    }
    add(B(n).r().r().f(n - 1), B(n).f(1), RuleId::CapRotation, lab(n) + " square");
    add(B(n - 2).g(n - 1).rp().rp(), B(n - 2).g(1), RuleId::CupRotation, lab(n) + " square");
    for (int l = 1; l <= 2; ++l)
      add(B(n).r().r().t(n - 1, l).rp().rp(), B(n).t(1, l), RuleId::CrossingRotation,
          lab(n, 0, 0, l) + " square");
  }
}

void gen_twists(int N, const Sink& add) {
  for (int n = 1; n <= N; ++n)
    for (int i = 1; i <= n; ++i) {
      add(B(n).w(i, 2).w(i, 1), TangleWord(n), RuleId::TwistTwist, lab(n, i) + " a");
      add(B(n).w(i, 1).w(i, 2), TangleWord(n), RuleId::TwistTwist, lab(n, i) + " b");
      for (int j = i + 1; j <= n; ++j)
        for (int l = 1; l <= 2; ++l)
          for (int k = 1; k <= 2; ++k)
            add(B(n).w(j, k).w(i, l), B(n).w(i, l).w(j, k), RuleId::TwistTwist,
                lab(n, i, 0, l) + " j=" + std::to_string(j) + " k=" + std::to_string(k));
    }
  for (int n = 2; n <= N; ++n)
    for (int k = 1; k <= 2; ++k) {
      for (int i = 1; i <= n - 1; ++i) {
        add(B(n - 2).g(i).w(i, k), B(n - 2).g(i).w(i + 1, k), RuleId::TwistCup, lab(n, i, k));
        add(B(n).w(i, k).f(i), B(n).w(i + 1, k).f(i), RuleId::TwistCap, lab(n, i, k));
        add(B(n).t(i, 1).w(i, k), B(n).w(i + 1, k).t(i, 1), RuleId::TwistCrossing, lab(n, i, k));
        add(B(n).t(i, 2).w(i, k), B(n).w(i + 1, k).t(i, 2), RuleId::TwistCrossing,
            lab(n, i, k) + " under");
        add(B(n).t(i, 1).w(i + 1, k), B(n).w(i, k).t(i, 1), RuleId::TwistCrossingOther,
            lab(n, i, k));
        add(B(n).t(i, 2).w(i + 1, k), B(n).w(i, k).t(i, 2), RuleId::TwistCrossingOther,
            lab(n, i, k) + " under");
      }
      for (int j = 1; j <= n - 1; ++j)
        for (int i = 1; i <= n; ++i) {
          if (i == j || i == j + 1) continue;
          const std::string s = lab(n, i, k) + " j=" + std::to_string(j);
          add(B(n - 2).w(shift_past(i, j), k).g(j), B(n - 2).g(j).w(i, k), RuleId::TwistCup, s);
          add(B(n).w(i, k).f(j), B(n).f(j).w(shift_past(i, j), k), RuleId::TwistCap, s);
          for (int l = 1; l <= 2; ++l)
            add(B(n).w(i, k).t(j, l), B(n).t(j, l).w(i, k), RuleId::TwistCrossing,
                s + " l=" + std::to_string(l));
        }
    }
  for (int n = 1; n <= N; ++n)
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= 2; ++k) {
        int up = i % n + 1;
        int down = (i + n - 2) % n + 1;
        add(B(n).w(up, k).r(), B(n).r().w(i, k), RuleId::TwistRotation, lab(n, i, k) + " cw");
        add(B(n).w(down, k).rp(), B(n).rp().w(i, k), RuleId::TwistRotation, lab(n, i, k) + " ccw");
      }
}

void gen_wrap(int N, const Sink& add) {
  for (int n = 3; n <= N; ++n)
    for (int i = 1; i <= n - 2; ++i) {
      add(B(n - 2).s().g(i), B(n - 2).g(i).s(), RuleId::WrapCommute, lab(n, i) + " cup");
      add(B(n).s().f(i), B(n).f(i).s(), RuleId::WrapCommute, lab(n, i) + " cap");
      for (int p = 1; p <= 2; ++p)
        add(B(n).t(i, p).s(), B(n).s().t(i, p), RuleId::WrapCommute,
            lab(n, i, 0, p) + " crossing");
    }
  for (int n = 2; n <= N; ++n) {
    const int j = n - 1;
    add(B(n).t(j, 2).s().t(j, 2).s().f(j), B(n).f(j), RuleId::WrapCap, lab(n));
    add(B(n - 2).g(j).t(j, 2).s().t(j, 2).s(), B(n - 2).g(j), RuleId::WrapCup, lab(n));
    add(B(n).t(j, 2).s().t(j, 2).s().t(j, 2), B(n).t(j, 2).t(j, 2).s().t(j, 2).s(),
        RuleId::WrapBraid, lab(n));
  }
  for (int n = 1; n <= N; ++n) {
    B lhs(n);
    for (int i = 1; i <= n - 1; ++i) lhs.t(i, 2);
    lhs.s();
    add(lhs, B(n).r(), RuleId::RotationViaWrap, lab(n));
  }
}

}  // namespace

std::string rule_name(RuleId id) {
  static const std::array<const char*, kRuleCount> names = {
      "reidemeister-0",      "reidemeister-1",     "reidemeister-2",     "reidemeister-3",
      "cup-cup",             "cap-cap",            "cup-cap",            "cup-crossing",
      "cap-crossing",        "crossing-crossing",  "pitchfork",          "rotation-inverse",
      "cap-rotation",        "cup-rotation",       "crossing-rotation",  "twist-twist",
      "twist-cup",           "twist-cap",          "twist-crossing",     "twist-crossing-other",
      "twist-rotation",      "wrap-commute",       "wrap-cap",           "wrap-cup",
      "wrap-braid",          "rotation-via-wrap"};
  return names[static_cast<int>(id)];
}

RuleId rule_from_index(int k) {
  if (k < 0 || k >= kRuleCount) throw ArityMismatch("rule index out of range");
  return static_cast<RuleId>(k);
}

RelationInstance::RelationInstance(TangleWord l, TangleWord r, RuleId id, std::string label_)
    : lhs(std::move(l)), rhs(std::move(r)), rule_id(id), label(std::move(label_)) {
  if (lhs.source_size() != rhs.source_size() || lhs.target_size() != rhs.target_size())
    throw BoundaryMismatch("relation sides differ in boundary: " + rule_name(id) + " " + label);
}

RelationInstance RelationInstance::reversed() const {
  return RelationInstance(rhs, lhs, rule_id, label + " reversed");
}

std::vector<RelationInstance> relation_corpus(int max_size) {
  std::vector<RelationInstance> out;
  Sink add = [&](TangleWord l, TangleWord r, RuleId id, std::string s) {
    out.emplace_back(std::move(l), std::move(r), id, std::move(s));
  };
  gen_reidemeister(max_size, add);
  gen_isotopies(max_size, add);
  gen_rotations(max_size, add);
  gen_twists(max_size, add);
  gen_wrap(max_size, add);
  return out;
}

std::vector<RelationInstance> relation_corpus(int max_size, RuleId only) {
  std::vector<RelationInstance> out;
  for (auto& r : relation_corpus(max_size))
    if (r.rule_id == only) out.push_back(std::move(r));
  return out;
}

TangleWord rewrite_step(const TangleWord& w, const RelationInstance& rule, std::size_t position) {
  const auto& g = w.gens();
  const auto& lhs = rule.lhs.gens();
  if (position > g.size() || position + lhs.size() > g.size())
    throw NoMatch("position out of range");
  if (w.size_at(position) != rule.lhs.source_size())
    throw NoMatch("boundary size " + std::to_string(w.size_at(position)) + " at position " +
                  std::to_string(position) + " does not fit " + rule_name(rule.rule_id));
  for (std::size_t k = 0; k < lhs.size(); ++k)
    if (!(g[position + k] == lhs[k]))
      throw NoMatch(rule_name(rule.rule_id) + " does not match at position " +
                    std::to_string(position));
  std::vector<GenSym> out(g.begin(), g.begin() + static_cast<long>(position));
  out.insert(out.end(), rule.rhs.gens().begin(), rule.rhs.gens().end());
  out.insert(out.end(), g.begin() + static_cast<long>(position + lhs.size()), g.end());
  return TangleWord(w.source_size(), std::move(out));
}

namespace {

// A length-decreasing rule instance whose left side starts at gens[p], if any.
std::optional<RelationInstance> shrinking_rule_at(const std::vector<GenSym>& g, std::size_t p) {
  const GenSym& a = g[p];
  if (p + 1 < g.size()) {
    const GenSym& b = g[p + 1];
    if (a.kind == GenKind::Cup && b.kind == GenKind::Cap && a.out_size >= 3) {
      const int n = a.out_size;
      if (b.index + 1 == a.index || (b.index == a.index + 1 && b.index <= n))
        return RelationInstance(B(n - 2).g(a.index).f(b.index), TangleWord(n - 2),
                                RuleId::Reidemeister0, lab(n));
    }
    bool crossing_pair = (a.kind == GenKind::CrossOver && b.kind == GenKind::CrossUnder) ||
                         (a.kind == GenKind::CrossUnder && b.kind == GenKind::CrossOver);
    if (crossing_pair && a.index == b.index && a.index < a.in_size) {
      return RelationInstance(TangleWord(a.in_size, {a, b}), TangleWord(a.in_size),
                              RuleId::Reidemeister2, lab(a.in_size, a.index));
    }
    bool twist_pair = (a.kind == GenKind::TwistPos && b.kind == GenKind::TwistNeg) ||
                      (a.kind == GenKind::TwistNeg && b.kind == GenKind::TwistPos);
    if (twist_pair && a.index == b.index)
      return RelationInstance(TangleWord(a.in_size, {a, b}), TangleWord(a.in_size),
                              RuleId::TwistTwist, lab(a.in_size, a.index));
    bool rot_pair = (a.kind == GenKind::RotCW && b.kind == GenKind::RotCCW) ||
                    (a.kind == GenKind::RotCCW && b.kind == GenKind::RotCW);
    if (rot_pair && a.in_size >= 1)
      return RelationInstance(TangleWord(a.in_size, {a, b}), TangleWord(a.in_size),
                              RuleId::RotationInverse, lab(a.in_size));
  }
  // t^1(2) ... t^{n-1}(2) s  ->  r
  const int n = a.in_size;
  if (n >= 2 && p + n <= g.size()) {
    bool ok = true;
    for (int i = 1; i <= n - 1 && ok; ++i)
      ok = g[p + i - 1] == GenSym::cross_under(i, n);
    if (ok && g[p + n - 1] == GenSym::wrap(n)) {
      B lhs(n);
      for (int i = 1; i <= n - 1; ++i) lhs.t(i, 2);
      lhs.s();
      return RelationInstance(lhs, B(n).r(), RuleId::RotationViaWrap, lab(n));
    }
  }
  return std::nullopt;
}

}  // namespace

TangleWord greedy_simplify(const TangleWord& w) {
  TangleWord cur = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p < cur.length(); ++p) {
      if (auto rule = shrinking_rule_at(cur.gens(), p)) {
        cur = rewrite_step(cur, *rule, p);
        changed = true;
        break;
      }
    }
  }
  return cur;
}

}  // namespace annular
