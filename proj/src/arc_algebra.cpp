#include "annular/arc_algebra.hpp"

#include <algorithm>
#include <functional>
#include <json.hpp>

#include "annular/error.hpp"

namespace annular {

int grading(LoopLabel l) {
  switch (l) {
    case LoopLabel::One: return -1;
    case LoopLabel::Ex: return 1;
    default: return 0;
  }
}

std::string label_name(LoopLabel l) {
  switch (l) {
    case LoopLabel::One: return "1";
    case LoopLabel::Ex: return "X";
    case LoopLabel::Y1: return "Y1";
    case LoopLabel::Y2: return "Y2";
  }
  return "?";
}

LoopLabel parse_label(const std::string& s) {
  if (s == "1") return LoopLabel::One;
  if (s == "X") return LoopLabel::Ex;
  if (s == "Y1") return LoopLabel::Y1;
  if (s == "Y2") return LoopLabel::Y2;
  throw ParseError("unknown loop label '" + s + "'");
}

namespace {

bool winding_label(LoopLabel l) { return l == LoopLabel::Y1 || l == LoopLabel::Y2; }

// Minimal glue position of each loop of ᾰ∘β, in canonical order.
std::vector<const Loop*> canonical_loops(const CompositeDiagram& d) {
  std::vector<const Loop*> out;
  for (int i : d.canonical_loop_order()) out.push_back(&d.loops()[i]);
  return out;
}

}  // namespace

int BasisDiagram::degree() const {
  int d = n();
  for (auto l : labels) d += grading(l);
  return d;
}

bool operator<(const BasisDiagram& a, const BasisDiagram& b) {
  if (!(a.alpha == b.alpha)) return a.alpha < b.alpha;
  if (!(a.beta == b.beta)) return a.beta < b.beta;
  return a.labels < b.labels;
}

std::string BasisDiagram::to_json() const {
  nlohmann::json j;
  j["alpha"] = alpha.signs();
  j["beta"] = beta.signs();
  auto ls = nlohmann::json::array();
  for (auto l : labels) ls.push_back(label_name(l));
  j["labels"] = ls;
  return j.dump();
}

BasisDiagram make_basis_diagram(const Matching& alpha, const Matching& beta,
                                std::vector<LoopLabel> labels) {
  if (alpha.m() != beta.m() || alpha.n() != beta.n()) throw MixedContext("alpha and beta differ in (m, n)");
  CompositeDiagram d = compose_matchings(alpha, beta);
  if (!classify(d).good) throw ParseError("composite of " + alpha.signs() + " and " + beta.signs() + " is bad");
  auto loops = canonical_loops(d);
  if (loops.size() != labels.size())
    throw ParseError("expected " + std::to_string(loops.size()) + " labels, got " + std::to_string(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (winding_label(labels[i]) != (loops[i]->winding != 0))
      throw ParseError("label " + label_name(labels[i]) + " does not fit loop " + std::to_string(i));
  return {alpha, beta, std::move(labels)};
}

BasisDiagram basis_diagram_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    std::vector<LoopLabel> labels;
    for (const auto& l : j.at("labels")) labels.push_back(parse_label(l.get<std::string>()));
    Matching a = from_signs(j.at("alpha").get<std::string>());
    Matching b = from_signs(j.at("beta").get<std::string>());
    return make_basis_diagram(a, b, std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("basis diagram JSON: ") + e.what());
  }
}

ArcAlgebraElement ArcAlgebraElement::of(const BasisDiagram& b, std::int64_t c) {
  ArcAlgebraElement e(b.m(), b.n());
  e.add(b, c);
  return e;
}

std::int64_t ArcAlgebraElement::coeff(const BasisDiagram& b) const {
  auto it = coeffs_.find(b);
  return it == coeffs_.end() ? 0 : it->second;
}

void ArcAlgebraElement::add(const BasisDiagram& b, std::int64_t c) {
  if (b.m() != m_ || b.n() != n_) throw MixedContext("diagram over a different (m, n)");
  if (c == 0) return;
  auto& slot = coeffs_[b];
  if ((slot += c) == 0) coeffs_.erase(b);
}

ArcAlgebraElement& ArcAlgebraElement::operator+=(const ArcAlgebraElement& o) {
  if (o.m_ != m_ || o.n_ != n_) throw MixedContext("sum over different (m, n)");
  for (const auto& [b, c] : o.coeffs_) add(b, c);
  return *this;
}

ArcAlgebraElement ArcAlgebraElement::operator+(const ArcAlgebraElement& o) const {
  ArcAlgebraElement r = *this;
  r += o;
  return r;
}

ArcAlgebraElement ArcAlgebraElement::operator-(const ArcAlgebraElement& o) const {
  return *this + o.scaled(-1);
}

ArcAlgebraElement ArcAlgebraElement::scaled(std::int64_t k) const {
  ArcAlgebraElement r(m_, n_);
  for (const auto& [b, c] : coeffs_) r.add(b, c * k);
  return r;
}

std::string ArcAlgebraElement::to_json() const {
  nlohmann::json j;
  j["m"] = m_;
  j["n"] = n_;
  auto terms = nlohmann::json::array();
  for (const auto& [b, c] : coeffs_)
    terms.push_back({{"coeff", c}, {"diagram", nlohmann::json::parse(b.to_json())}});
  j["terms"] = terms;
  return j.dump();
}

std::vector<BasisDiagram> basis(int m, int n) {
  std::vector<BasisDiagram> out;
  const auto ms = enumerate(m, n);
  for (const auto& a : ms)
    for (const auto& b : ms) {
      CompositeDiagram d = compose_matchings(a, b);
      if (!classify(d).good) continue;
      auto loops = canonical_loops(d);
      const std::size_t L = loops.size();
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << L); ++bits) {
        std::vector<LoopLabel> labels(L);
        for (std::size_t i = 0; i < L; ++i) {
          const bool second = (bits >> (L - 1 - i)) & 1;
          labels[i] = loops[i]->winding == 0 ? (second ? LoopLabel::Ex : LoopLabel::One)
                                             : (second ? LoopLabel::Y2 : LoopLabel::Y1);
        }
        out.push_back({a, b, std::move(labels)});
      }
    }
  return out;
}

ArcAlgebraElement identity_element(int m, int n) {
  ArcAlgebraElement e(m, n);
  for (const auto& a : enumerate(m, n)) {
    CompositeDiagram d = compose_matchings(a, a);
    e.add({a, a, std::vector<LoopLabel>(d.loops().size(), LoopLabel::One)}, 1);
  }
  return e;
}

std::vector<std::vector<int>> admissible_orders(const Matching& beta) {
  const int c = static_cast<int>(beta.cups().size());
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> done(c, false);
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == c) {
      out.push_back(cur);
      return;
    }
    for (int a = 0; a < c; ++a) {
      if (done[a]) continue;
      bool enclosed = false;
      for (int b = 0; b < c && !enclosed; ++b) enclosed = !done[b] && beta.encloses(b, a);
      if (enclosed) continue;
      done[a] = true;
      cur.push_back(a);
      rec();
      cur.pop_back();
      done[a] = false;
    }
  };
  rec();
  return out;
}

std::vector<int> canonical_order(const Matching& beta) {
  std::vector<int> order(beta.cups().size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const auto &ca = beta.cups()[a], &cb = beta.cups()[b];
    if (ca.span.size() != cb.span.size()) return ca.span.size() > cb.span.size();
    return ca.start < cb.start;
  });
  return order;
}

namespace {

using Labels = std::vector<std::pair<int, LoopLabel>>;  // (loop key, label), sorted
using State = std::map<Labels, std::int64_t>;

enum class Kind { Circle, Zero, Line, Arc };

int loop_key(const Loop& l) { return *std::min_element(l.strands.begin(), l.strands.end()); }

struct Comp {
  Kind kind;
  int index;  // loop index, or through/arc index
  friend bool operator==(const Comp&, const Comp&) = default;
};

Comp comp(const CompositeDiagram& d, int strand) {
  auto ref = d.component_of(strand);
  switch (ref.kind) {
    case CompositeDiagram::ComponentRef::LoopKind:
      return {d.loops()[ref.index].winding == 0 ? Kind::Circle : Kind::Zero, ref.index};
    case CompositeDiagram::ComponentRef::ThroughKind: return {Kind::Line, ref.index};
    default: return {Kind::Arc, ref.index};
  }
}

LoopLabel take(Labels& ls, int key) {
  auto it = std::find_if(ls.begin(), ls.end(), [&](auto& p) { return p.first == key; });
  if (it == ls.end()) throw InternalInvariant("loop without a label");
  LoopLabel l = it->second;
  ls.erase(it);
  return l;
}

void put(State& out, Labels base, std::vector<std::pair<int, LoopLabel>> extra, std::int64_t c) {
  if (c == 0) return;
  for (auto& e : extra) base.push_back(e);
  std::sort(base.begin(), base.end());
  if ((out[base] += c) == 0) out.erase(base);
}

using L = LoopLabel;

// Stack ᾰ∘β∘β̌∘γ with the label state of one product.
class Surgery {
 public:
  Surgery(const BasisDiagram& x, const BasisDiagram& y, const SurgeryOptions& opt)
      : x_(x), y_(y), opt_(opt), d_(x.m(), x.n(), 4, opt.routing) {
    d_.add_matching(x.alpha, 1, -1, 0);
    up_ = d_.add_matching(x.beta, 1, +1, 2);
    down_ = d_.add_matching(x.beta, 2, -1, -1);
    d_.add_matching(y.beta, 2, +1, 3);
    for (std::size_t c = 0; c < up_.size(); ++c) d_.open_pairs.emplace_back(up_[c], down_[c]);
    d_.trace();
    seed();
  }

  void run(const std::vector<int>& order) {
    for (int c : order) {
      if (state_.empty()) return;
      step(c);
    }
  }

  ArcAlgebraElement result() const {
    ArcAlgebraElement out(x_.m(), x_.n());
    if (state_.empty()) return out;
    if (!d_.arcs().empty()) throw InternalInvariant("surviving term on a bad composite");
    CompositeDiagram target = compose_matchings(x_.alpha, y_.beta, opt_.routing);
    auto loops = canonical_loops(target);
    std::vector<int> key_at(loops.size(), -1);
    for (const auto& l : d_.loops())
      for (std::size_t i = 0; i < loops.size(); ++i)
        if (loops[i]->min_glue_pos == l.min_glue_pos) {
          if ((loops[i]->winding != 0) != (l.winding != 0))
            throw InternalInvariant("final loop winding differs from the composite");
          key_at[i] = loop_key(l);
        }
    for (const auto& [ls, c] : state_) {
      std::vector<LoopLabel> labels;
      for (int k : key_at) {
        auto it = std::find_if(ls.begin(), ls.end(), [&](auto& p) { return p.first == k; });
        if (it == ls.end()) throw InternalInvariant("final loop without a label");
        labels.push_back(it->second);
      }
      out.add({x_.alpha, y_.beta, std::move(labels)}, c);
    }
    return out;
  }

 private:
  void seed() {
    Labels ls;
    auto assign = [&](const BasisDiagram& b, int level) {
      CompositeDiagram c = compose_matchings(b.alpha, b.beta, opt_.routing);
      auto loops = canonical_loops(c);
      for (const auto& l : d_.loops()) {
        if (d_.strand(l.strands[0]).a.level != level) continue;
        for (std::size_t i = 0; i < loops.size(); ++i)
          if (loops[i]->min_glue_pos == l.min_glue_pos) ls.emplace_back(loop_key(l), b.labels[i]);
      }
    };
    assign(x_, 1);
    assign(y_, 2);
    if (ls.size() != d_.loops().size()) throw InternalInvariant("unlabelled loop in the stack");
    std::sort(ls.begin(), ls.end());
    state_[ls] = 1;
  }

  void step(int c) {
    const int cu = up_[c], cd = down_[c];
    const Comp A = comp(d_, cu), B = comp(d_, cd);
    const bool merge = !(A == B);
    // Geometry of the old configuration, needed by the merge rules.
    int a_key = -1, b_key = -1, first_key = -1;
    bool nested = false;
    if (A.kind == Kind::Circle || A.kind == Kind::Zero) a_key = loop_key(d_.loops()[A.index]);
    if (B.kind == Kind::Circle || B.kind == Kind::Zero) b_key = loop_key(d_.loops()[B.index]);
    if (merge && A.kind == Kind::Circle && B.kind == Kind::Circle) {
      const bool ab = d_.region_contains(A.index, B.index), ba = d_.region_contains(B.index, A.index);
      nested = ab || ba;
      if (nested)
        first_key = opt_.nested_merge == NestedOrder::OuterFirst ? (ab ? a_key : b_key) : (ab ? b_key : a_key);
    }
    if (merge && A.kind == Kind::Zero && B.kind == Kind::Zero)
    {
      // region_contains(B, A) for 0-circles: A lies radially outside B.
      const bool a_outer = d_.region_contains(B.index, A.index);
      first_key = (opt_.zero_merge == NestedOrder::OuterFirst) == a_outer ? a_key : b_key;
    }

    const auto& cup = x_.beta.cups()[c];
    d_.remove(cu);
    d_.remove(cd);
    d_.open_pairs.erase(std::find(d_.open_pairs.begin(), d_.open_pairs.end(), std::pair(cu, cd)));
    const int vs = d_.add_radial(cup.start, 1, 2), ve = d_.add_radial(cup.end, 1, 2);
    d_.trace();
    const Comp X = comp(d_, vs), Y = comp(d_, ve);

    State next;
    if (merge) {
      merge_rule(A, B, X, Y, a_key, b_key, first_key, nested, next);
    } else {
      split_rule(A, X, Y, a_key, next);
    }
    state_ = std::move(next);
  }

  void merge_rule(Comp A, Comp B, Comp X, Comp Y, int a_key, int b_key, int first_key,
                  bool nested, State& next) {
    auto kinds = [&](Kind p, Kind q) {
      return (A.kind == p && B.kind == q) || (A.kind == q && B.kind == p);
    };
    if (A.kind == Kind::Arc || B.kind == Kind::Arc) throw InternalInvariant("live term touches an arc");
    if (kinds(Kind::Line, Kind::Line)) {
      // Two lines: either two lines again or two arcs (which kills the term).
      if (X.kind == Kind::Arc || Y.kind == Kind::Arc) return;
      if (X.kind != Kind::Line || Y.kind != Kind::Line) throw InternalInvariant("lines merged into loops");
      next = state_;
      return;
    }
    if (kinds(Kind::Line, Kind::Zero))
      throw RuleGap("surgery merges a line with a 0-circle; no rule is given for this case");
    if (!(X == Y)) throw InternalInvariant("merge produced two components");
    const int new_key = X.kind == Kind::Line ? -1 : loop_key(d_.loops()[X.index]);
    for (const auto& [ls0, c] : state_) {
      Labels ls = ls0;
      if (kinds(Kind::Line, Kind::Circle)) {
        const LoopLabel l = take(ls, A.kind == Kind::Circle ? a_key : b_key);
        if (X.kind != Kind::Line) throw InternalInvariant("line and circle did not give a line");
        if (l == L::One) put(next, ls, {}, c);
      } else if (kinds(Kind::Circle, Kind::Circle)) {
        if (X.kind != Kind::Circle) throw InternalInvariant("two circles did not merge to a circle");
        const int second_key = first_key == a_key ? b_key : a_key;
        const LoopLabel p = take(ls, nested ? first_key : a_key), q = take(ls, nested ? second_key : b_key);
        if (p == L::One && q == L::One) put(next, ls, {{new_key, L::One}}, c);
        else if (p == L::One && q == L::Ex) put(next, ls, {{new_key, L::Ex}}, nested ? -c : c);
        else if (p == L::Ex && q == L::One) put(next, ls, {{new_key, L::Ex}}, c);
      } else if (kinds(Kind::Circle, Kind::Zero)) {
        if (X.kind != Kind::Zero) throw InternalInvariant("circle and 0-circle did not give a 0-circle");
        const LoopLabel circle = take(ls, A.kind == Kind::Circle ? a_key : b_key);
        const LoopLabel zero = take(ls, A.kind == Kind::Zero ? a_key : b_key);
        if (circle == L::One) put(next, ls, {{new_key, zero}}, c);
      } else if (kinds(Kind::Zero, Kind::Zero)) {
        if (X.kind != Kind::Circle) throw InternalInvariant("two 0-circles did not give a circle");
        const LoopLabel p = take(ls, first_key), q = take(ls, first_key == a_key ? b_key : a_key);
        if (p == L::Y1 && q == L::Y2) put(next, ls, {{new_key, L::Ex}}, c);
        if (p == L::Y2 && q == L::Y1) put(next, ls, {{new_key, L::Ex}}, -c);
      } else {
        throw InternalInvariant("unexpected merge configuration");
      }
    }
  }

  void split_rule(Comp A, Comp X, Comp Y, int a_key, State& next) {
    // A line reconnected with itself can stay one line.  No label absorbs the
    // degree of the surgery, so the term dies.
    if (A.kind == Kind::Line && X == Y) return;
    if (X == Y) throw InternalInvariant("split produced one component");
    if (A.kind == Kind::Arc) throw InternalInvariant("live term touches an arc");
    auto key = [&](Comp k) { return loop_key(d_.loops()[k.index]); };
    if (A.kind == Kind::Line) {
      const Comp loop = X.kind == Kind::Line ? Y : X;
      if (loop.kind == Kind::Zero)
        throw RuleGap("surgery splits a line into a line and a 0-circle; no rule is given for this case");
      if (loop.kind != Kind::Circle) throw InternalInvariant("line split without a circle");
      for (const auto& [ls, c] : state_) put(next, ls, {{key(loop), L::Ex}}, c);
      return;
    }
    for (const auto& [ls0, c] : state_) {
      Labels ls = ls0;
      const LoopLabel l = take(ls, a_key);
      if (A.kind == Kind::Circle && X.kind == Kind::Circle && Y.kind == Kind::Circle) {
        const bool xy = d_.region_contains(X.index, Y.index), yx = d_.region_contains(Y.index, X.index);
        int first = key(X), second = key(Y);
        if (xy || yx) {
          const bool x_outer = xy;
          const bool x_first = opt_.nested_split == NestedOrder::OuterFirst ? x_outer : !x_outer;
          if (!x_first) std::swap(first, second);
        }
        if (l == L::One) {
          put(next, ls, {{first, L::One}, {second, L::Ex}}, (xy || yx) ? -c : c);
          put(next, ls, {{first, L::Ex}, {second, L::One}}, c);
        } else {
          put(next, ls, {{first, L::Ex}, {second, L::Ex}}, c);
        }
      } else if (A.kind == Kind::Circle && X.kind == Kind::Zero && Y.kind == Kind::Zero) {
        int first = key(X), second = key(Y);
        const bool x_outer = d_.region_contains(Y.index, X.index);
        if ((opt_.zero_split == NestedOrder::OuterFirst) != x_outer) std::swap(first, second);
        if (l == L::One) {
          put(next, ls, {{first, L::Y1}, {second, L::Y2}}, c);
          put(next, ls, {{first, L::Y2}, {second, L::Y1}}, -c);
        }
      } else if (A.kind == Kind::Zero && (X.kind == Kind::Circle) != (Y.kind == Kind::Circle)) {
        const Comp circle = X.kind == Kind::Circle ? X : Y, zero = X.kind == Kind::Circle ? Y : X;
        if (zero.kind != Kind::Zero) throw InternalInvariant("0-circle split lost its winding");
        put(next, ls, {{key(circle), L::Ex}, {key(zero), l}}, c);
      } else {
        throw InternalInvariant("unexpected split configuration");
      }
    }
  }

  const BasisDiagram& x_;
  const BasisDiagram& y_;
  SurgeryOptions opt_;
  CompositeDiagram d_;
  std::vector<int> up_, down_;
  State state_;
};

}  // namespace

ArcAlgebraElement basis_product(const BasisDiagram& x, const BasisDiagram& y,
                                const std::vector<int>& order, const SurgeryOptions& opt) {
  if (x.m() != y.m() || x.n() != y.n()) throw MixedContext("product over different (m, n)");
  if (!(x.beta == y.alpha)) return ArcAlgebraElement(x.m(), x.n());
  if (x.n() == 0) return ArcAlgebraElement::of({x.alpha, y.beta, {}});
  Surgery s(x, y, opt);
  s.run(order);
  return s.result();
}

ArcAlgebraElement basis_product(const BasisDiagram& x, const BasisDiagram& y,
                                const SurgeryOptions& opt) {
  if (!(x.beta == y.alpha) || !opt.check_orders)
    return basis_product(x, y, canonical_order(x.beta), opt);
  const auto orders = admissible_orders(x.beta);
  ArcAlgebraElement first = basis_product(x, y, orders.front(), opt);
  for (std::size_t k = 1; k < orders.size(); ++k) {
    ArcAlgebraElement other = basis_product(x, y, orders[k], opt);
    if (!(other == first))
      throw ConjectureViolation("surgery orders disagree for x=" + x.to_json() + " y=" + y.to_json() +
                                ": " + first.to_json() + " vs " + other.to_json());
  }
  return first;
}

ArcAlgebraElement multiply(const ArcAlgebraElement& x, const ArcAlgebraElement& y,
                           const SurgeryOptions& opt) {
  if (x.m() != y.m() || x.n() != y.n()) throw MixedContext("multiply over different (m, n)");
  ArcAlgebraElement out(x.m(), x.n());
  for (const auto& [a, ca] : x.coeffs())
    for (const auto& [b, cb] : y.coeffs()) out += basis_product(a, b, opt).scaled(ca * cb);
  return out;
}

Degree degree(const ArcAlgebraElement& x) {
  if (x.is_zero()) return {Degree::NoSupport, 0};
  const int d = x.coeffs().begin()->first.degree();
  for (const auto& [b, c] : x.coeffs())
    if (b.degree() != d) return {Degree::Mixed, 0};
  return {Degree::Homogeneous, d};
}

std::string suite_name(PropertySuite s) {
  switch (s) {
    case PropertySuite::Assoc: return "assoc";
    case PropertySuite::Unit: return "unit";
    case PropertySuite::Order: return "order";
    case PropertySuite::Degree: return "degree";
    case PropertySuite::Ranks: return "ranks";
  }
  return "?";
}

PropertySuite parse_suite(const std::string& name) {
  for (auto s : {PropertySuite::Assoc, PropertySuite::Unit, PropertySuite::Order, PropertySuite::Degree,
                 PropertySuite::Ranks})
    if (suite_name(s) == name) return s;
  throw ParseError("unknown suite '" + name + "'");
}

namespace {

// Memoized basis products in the canonical order.
class ProductTable {
 public:
  ProductTable(int m, int n, const SurgeryOptions& opt) : m_(m), n_(n), opt_(opt), basis_(annular::basis(m, n)) {
    opt_.check_orders = false;
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = static_cast<int>(i);
  }
  const std::vector<BasisDiagram>& basis() const { return basis_; }
  int index(const BasisDiagram& b) const { return index_.at(b); }

  const ArcAlgebraElement& product(int i, int j) {
    auto it = cache_.find({i, j});
    if (it == cache_.end()) it = cache_.emplace(std::pair(i, j), basis_product(basis_[i], basis_[j], opt_)).first;
    return it->second;
  }
  ArcAlgebraElement times(const ArcAlgebraElement& x, int j) {
    ArcAlgebraElement out(m_, n_);
    for (const auto& [b, c] : x.coeffs()) out += product(index(b), j).scaled(c);
    return out;
  }
  ArcAlgebraElement times(int i, const ArcAlgebraElement& y) {
    ArcAlgebraElement out(m_, n_);
    for (const auto& [b, c] : y.coeffs()) out += product(i, index(b)).scaled(c);
    return out;
  }

 private:
  int m_, n_;
  SurgeryOptions opt_;
  std::vector<BasisDiagram> basis_;
  std::map<BasisDiagram, int> index_;
  std::map<std::pair<int, int>, ArcAlgebraElement> cache_;
};

nlohmann::json diagram_json(const BasisDiagram& b) { return nlohmann::json::parse(b.to_json()); }
nlohmann::json element_json(const ArcAlgebraElement& e) { return nlohmann::json::parse(e.to_json()); }

}  // namespace

PropertyResult check_property(int m, int n, PropertySuite suite, const SurgeryOptions& opt) {
  PropertyResult res;
  res.suite = suite;
  res.m = m;
  res.n = n;
  auto fail = [&](nlohmann::json j) {
    if (res.failures++ > 0) return;
    j["suite"] = suite_name(suite);
    j["m"] = m;
    j["n"] = n;
    res.counterexample = j.dump();
  };
  if (suite == PropertySuite::Ranks) {
    const auto ms = enumerate(m, n);
    std::map<std::pair<std::string, std::string>, int> count;
    for (const auto& b : basis(m, n)) ++count[{b.alpha.signs(), b.beta.signs()}];
    for (const auto& a : ms)
      for (const auto& b : ms) {
        ++res.cases;
        const auto it = count.find({a.signs(), b.signs()});
        const int got = it == count.end() ? 0 : it->second;
        const std::int64_t want = ext_poincare(a, b).at_unit(1);
        if (got != want) fail({{"alpha", a.signs()}, {"beta", b.signs()}, {"basis", got}, {"ext", want}});
      }
    return res;
  }
  ProductTable table(m, n, opt);
  const auto& B = table.basis();
  const int size = static_cast<int>(B.size());
  switch (suite) {
    case PropertySuite::Unit: {
      const ArcAlgebraElement e = identity_element(m, n);
      for (int i = 0; i < size; ++i) {
        ++res.cases;
        const ArcAlgebraElement want = ArcAlgebraElement::of(B[i]);
        ArcAlgebraElement left(m, n), right(m, n);
        for (const auto& [b, c] : e.coeffs()) {
          left += table.product(table.index(b), i).scaled(c);
          right += table.product(i, table.index(b)).scaled(c);
        }
        if (!(left == want) || !(right == want))
          fail({{"x", diagram_json(B[i])}, {"left", element_json(left)}, {"right", element_json(right)}});
      }
      break;
    }
    case PropertySuite::Order: {
      SurgeryOptions o = opt;
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
          if (!(B[i].beta == B[j].alpha)) continue;
          ++res.cases;
          const auto orders = admissible_orders(B[i].beta);
          const ArcAlgebraElement first = basis_product(B[i], B[j], orders.front(), o);
          for (std::size_t k = 1; k < orders.size(); ++k) {
            const ArcAlgebraElement other = basis_product(B[i], B[j], orders[k], o);
            if (other == first) continue;
            fail({{"x", diagram_json(B[i])}, {"y", diagram_json(B[j])}, {"order_a", orders.front()},
                  {"order_b", orders[k]}, {"product_a", element_json(first)}, {"product_b", element_json(other)}});
            break;
          }
        }
      break;
    }
    case PropertySuite::Degree: {
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
          if (!(B[i].beta == B[j].alpha)) continue;
          ++res.cases;
          const ArcAlgebraElement& p = table.product(i, j);
          const Degree d = degree(p);
          if (d.kind == Degree::Mixed ||
              (d.kind == Degree::Homogeneous && d.value != B[i].degree() + B[j].degree()))
            fail({{"x", diagram_json(B[i])}, {"y", diagram_json(B[j])}, {"product", element_json(p)}});
        }
      break;
    }
    case PropertySuite::Assoc: {
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
          if (!(B[i].beta == B[j].alpha)) continue;
          const ArcAlgebraElement ij = table.product(i, j);
          for (int k = 0; k < size; ++k) {
            if (!(B[j].beta == B[k].alpha)) continue;
            ++res.cases;
            const ArcAlgebraElement lhs = table.times(ij, k), rhs = table.times(i, table.product(j, k));
            if (!(lhs == rhs))
              fail({{"x", diagram_json(B[i])}, {"y", diagram_json(B[j])}, {"z", diagram_json(B[k])},
                    {"xy_z", element_json(lhs)}, {"x_yz", element_json(rhs)}});
          }
        }
      break;
    }
    case PropertySuite::Ranks: break;
  }
  return res;
}

}  // namespace annular
