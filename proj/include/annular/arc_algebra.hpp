#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "annular/diagram.hpp"
#include "annular/matching.hpp"

namespace annular {

enum class LoopLabel { One, Ex, Y1, Y2 };

int grading(LoopLabel l);  // One -1, Ex +1, Y1/Y2 0
std::string label_name(LoopLabel l);
LoopLabel parse_label(const std::string& s);

// Labelled pair of matchings; labels follow the canonical loop order of
// compose_matchings(alpha, beta).
struct BasisDiagram {
  Matching alpha;
  Matching beta;
  std::vector<LoopLabel> labels;

  int m() const { return alpha.m(); }
  int n() const { return alpha.n(); }
  int degree() const;
  std::string to_json() const;

  friend bool operator==(const BasisDiagram& a, const BasisDiagram& b) {
    return a.alpha == b.alpha && a.beta == b.beta && a.labels == b.labels;
  }
  friend bool operator<(const BasisDiagram& a, const BasisDiagram& b);
};

// Validates labels against the loops of the composite; throws ParseError.
BasisDiagram make_basis_diagram(const Matching& alpha, const Matching& beta,
                                std::vector<LoopLabel> labels);
BasisDiagram basis_diagram_from_json(const std::string& text);

class ArcAlgebraElement {
 public:
  ArcAlgebraElement(int m, int n) : m_(m), n_(n) {}
  static ArcAlgebraElement of(const BasisDiagram& b, std::int64_t c = 1);

  int m() const { return m_; }
  int n() const { return n_; }
  const std::map<BasisDiagram, std::int64_t>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t coeff(const BasisDiagram& b) const;

  void add(const BasisDiagram& b, std::int64_t c);
  ArcAlgebraElement& operator+=(const ArcAlgebraElement& o);
  ArcAlgebraElement operator+(const ArcAlgebraElement& o) const;
  ArcAlgebraElement operator-(const ArcAlgebraElement& o) const;
  ArcAlgebraElement scaled(std::int64_t k) const;
  friend bool operator==(const ArcAlgebraElement&, const ArcAlgebraElement&) = default;

  // {"m":..,"n":..,"terms":[{"coeff":c,"diagram":{...}}, ...]}
  std::string to_json() const;

 private:
  int m_, n_;
  std::map<BasisDiagram, std::int64_t> coeffs_;
};

std::vector<BasisDiagram> basis(int m, int n);
ArcAlgebraElement identity_element(int m, int n);

// Which circle is the first tensor factor in the signed rules.  The defaults
// are the choice with a two-sided unit, order independence and the fewest
// associativity failures on the small blocks.
enum class NestedOrder { OuterFirst, InnerFirst };

struct SurgeryOptions {
  NestedOrder nested_merge = NestedOrder::OuterFirst;
  NestedOrder nested_split = NestedOrder::InnerFirst;
  // Same choice for the two signed 0-circle rules, outer meaning radially outside.
  NestedOrder zero_merge = NestedOrder::InnerFirst;
  NestedOrder zero_split = NestedOrder::OuterFirst;
  Routing routing = Routing::Depth;
  bool check_orders = true;  // compare every admissible surgery order
};

// Surgery orders on the cups of beta (cup indices into beta.cups()) in which
// no cup is processed while a remaining cup encloses it.
std::vector<std::vector<int>> admissible_orders(const Matching& beta);
// Outermost first, ties broken by smallest start position.
std::vector<int> canonical_order(const Matching& beta);

ArcAlgebraElement basis_product(const BasisDiagram& x, const BasisDiagram& y,
                                const std::vector<int>& order,
                                const SurgeryOptions& opt = {});
// All admissible orders; throws ConjectureViolation when they disagree and
// opt.check_orders is set.
ArcAlgebraElement basis_product(const BasisDiagram& x, const BasisDiagram& y,
                                const SurgeryOptions& opt = {});
ArcAlgebraElement multiply(const ArcAlgebraElement& x, const ArcAlgebraElement& y,
                           const SurgeryOptions& opt = {});

struct Degree {
  enum Kind { Homogeneous, Mixed, NoSupport } kind;
  int value = 0;
};
Degree degree(const ArcAlgebraElement& x);

// Exhaustive property sweeps over the basis of one (m, n).  Products use the
// canonical surgery order except in the order suite, which compares all
// admissible orders.
enum class PropertySuite { Assoc, Unit, Order, Degree, Ranks };

std::string suite_name(PropertySuite s);
PropertySuite parse_suite(const std::string& name);

struct PropertyResult {
  PropertySuite suite;
  int m = 0, n = 0;
  long cases = 0;
  long failures = 0;
  std::string counterexample;  // JSON of the first failure, empty on pass
  bool passed() const { return failures == 0; }
};

PropertyResult check_property(int m, int n, PropertySuite suite, const SurgeryOptions& opt = {});

}  // namespace annular
