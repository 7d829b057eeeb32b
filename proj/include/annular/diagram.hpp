#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "annular/laurent.hpp"
#include "annular/matching.hpp"

namespace annular {

// A boundary or glue point: concentric circle `level` (0 is innermost),
// position 0..N-1 on it.
struct Node {
  int level = 0;
  int pos = 0;
  friend auto operator<=>(const Node&, const Node&) = default;
};

// Point of the universal cover of the annulus in integer coordinates.  theta
// counts angle units (kUnit per boundary position, so one turn is kUnit * N);
// r is the radius.  Strands are axis-parallel polylines in these coordinates.
struct Pt {
  std::int64_t theta = 0;
  std::int64_t r = 0;
  friend bool operator==(const Pt&, const Pt&) = default;
};

inline constexpr std::int64_t kUnit = 4;

struct Strand {
  int id = -1;
  Node a, b;
  int displacement = 0;  // positions travelled from a to b, signed (anticlockwise > 0)
  std::vector<Pt> polyline;  // from a to b; starts at theta = a.pos * kUnit
};

struct Loop {
  std::vector<int> strands;  // strand ids in traversal order
  int winding = 0;
  int min_glue_pos = 0;
  std::vector<Pt> polygon;  // closed lifted polyline (first point repeated at the end)
};

struct OpenPath {
  std::vector<int> strands;
  Node first, last;  // boundary endpoints, first has the smaller (level, pos)
};

// Two interchangeable ways of drawing cups: cup height from the nesting depth
// of the cups below it, or from the count of cups below it with every
// horizontal edge subdivided at each position it passes.
enum class Routing { Depth, Subdivided };

class CompositeDiagram {
 public:
  CompositeDiagram(int m, int n, int levels, Routing routing = Routing::Depth);

  int m() const { return m_; }
  int n() const { return n_; }
  int size() const { return m_ + 2 * n_; }
  int levels() const { return levels_; }
  Routing routing() const { return routing_; }
  std::int64_t radius(int level) const;

  // Cups of `mch` hang from `level` (dir +1 outward, -1 inward); rays run
  // radially from `level` to `ray_level` (skipped when ray_level < 0).
  // Returns the strand id of each cup, indexed like mch.cups().
  std::vector<int> add_matching(const Matching& mch, int level, int dir, int ray_level);
  int add_radial(int pos, int level_a, int level_b);
  void remove(int id);

  // Rebuilds the components; must be called after edits.
  void trace();

  const std::vector<Loop>& loops() const { return loops_; }
  const std::vector<OpenPath>& throughs() const { return throughs_; }
  const std::vector<OpenPath>& arcs() const { return arcs_; }
  const Strand& strand(int id) const { return strands_.at(id); }
  int strand_count() const { return static_cast<int>(strands_.size()); }
  bool alive(int id) const { return alive_.at(id); }

  // Pending surgeries: pairs of cup strand ids (lower cup, upper cup).
  std::vector<std::pair<int, int>> open_pairs;

  struct ComponentRef {
    enum Kind { LoopKind, ThroughKind, ArcKind } kind;
    int index;
  };
  ComponentRef component_of(int strand_id) const;

  // Loops sorted by (winding != 0, minimal glue position).
  std::vector<int> canonical_loop_order() const;

  // True when loop b's bounded side contains loop a (winding-0 b), or when a
  // lies outside of b radially (winding-nonzero b).  Throws
  // GeometryDegenerate when the probe point touches b.
  bool region_contains(int b, int a) const;

 private:
  Pt probe_point(const std::vector<Pt>& poly) const;
  bool odd_crossings(const Pt& p, const std::vector<Pt>& poly) const;

  int m_, n_, levels_;
  Routing routing_;
  std::int64_t layer_;
  std::vector<Strand> strands_;
  std::vector<bool> alive_;
  std::vector<Loop> loops_;
  std::vector<OpenPath> throughs_;
  std::vector<OpenPath> arcs_;
  std::vector<ComponentRef> comp_of_;
};

// ᾰ between radii levels 0 and 1, β between 1 and 2.
CompositeDiagram compose_matchings(const Matching& alpha, const Matching& beta,
                                   Routing routing = Routing::Depth);

struct MLinkClass {
  bool good = false;
  int omega = 0;
  int omega0 = 0;
  friend bool operator==(const MLinkClass&, const MLinkClass&) = default;
};

MLinkClass classify(const CompositeDiagram& d);
Laurent ext_poincare(const Matching& alpha, const Matching& beta);

// parent[i] is the index of the innermost winding-0 loop strictly enclosing
// loop i, or -1.  Entries for winding loops are -1.
std::vector<int> nesting_forest(const CompositeDiagram& d);

// Matching realized by a word of cups and rotations (m -> m+2n).
Matching evaluate(const TangleWord& w);

}  // namespace annular
