#include "annular/diagram.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <map>

#include "annular/error.hpp"

namespace annular {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

// Heights of the cups of a matching under the given routing.
std::vector<int> cup_heights(const Matching& mch, Routing routing) {
  const int c = static_cast<int>(mch.cups().size());
  std::vector<int> h(c, 0);
  // Process cups by increasing span so children are done first.
  std::vector<int> order(c);
  for (int i = 0; i < c; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return mch.cups()[a].span.size() < mch.cups()[b].span.size();
  });
  for (int a : order) {
    int best = 0, count = 0;
    for (int b = 0; b < c; ++b)
      if (mch.encloses(a, b)) {
        best = std::max(best, h[b]);
        ++count;
      }
    h[a] = routing == Routing::Depth ? best + 1 : count + 1;
  }
  return h;
}

}  // namespace

CompositeDiagram::CompositeDiagram(int m, int n, int levels, Routing routing)
    : m_(m), n_(n), levels_(levels), routing_(routing), layer_(8 * (n + 2)) {
  if (m < 0 || n < 0 || m + 2 * n == 0) throw ArityMismatch("diagram needs at least one point");
}

std::int64_t CompositeDiagram::radius(int level) const { return layer_ * (level + 1); }

std::vector<int> CompositeDiagram::add_matching(const Matching& mch, int level, int dir,
                                                int ray_level) {
  if (mch.m() != m_ || mch.n() != n_) throw MixedContext("matching size differs from diagram");
  const std::int64_t step = routing_ == Routing::Depth ? 2 : 3;
  const auto heights = cup_heights(mch, routing_);
  std::vector<int> ids;
  for (std::size_t c = 0; c < mch.cups().size(); ++c) {
    const auto& cup = mch.cups()[c];
    const int len = static_cast<int>(cup.span.size()) - 1;
    const std::int64_t r0 = radius(level), rh = r0 + dir * step * heights[c];
    Strand s;
    s.id = static_cast<int>(strands_.size());
    s.a = {level, cup.start};
    s.b = {level, cup.end};
    s.displacement = -len;
    const std::int64_t t0 = cup.start * kUnit;
    s.polyline.push_back({t0, r0});
    s.polyline.push_back({t0, rh});
    if (routing_ == Routing::Subdivided)
      for (int j = 1; j < len; ++j) s.polyline.push_back({t0 - j * kUnit, rh});
    s.polyline.push_back({t0 - len * kUnit, rh});
    s.polyline.push_back({t0 - len * kUnit, r0});
    strands_.push_back(std::move(s));
    alive_.push_back(true);
    ids.push_back(strands_.back().id);
  }
  if (ray_level >= 0)
    for (int p : mch.rays()) add_radial(p, level, ray_level);
  return ids;
}

int CompositeDiagram::add_radial(int pos, int level_a, int level_b) {
  Strand s;
  s.id = static_cast<int>(strands_.size());
  s.a = {level_a, pos};
  s.b = {level_b, pos};
  s.polyline = {{pos * kUnit, radius(level_a)}, {pos * kUnit, radius(level_b)}};
  strands_.push_back(std::move(s));
  alive_.push_back(true);
  return strands_.back().id;
}

void CompositeDiagram::remove(int id) {
  if (!alive_.at(id)) throw InternalInvariant("strand removed twice");
  alive_[id] = false;
}

void CompositeDiagram::trace() {
  loops_.clear();
  throughs_.clear();
  arcs_.clear();
  comp_of_.assign(strands_.size(), {ComponentRef::LoopKind, -1});
  const int N = size();
  const std::int64_t T = kUnit * N;
  std::map<Node, std::vector<int>> at;
  for (const auto& s : strands_)
    if (alive_[s.id]) {
      at[s.a].push_back(s.id);
      at[s.b].push_back(s.id);
    }
  auto boundary = [&](const Node& x) { return x.level == 0 || x.level == levels_ - 1; };
  for (const auto& [node, ids] : at) {
    const std::size_t want = boundary(node) ? 1 : 2;
    if (ids.size() != want)
      throw InternalInvariant("node (" + std::to_string(node.level) + "," + std::to_string(node.pos) +
                              ") has " + std::to_string(ids.size()) + " strands");
  }
  std::vector<bool> seen(strands_.size(), false);

  // Follows strands from `start` leaving through `first`; returns the nodes
  // visited, appending the lifted polyline and displacement.
  auto walk = [&](Node start, int first, std::vector<int>& path, std::vector<Pt>& poly,
                  int& disp) -> Node {
    Node cur = start;
    int sid = first;
    std::int64_t theta = strands_[first].a == start ? strands_[first].polyline.front().theta
                                                   : strands_[first].polyline.back().theta;
    poly.push_back({theta, radius(start.level)});
    while (true) {
      const Strand& s = strands_[sid];
      seen[sid] = true;
      path.push_back(sid);
      const bool fwd = s.a == cur && !(s.a == s.b);
      std::vector<Pt> pts = s.polyline;
      if (!fwd) std::reverse(pts.begin(), pts.end());
      const std::int64_t off = theta - pts.front().theta;
      if (off % T != 0) throw InternalInvariant("polyline endpoints misaligned");
      for (std::size_t k = 1; k < pts.size(); ++k) poly.push_back({pts[k].theta + off, pts[k].r});
      theta = poly.back().theta;
      disp += fwd ? s.displacement : -s.displacement;
      cur = fwd ? s.b : s.a;
      if (boundary(cur) || cur == start) return cur;
      const auto& nb = at[cur];
      int next = nb[0] == sid ? nb[1] : nb[0];
      if (seen[next]) return cur;
      sid = next;
    }
  };

  for (const auto& [node, ids] : at) {
    if (!boundary(node) || seen[ids[0]]) continue;
    OpenPath p;
    std::vector<Pt> poly;
    int disp = 0;
    Node end = walk(node, ids[0], p.strands, poly, disp);
    p.first = std::min(node, end);
    p.last = std::max(node, end);
    const bool arc = p.first.level == p.last.level;
    auto& dst = arc ? arcs_ : throughs_;
    for (int sid : p.strands)
      comp_of_[sid] = {arc ? ComponentRef::ArcKind : ComponentRef::ThroughKind,
                       static_cast<int>(dst.size())};
    dst.push_back(std::move(p));
  }
  for (const auto& s : strands_) {
    if (!alive_[s.id] || seen[s.id]) continue;
    Loop l;
    int disp = 0;
    Node end = walk(s.a, s.id, l.strands, l.polygon, disp);
    if (!(end == s.a)) throw InternalInvariant("closed component did not close");
    if (disp % N != 0) throw InternalInvariant("loop displacement not a multiple of the size");
    l.winding = disp / N;
    if (l.winding < -1 || l.winding > 1)
      throw InternalInvariant("loop winds " + std::to_string(l.winding) + " times");
    l.min_glue_pos = N;
    for (int sid : l.strands)
      for (const Node& x : {strands_[sid].a, strands_[sid].b})
        if (!boundary(x)) l.min_glue_pos = std::min(l.min_glue_pos, x.pos);
    for (int sid : l.strands) comp_of_[sid] = {ComponentRef::LoopKind, static_cast<int>(loops_.size())};
    loops_.push_back(std::move(l));
  }
}

CompositeDiagram::ComponentRef CompositeDiagram::component_of(int strand_id) const {
  if (!alive_.at(strand_id)) throw InternalInvariant("component of a removed strand");
  return comp_of_.at(strand_id);
}

std::vector<int> CompositeDiagram::canonical_loop_order() const {
  std::vector<int> order(loops_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    auto key = [&](int i) { return std::pair(loops_[i].winding != 0, loops_[i].min_glue_pos); };
    return key(a) < key(b);
  });
  return order;
}

Pt CompositeDiagram::probe_point(const std::vector<Pt>& poly) const {
  for (std::size_t k = 0; k + 1 < poly.size(); ++k)
    if (poly[k].r == poly[k + 1].r && poly[k].theta != poly[k + 1].theta) {
      const std::int64_t dir = poly[k + 1].theta > poly[k].theta ? 1 : -1;
      return {poly[k].theta + dir, poly[k].r};
    }
  throw InternalInvariant("loop without a horizontal edge");
}

bool CompositeDiagram::odd_crossings(const Pt& p, const std::vector<Pt>& poly) const {
  // Parity of crossings between poly and the radial segment from p to the hole.
  const std::int64_t T = kUnit * size();
  int count = 0;
  for (std::size_t k = 0; k + 1 < poly.size(); ++k) {
    const Pt &u = poly[k], &v = poly[k + 1];
    if (u.r == v.r) {
      const std::int64_t lo = std::min(u.theta, v.theta), hi = std::max(u.theta, v.theta);
      const std::int64_t d = floor_mod(p.theta - lo, T);
      if (d == 0 || d >= hi - lo) {
        if ((d == 0 || d == hi - lo) && u.r <= p.r) throw GeometryDegenerate("probe on a vertex");
        continue;
      }
      if (u.r == p.r) throw GeometryDegenerate("polylines touch");
      if (u.r < p.r) ++count;
    } else if (floor_mod(p.theta - u.theta, T) == 0) {
      if (p.r >= std::min(u.r, v.r) && p.r <= std::max(u.r, v.r))
        throw GeometryDegenerate("polylines touch");
    }
  }
  return count % 2 == 1;
}

bool CompositeDiagram::region_contains(int b, int a) const {
  return odd_crossings(probe_point(loops_.at(a).polygon), loops_.at(b).polygon);
}

CompositeDiagram compose_matchings(const Matching& alpha, const Matching& beta, Routing routing) {
  if (alpha.m() != beta.m() || alpha.n() != beta.n())
    throw MixedContext("compose_matchings over different (m, n)");
  CompositeDiagram d(alpha.m(), alpha.n(), 3, routing);
  d.add_matching(alpha, 1, -1, 0);
  d.add_matching(beta, 1, +1, 2);
  d.trace();
  return d;
}

MLinkClass classify(const CompositeDiagram& d) {
  if (!d.open_pairs.empty()) throw InternalInvariant("classify with pending surgeries");
  if (!d.arcs().empty()) return {false, 0, 0};
  MLinkClass c{true, 0, 0};
  for (const auto& l : d.loops()) (l.winding == 0 ? c.omega : c.omega0)++;
  if (d.m() > 0 && c.omega0 != 0) throw InternalInvariant("good m-link with m > 0 has a winding loop");
  if (static_cast<int>(d.throughs().size()) != d.m()) throw InternalInvariant("wrong through count");
  return c;
}

Laurent ext_poincare(const Matching& alpha, const Matching& beta) {
  MLinkClass c = classify(compose_matchings(alpha, beta));
  if (!c.good) return {};
  Laurent lambda = Laurent::monomial(1, 1) + Laurent::monomial(1, -1);
  return Laurent::monomial(1, alpha.n()) * lambda.pow(c.omega) *
         Laurent::constant(std::int64_t{1} << c.omega0);
}

std::vector<int> nesting_forest(const CompositeDiagram& d) {
  const int L = static_cast<int>(d.loops().size());
  std::vector<std::vector<int>> containers(L);
  for (int a = 0; a < L; ++a) {
    if (d.loops()[a].winding != 0) continue;
    for (int b = 0; b < L; ++b)
      if (b != a && d.loops()[b].winding == 0 && d.region_contains(b, a)) containers[a].push_back(b);
  }
  std::vector<int> parent(L, -1);
  for (int a = 0; a < L; ++a) {
    std::size_t depth = 0;
    for (int b : containers[a])
      if (parent[a] < 0 || containers[b].size() > depth) {
        parent[a] = b;
        depth = containers[b].size();
      }
  }
  return parent;
}

Matching evaluate(const TangleWord& word) {
  using Q = boost::rational<std::int64_t>;
  struct End {
    int cup = -1;  // -1 for a ray
    bool start = false;
    Q angle;  // lifted, in turns
  };
  const TangleWord w = expand_wrap_indices(word);
  int k = w.source_size();
  std::vector<End> ends(k);
  int cups = 0;
  for (const auto& g : w.gens()) {
    std::vector<End> next(g.out_size);
    switch (g.kind) {
      case GenKind::Cup: {
        const int i = g.index, K = g.out_size;
        for (int p = 0; p < k; ++p) {
          const int q = p < i - 1 ? p : p + 2;
          next[q] = ends[p];
          next[q].angle += Q(q, K) - Q(p, k);
        }
        next[i - 1] = {cups, false, Q(i - 1, K)};
        next[i] = {cups, true, Q(i, K)};
        ++cups;
        break;
      }
      case GenKind::RotCW:
      case GenKind::RotCCW: {
        const int d = g.kind == GenKind::RotCW ? -1 : 1;
        for (int p = 0; p < k; ++p) {
          next[(p + d + k) % k] = ends[p];
          next[(p + d + k) % k].angle += Q(d, k);
        }
        break;
      }
      default:
        throw NotCrossingless("evaluate accepts only cups and rotations, got " + g.token());
    }
    ends = std::move(next);
    k = g.out_size;
  }
  const int N = k, m = w.source_size();
  std::vector<int> ps(cups, -1), pe(cups, -1);
  std::vector<Q> as(cups), ae(cups);
  for (int p = 0; p < N; ++p) {
    if (ends[p].cup < 0) continue;
    (ends[p].start ? ps : pe)[ends[p].cup] = p;
    (ends[p].start ? as : ae)[ends[p].cup] = ends[p].angle;
  }
  std::vector<std::pair<int, int>> out;
  for (int c = 0; c < cups; ++c) {
    Q disp = (ae[c] - as[c]) * N;
    if (disp.denominator() != 1) throw InternalInvariant("cup displacement not integral");
    std::int64_t d = disp.numerator();
    if (d == 0 || d <= -N || d >= N) throw InternalInvariant("cup wraps around the hole");
    int s = d < 0 ? ps[c] : pe[c], e = d < 0 ? pe[c] : ps[c];
    if (floor_mod(s - e, N) != (d < 0 ? -d : d)) throw InternalInvariant("cup span inconsistent");
    out.emplace_back(s, e);
  }
  return matching_from_cups(m, cups, std::move(out));
}

}  // namespace annular
