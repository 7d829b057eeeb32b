#pragma once

#include <string>
#include <vector>

#include "annular/tangle.hpp"

namespace annular {

// A cup of a matching.  Its arc leaves `start` and travels clockwise (towards
// decreasing positions, wrapping mod m+2n) until it reaches `end`.
struct MatchingCup {
  int start = 0;  // carries the minus sign
  int end = 0;    // carries the plus sign
  std::vector<int> span;  // start, start-1, ..., end (mod size)
  friend bool operator==(const MatchingCup&, const MatchingCup&) = default;
};

// An affine crossingless (m, m+2n) matching.  The sign string is a complete
// invariant; equality and ordering go through it.
class Matching {
 public:
  Matching() = default;
  int m() const { return m_; }
  int n() const { return n_; }
  int size() const { return m_ + 2 * n_; }
  const std::string& signs() const { return signs_; }
  const std::vector<MatchingCup>& cups() const { return cups_; }
  const std::vector<int>& rays() const { return rays_; }
  // Partner of a position, or -1 for a ray.
  int partner(int pos) const { return partner_[pos]; }
  // Cup index at a position, or -1 for a ray.
  int cup_at(int pos) const { return cup_of_[pos]; }
  // True when `inner` lies inside the span of `outer` (cups only).
  bool encloses(int outer, int inner) const;

  friend bool operator==(const Matching& a, const Matching& b) { return a.signs_ == b.signs_; }
  friend bool operator<(const Matching& a, const Matching& b) { return a.signs_ < b.signs_; }

  friend Matching from_signs(const std::string& signs);
  friend Matching matching_from_cups(int m, int n, std::vector<std::pair<int, int>> cups);

 private:
  void index();
  int m_ = 0, n_ = 0;
  std::string signs_;
  std::vector<MatchingCup> cups_;
  std::vector<int> rays_;
  std::vector<int> partner_;
  std::vector<int> cup_of_;
};

// Validates the string ('+'/'-' only, at least as many pluses as minuses).
void check_signs(const std::string& signs);
Matching from_signs(const std::string& signs);
std::string to_signs(const Matching& mch);
// Builds from (start, end) pairs; throws ParseError unless they form a valid
// crossingless matching.
Matching matching_from_cups(int m, int n, std::vector<std::pair<int, int>> cups);

// All C(m+2n, n) matchings in lexicographic sign order ('+' < '-').
std::vector<Matching> enumerate(int m, int n);

// Word of n cups, m -> m+2n, producing the matching.
TangleWord cup_decomposition(const Matching& mch);

std::string matching_to_json(const Matching& mch);
Matching matching_from_json(const std::string& text);

}  // namespace annular
