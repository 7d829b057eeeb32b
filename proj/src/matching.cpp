#include "annular/matching.hpp"

#include <algorithm>
#include <json.hpp>

#include "annular/error.hpp"

namespace annular {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

void check_signs(const std::string& signs) {
  int plus = 0, minus = 0;
  for (char c : signs) {
    if (c == '+') ++plus;
    else if (c == '-') ++minus;
    else throw ParseError(std::string("sign strings use only '+' and '-', got '") + c + "'");
  }
  if (plus < minus) throw ParseError("more minuses than pluses in '" + signs + "'");
}

void Matching::index() {
  const int N = size();
  partner_.assign(N, -1);
  cup_of_.assign(N, -1);
  rays_.clear();
  std::sort(cups_.begin(), cups_.end(),
            [](const MatchingCup& a, const MatchingCup& b) { return a.start < b.start; });
  signs_.assign(N, '+');
  for (int c = 0; c < static_cast<int>(cups_.size()); ++c) {
    auto& cup = cups_[c];
    for (int p : {cup.start, cup.end}) {
      if (p < 0 || p >= N || cup_of_[p] != -1) throw ParseError("cup endpoints overlap or out of range");
      cup_of_[p] = c;
    }
    partner_[cup.start] = cup.end;
    partner_[cup.end] = cup.start;
    signs_[cup.start] = '-';
    cup.span.clear();
    for (int p = cup.start;; p = mod(p - 1, N)) {
      cup.span.push_back(p);
      if (p == cup.end) break;
    }
  }
  for (int p = 0; p < N; ++p)
    if (cup_of_[p] == -1) rays_.push_back(p);
  // Crossingless and ray-free: every position strictly inside a span belongs
  // to a cup whose other endpoint is inside the same span.
  for (const auto& cup : cups_)
    for (std::size_t k = 1; k + 1 < cup.span.size(); ++k) {
      int p = cup.span[k];
      if (partner_[p] == -1) throw ParseError("ray at " + std::to_string(p) + " lies inside a cup");
      auto& s = cup.span;
      if (std::find(s.begin() + 1, s.end() - 1, partner_[p]) == s.end() - 1)
        throw ParseError("cups cross at position " + std::to_string(p));
    }
}

bool Matching::encloses(int outer, int inner) const {
  const auto& s = cups_[outer].span;
  return outer != inner && std::find(s.begin(), s.end(), cups_[inner].start) != s.end();
}

Matching from_signs(const std::string& signs) {
  check_signs(signs);
  const int N = static_cast<int>(signs.size());
  Matching mch;
  mch.n_ = static_cast<int>(std::count(signs.begin(), signs.end(), '-'));
  mch.m_ = N - 2 * mch.n_;
  std::vector<bool> used(N, false);
  for (int s = 0; s < N; ++s) {
    if (signs[s] != '-') continue;
    // Walk clockwise to the first plus with a balanced stretch in between.
    int bal = 0, found = -1;
    for (int d = 1; d < N; ++d) {
      int j = mod(s - d, N);
      if (signs[j] == '+' && bal == 0) { found = j; break; }
      bal += signs[j] == '+' ? 1 : -1;
    }
    if (found < 0 || used[found])
      throw InternalInvariant("sign rule failed to match the minus at " + std::to_string(s));
    used[found] = true;
    mch.cups_.push_back({s, found, {}});
  }
  mch.index();
  if (mch.signs_ != signs) throw InternalInvariant("sign bijection not inverse at " + signs);
  return mch;
}

std::string to_signs(const Matching& mch) { return mch.signs(); }

Matching matching_from_cups(int m, int n, std::vector<std::pair<int, int>> cups) {
  if (static_cast<int>(cups.size()) != n) throw ParseError("expected " + std::to_string(n) + " cups");
  Matching mch;
  mch.m_ = m;
  mch.n_ = n;
  for (auto [s, e] : cups) mch.cups_.push_back({s, e, {}});
  mch.index();
  // The sign rule must reproduce the same cups; otherwise the spans were not
  // those of a crossingless matching.
  if (!(from_signs(mch.signs_).cups_ == mch.cups_)) throw ParseError("cups do not form a crossingless matching");
  return mch;
}

std::vector<Matching> enumerate(int m, int n) {
  if (m < 0 || n < 0) throw ArityMismatch("negative m or n");
  const int N = m + 2 * n;
  std::string s(N, '+');
  std::fill(s.end() - n, s.end(), '-');
  std::vector<Matching> out;
  do {
    out.push_back(from_signs(s));
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

TangleWord cup_decomposition(const Matching& mch) {
  // Strip innermost cups from the outside in; the last one removed is the
  // first generator applied.
  int k = mch.size();
  std::vector<int> partner(k), is_start(k, 0);
  for (int p = 0; p < k; ++p) partner[p] = mch.partner(p);
  for (const auto& c : mch.cups()) is_start[c.start] = 1;
  std::vector<int> indices;  // emission order, outermost boundary first
  for (int left = mch.n(); left > 0; --left) {
    int s = -1;
    for (int p = 0; p < k && s < 0; ++p)
      if (is_start[p] && partner[p] == mod(p - 1, k)) s = p;
    if (s < 0) throw InternalInvariant("no innermost cup in " + mch.signs());
    const bool wrap = s == 0;
    indices.push_back(wrap ? k : s);
    // New position of each surviving outer point on the smaller circle.
    std::vector<int> relabel(k, -1);
    for (int p = 0; p < k; ++p) {
      if (p == s || p == mod(s - 1, k)) continue;
      if (wrap) {
        if (p >= 1 && p <= k - 3) relabel[p] = p;
        else if (p == k - 2) relabel[p] = 0;
      } else {
        if (p < s - 1) relabel[p] = p;
        else if (p > s) relabel[p] = p - 2;
      }
    }
    std::vector<int> np(k - 2, -1), ns(k - 2, 0);
    for (int p = 0; p < k; ++p) {
      if (relabel[p] < 0) continue;
      np[relabel[p]] = partner[p] < 0 ? -1 : relabel[partner[p]];
      ns[relabel[p]] = is_start[p];
    }
    partner = std::move(np);
    is_start = std::move(ns);
    k -= 2;
  }
  WordBuilder b(mch.m());
  for (auto it = indices.rbegin(); it != indices.rend(); ++it) b.g(*it);
  return b;
}

std::string matching_to_json(const Matching& mch) {
  nlohmann::json j;
  j["m"] = mch.m();
  j["n"] = mch.n();
  j["signs"] = mch.signs();
  auto cups = nlohmann::json::array();
  for (const auto& c : mch.cups()) cups.push_back({c.start, c.end});
  j["cups"] = cups;
  j["rays"] = mch.rays();
  return j.dump();
}

Matching matching_from_json(const std::string& text) {
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("signs")) throw ParseError("matching JSON needs 'signs'");
    Matching mch = from_signs(j.at("signs").get<std::string>());
    if (j.contains("m") && j.at("m").get<int>() != mch.m()) throw ParseError("'m' disagrees with signs");
    if (j.contains("n") && j.at("n").get<int>() != mch.n()) throw ParseError("'n' disagrees with signs");
    if (j.contains("cups")) {
      std::vector<std::pair<int, int>> cups;
      for (const auto& c : j.at("cups")) cups.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
      if (!(matching_from_cups(mch.m(), mch.n(), cups) == mch)) throw ParseError("'cups' disagrees with signs");
    }
    if (j.contains("rays") && j.at("rays").get<std::vector<int>>() != mch.rays())
      throw ParseError("'rays' disagrees with signs");
    return mch;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matching JSON: ") + e.what());
  }
}

}  // namespace annular
