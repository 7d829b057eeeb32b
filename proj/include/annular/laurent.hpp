#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace annular {

// Laurent polynomial in q with integer coefficients; zero terms are dropped.
class Laurent {
 public:
  Laurent() = default;
  static Laurent monomial(std::int64_t c, int e) {
    Laurent p;
    if (c) p.c_[e] = c;
    return p;
  }
  static Laurent constant(std::int64_t c) { return monomial(c, 0); }

  Laurent operator+(const Laurent& o) const {
    Laurent p = *this;
    for (auto [e, c] : o.c_) p.add(e, c);
    return p;
  }
  Laurent operator*(const Laurent& o) const {
    Laurent p;
    for (auto [e1, c1] : c_)
      for (auto [e2, c2] : o.c_) p.add(e1 + e2, c1 * c2);
    return p;
  }
  Laurent pow(int k) const {
    Laurent p = constant(1);
    for (int i = 0; i < k; ++i) p = p * *this;
    return p;
  }
  // Value at q = +1 or q = -1.
  std::int64_t at_unit(int q) const {
    std::int64_t s = 0;
    for (auto [e, c] : c_) s += (q == -1 && (e % 2 != 0)) ? -c : c;
    return s;
  }
  bool is_zero() const { return c_.empty(); }
  const std::map<int, std::int64_t>& terms() const { return c_; }
  friend bool operator==(const Laurent&, const Laurent&) = default;

  // Ascending powers, e.g. "1+q^2", "2q", "q^-1-3q".
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (auto [e, c] : c_) {
      std::string coef;
      if (e == 0) coef = std::to_string(c);
      else if (c == 1) coef = "";
      else if (c == -1) coef = "-";
      else coef = std::to_string(c);
      if (!s.empty() && coef.rfind('-', 0) != 0) s += "+";
      s += coef;
      if (e == 1) s += "q";
      else if (e != 0) s += "q^" + std::to_string(e);
    }
    return s;
  }

 private:
  void add(int e, std::int64_t c) {
    if ((c_[e] += c) == 0) c_.erase(e);
  }
  std::map<int, std::int64_t> c_;
};

}  // namespace annular
