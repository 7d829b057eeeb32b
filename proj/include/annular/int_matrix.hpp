#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace annular {

// Dense matrix of 64-bit integers.  Products check for overflow.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {}
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& operator()(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
  std::int64_t operator()(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix scaled(std::int64_t k) const;
  IntMatrix transpose() const;
  bool is_zero() const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::vector<std::vector<std::int64_t>> to_rows() const;
  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> a_;
};

// Exact rank over the rationals (fraction-free elimination on big integers).
int rank(const IntMatrix& m);

}  // namespace annular
