#include "annular/int_matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>

#include "annular/error.hpp"

namespace annular {

using boost::multiprecision::cpp_int;

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw ArityMismatch("ragged rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_)
    throw ArityMismatch("matrix product " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                        " * " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  IntMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      std::int64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        std::int64_t p, s;
        if (__builtin_mul_overflow(a, o(k, j), &p) || __builtin_add_overflow(out(i, j), p, &s))
          throw InternalInvariant("integer overflow in matrix product");
        out(i, j) = s;
      }
    }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ArityMismatch("matrix sum shape");
  IntMatrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const { return *this + o.scaled(-1); }

IntMatrix IntMatrix::scaled(std::int64_t k) const {
  IntMatrix out = *this;
  for (auto& x : out.a_) x *= k;
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool IntMatrix::is_zero() const {
  for (auto x : a_)
    if (x) return false;
  return true;
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream s;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) s << (j ? " " : "") << (*this)(i, j);
    s << "\n";
  }
  return s.str();
}

int rank(const IntMatrix& m) {
  // Bareiss elimination: every intermediate entry is a minor, so division is exact.
  const int R = m.rows(), C = m.cols();
  std::vector<std::vector<cpp_int>> a(R, std::vector<cpp_int>(C));
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < C; ++j) a[i][j] = m(i, j);
  cpp_int prev = 1;
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    int piv = -1;
    for (int i = r; i < R; ++i)
      if (a[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    for (int i = r + 1; i < R; ++i) {
      for (int j = c + 1; j < C; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace annular
