#include <doctest.h>

#include <limits>

#include "annular/error.hpp"
#include "annular/int_matrix.hpp"

using namespace annular;

TEST_CASE("rank of small matrices") {
  CHECK(rank(IntMatrix::identity(5)) == 5);
  CHECK(rank(IntMatrix(3, 4)) == 0);
  CHECK(rank(IntMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})) == 2);
  CHECK(rank(IntMatrix::from_rows({{0, 0, 1}, {0, 1, 0}})) == 2);
  CHECK(rank(IntMatrix::from_rows({{1, 1}, {1, -1}, {2, 0}})) == 2);
}

TEST_CASE("Vandermonde matrices have full rank without overflow") {
  // Entries up to 20^15 overflow doubles' exact range but not the exact rank.
  const int n = 16;
  IntMatrix v(n, n);
  for (int i = 0; i < n; ++i) {
    std::int64_t p = 1;
    for (int j = 0; j < n; ++j, p *= (i + 5)) v(i, j) = p;
  }
  CHECK(rank(v) == n);
  IntMatrix dup = v;
  for (int j = 0; j < n; ++j) dup(n - 1, j) = v(0, j);
  CHECK(rank(dup) == n - 1);
}

TEST_CASE("arithmetic and shape checks") {
  const IntMatrix a = IntMatrix::from_rows({{1, 2}, {3, 4}, {5, 6}});
  CHECK(a.transpose() == IntMatrix::from_rows({{1, 3, 5}, {2, 4, 6}}));
  CHECK(a.transpose() * a == IntMatrix::from_rows({{35, 44}, {44, 56}}));
  CHECK((a - a).is_zero());
  CHECK(a + a == a.scaled(2));
  CHECK(a.to_rows() == std::vector<std::vector<std::int64_t>>{{1, 2}, {3, 4}, {5, 6}});
  CHECK(a.to_string() == "1 2\n3 4\n5 6\n");
  CHECK_THROWS_AS(a * a, ArityMismatch);
  CHECK_THROWS_AS(a + a.transpose(), ArityMismatch);
  CHECK_THROWS_AS(IntMatrix::from_rows({{1, 2}, {3}}), ArityMismatch);
}

TEST_CASE("products detect overflow") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2 + 1;
  const IntMatrix a = IntMatrix::from_rows({{big, big}});
  const IntMatrix b = IntMatrix::from_rows({{1}, {1}});
  CHECK_THROWS_AS(a * b, InternalInvariant);
  CHECK_THROWS_AS(IntMatrix::from_rows({{big}}) * IntMatrix::from_rows({{4}}), InternalInvariant);
}
