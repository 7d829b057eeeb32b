#include <doctest.h>

#include "annular/error.hpp"
#include "annular/ktheory.hpp"
#include "annular/relations.hpp"
#include "annular/tangle.hpp"
#include "helpers.hpp"

using namespace annular;

TEST_CASE("compose concatenates in application order") {
  CHECK(compose(TangleWord(4), TangleWord(4)) == TangleWord(4));
  const TangleWord cup = WordBuilder(0).g(1), cap = WordBuilder(2).f(1);
  const TangleWord both = compose(cup, cap);
  CHECK(both.source_size() == 0);
  CHECK(both.target_size() == 0);
  REQUIRE(both.length() == 2);
  CHECK(both.gens()[0] == GenSym::cup(1, 0));
  CHECK(both.gens()[1] == GenSym::cap(1, 2));
}

TEST_CASE("compose rejects a size clash") {
  const TangleWord a = WordBuilder(2).g(1), b = WordBuilder(6).g(1);
  CHECK_THROWS_AS(compose(a, b), BoundaryMismatch);
}

TEST_CASE("generator arity is validated") {
  CHECK_THROWS_AS(GenSym::cap(1, 1), ArityMismatch);
  CHECK_THROWS_AS(GenSym::cap(3, 2), ArityMismatch);
  CHECK_THROWS_AS(GenSym::cup(0, 2), ArityMismatch);
  CHECK_THROWS_AS(GenSym::cup(5, 2), ArityMismatch);
  CHECK_THROWS_AS(GenSym::cross_over(1, 1), ArityMismatch);
  CHECK_THROWS_AS(GenSym::wrap(0), ArityMismatch);
  CHECK_NOTHROW(GenSym::cup(4, 2));
  CHECK(GenSym::cup(4, 2).is_wrap_index());
  CHECK_FALSE(GenSym::cup(3, 2).is_wrap_index());
  CHECK_THROWS_AS(TangleWord(2, {GenSym::cup(1, 2), GenSym::cap(1, 2)}), BoundaryMismatch);
}

TEST_CASE("diagrammatic inversion") {
  const TangleWord cup = WordBuilder(0).g(1);
  CHECK(invert_diagrammatically(cup) == TangleWord(WordBuilder(2).f(1)));
  CHECK(invert_diagrammatically(TangleWord(WordBuilder(3).r())) == TangleWord(WordBuilder(3).rp()));
  CHECK(invert_diagrammatically(TangleWord(WordBuilder(3).rp())) == TangleWord(WordBuilder(3).r()));
  const TangleWord wrap = WordBuilder(3).s();
  CHECK(invert_diagrammatically(wrap) == inverse_wrap_word(3));
}

TEST_CASE("inverting twice gives the same class") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const TangleWord w = testing::random_word(rng, 2 + trial % 3, 6, 0, 6);
    const TangleWord ww = invert_diagrammatically(invert_diagrammatically(w));
    CHECK(ww.source_size() == w.source_size());
    CHECK(ww.target_size() == w.target_size());
    CHECK(full_matrix(ww) == full_matrix(w));
  }
}

TEST_CASE("the inverse wrap word inverts the wrap") {
  for (int n = 1; n <= 7; ++n) {
    const TangleWord w = compose(WordBuilder(n).s(), inverse_wrap_word(n));
    for (int eps : {1, -1}) CHECK(full_matrix(w, eps) == IntMatrix::identity(1 << n));
  }
}

TEST_CASE("rotation expansion") {
  CHECK(expand_rotation(2, Direction::CW) == TangleWord(WordBuilder(2).t(1, 2).s()));
  CHECK(expand_rotation(3, Direction::CW) == TangleWord(WordBuilder(3).t(1, 2).t(2, 2).s()));
  CHECK(expand_rotation(2, Direction::CCW) == TangleWord(WordBuilder(2).rp().t(1, 2).t(1, 1)));
  CHECK_THROWS_AS(expand_rotation(1, Direction::CW), ArityMismatch);
  for (int n = 2; n <= 7; ++n) {
    CHECK(full_matrix(expand_rotation(n, Direction::CW)) == full_matrix(TangleWord(WordBuilder(n).r())));
    CHECK(full_matrix(expand_rotation(n, Direction::CCW)) == full_matrix(TangleWord(WordBuilder(n).rp())));
    const TangleWord loop = compose(expand_rotation(n, Direction::CW), expand_rotation(n, Direction::CCW));
    CHECK(greedy_simplify(loop).empty());
  }
}

TEST_CASE("wrap-index expansion keeps the class and removes wrap indices") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const TangleWord w = testing::random_word(rng, 1 + trial % 4, 5, 0, 7);
    const TangleWord e = expand_wrap_indices(w);
    for (const auto& g : e.gens()) CHECK_FALSE(g.is_wrap_index());
    CHECK(full_matrix(e) == full_matrix(w));
  }
}

TEST_CASE("text format round-trips") {
  const TangleWord w = WordBuilder(2).g(2).t(1, 1).t(3, 2).w(4, 1).w(2, 2).r().rp().s().f(1);
  const std::string text = format_word(w);
  CHECK(text == "tangle 2 -> 2: g2 t1:o t3:u w4:+ w2:- r r' s f1");
  CHECK(parse_word(text) == w);
  CHECK(parse_word("tangle 3 -> 3:") == TangleWord(3));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const TangleWord v = testing::random_word(rng, trial % 5, 8, 0, 8);
    CHECK(parse_word(format_word(v)) == v);
  }
}

TEST_CASE("malformed text is rejected") {
  CHECK_THROWS_AS(parse_word("tangle 2 -> 2: x1"), ParseError);
  CHECK_THROWS_AS(parse_word("tangle 2 -> 2: t1:x"), ParseError);
  CHECK_THROWS_AS(parse_word("tangle 2 -> 2:  r"), ParseError);
  CHECK_THROWS_AS(parse_word("tangl 2 -> 2: r"), ParseError);
  CHECK_THROWS_AS(parse_word("tangle a -> 2: r"), ParseError);
  CHECK_THROWS_AS(parse_word("tangle 2 -> 4: r"), BoundaryMismatch);
  CHECK_THROWS_AS(parse_word("tangle 2 -> 0: f3"), ArityMismatch);
}
