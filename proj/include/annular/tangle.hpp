#pragma once

#include <string>
#include <vector>

namespace annular {

enum class GenKind { Cup, Cap, CrossOver, CrossUnder, TwistPos, TwistNeg, RotCW, RotCCW, Wrap };

// A generator of the affine framed tangle category, tagged with its boundary
// sizes.  Strand index i is 1-based; strand i sits at 0-based position i-1 and
// positions increase anticlockwise.  Cup(i) joins positions i-1 and i of its
// outer circle; Cup(out_size) is the wrap-around cup joining out_size-1 and 0.
struct GenSym {
  GenKind kind = GenKind::RotCW;
  int index = 0;  // 0 for RotCW, RotCCW, Wrap
  int in_size = 0;
  int out_size = 0;

  static GenSym cup(int i, int in_size);
  static GenSym cap(int i, int in_size);
  static GenSym cross_over(int i, int size);
  static GenSym cross_under(int i, int size);
  static GenSym twist_pos(int i, int size);
  static GenSym twist_neg(int i, int size);
  static GenSym rot_cw(int size);
  static GenSym rot_ccw(int size);
  static GenSym wrap(int size);
  // Validating constructor used by all of the above and by the parser.
  static GenSym make(GenKind kind, int index, int in_size);

  bool is_wrap_index() const;  // cup/cap/crossing whose index equals the circle size
  std::string token() const;

  friend bool operator==(const GenSym&, const GenSym&) = default;
  friend auto operator<=>(const GenSym&, const GenSym&) = default;
};

// A boundary-typed word.  gens are stored in application order: gens[0] acts
// first.  In the composite notation b∘a this is the reverse of reading order.
class TangleWord {
 public:
  TangleWord() = default;
  explicit TangleWord(int size) : source_(size), target_(size) {}
  // Throws BoundaryMismatch when the chain of sizes is broken.
  TangleWord(int source, std::vector<GenSym> gens);

  int source_size() const { return source_; }
  int target_size() const { return target_; }
  const std::vector<GenSym>& gens() const { return gens_; }
  std::size_t length() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  // Boundary size just before gens[pos] acts (pos == length() gives target).
  int size_at(std::size_t pos) const;

  friend bool operator==(const TangleWord&, const TangleWord&) = default;

 private:
  int source_ = 0;
  int target_ = 0;
  std::vector<GenSym> gens_;
};

// Incremental builder in application order; each call appends a generator
// acting on the current boundary.
class WordBuilder {
 public:
  explicit WordBuilder(int source) : source_(source), size_(source) {}
  WordBuilder& g(int i);
  WordBuilder& f(int i);
  WordBuilder& t(int i, int type);  // type 1 = over, 2 = under
  WordBuilder& w(int i, int type);  // type 1 = positive, 2 = negative
  WordBuilder& r();
  WordBuilder& rp();
  WordBuilder& s();
  WordBuilder& append(const GenSym& g);
  WordBuilder& append(const TangleWord& w);
  int size() const { return size_; }
  TangleWord build() const { return TangleWord(source_, gens_); }
  operator TangleWord() const { return build(); }

 private:
  int source_;
  int size_;
  std::vector<GenSym> gens_;
};

TangleWord compose(const TangleWord& a, const TangleWord& b);  // a first, then b

// Reflection through the middle circle: reverses the word, swaps cups and caps
// and the two rotations, keeps crossing sense and framing, and replaces Wrap
// by a word for its inverse.
TangleWord invert_diagrammatically(const TangleWord& a);

enum class Direction { CW, CCW };
TangleWord expand_rotation(int n, Direction dir);
// Word for the inverse of Wrap at size n, in application order
// [RotCCW, CrossUnder(1), ..., CrossUnder(n-1)].
TangleWord inverse_wrap_word(int n);
// Rewrites every wrap-index cup, cap and crossing by conjugation with rotations.
TangleWord expand_wrap_indices(const TangleWord& w);

TangleWord parse_word(const std::string& text);
std::string format_word(const TangleWord& w);
// Parses the token list alone, inferring sizes from the source.
TangleWord parse_tokens(int source, const std::string& tokens);

}  // namespace annular
