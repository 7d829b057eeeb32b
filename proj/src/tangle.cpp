#include "annular/tangle.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "annular/error.hpp"

namespace annular {

namespace {

std::string describe(GenKind k) {
  switch (k) {
    case GenKind::Cup: return "Cup";
    case GenKind::Cap: return "Cap";
    case GenKind::CrossOver: return "CrossOver";
    case GenKind::CrossUnder: return "CrossUnder";
    case GenKind::TwistPos: return "TwistPos";
    case GenKind::TwistNeg: return "TwistNeg";
    case GenKind::RotCW: return "RotCW";
    case GenKind::RotCCW: return "RotCCW";
    case GenKind::Wrap: return "Wrap";
  }
  return "?";
}

bool has_index(GenKind k) {
  return k != GenKind::RotCW && k != GenKind::RotCCW && k != GenKind::Wrap;
}

int parse_int(std::string_view s, const std::string& ctx) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw ParseError("bad integer '" + std::string(s) + "' in " + ctx);
  return v;
}

}  // namespace

GenSym GenSym::make(GenKind kind, int index, int in_size) {
  if (in_size < 0) throw ArityMismatch("negative boundary size");
  GenSym g;
  g.kind = kind;
  g.in_size = in_size;
  g.index = has_index(kind) ? index : 0;
  auto bad = [&](int lo, int hi) {
    if (index < lo || index > hi)
      throw ArityMismatch(describe(kind) + "(" + std::to_string(index) + ") invalid at size " +
                          std::to_string(in_size));
  };
  switch (kind) {
    case GenKind::Cup:
      g.out_size = in_size + 2;
      bad(1, g.out_size);
      break;
    case GenKind::Cap:
      if (in_size < 2) throw ArityMismatch("Cap needs at least two strands");
      g.out_size = in_size - 2;
      bad(1, in_size);
      break;
    case GenKind::CrossOver:
    case GenKind::CrossUnder:
      // A wrap crossing at size 1 would cross a strand with itself.
      if (in_size < 2) throw ArityMismatch("crossing needs at least two strands");
      g.out_size = in_size;
      bad(1, in_size);
      break;
    case GenKind::TwistPos:
    case GenKind::TwistNeg:
      g.out_size = in_size;
      bad(1, in_size);
      break;
    case GenKind::Wrap:
      if (in_size < 1) throw ArityMismatch("Wrap needs at least one strand");
      g.out_size = in_size;
      break;
    case GenKind::RotCW:
    case GenKind::RotCCW:
      g.out_size = in_size;
      break;
  }
  return g;
}

GenSym GenSym::cup(int i, int in_size) { return make(GenKind::Cup, i, in_size); }
GenSym GenSym::cap(int i, int in_size) { return make(GenKind::Cap, i, in_size); }
GenSym GenSym::cross_over(int i, int size) { return make(GenKind::CrossOver, i, size); }
GenSym GenSym::cross_under(int i, int size) { return make(GenKind::CrossUnder, i, size); }
GenSym GenSym::twist_pos(int i, int size) { return make(GenKind::TwistPos, i, size); }
GenSym GenSym::twist_neg(int i, int size) { return make(GenKind::TwistNeg, i, size); }
GenSym GenSym::rot_cw(int size) { return make(GenKind::RotCW, 0, size); }
GenSym GenSym::rot_ccw(int size) { return make(GenKind::RotCCW, 0, size); }
GenSym GenSym::wrap(int size) { return make(GenKind::Wrap, 0, size); }

bool GenSym::is_wrap_index() const {
  switch (kind) {
    case GenKind::Cup: return index == out_size;
    case GenKind::Cap:
    case GenKind::CrossOver:
    case GenKind::CrossUnder: return index == in_size;
    default: return false;
  }
}

std::string GenSym::token() const {
  auto i = std::to_string(index);
  switch (kind) {
    case GenKind::Cup: return "g" + i;
    case GenKind::Cap: return "f" + i;
    case GenKind::CrossOver: return "t" + i + ":o";
    case GenKind::CrossUnder: return "t" + i + ":u";
    case GenKind::TwistPos: return "w" + i + ":+";
    case GenKind::TwistNeg: return "w" + i + ":-";
    case GenKind::RotCW: return "r";
    case GenKind::RotCCW: return "r'";
    case GenKind::Wrap: return "s";
  }
  return "?";
}

TangleWord::TangleWord(int source, std::vector<GenSym> gens)
    : source_(source), target_(source), gens_(std::move(gens)) {
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (gens_[k].in_size != target_)
      throw BoundaryMismatch("generator " + std::to_string(k) + " (" + gens_[k].token() +
                             ") expects size " + std::to_string(gens_[k].in_size) + ", got " +
                             std::to_string(target_));
    target_ = gens_[k].out_size;
  }
}

int TangleWord::size_at(std::size_t pos) const {
  if (pos > gens_.size()) throw NoMatch("position past end of word");
  return pos == 0 ? source_ : gens_[pos - 1].out_size;
}

WordBuilder& WordBuilder::append(const GenSym& g) {
  if (g.in_size != size_) throw BoundaryMismatch("builder size mismatch at " + g.token());
  gens_.push_back(g);
  size_ = g.out_size;
  return *this;
}

WordBuilder& WordBuilder::append(const TangleWord& w) {
  if (w.source_size() != size_) throw BoundaryMismatch("builder size mismatch");
  for (const auto& g : w.gens()) append(g);
  return *this;
}

WordBuilder& WordBuilder::g(int i) { return append(GenSym::cup(i, size_)); }
WordBuilder& WordBuilder::f(int i) { return append(GenSym::cap(i, size_)); }
WordBuilder& WordBuilder::t(int i, int type) {
  return append(type == 1 ? GenSym::cross_over(i, size_) : GenSym::cross_under(i, size_));
}
WordBuilder& WordBuilder::w(int i, int type) {
  return append(type == 1 ? GenSym::twist_pos(i, size_) : GenSym::twist_neg(i, size_));
}
WordBuilder& WordBuilder::r() { return append(GenSym::rot_cw(size_)); }
WordBuilder& WordBuilder::rp() { return append(GenSym::rot_ccw(size_)); }
WordBuilder& WordBuilder::s() { return append(GenSym::wrap(size_)); }

TangleWord compose(const TangleWord& a, const TangleWord& b) {
  if (a.target_size() != b.source_size())
    throw BoundaryMismatch("compose: target " + std::to_string(a.target_size()) +
                           " vs source " + std::to_string(b.source_size()));
  auto gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return TangleWord(a.source_size(), std::move(gens));
}

TangleWord inverse_wrap_word(int n) {
  WordBuilder b(n);
  b.rp();
  for (int i = 1; i <= n - 1; ++i) b.t(i, 2);
  return b;
}

TangleWord invert_diagrammatically(const TangleWord& a) {
  WordBuilder b(a.target_size());
  const auto& gens = a.gens();
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
    const GenSym& g = *it;
    switch (g.kind) {
      case GenKind::Cup: b.f(g.index); break;
      case GenKind::Cap: b.g(g.index); break;
      case GenKind::RotCW: b.rp(); break;
      case GenKind::RotCCW: b.r(); break;
      case GenKind::Wrap: b.append(inverse_wrap_word(g.in_size)); break;
      default: b.append(g); break;
    }
  }
  return b;
}

TangleWord expand_rotation(int n, Direction dir) {
  if (n < 2) throw ArityMismatch("expand_rotation needs n >= 2");
  WordBuilder b(n);
  if (dir == Direction::CW) {
    for (int i = 1; i <= n - 1; ++i) b.t(i, 2);
    b.s();
  } else {
    b.append(inverse_wrap_word(n));
    for (int i = n - 1; i >= 1; --i) b.t(i, 1);
  }
  return b;
}

TangleWord expand_wrap_indices(const TangleWord& w) {
  WordBuilder b(w.source_size());
  for (const auto& g : w.gens()) {
    if (!g.is_wrap_index()) {
      b.append(g);
      continue;
    }
    const int n = g.kind == GenKind::Cup ? g.out_size : g.in_size;
    switch (g.kind) {
      case GenKind::Cup:  // g_n^n = r'_n ∘ g_n^{n-1} ∘ r_{n-2}
        if (n - 2 > 0) b.r();
        b.g(n - 1).rp();
        break;
      case GenKind::Cap:  // f_n^n = r'_{n-2} ∘ f_n^{n-1} ∘ r_n
        b.r().f(n - 1);
        if (n - 2 > 0) b.rp();
        break;
      default:  // t_n^n = r' ∘ t_n^{n-1} ∘ r
        b.r().append(GenSym::make(g.kind, n - 1, n)).rp();
        break;
    }
  }
  return b;
}

TangleWord parse_tokens(int source, const std::string& tokens) {
  WordBuilder b(source);
  std::istringstream in(tokens);
  std::string tok;
  while (in >> tok) {
    const std::string ctx = "token '" + tok + "'";
    if (tok == "r") {
      b.r();
    } else if (tok == "r'") {
      b.rp();
    } else if (tok == "s") {
      b.s();
    } else if (tok[0] == 'g' || tok[0] == 'f') {
      int i = parse_int(std::string_view(tok).substr(1), ctx);
      tok[0] == 'g' ? b.g(i) : b.f(i);
    } else if ((tok[0] == 't' || tok[0] == 'w') && tok.size() >= 4 && tok[tok.size() - 2] == ':') {
      int i = parse_int(std::string_view(tok).substr(1, tok.size() - 3), ctx);
      char c = tok.back();
      if (tok[0] == 't' && (c == 'o' || c == 'u')) {
        b.t(i, c == 'o' ? 1 : 2);
      } else if (tok[0] == 'w' && (c == '+' || c == '-')) {
        b.w(i, c == '+' ? 1 : 2);
      } else {
        throw ParseError("unknown " + ctx);
      }
    } else {
      throw ParseError("unknown " + ctx);
    }
  }
  return b;
}

TangleWord parse_word(const std::string& text) {
  // tangle <source> -> <target>: tokens...
  const std::string head = "tangle ";
  if (text.rfind(head, 0) != 0) throw ParseError("missing 'tangle' header");
  auto arrow = text.find(" -> ", head.size());
  auto colon = text.find(':', head.size());
  if (arrow == std::string::npos || colon == std::string::npos || colon < arrow)
    throw ParseError("malformed header in '" + text + "'");
  int source = parse_int(std::string_view(text).substr(head.size(), arrow - head.size()), "source");
  int target = parse_int(std::string_view(text).substr(arrow + 4, colon - arrow - 4), "target");
  std::string rest = text.substr(colon + 1);
  if (!rest.empty() && rest[0] != ' ') throw ParseError("expected space after ':'");
  if (rest.find("  ") != std::string::npos) throw ParseError("tokens must be separated by single spaces");
  TangleWord w = parse_tokens(source, rest);
  if (w.target_size() != target)
    throw BoundaryMismatch("declared target " + std::to_string(target) + " but word ends at " +
                           std::to_string(w.target_size()));
  return w;
}

std::string format_word(const TangleWord& w) {
  std::string out = "tangle " + std::to_string(w.source_size()) + " -> " +
                    std::to_string(w.target_size()) + ":";
  for (const auto& g : w.gens()) out += " " + g.token();
  return out;
}

}  // namespace annular
