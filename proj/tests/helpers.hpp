#pragma once

#include <random>

#include "annular/tangle.hpp"

namespace annular::testing {

// Random word of `length` generators starting at `source`, sizes kept in [lo, hi].
inline TangleWord random_word(std::mt19937& rng, int source, int length, int lo, int hi,
                              bool crossings = true) {
  WordBuilder b(source);
  while (static_cast<int>(b.build().length()) < length) {
    const int k = b.size();
    std::uniform_int_distribution<int> pick(0, crossings ? 8 : 4);
    auto idx = [&](int top) { return std::uniform_int_distribution<int>(1, top)(rng); };
    switch (pick(rng)) {
      case 0:
        if (k + 2 <= hi) b.g(idx(k + 2));
        break;
      case 1:
        if (k - 2 >= lo && k >= 2) b.f(idx(k));
        break;
      case 2:
        if (k >= 1) b.r();
        break;
      case 3:
        if (k >= 1) b.rp();
        break;
      case 4:
        if (k >= 1) b.s();
        break;
      case 5:
      case 6:
        if (k >= 2) b.t(idx(k), 1 + idx(2) % 2);
        break;
      default:
        if (k >= 1) b.w(idx(k), 1 + idx(2) % 2);
        break;
    }
  }
  return b;
}

}  // namespace annular::testing
