#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "tribrac/tribrac.hpp"

namespace tribrac::test {

// Naive horizontal axiom check straight from the definition.
inline bool naive_is_horizontal(const OperationTensor& t) {
  const int n = t.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int s1 = 0, s2 = 0, s3 = 0;
        for (int d = 0; d < n; ++d) {
          s1 += t(a, b, d) == c;
          s2 += t(a, d, b) == c;
          s3 += t(d, a, b) == c;
        }
        if (s1 != 1 || s2 != 1 || s3 != 1) return false;
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const int x = t(b, t(a, b, c), t(a, b, d));
          const int y = t(c, t(a, b, c), t(a, c, d));
          const int z = t(d, t(a, b, d), t(a, c, d));
          if (x != y || y != z) return false;
        }
  return true;
}

// Horizontal tribrackets of order n <= 3 built from stacks of Latin squares.
inline std::vector<OperationTensor> naive_tribrackets(int n) {
  std::vector<std::vector<Elem>> squares;
  std::vector<Elem> sq(n * n);
  std::function<void(int)> fill = [&](int cell) {
    if (cell == n * n) {
      squares.push_back(sq);
      return;
    }
    const int r = cell / n, c = cell % n;
    for (int v = 0; v < n; ++v) {
      bool ok = true;
      for (int k = 0; k < c; ++k) ok = ok && sq[r * n + k] != v;
      for (int k = 0; k < r; ++k) ok = ok && sq[k * n + c] != v;
      if (!ok) continue;
      sq[cell] = static_cast<Elem>(v);
      fill(cell + 1);
    }
  };
  fill(0);
  std::vector<OperationTensor> out;
  std::vector<std::size_t> pick(n, 0);
  std::function<void(int)> stack = [&](int layer) {
    if (layer == n) {
      OperationTensor t(n, Kind::horizontal);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) t.set(a, b, c, squares[pick[a]][b * n + c]);
      if (naive_is_horizontal(t)) out.push_back(t);
      return;
    }
    for (std::size_t s = 0; s < squares.size(); ++s) {
      pick[layer] = s;
      stack(layer + 1);
    }
  };
  stack(0);
  std::sort(out.begin(), out.end());
  return out;
}

inline const std::vector<Tribracket>& small_tribrackets() {
  static const std::vector<Tribracket> all = [] {
    std::vector<Tribracket> v;
    for (int n = 1; n <= 3; ++n)
      for (const auto& h : naive_tribrackets(n)) v.push_back(Tribracket::from_horizontal(h));
    return v;
  }();
  return all;
}

// Every word of length len over n letters.
inline std::vector<Word> words(int n, int len) {
  std::vector<Word> out;
  Word w(len, 0);
  while (true) {
    out.push_back(w);
    int i = len - 1;
    while (i >= 0 && w[i] == n - 1) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

inline Word W(std::initializer_list<int> one_based) {
  Word w;
  for (int x : one_based) w.push_back(static_cast<Elem>(x - 1));
  return w;
}

}  // namespace tribrac::test
