#include "tribrac/local_biquandle.hpp"

#include "tribrac/error.hpp"
#include "tribrac/tribracket.hpp"

namespace tribrac {

LocalBiquandle::LocalBiquandle(int size, std::vector<Elem> under2, std::vector<Elem> over2)
    : n_(size), u_(std::move(under2)), o_(std::move(over2)) {
  const std::size_t cube = static_cast<std::size_t>(size) * size * size;
  if (size < 1 || size > max_size) throw Error(Errc::invalid_argument, "local biquandle size must be in 1..255");
  if (u_.size() != cube || o_.size() != cube) throw Error(Errc::invalid_argument, "local biquandle tables must have n^3 entries");
  for (std::size_t i = 0; i < cube; ++i)
    if (u_[i] >= size || o_[i] >= size) throw Error(Errc::invalid_argument, "local biquandle entry out of range");
}

Pair LocalBiquandle::under(Pair x, Pair y) const {
  if (x.first != y.first) throw Error(Errc::invalid_argument, "local operation needs pairs with equal first components");
  return {y.second, under2(x.first, x.second, y.second)};
}

Pair LocalBiquandle::over(Pair x, Pair y) const {
  if (x.first != y.first) throw Error(Errc::invalid_argument, "local operation needs pairs with equal first components");
  return {y.second, over2(x.first, x.second, y.second)};
}

std::pair<Pair, Pair> LocalBiquandle::exchange(Pair x, Pair y) const {
  return {over(y, x), under(x, y)};
}

LocalBiquandle local_biquandle_from_horizontal(const OperationTensor& t) {
  Tribracket::from_horizontal(t);  // validates
  const int n = t.size();
  const std::size_t cube = static_cast<std::size_t>(n) * n * n;
  std::vector<Elem> u(cube), o(cube);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        u[(static_cast<std::size_t>(a) * n + b) * n + c] = t(a, b, c);
        o[(static_cast<std::size_t>(a) * n + b) * n + c] = t(a, c, b);
      }
  return LocalBiquandle(n, std::move(u), std::move(o));
}

OperationTensor local_biquandle_to_horizontal(const LocalBiquandle& l) {
  AxiomReport r = check_axioms(l);
  if (!r.passed()) {
    const auto& v = r.violations.front();
    std::string msg = "local biquandle axiom " + v.axiom + " fails at";
    for (int w : v.witness) msg += " " + std::to_string(w);
    throw Error(Errc::axiom_failure, msg);
  }
  const int n = l.size();
  OperationTensor t(n, Kind::horizontal);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) t.set(a, b, c, l.under2(a, b, c));
  return t;
}

AxiomReport check_axioms(const LocalBiquandle& l) {
  AxiomReport r;
  const int n = l.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (l.under2(a, b, c) != l.over2(a, c, b)) r.add("L1iii", {a, b, c});

  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::fill(seen.begin(), seen.end(), 0);
      bool ok = true;
      for (int c = 0; c < n; ++c) ok &= !seen[l.under2(a, c, b)]++;
      if (!ok) r.add("L2i", {a, b});
      std::fill(seen.begin(), seen.end(), 0);
      ok = true;
      for (int c = 0; c < n; ++c) ok &= !seen[l.over2(a, c, b)]++;
      if (!ok) r.add("L2ii", {a, b});
    }

  // S lands in pairs sharing their second component exactly when L1iii holds
  // on the relevant triple.
  std::vector<char> image(static_cast<std::size_t>(n) * n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        auto [x, y] = l.exchange({static_cast<Elem>(a), static_cast<Elem>(b)}, {static_cast<Elem>(a), static_cast<Elem>(c)});
        if (x.second != y.second) {
          r.add("L2iii-domain", {a, b, c});
          continue;
        }
        std::size_t k = (static_cast<std::size_t>(x.second) * n + x.first) * n + y.first;
        if (image[k]++) r.add("L2iii", {a, b, c});
      }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const Pair ab{Elem(a), Elem(b)}, ac{Elem(a), Elem(c)}, ad{Elem(a), Elem(d)};
          // the pair operations of the third axiom always act on pairs with matching first components
          Pair lhs1 = l.under(l.under(ab, ac), l.over(ad, ac));
          Pair rhs1 = l.under(l.under(ab, ad), l.under(ac, ad));
          if (lhs1 != rhs1) r.add("L3i", {a, b, c, d});
          Pair lhs2 = l.under(l.over(ab, ac), l.over(ad, ac));
          Pair rhs2 = l.over(l.under(ab, ad), l.under(ac, ad));
          if (lhs2 != rhs2) r.add("L3ii", {a, b, c, d});
          Pair lhs3 = l.over(l.over(ab, ac), l.under(ad, ac));
          Pair rhs3 = l.over(l.over(ab, ad), l.over(ac, ad));
          if (lhs3 != rhs3) r.add("L3iii", {a, b, c, d});
        }
  return r;
}

}  // namespace tribrac
