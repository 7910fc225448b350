#include "tribrac/chain.hpp"

#include "tribrac/error.hpp"

namespace tribrac {

const char* side_name(Side s) noexcept { return s == Side::lb ? "LB" : "N"; }

Side parse_side(std::string_view s) {
  if (s == "LB" || s == "lb") return Side::lb;
  if (s == "N" || s == "n" || s == "nie" || s == "Nie") return Side::nie;
  throw Error(Errc::invalid_argument, "unknown side '" + std::string(s) + "', expected LB or N");
}

int min_degree(Side s) noexcept { return s == Side::lb ? 1 : 0; }

int word_length(Side s, int degree) { return s == Side::lb ? degree + 1 : degree + 2; }

FormalChain::FormalChain(Side side, int degree, int size) : side_(side), degree_(degree), size_(size) {}

void FormalChain::add(std::span<const Elem> w, std::int64_t coeff) {
  if (static_cast<int>(w.size()) != word_length(side_, degree_))
    throw Error(Errc::invalid_argument, "generator length does not match the chain degree");
  if (coeff == 0) return;
  auto [it, fresh] = terms_.try_emplace(Word(w.begin(), w.end()), coeff);
  if (!fresh && (it->second += coeff) == 0) terms_.erase(it);
}

void FormalChain::add(const FormalChain& other, std::int64_t scale) {
  if (other.side_ != side_ || other.degree_ != degree_)
    throw Error(Errc::invalid_argument, "chains of different side or degree cannot be added");
  for (const auto& [w, c] : other.terms_) add(w, c * scale);
}

std::int64_t FormalChain::coefficient(std::span<const Elem> w) const {
  auto it = terms_.find(Word(w.begin(), w.end()));
  return it == terms_.end() ? 0 : it->second;
}

std::string FormalChain::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    std::int64_t m = c < 0 ? -c : c;
    if (m != 1) s += std::to_string(m);
    s += "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(w[i] + 1);
    }
    s += ")";
  }
  return s;
}

FormalChain single(Side side, int size, std::span<const Elem> w, std::int64_t coeff) {
  FormalChain c(side, static_cast<int>(w.size()) - (side == Side::lb ? 1 : 2), size);
  c.add(w, coeff);
  return c;
}

bool is_degenerate(const Tribracket& t, Side side, std::span<const Elem> w) {
  const std::size_t L = w.size();
  if (side == Side::lb) {
    for (std::size_t i = 1; i + 1 < L; ++i)
      if (w[i] == w[i + 1]) return true;
    return false;
  }
  for (std::size_t j = 1; j + 1 < L; ++j)
    if (t.v(w[j - 1], w[j], w[j + 1]) == w[j]) return true;
  return false;
}

FormalChain lb_boundary(const Tribracket& t, std::span<const Elem> w) {
  if (w.size() < 2) throw Error(Errc::invalid_argument, "LB generators have degree at least 1");
  const int n = static_cast<int>(w.size()) - 1;
  FormalChain out(Side::lb, n - 1, t.size());
  if (n < 2) return out;
  const Elem a = w[0];
  Word del(n), mov(n);
  for (int i = 1; i <= n; ++i) {
    const std::int64_t s = (i % 2 == 0) ? 1 : -1;
    del[0] = a;
    for (int j = 1, k = 1; j <= n; ++j)
      if (j != i) del[k++] = w[j];
    mov[0] = w[i];
    for (int j = 1, k = 1; j <= n; ++j) {
      if (j == i) continue;
      mov[k++] = j < i ? t.h(a, w[j], w[i]) : t.h(a, w[i], w[j]);
    }
    out.add(del, s);
    out.add(mov, -s);
  }
  return out;
}

std::vector<Elem> nie_y(const Tribracket& t, std::span<const Elem> a, int i) {
  const int n = static_cast<int>(a.size()) - 2;
  std::vector<Elem> y(n + 1, 0);
  if (i >= 1 && i <= n) y[i] = t.v(a[i - 1], a[i], a[i + 1]);
  if (i + 1 >= 1 && i + 1 <= n) y[i + 1] = t.v(a[i], a[i + 1], a[i + 2]);
  for (int j = i - 1; j >= 1; --j) y[j] = t.v(a[j - 1], a[j], y[j + 1]);
  for (int j = i + 2; j <= n; ++j) y[j] = t.v(y[j - 1], a[j], a[j + 1]);
  return y;
}

FormalChain nie_boundary(const Tribracket& t, std::span<const Elem> a) {
  if (a.size() < 2) throw Error(Errc::invalid_argument, "Nie generators have degree at least 0");
  const int n = static_cast<int>(a.size()) - 2;
  FormalChain out(Side::nie, n - 1, t.size());
  if (n < 1) return out;
  Word first(n + 1), second(n + 1);
  for (int i = 0; i <= n; ++i) {
    const std::int64_t s = (i % 2 == 0) ? 1 : -1;
    std::vector<Elem> y = nie_y(t, a, i);
    int k = 0;
    for (int j = 1; j <= i; ++j) first[k++] = y[j];
    for (int j = i + 1; j <= n + 1; ++j) first[k++] = a[j];
    k = 0;
    for (int j = 0; j <= i; ++j) second[k++] = a[j];
    for (int j = i + 1; j <= n; ++j) second[k++] = y[j];
    out.add(first, s);
    out.add(second, -s);
  }
  return out;
}

FormalChain boundary(const Tribracket& t, const FormalChain& c) {
  FormalChain out(c.side(), c.degree() - 1, c.size());
  for (const auto& [w, k] : c.terms()) out.add(c.side() == Side::lb ? lb_boundary(t, w) : nie_boundary(t, w), k);
  return out;
}

FormalChain project_nondegenerate(const Tribracket& t, const FormalChain& c) {
  FormalChain out(c.side(), c.degree(), c.size());
  for (const auto& [w, k] : c.terms())
    if (!is_degenerate(t, c.side(), w)) out.add(w, k);
  return out;
}

std::uint64_t generator_count(int size, Side side, int degree) {
  const int L = word_length(side, degree);
  std::uint64_t r = 1;
  for (int i = 0; i < L; ++i) {
    if (r > UINT64_MAX / static_cast<std::uint64_t>(size)) return UINT64_MAX;
    r *= static_cast<std::uint64_t>(size);
  }
  return r;
}

std::vector<Word> all_generators(int size, Side side, int degree, const Limits& lim) {
  if (degree < min_degree(side)) return {};
  const std::uint64_t count = generator_count(size, side, degree);
  if (count > lim.max_generators)
    throw CapExceeded("max-generators", std::string(side_name(side)) + " degree " + std::to_string(degree) + " has " +
                                            std::to_string(count) + " generators over " + std::to_string(size) +
                                            " elements, above the cap of " + std::to_string(lim.max_generators));
  const int L = word_length(side, degree);
  std::vector<Word> out;
  out.reserve(count);
  Word w(L, 0);
  for (std::uint64_t k = 0; k < count; ++k) {
    out.push_back(w);
    for (int i = L - 1; i >= 0; --i) {
      if (++w[i] < size) break;
      w[i] = 0;
    }
  }
  return out;
}

std::vector<Word> nondegenerate_generators(const Tribracket& t, Side side, int degree, const Limits& lim) {
  std::vector<Word> out;
  for (auto& w : all_generators(t.size(), side, degree, lim))
    if (!is_degenerate(t, side, w)) out.push_back(std::move(w));
  return out;
}

}  // namespace tribrac
