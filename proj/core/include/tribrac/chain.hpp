#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tribrac/tribracket.hpp"

namespace tribrac {

// lb: generators (a; b1..bn) of degree n >= 1, stored as the word a,b1,..,bn.
// nie: generators (a0..a(n+1)) of degree n >= 0.
enum class Side { lb, nie };

const char* side_name(Side s) noexcept;  // "LB" or "N"
Side parse_side(std::string_view s);     // accepts LB/lb/N/nie

using Word = std::vector<Elem>;

int word_length(Side s, int degree);
int min_degree(Side s) noexcept;

struct Limits {
  std::uint64_t max_generators = 200000;
  int threads = 1;
};

// Finitely supported integer combination of generators of one side and degree.
class FormalChain {
 public:
  FormalChain() = default;
  FormalChain(Side side, int degree, int size);

  Side side() const noexcept { return side_; }
  int degree() const noexcept { return degree_; }
  int size() const noexcept { return size_; }

  void add(std::span<const Elem> w, std::int64_t coeff);
  void add(const FormalChain& other, std::int64_t scale = 1);
  std::int64_t coefficient(std::span<const Elem> w) const;
  const std::map<Word, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  // e.g. "2(1,1,1) - (1,2,1)" with 1-based labels
  std::string to_string() const;

  friend bool operator==(const FormalChain&, const FormalChain&) = default;
  friend FormalChain operator+(FormalChain x, const FormalChain& y) { x.add(y, 1); return x; }
  friend FormalChain operator-(FormalChain x, const FormalChain& y) { x.add(y, -1); return x; }

 private:
  Side side_ = Side::lb;
  int degree_ = 0;
  int size_ = 0;
  std::map<Word, std::int64_t> terms_;
};

FormalChain single(Side side, int size, std::span<const Elem> w, std::int64_t coeff = 1);

bool is_degenerate(const Tribracket& t, Side side, std::span<const Elem> w);

FormalChain lb_boundary(const Tribracket& t, std::span<const Elem> w);
FormalChain nie_boundary(const Tribracket& t, std::span<const Elem> w);
FormalChain boundary(const Tribracket& t, const FormalChain& c);
FormalChain project_nondegenerate(const Tribracket& t, const FormalChain& c);

// Nie boundary helper: y(i,j) for j = 1..n of the word a0..a(n+1); entry 0 unused.
std::vector<Elem> nie_y(const Tribracket& t, std::span<const Elem> w, int i);

std::uint64_t generator_count(int size, Side side, int degree);
// Every word of the given side and degree in lexicographic order.
std::vector<Word> all_generators(int size, Side side, int degree, const Limits& lim = {});
std::vector<Word> nondegenerate_generators(const Tribracket& t, Side side, int degree, const Limits& lim = {});

}  // namespace tribrac
