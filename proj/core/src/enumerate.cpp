#include <cstdint>

#include "parallel.hpp"
#include "tribrac/error.hpp"
#include "tribrac/tensor.hpp"

namespace tribrac {

namespace {

// Backtracking over Latin cubes filling cells in flattened order, so every
// branch is visited in lexicographic order of the entries.
class LatinSearch {
 public:
  LatinSearch(int n, bool need_exchange)
      : n_(n), cells_(n * n * n), exchange_(need_exchange), e_(cells_), ab_(n * n), ac_(n * n), bc_(n * n) {}

  void run_from(int first, std::vector<OperationTensor>* out, std::uint64_t* count) {
    out_ = out;
    count_ = count;
    place(0, first);
    descend(1);
    unplace(0, first);
  }

 private:
  void place(int idx, int v) {
    const int a = idx / (n_ * n_), b = (idx / n_) % n_, c = idx % n_;
    const unsigned bit = 1u << v;
    ab_[a * n_ + b] |= bit;
    ac_[a * n_ + c] |= bit;
    bc_[b * n_ + c] |= bit;
    e_[idx] = static_cast<Elem>(v);
  }
  void unplace(int idx, int v) {
    const int a = idx / (n_ * n_), b = (idx / n_) % n_, c = idx % n_;
    const unsigned bit = ~(1u << v);
    ab_[a * n_ + b] &= bit;
    ac_[a * n_ + c] &= bit;
    bc_[b * n_ + c] &= bit;
  }

  void descend(int idx) {
    if (idx == cells_) {
      OperationTensor t(n_, Kind::horizontal, e_);
      if (exchange_ && !check_horizontal_exchange(t).passed()) return;
      if (out_) out_->push_back(std::move(t));
      ++*count_;
      return;
    }
    const int a = idx / (n_ * n_), b = (idx / n_) % n_, c = idx % n_;
    const unsigned used = ab_[a * n_ + b] | ac_[a * n_ + c] | bc_[b * n_ + c];
    for (int v = 0; v < n_; ++v) {
      if (used & (1u << v)) continue;
      place(idx, v);
      descend(idx + 1);
      unplace(idx, v);
    }
  }

  int n_, cells_;
  bool exchange_;
  std::vector<Elem> e_;
  std::vector<unsigned> ab_, ac_, bc_;
  std::vector<OperationTensor>* out_ = nullptr;
  std::uint64_t* count_ = nullptr;
};

void check_cap(int n, const EnumerateOptions& opts) {
  if (n < 1) throw Error(Errc::invalid_argument, "enumeration size must be positive");
  if (n > opts.cap)
    throw CapExceeded("enumeration-cap", "enumeration size " + std::to_string(n) + " exceeds the enumeration cap " +
                                             std::to_string(opts.cap));
  if (n > 16) throw CapExceeded("enumeration-cap", "enumeration supports sizes up to 16");
}

}  // namespace

std::vector<OperationTensor> enumerate_horizontal(int n, const EnumerateOptions& opts) {
  check_cap(n, opts);
  std::vector<std::vector<OperationTensor>> parts(n);
  std::vector<std::uint64_t> counts(n, 0);
  detail::parallel_for(n, opts.threads, [&](int first) {
    LatinSearch s(n, true);
    s.run_from(first, &parts[first], &counts[first]);
  });
  std::vector<OperationTensor> out;
  for (auto& p : parts)
    for (auto& t : p) out.push_back(std::move(t));
  return out;
}

std::uint64_t count_latin_cubes(int n, const EnumerateOptions& opts) {
  check_cap(n, opts);
  std::vector<std::uint64_t> counts(n, 0);
  detail::parallel_for(n, opts.threads, [&](int first) {
    LatinSearch s(n, false);
    s.run_from(first, nullptr, &counts[first]);
  });
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

}  // namespace tribrac
