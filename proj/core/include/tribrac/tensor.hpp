#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tribrac {

// Elements of X are stored 0-based; the text and JSON formats use labels 1..n.
using Elem = std::uint8_t;
inline constexpr int max_size = 255;

enum class Kind { horizontal, vertical };

const char* kind_name(Kind k) noexcept;

// A ternary operation X^3 -> X stored as a dense n*n*n table.
class OperationTensor {
 public:
  OperationTensor() = default;
  OperationTensor(int size, Kind kind);
  OperationTensor(int size, Kind kind, std::vector<Elem> entries);

  int size() const noexcept { return n_; }
  Kind kind() const noexcept { return kind_; }

  Elem operator()(int a, int b, int c) const noexcept {
    return e_[(static_cast<std::size_t>(a) * n_ + b) * n_ + c];
  }
  void set(int a, int b, int c, Elem v) { e_[(static_cast<std::size_t>(a) * n_ + b) * n_ + c] = v; }

  std::span<const Elem> entries() const noexcept { return e_; }

  friend bool operator==(const OperationTensor&, const OperationTensor&) = default;
  friend bool operator<(const OperationTensor& x, const OperationTensor& y) { return x.e_ < y.e_; }

 private:
  int n_ = 0;
  Kind kind_ = Kind::horizontal;
  std::vector<Elem> e_;
};

struct Violation {
  std::string axiom;
  std::vector<int> witness;  // 1-based labels
};

struct AxiomReport {
  static constexpr std::size_t max_witnesses = 100;

  std::vector<Violation> violations;  // at most max_witnesses stored
  std::size_t violation_count = 0;    // total, including those not stored

  bool passed() const noexcept { return violation_count == 0; }
  void add(std::string axiom, std::vector<int> witness0);  // takes 0-based witnesses
  void merge(const AxiomReport& other);
};

AxiomReport check_quasigroup(const OperationTensor& t);
AxiomReport check_horizontal_exchange(const OperationTensor& t);
AxiomReport check_vertical_exchange(const OperationTensor& t);

OperationTensor horizontal_to_vertical(const OperationTensor& t);
OperationTensor vertical_to_horizontal(const OperationTensor& t);

struct EnumerateOptions {
  int cap = 4;
  int threads = 1;
};

std::vector<OperationTensor> enumerate_horizontal(int n, const EnumerateOptions& opts = {});
// Number of Latin cubes of order n (tensors passing check_quasigroup), for n <= cap.
std::uint64_t count_latin_cubes(int n, const EnumerateOptions& opts = {});

// Binary operation table on 0-based elements, entries[a*n+b] = a.b
struct BinaryTable {
  int n = 0;
  std::vector<Elem> entries;
  Elem operator()(int a, int b) const noexcept { return entries[static_cast<std::size_t>(a) * n + b]; }
};

OperationTensor alexander(int m, int x, int y);
OperationTensor dehn(const BinaryTable& group);
OperationTensor biquasile_to_vertical(const BinaryTable& star, const BinaryTable& dot);

BinaryTable cyclic_group(int m);
BinaryTable symmetric_group(int k);

}  // namespace tribrac
