#include "tribrac/tensor.hpp"

#include "tribrac/error.hpp"

namespace tribrac {

const char* kind_name(Kind k) noexcept { return k == Kind::horizontal ? "horizontal" : "vertical"; }

OperationTensor::OperationTensor(int size, Kind kind)
    : OperationTensor(size, kind, std::vector<Elem>(static_cast<std::size_t>(size) * size * size, 0)) {}

OperationTensor::OperationTensor(int size, Kind kind, std::vector<Elem> entries)
    : n_(size), kind_(kind), e_(std::move(entries)) {
  if (size < 1 || size > max_size)
    throw Error(Errc::invalid_argument, "tensor size must be in 1.." + std::to_string(max_size));
  if (e_.size() != static_cast<std::size_t>(size) * size * size)
    throw Error(Errc::invalid_argument, "tensor must have n^3 entries");
  for (Elem v : e_)
    if (v >= size) throw Error(Errc::invalid_argument, "tensor entry out of range");
}

void AxiomReport::add(std::string axiom, std::vector<int> witness0) {
  ++violation_count;
  if (violations.size() >= max_witnesses) return;
  for (int& w : witness0) ++w;
  violations.push_back({std::move(axiom), std::move(witness0)});
}

void AxiomReport::merge(const AxiomReport& other) {
  violation_count += other.violation_count;
  for (const auto& v : other.violations) {
    if (violations.size() >= max_witnesses) break;
    violations.push_back(v);
  }
}

AxiomReport check_quasigroup(const OperationTensor& t) {
  AxiomReport r;
  const int n = t.size();
  std::vector<char> seen(n);
  auto bijective = [&](auto f) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      int v = f(c);
      if (seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!bijective([&](int c) { return t(a, b, c); })) r.add("slot3", {a, b});
      if (!bijective([&](int c) { return t(a, c, b); })) r.add("slot2", {a, b});
      if (!bijective([&](int c) { return t(c, a, b); })) r.add("slot1", {a, b});
    }
  return r;
}

AxiomReport check_horizontal_exchange(const OperationTensor& t) {
  if (t.kind() != Kind::horizontal) throw Error(Errc::kind_mismatch, "horizontal exchange check needs a horizontal tensor");
  AxiomReport r;
  const int n = t.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          int abc = t(a, b, c), abd = t(a, b, d), acd = t(a, c, d);
          int x = t(b, abc, abd), y = t(c, abc, acd), z = t(d, abd, acd);
          if (x != y) r.add("H2a", {a, b, c, d});
          if (y != z) r.add("H2b", {a, b, c, d});
        }
  return r;
}

AxiomReport check_vertical_exchange(const OperationTensor& t) {
  if (t.kind() != Kind::vertical) throw Error(Errc::kind_mismatch, "vertical exchange check needs a vertical tensor");
  AxiomReport r;
  const int n = t.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          int abc = t(a, b, c), bcd = t(b, c, d);
          if (t(a, abc, t(abc, c, d)) != t(a, b, bcd)) r.add("V2i", {a, b, c, d});
          int ab_bcd = t(a, b, bcd);
          if (t(abc, c, d) != t(ab_bcd, bcd, d)) r.add("V2ii", {a, b, c, d});
        }
  return r;
}

static OperationTensor invert_third_slot(const OperationTensor& t, Kind out) {
  if (!check_quasigroup(t).passed())
    throw Error(Errc::axiom_failure, "tensor is not a ternary quasigroup, third slot cannot be inverted");
  const int n = t.size();
  OperationTensor r(n, out);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) r.set(a, b, t(a, b, d), static_cast<Elem>(d));
  return r;
}

OperationTensor horizontal_to_vertical(const OperationTensor& t) {
  if (t.kind() != Kind::horizontal) throw Error(Errc::kind_mismatch, "expected a horizontal tensor");
  return invert_third_slot(t, Kind::vertical);
}

OperationTensor vertical_to_horizontal(const OperationTensor& t) {
  if (t.kind() != Kind::vertical) throw Error(Errc::kind_mismatch, "expected a vertical tensor");
  return invert_third_slot(t, Kind::horizontal);
}

}  // namespace tribrac
