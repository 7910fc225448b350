#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tribrac/cochain.hpp"
#include "tribrac/polynomial.hpp"
#include "tribrac/tribracket.hpp"

namespace tribrac {

struct ExamplePack {
  std::string id;
  Tribracket tribracket;
  CochainTensor cocycle;
};

std::vector<std::string> example_ids();
ExamplePack load_example(std::string_view id);

struct GoldenEntry {
  std::string diagram;
  WeightPolynomial expected;
};

std::vector<std::string> golden_ids();
std::vector<GoldenEntry> golden_table(std::string_view id);

}  // namespace tribrac
