#pragma once

#include <vector>

namespace tribrac::detail {

struct BundledFile {
  const char* name;
  const char* text;
};

const std::vector<BundledFile>& bundled_diagrams();
const std::vector<BundledFile>& bundled_examples();
const std::vector<BundledFile>& bundled_golden();

}  // namespace tribrac::detail
