#pragma once

#include <vector>

#include "symcat/scan_io.hpp"

namespace symcat::io {

struct NRange {
  int min = 4;
  int max = 4;
  int step = 1;
  std::vector<int> values() const;
};

NRange resolve_n_range(const RunConfig& cfg);

}  // namespace symcat::io
