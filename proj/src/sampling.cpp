#include "tetrad/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tetrad/errors.hpp"

namespace tetrad {

std::string_view to_string(EnumerationMode mode) {
  switch (mode) {
    case EnumerationMode::kExhaustive: return "exhaustive";
    case EnumerationMode::kPerFlat: return "per-flat";
    case EnumerationMode::kSampled: return "sample";
  }
  return "?";
}

EnumerationMode parse_mode(std::string_view text) {
  if (text == "exhaustive") return EnumerationMode::kExhaustive;
  if (text == "per-flat") return EnumerationMode::kPerFlat;
  if (text == "sample" || text == "sampled") return EnumerationMode::kSampled;
  throw UsageError("unknown mode '" + std::string(text) + "'");
}

std::vector<std::size_t> SeededRng::choose_sorted(std::size_t n, std::size_t k) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  if (k >= n) return idx;
  // Partial Fisher-Yates.
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(idx[i], idx[i + below(n - i)]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace tetrad
