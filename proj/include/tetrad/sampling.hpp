#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace tetrad {

enum class EnumerationMode { kExhaustive, kPerFlat, kSampled };

std::string_view to_string(EnumerationMode mode);
EnumerationMode parse_mode(std::string_view text);

// mt19937_64 output is fixed by the standard; the bounded draw below is ours,
// so sample sequences are identical on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  // k distinct indices from [0, n), ascending. Returns all of them if k >= n.
  std::vector<std::size_t> choose_sorted(std::size_t n, std::size_t k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace tetrad
