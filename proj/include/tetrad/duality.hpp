#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tetrad/flats.hpp"
#include "tetrad/pg3.hpp"

// Checks that swapping Plücker halves acts as a duality on a PG(3,q) model:
// it is an involution on lines, preserves incidence, swaps POINT and PLANE
// flats, swaps triad and tetrad types, and carries diagonals and harmonicity
// verdicts along.
namespace tetrad {

struct DualityCheck {
  std::string property;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string detail;  // first violation, if any
};

struct DualityOptions {
  bool exhaustive = true;
  // When not exhaustive: number of PLANE flats whose tetrads are transported
  // and number of incident triples drawn.
  std::uint64_t planes = 8;
  std::uint64_t triples = 20000;
  std::uint64_t seed = 0;
};

struct DualityReport {
  std::vector<DualityCheck> checks;
  bool exhaustive = true;
  std::uint64_t seed = 0;

  bool all_passed() const;
};

DualityReport check_duality(const pg3::Pg3Model& model, const FlatCatalog& catalog,
                            const DualityOptions& options);

}  // namespace tetrad
