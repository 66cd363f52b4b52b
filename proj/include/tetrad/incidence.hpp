#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tetrad/line_set.hpp"

namespace tetrad {

using LinePair = std::pair<LineId, LineId>;

// A set of n abstract lines with a symmetric reflexive incidence relation,
// stored as dense bit rows. Immutable after construction.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;

  // Rows must already be symmetric and reflexive; anything else is rejected.
  explicit IncidenceStructure(std::vector<LineBits> rows);

  // Builds the symmetric reflexive closure of the given pairs.
  static IncidenceStructure from_pairs(std::size_t n, std::span<const LinePair> pairs);

  std::size_t size() const { return rows_.size(); }
  bool incident(LineId a, LineId b) const { return rows_[a].test(b); }
  const LineBits& row(LineId a) const { return rows_[a]; }

  // Strictly upper-triangular incident pairs (i < j), lexicographic.
  std::vector<LinePair> upper_pairs() const;
  std::size_t pair_count() const;

  void check_id(LineId id) const;

  friend bool operator==(const IncidenceStructure&, const IncidenceStructure&) = default;

 private:
  std::vector<LineBits> rows_;
};

// All lines incident to every line of s; the full line set when s is empty.
LineBits dagger(const LineBits& s, const IncidenceStructure& m);
LineSet dagger(const LineSet& s, const IncidenceStructure& m);

bool is_skew(LineId a, LineId b, const IncidenceStructure& m);

// [ab] \ [ab]† for a distinct incident pair.
LineBits sigma_bits(LineId a, LineId b, const IncidenceStructure& m);
LineSet sigma(LineId a, LineId b, const IncidenceStructure& m);

// Lexicographically first skew pair inside s.
std::optional<LinePair> contains_skew_pair(const LineBits& s, const IncidenceStructure& m);
std::optional<LinePair> contains_skew_pair(const LineSet& s, const IncidenceStructure& m);

// Disjoint union: lines of `second` are renumbered after those of `first`.
IncidenceStructure disjoint_union(const IncidenceStructure& first,
                                  const IncidenceStructure& second);

}  // namespace tetrad
