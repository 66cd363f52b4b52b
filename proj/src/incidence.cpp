#include "tetrad/incidence.hpp"

#include <string>

#include "tetrad/errors.hpp"

namespace tetrad {

IncidenceStructure::IncidenceStructure(std::vector<LineBits> rows) : rows_(std::move(rows)) {
  const std::size_t n = rows_.size();
  for (LineId i = 0; i < n; ++i) {
    if (rows_[i].size() != n) throw UsageError("incidence row has wrong width");
    if (!rows_[i].test(i)) {
      throw UsageError("incidence is not reflexive at line " + std::to_string(i));
    }
  }
  for (LineId i = 0; i < n; ++i) {
    rows_[i].for_each([&](LineId j) {
      if (!rows_[j].test(i)) {
        throw UsageError("incidence is not symmetric at (" + std::to_string(i) +
                         "," + std::to_string(j) + ")");
      }
    });
  }
}

IncidenceStructure IncidenceStructure::from_pairs(std::size_t n,
                                                  std::span<const LinePair> pairs) {
  std::vector<LineBits> rows(n, LineBits(n));
  for (LineId i = 0; i < n; ++i) rows[i].set(i);
  for (auto [i, j] : pairs) {
    if (i >= n || j >= n) throw UsageError("line id out of range in incidence pair");
    rows[i].set(j);
    rows[j].set(i);
  }
  return IncidenceStructure(std::move(rows));
}

std::vector<LinePair> IncidenceStructure::upper_pairs() const {
  std::vector<LinePair> out;
  for (LineId i = 0; i < size(); ++i) {
    rows_[i].for_each([&](LineId j) {
      if (j > i) out.emplace_back(i, j);
    });
  }
  return out;
}

std::size_t IncidenceStructure::pair_count() const {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.count();
  return (total - size()) / 2;
}

void IncidenceStructure::check_id(LineId id) const {
  if (id >= size()) {
    throw UsageError("line id " + std::to_string(id) + " out of range (n=" +
                     std::to_string(size()) + ")");
  }
}

LineBits dagger(const LineBits& s, const IncidenceStructure& m) {
  LineBits out = LineBits::full(m.size());
  s.for_each([&](LineId l) { out &= m.row(l); });
  return out;
}

LineSet dagger(const LineSet& s, const IncidenceStructure& m) {
  for (LineId l : s) m.check_id(l);
  return dagger(LineBits::from_set(m.size(), s), m).to_set();
}

bool is_skew(LineId a, LineId b, const IncidenceStructure& m) {
  m.check_id(a);
  m.check_id(b);
  return !m.incident(a, b);
}

LineBits sigma_bits(LineId a, LineId b, const IncidenceStructure& m) {
  m.check_id(a);
  m.check_id(b);
  if (a == b) throw DomainError("sigma requires two distinct lines");
  if (!m.incident(a, b)) {
    throw DomainError("sigma requires an incident pair; lines " + std::to_string(a) +
                      " and " + std::to_string(b) + " are skew");
  }
  LineBits ab = m.row(a) & m.row(b);
  return ab - dagger(ab, m);
}

LineSet sigma(LineId a, LineId b, const IncidenceStructure& m) {
  return sigma_bits(a, b, m).to_set();
}

std::optional<LinePair> contains_skew_pair(const LineBits& s, const IncidenceStructure& m) {
  std::optional<LinePair> found;
  for (auto x = s.next(); x && !found; x = s.next(x)) {
    LineBits rest = s - m.row(*x);
    if (auto y = rest.next(x)) found = LinePair{*x, *y};
  }
  return found;
}

std::optional<LinePair> contains_skew_pair(const LineSet& s, const IncidenceStructure& m) {
  for (LineId l : s) m.check_id(l);
  return contains_skew_pair(LineBits::from_set(m.size(), s), m);
}

IncidenceStructure disjoint_union(const IncidenceStructure& first,
                                  const IncidenceStructure& second) {
  const auto offset = static_cast<LineId>(first.size());
  std::vector<LinePair> pairs = first.upper_pairs();
  for (auto [i, j] : second.upper_pairs()) pairs.emplace_back(i + offset, j + offset);
  return IncidenceStructure::from_pairs(first.size() + second.size(), pairs);
}

}  // namespace tetrad
