#include "tetrad/flats.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>

#include "tetrad/errors.hpp"

namespace tetrad {

std::string_view to_string(FlatKind kind) {
  switch (kind) {
    case FlatKind::kPoint: return "POINT";
    case FlatKind::kPlane: return "PLANE";
    case FlatKind::kUnassigned: break;
  }
  return "UNASSIGNED";
}

FlatKind opposite(FlatKind kind) {
  switch (kind) {
    case FlatKind::kPoint: return FlatKind::kPlane;
    case FlatKind::kPlane: return FlatKind::kPoint;
    case FlatKind::kUnassigned: break;
  }
  return FlatKind::kUnassigned;
}

namespace {

std::string pair_name(LineId a, LineId b) {
  return "Σ(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Checks that every member of `cls` sees exactly `cls` inside `sigma`.
bool is_closed_class(const LineBits& cls, const LineBits& sigma, const IncidenceStructure& m) {
  bool ok = true;
  cls.for_each([&](LineId s) {
    if (ok && (m.row(s) & sigma) != cls) ok = false;
  });
  return ok;
}

}  // namespace

SigmaSplitBits split_sigma_bits(LineId a, LineId b, const IncidenceStructure& m) {
  const LineBits sigma = sigma_bits(a, b, m);
  const auto first = sigma.next();
  if (!first) throw NotAnEquivalence(pair_name(a, b) + " is empty");

  LineBits class1 = m.row(*first) & sigma;
  if (!is_closed_class(class1, sigma, m)) {
    throw NotAnEquivalence("incidence on " + pair_name(a, b) + " is not transitive");
  }
  LineBits rest = sigma - class1;
  const auto second = rest.next();
  if (!second) throw NotAnEquivalence(pair_name(a, b) + " has a single class");
  LineBits class2 = m.row(*second) & sigma;
  if (class2 != rest) {
    throw NotAnEquivalence(pair_name(a, b) + " has more than two classes");
  }
  if (!is_closed_class(class2, sigma, m)) {
    throw NotAnEquivalence("incidence on " + pair_name(a, b) + " is not transitive");
  }
  return {std::move(class1), std::move(class2)};
}

SigmaSplit split_sigma(LineId a, LineId b, const IncidenceStructure& m) {
  auto bits = split_sigma_bits(a, b, m);
  return {a, b, bits.class1.to_set(), bits.class2.to_set()};
}

LineSet flat_of(LineId a, LineId b, LineId c, const IncidenceStructure& m) {
  m.check_id(c);
  if (!sigma_bits(a, b, m).test(c)) {
    throw DomainError("line " + std::to_string(c) + " is not in " + pair_name(a, b));
  }
  return (m.row(a) & m.row(b) & m.row(c)).to_set();
}

std::vector<FlatId> FlatCatalog::flats_of_kind(FlatKind kind) const {
  std::vector<FlatId> out;
  for (FlatId f = 0; f < flats_.size(); ++f)
    if (flats_[f].kind == kind) out.push_back(f);
  return out;
}

std::array<FlatId, 2> FlatCatalog::pair_flats(LineId a, LineId b) const {
  if (a >= n_ || b >= n_) throw UsageError("line id out of range");
  if (a == b) throw DomainError("a line pair must consist of distinct lines");
  const auto& e = pair_table_[index(a, b)];
  if (e[0] == kNoFlat) {
    throw DomainError("lines " + std::to_string(a) + " and " + std::to_string(b) +
                      " are skew");
  }
  return {e[0], e[1]};
}

std::optional<LineId> FlatCatalog::common_line(FlatId f, FlatId g) const {
  const LineBits both = bits_[f] & bits_[g];
  auto first = both.next();
  if (!first || both.next(first)) return std::nullopt;
  return first;
}

FlatCatalog catalog_flats(const IncidenceStructure& m) {
  const std::size_t n = m.size();
  std::unordered_map<LineBits, FlatId, LineBitsHash> index;
  std::vector<LineBits> found;
  struct PairFlats {
    LineId a, b;
    FlatId f1, f2;
  };
  std::vector<PairFlats> pairs;

  auto intern = [&](LineBits&& flat) {
    auto [it, inserted] = index.try_emplace(flat, static_cast<FlatId>(found.size()));
    if (inserted) found.push_back(std::move(flat));
    return it->second;
  };

  for (auto [a, b] : m.upper_pairs()) {
    const auto split = split_sigma_bits(a, b, m);
    const LineBits ab = m.row(a) & m.row(b);
    const FlatId f1 = intern(ab & m.row(*split.class1.next()));
    const FlatId f2 = intern(ab & m.row(*split.class2.next()));
    pairs.push_back({a, b, f1, f2});
  }
  if (found.size() >= FlatCatalog::kNoFlat) {
    throw ModelInvalid("too many flats for the catalog (" + std::to_string(found.size()) + ")");
  }

  std::vector<LineSet> sets;
  sets.reserve(found.size());
  for (const auto& f : found) sets.push_back(f.to_set());
  std::vector<FlatId> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](FlatId x, FlatId y) { return sets[x] < sets[y]; });
  std::vector<FlatId> rank(found.size());
  for (FlatId r = 0; r < order.size(); ++r) rank[order[r]] = r;

  FlatCatalog cat;
  cat.n_ = n;
  cat.through_.assign(n, {});
  for (FlatId r = 0; r < order.size(); ++r) {
    cat.flats_.push_back({sets[order[r]], FlatKind::kUnassigned});
    cat.bits_.push_back(found[order[r]]);
    for (LineId l : cat.flats_.back().lines) cat.through_[l].push_back(r);
  }
  cat.pair_table_.assign(n * n, {FlatCatalog::kNoFlat, FlatCatalog::kNoFlat});
  for (const auto& p : pairs) {
    const std::array<std::uint16_t, 2> e{static_cast<std::uint16_t>(rank[p.f1]),
                                         static_cast<std::uint16_t>(rank[p.f2])};
    cat.pair_table_[cat.index(p.a, p.b)] = e;
    cat.pair_table_[cat.index(p.b, p.a)] = e;
  }
  return cat;
}

FlatCatalog bipartition_flats(FlatCatalog cat, const IncidenceStructure& m) {
  if (m.size() != cat.n_) throw UsageError("catalog does not belong to this structure");
  const std::size_t count = cat.size();
  std::vector<std::vector<FlatId>> disjoint(count);
  for (FlatId f = 0; f < count; ++f) {
    for (FlatId g = f + 1; g < count; ++g) {
      if (!cat.bits_[f].intersects(cat.bits_[g])) {
        disjoint[f].push_back(g);
        disjoint[g].push_back(f);
      }
    }
  }

  std::vector<int> colour(count, -1);
  if (count > 0) {
    std::deque<FlatId> queue{0};
    colour[0] = 0;
    while (!queue.empty()) {
      const FlatId f = queue.front();
      queue.pop_front();
      for (FlatId g : disjoint[f]) {
        if (colour[g] < 0) {
          colour[g] = 1 - colour[f];
          queue.push_back(g);
        } else if (colour[g] == colour[f]) {
          throw NotBipartite("flats " + std::to_string(f) + " and " + std::to_string(g) +
                             " are disjoint but fall in the same colour class");
        }
      }
    }
  }
  for (FlatId f = 0; f < count; ++f) {
    if (colour[f] < 0) {
      throw Disconnected("flat " + std::to_string(f) +
                         " is not reachable in the flat disjointness graph");
    }
    cat.flats_[f].kind = colour[f] == 0 ? FlatKind::kPoint : FlatKind::kPlane;
  }

  for (LineId a = 0; a < cat.n_; ++a) {
    for (LineId b = 0; b < cat.n_; ++b) {
      auto& e = cat.pair_table_[cat.index(a, b)];
      if (e[0] == FlatCatalog::kNoFlat) continue;
      if (cat.flats_[e[0]].kind == cat.flats_[e[1]].kind) {
        throw NotBipartite("both flats of the pair (" + std::to_string(a) + "," +
                           std::to_string(b) + ") received the same kind");
      }
      if (cat.flats_[e[0]].kind == FlatKind::kPlane) std::swap(e[0], e[1]);
    }
  }
  cat.kinds_assigned_ = true;
  return cat;
}

FlatCatalog build_catalog(const IncidenceStructure& m) {
  return bipartition_flats(catalog_flats(m), m);
}

CatalogOutcome try_build_catalog(const IncidenceStructure& m) {
  CatalogOutcome out;
  try {
    out.catalog = catalog_flats(m);
  } catch (const NotAnEquivalence& e) {
    out.stage = CatalogOutcome::Stage::kSigmaFailed;
    out.error = e.what();
    return out;
  }
  try {
    out.catalog = bipartition_flats(*out.catalog, m);
  } catch (const ModelInvalid& e) {
    out.stage = CatalogOutcome::Stage::kBipartitionFailed;
    out.error = e.what();
  }
  return out;
}

namespace {

const Flat& kinded_pair_flat(LineId a, LineId b, const FlatCatalog& catalog, int slot) {
  if (!catalog.kinds_assigned()) throw UsageError("catalog kinds are not assigned");
  return catalog.flat(catalog.pair_flats(a, b)[slot]);
}

}  // namespace

const Flat& join(LineId a, LineId b, const FlatCatalog& catalog) {
  return kinded_pair_flat(a, b, catalog, 0);
}

const Flat& meet(LineId a, LineId b, const FlatCatalog& catalog) {
  return kinded_pair_flat(a, b, catalog, 1);
}

LineSet flat_intersection(const Flat& f, const Flat& g) {
  std::vector<LineId> out;
  std::set_intersection(f.lines.begin(), f.lines.end(), g.lines.begin(), g.lines.end(),
                        std::back_inserter(out));
  return LineSet(std::move(out));
}

}  // namespace tetrad
