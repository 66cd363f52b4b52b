#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tetrad/incidence.hpp"

// Points and planes recovered from incidence alone: Σ(a,b) splits into two
// incidence classes, and [a b c] for c in a class is a flat.
namespace tetrad {

enum class FlatKind { kUnassigned, kPoint, kPlane };

std::string_view to_string(FlatKind kind);
FlatKind opposite(FlatKind kind);

struct SigmaSplit {
  LineId a = 0;
  LineId b = 0;
  LineSet class1;  // the class holding the smallest member of Σ(a,b)
  LineSet class2;
};

struct SigmaSplitBits {
  LineBits class1;
  LineBits class2;
};

// Throws NotAnEquivalence unless incidence restricted to Σ(a,b) is an
// equivalence relation with exactly two classes.
SigmaSplitBits split_sigma_bits(LineId a, LineId b, const IncidenceStructure& m);
SigmaSplit split_sigma(LineId a, LineId b, const IncidenceStructure& m);

// [a b c] for c in Σ(a,b).
LineSet flat_of(LineId a, LineId b, LineId c, const IncidenceStructure& m);

using FlatId = std::uint32_t;

struct Flat {
  LineSet lines;
  FlatKind kind = FlatKind::kUnassigned;

  friend bool operator==(const Flat&, const Flat&) = default;
};

// Every distinct flat of a structure, sorted by member list, plus the map from
// each incident pair to its two flats.
class FlatCatalog {
 public:
  static constexpr std::uint16_t kNoFlat = 0xFFFF;

  std::size_t size() const { return flats_.size(); }
  std::size_t line_count() const { return n_; }
  const std::vector<Flat>& flats() const { return flats_; }
  const Flat& flat(FlatId id) const { return flats_[id]; }
  FlatKind kind(FlatId id) const { return flats_[id].kind; }
  const LineBits& bits(FlatId id) const { return bits_[id]; }
  bool kinds_assigned() const { return kinds_assigned_; }

  // Flats containing line l, ascending.
  const std::vector<FlatId>& flats_through(LineId l) const { return through_[l]; }

  std::vector<FlatId> flats_of_kind(FlatKind kind) const;

  // The two flats of a distinct incident pair. Before bipartition the order
  // follows the Σ classes; afterwards it is (point, plane).
  std::array<FlatId, 2> pair_flats(LineId a, LineId b) const;

  // Unchecked fast paths for hot loops: kinds must be assigned and a, b
  // distinct and incident.
  FlatId join_id(LineId a, LineId b) const { return pair_table_[index(a, b)][0]; }
  FlatId meet_id(LineId a, LineId b) const { return pair_table_[index(a, b)][1]; }

  // Unique common line of two flats, or nullopt when they share 0 or >1 lines.
  std::optional<LineId> common_line(FlatId f, FlatId g) const;

 private:
  friend FlatCatalog catalog_flats(const IncidenceStructure& m);
  friend FlatCatalog bipartition_flats(FlatCatalog catalog, const IncidenceStructure& m);

  std::size_t index(LineId a, LineId b) const { return std::size_t{a} * n_ + b; }

  std::size_t n_ = 0;
  std::vector<Flat> flats_;
  std::vector<LineBits> bits_;
  std::vector<std::vector<FlatId>> through_;
  std::vector<std::array<std::uint16_t, 2>> pair_table_;
  bool kinds_assigned_ = false;
};

// Distinct flats, kinds unassigned. Propagates NotAnEquivalence.
FlatCatalog catalog_flats(const IncidenceStructure& m);

// Two-colours the flat disjointness graph; the colour of flat 0 (the
// lexicographically smallest) is POINT. Throws NotBipartite / Disconnected.
FlatCatalog bipartition_flats(FlatCatalog catalog, const IncidenceStructure& m);

// catalog_flats followed by bipartition_flats.
FlatCatalog build_catalog(const IncidenceStructure& m);

// Catalog construction that records how far it got instead of throwing.
struct CatalogOutcome {
  enum class Stage { kComplete, kSigmaFailed, kBipartitionFailed };

  Stage stage = Stage::kComplete;
  // Present unless Σ splitting failed; kinds assigned only when complete.
  std::optional<FlatCatalog> catalog;
  std::string error;

  bool complete() const { return stage == Stage::kComplete; }
};

CatalogOutcome try_build_catalog(const IncidenceStructure& m);

// a ⊻ b: the POINT flat through a distinct incident pair.
const Flat& join(LineId a, LineId b, const FlatCatalog& catalog);
// a ⊼ b: the PLANE flat through a distinct incident pair.
const Flat& meet(LineId a, LineId b, const FlatCatalog& catalog);

LineSet flat_intersection(const Flat& f, const Flat& g);

}  // namespace tetrad
