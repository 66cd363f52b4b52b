#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tetrad/flats.hpp"
#include "tetrad/incidence.hpp"
#include "tetrad/sampling.hpp"
#include "tetrad/tetra.hpp"

// Decision procedures for the four line axioms over a finite structure.
//
//   [1]   every l† holds three pairwise skew lines
//   [2.1] every [ab] (a != b incident) holds a skew pair
//   [2.2] for c in Σ(a,b), [abc] holds no skew pair
//   [2.3] for a skew pair x, y in [ab], [ab] = [abx] ∪ [aby]
//   [3]   every flat [abc] has a disjoint flat [pqr]
//   [4]   any two POINT flats meet; any two PLANE flats meet
//
// [2.2] quantifies over every c in Σ(a,b): each such c belongs to a skew pair
// of [ab] by the definition of Σ.
namespace tetrad {

enum class AxiomId { k1, k2_1, k2_2, k2_3, k3, k4Point, k4Plane };
enum class VerdictStatus { kPass, kFail, kNotApplicable };

std::string_view to_string(AxiomId id);
std::string_view to_string(VerdictStatus s);

struct Witness {
  std::vector<LineId> lines;
  std::string detail;
};

struct AxiomVerdict {
  AxiomId axiom = AxiomId::k1;
  VerdictStatus status = VerdictStatus::kPass;
  // Present iff status != kPass. For kNotApplicable it names what broke.
  std::optional<Witness> counterexample;
  std::uint64_t cases = 0;
  bool sampled = false;

  bool passed() const { return status == VerdictStatus::kPass; }
};

struct CheckOptions {
  EnumerationMode mode = EnumerationMode::kExhaustive;
  // Incident pairs drawn for [2.2]/[2.3] outside exhaustive mode.
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
};

AxiomVerdict check_axiom1(const IncidenceStructure& m);
// Returns the [2.1], [2.2], [2.3] verdicts in that order.
std::vector<AxiomVerdict> check_axiom2(const IncidenceStructure& m,
                                       const CheckOptions& options = {});
AxiomVerdict check_axiom3(const IncidenceStructure& m, const FlatCatalog& catalog);
// Point part then plane part. Uses the kinds when assigned; otherwise looks
// for two incident pairs whose flats fail under either labelling.
std::vector<AxiomVerdict> check_axiom4(const IncidenceStructure& m, const FlatCatalog& catalog);

// First flat (by index) that meets every flat in the list.
std::optional<std::size_t> first_flat_without_disjoint(std::span<const LineBits> flats);

struct TheoremVerdict {
  std::string name;
  bool passed = false;
  std::uint64_t cases = 0;
  bool sampled = false;
  std::optional<std::vector<LineId>> counterexample;
  std::string note;
};

struct AxiomReport {
  std::vector<AxiomVerdict> verdicts;  // 1, 2.1, 2.2, 2.3, 3, 4-point, 4-plane
  std::vector<TheoremVerdict> theorems;
  CatalogOutcome::Stage catalog_stage = CatalogOutcome::Stage::kComplete;
  std::string catalog_error;

  bool axioms_passed() const;
};

AxiomReport check_all(const IncidenceStructure& m, const CatalogOutcome& catalog,
                      const CheckOptions& options = {});

}  // namespace tetrad
