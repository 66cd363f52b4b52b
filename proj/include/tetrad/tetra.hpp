#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tetrad/flats.hpp"
#include "tetrad/incidence.hpp"
#include "tetrad/sampling.hpp"

// Triads, tetrads, their diagonals and the harmonicity axiom.
//
// A triad is three pairwise-incident lines each lying in Σ of the other two;
// it is a PLANE triad (coplanar, not concurrent) or a POINT triad (concurrent,
// not coplanar). A tetrad is four lines all of whose triples are triads of one
// type. Harmonicity asks that the diagonals of every tetrad form a triad of
// the same type.
namespace tetrad {

enum class TripleClass { kNotPairwiseIncident, kFlatPencil, kPlaneTriad, kPointTriad };
enum class QuadClass { kNotPairwiseIncident, kFlatPencil, kPlaneTetrad, kPointTetrad, kPartial };

std::string_view to_string(TripleClass c);
std::string_view to_string(QuadClass c);

using Triple = std::array<LineId, 3>;
using Quadruple = std::array<LineId, 4>;

// Requires distinct ids and an assigned catalog. Throws EquivalenceBroken when
// the three Σ-membership conditions disagree.
TripleClass classify_triple(LineId x, LineId y, LineId z, const IncidenceStructure& m,
                            const FlatCatalog& catalog);

// Throws MixedTriadTypes when a PLANE triad and a POINT triad share the
// quadruple.
QuadClass classify_quadruple(LineId o, LineId p, LineId q, LineId r,
                             const IncidenceStructure& m, const FlatCatalog& catalog);
QuadClass classify_quadruple(const Quadruple& t, const IncidenceStructure& m,
                             const FlatCatalog& catalog);

struct DiagonalTriple {
  Quadruple tetrad{};
  QuadClass type = QuadClass::kPlaneTetrad;
  // a from the pairing (op)(qr), b from (oq)(rp), c from (or)(pq).
  Triple diagonals{};
  TripleClass diagonal_class = TripleClass::kNotPairwiseIncident;
};

DiagonalTriple diagonals_of_tetrad(const Quadruple& t, const IncidenceStructure& m,
                                   const FlatCatalog& catalog);

struct HarmonicCheck {
  DiagonalTriple diagonals;
  bool holds = false;
};

HarmonicCheck check_harmonic(const Quadruple& t, const IncidenceStructure& m,
                             const FlatCatalog& catalog);

enum class HarmonicityVerdict { kAllHold, kNoneHold, kMixed, kVacuous };
std::string_view to_string(HarmonicityVerdict v);

struct TypeSurvey {
  std::uint64_t quadruples_examined = 0;
  std::uint64_t tetrads = 0;
  std::uint64_t holding = 0;
  std::uint64_t failing = 0;
  std::optional<DiagonalTriple> holding_exemplar;
  std::optional<DiagonalTriple> failing_exemplar;

  HarmonicityVerdict verdict() const;
};

struct SurveyOptions {
  EnumerationMode mode = EnumerationMode::kPerFlat;
  std::uint64_t samples = 100000;  // quadruples per type in sampled mode
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

struct HarmonicityReport {
  EnumerationMode mode = EnumerationMode::kPerFlat;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  TypeSurvey plane;  // [H⊼]
  TypeSurvey point;  // [H⊻]

  // The two per-type verdicts agree.
  bool consistent() const { return plane.verdict() == point.verdict(); }
  // Axiom [H]: both types hold for every tetrad seen.
  bool axiom_holds() const;
};

// Exhaustive mode walks every pairwise-incident quadruple; per-flat mode walks
// 4-subsets of each PLANE flat (for ⊼) and each POINT flat (for ⊻); sampled
// mode draws random 4-subsets of random flats.
HarmonicityReport survey_harmonicity(const IncidenceStructure& m, const FlatCatalog& catalog,
                                     const SurveyOptions& options);

// Calls f(quadruple) for every pairwise-incident 4-set, ascending.
template <class F>
void for_each_incident_quadruple(const IncidenceStructure& m, F&& f);
template <class F>
void for_each_incident_triple(const IncidenceStructure& m, F&& f);

struct TripleCensus {
  std::uint64_t not_pairwise_incident = 0;
  std::uint64_t flat_pencil = 0;
  std::uint64_t plane_triad = 0;
  std::uint64_t point_triad = 0;
};

TripleCensus triple_census(const IncidenceStructure& m, const FlatCatalog& catalog);

// Property verdicts over pairwise-incident quadruples: no quadruple mixes
// triad types, a quadruple holding a PLANE (POINT) triad lies in one PLANE
// (POINT) flat, and a triad-free quadruple lies in one flat pencil.
struct PretetradReport {
  std::uint64_t quadruples = 0;
  std::uint64_t mixed_violations = 0;
  std::uint64_t confinement_violations = 0;
  std::uint64_t pencil_violations = 0;
  std::optional<Quadruple> first_violation;
  bool sampled = false;

  bool passed() const {
    return mixed_violations == 0 && confinement_violations == 0 && pencil_violations == 0;
  }
};

PretetradReport check_pretetrad(const IncidenceStructure& m, const FlatCatalog& catalog,
                                const SurveyOptions& options);

// POINT flats sharing at least one line with the given PLANE flat.
std::vector<FlatId> points_of_plane(FlatId plane, const FlatCatalog& catalog);

// Takes four POINT flats, the vertices of a planar complete quadrangle; true
// iff its three diagonal points share a line. Throws DegenerateQuadrangle.
bool quadrangle_diagonal_points_collinear(FlatId o, FlatId p, FlatId q, FlatId r,
                                          const IncidenceStructure& m,
                                          const FlatCatalog& catalog);

struct PlaneSection {
  // Where the lines o, p, q, r, a, b, c of the point tetrad meet the plane.
  std::array<FlatId, 7> pierce_points{};
  // Sides AP, PB, BQ, QA.
  Quadruple quadrilateral{};
  QuadClass quadrilateral_class = QuadClass::kNotPairwiseIncident;
  HarmonicCheck harmonic;
  // The quadrilateral's diagonals are the sections PQ, RO, AB.
  bool diagonals_are_sections = false;
};

// Cuts a POINT tetrad by a PLANE flat missing its common point. Throws
// DomainError when zeta meets that point and ModelInvalid when the section
// is not a PLANE tetrad.
PlaneSection section_by_plane(const Quadruple& point_tetrad, FlatId zeta,
                              const IncidenceStructure& m, const FlatCatalog& catalog);

// ---------------------------------------------------------------------------

template <class F>
void for_each_incident_triple(const IncidenceStructure& m, F&& f) {
  for (LineId a = 0; a < m.size(); ++a) {
    for (auto b = m.row(a).next(a); b; b = m.row(a).next(b)) {
      const LineBits ab = m.row(a) & m.row(*b);
      for (auto c = ab.next(b); c; c = ab.next(c)) f(Triple{a, *b, *c});
    }
  }
}

template <class F>
void for_each_incident_quadruple(const IncidenceStructure& m, F&& f) {
  for (LineId a = 0; a < m.size(); ++a) {
    for (auto b = m.row(a).next(a); b; b = m.row(a).next(b)) {
      const LineBits ab = m.row(a) & m.row(*b);
      for (auto c = ab.next(b); c; c = ab.next(c)) {
        const LineBits abc = ab & m.row(*c);
        for (auto d = abc.next(c); d; d = abc.next(d)) f(Quadruple{a, *b, *c, *d});
      }
    }
  }
}

}  // namespace tetrad
