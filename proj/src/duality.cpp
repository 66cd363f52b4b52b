#include "tetrad/duality.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tetrad/errors.hpp"
#include "tetrad/sampling.hpp"
#include "tetrad/tetra.hpp"

namespace tetrad {

bool DualityReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const DualityCheck& c) { return c.passed; });
}

namespace {

void violate(DualityCheck& c, std::string detail) {
  if (c.passed) c.detail = std::move(detail);
  c.passed = false;
}

TripleClass dual_class(TripleClass c) {
  switch (c) {
    case TripleClass::kPlaneTriad: return TripleClass::kPointTriad;
    case TripleClass::kPointTriad: return TripleClass::kPlaneTriad;
    default: return c;
  }
}

LineBits map_bits(const LineBits& s, const std::vector<LineId>& perm) {
  LineBits out(s.size());
  s.for_each([&](LineId l) { out.set(perm[l]); });
  return out;
}

}  // namespace

DualityReport check_duality(const pg3::Pg3Model& model, const FlatCatalog& catalog,
                            const DualityOptions& options) {
  if (!catalog.kinds_assigned()) throw UsageError("catalog kinds are not assigned");
  const IncidenceStructure& m = model.structure;
  const std::size_t n = m.size();
  const std::vector<LineId> perm = model.dual_permutation();
  DualityReport report;
  report.exhaustive = options.exhaustive;
  report.seed = options.seed;

  DualityCheck involution{.property = "involution"};
  for (LineId l = 0; l < n; ++l) {
    ++involution.cases;
    if (perm[perm[l]] != l) violate(involution, "line " + std::to_string(l));
  }
  report.checks.push_back(involution);

  DualityCheck incidence{.property = "incidence-preserved"};
  for (LineId a = 0; a < n; ++a) {
    for (LineId b = a + 1; b < n; ++b) {
      ++incidence.cases;
      if (m.incident(a, b) != m.incident(perm[a], perm[b])) {
        violate(incidence, "pair " + std::to_string(a) + "," + std::to_string(b));
      }
    }
  }
  report.checks.push_back(incidence);

  // Image of each flat must be a flat of the opposite kind.
  DualityCheck kinds{.property = "flat-kinds-swap"};
  std::map<LineSet, FlatId> by_lines;
  for (FlatId f = 0; f < catalog.size(); ++f) by_lines.emplace(catalog.flat(f).lines, f);
  for (FlatId f = 0; f < catalog.size(); ++f) {
    ++kinds.cases;
    const auto it = by_lines.find(map_bits(catalog.bits(f), perm).to_set());
    if (it == by_lines.end()) {
      violate(kinds, "image of flat " + std::to_string(f) + " is not a flat");
    } else if (catalog.kind(it->second) != opposite(catalog.kind(f))) {
      violate(kinds, "flat " + std::to_string(f) + " keeps its kind");
    }
  }
  report.checks.push_back(kinds);

  // Ground truth: point stars go to plane sets and back.
  DualityCheck pencils{.property = "stars-and-plane-sets-swap"};
  const std::set<LineSet> stars(model.truth.point_stars.begin(), model.truth.point_stars.end());
  const std::set<LineSet> planes(model.truth.plane_sets.begin(), model.truth.plane_sets.end());
  for (const auto& s : model.truth.point_stars) {
    ++pencils.cases;
    if (!planes.contains(map_bits(LineBits::from_set(n, s), perm).to_set())) {
      violate(pencils, "a point star does not map to a plane set");
    }
  }
  for (const auto& s : model.truth.plane_sets) {
    ++pencils.cases;
    if (!stars.contains(map_bits(LineBits::from_set(n, s), perm).to_set())) {
      violate(pencils, "a plane set does not map to a point star");
    }
  }
  report.checks.push_back(pencils);

  SeededRng rng(options.seed);
  DualityCheck triads{.property = "triad-types-swap"};
  auto check_triple = [&](const Triple& t) {
    ++triads.cases;
    const TripleClass c = classify_triple(t[0], t[1], t[2], m, catalog);
    const TripleClass d = classify_triple(perm[t[0]], perm[t[1]], perm[t[2]], m, catalog);
    if (d != dual_class(c)) {
      violate(triads, "triple " + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                          std::to_string(t[2]));
    }
  };
  if (options.exhaustive) {
    for_each_incident_triple(m, check_triple);
  } else {
    std::vector<Triple> all;
    for_each_incident_triple(m, [&](const Triple& t) { all.push_back(t); });
    for (std::size_t i : rng.choose_sorted(all.size(), options.triples)) check_triple(all[i]);
  }
  report.checks.push_back(triads);

  // Plane tetrads go to point tetrads with dual diagonals and equal verdicts.
  DualityCheck tetrads{.property = "tetrads-and-harmonicity-transport"};
  auto plane_flats = catalog.flats_of_kind(FlatKind::kPlane);
  if (!options.exhaustive) {
    std::vector<FlatId> picked;
    for (std::size_t i : rng.choose_sorted(plane_flats.size(), options.planes)) {
      picked.push_back(plane_flats[i]);
    }
    plane_flats = std::move(picked);
  }
  for (FlatId f : plane_flats) {
    const auto& lines = catalog.flat(f).lines.ids();
    const std::size_t k = lines.size();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        for (std::size_t u = j + 1; u < k; ++u)
          for (std::size_t v = u + 1; v < k; ++v) {
            const Quadruple t{lines[i], lines[j], lines[u], lines[v]};
            if (classify_quadruple(t, m, catalog) != QuadClass::kPlaneTetrad) continue;
            ++tetrads.cases;
            const Quadruple dt{perm[t[0]], perm[t[1]], perm[t[2]], perm[t[3]]};
            if (classify_quadruple(dt, m, catalog) != QuadClass::kPointTetrad) {
              violate(tetrads, "dual of a PLANE tetrad is not a POINT tetrad");
              continue;
            }
            const HarmonicCheck h = check_harmonic(t, m, catalog);
            const HarmonicCheck dh = check_harmonic(dt, m, catalog);
            std::array<LineId, 3> mapped{perm[h.diagonals.diagonals[0]],
                                         perm[h.diagonals.diagonals[1]],
                                         perm[h.diagonals.diagonals[2]]};
            if (mapped != dh.diagonals.diagonals) {
              violate(tetrads, "diagonals do not map to the dual tetrad's diagonals");
            }
            if (h.holds != dh.holds) violate(tetrads, "harmonicity verdict changes under duality");
          }
  }
  report.checks.push_back(tetrads);
  return report;
}

}  // namespace tetrad
