#include "tetrad/tetra.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "tetrad/errors.hpp"

namespace tetrad {

std::string_view to_string(TripleClass c) {
  switch (c) {
    case TripleClass::kNotPairwiseIncident: return "NOT_PAIRWISE_INCIDENT";
    case TripleClass::kFlatPencil: return "FLAT_PENCIL";
    case TripleClass::kPlaneTriad: return "PLANE_TRIAD";
    case TripleClass::kPointTriad: return "POINT_TRIAD";
  }
  return "?";
}

std::string_view to_string(QuadClass c) {
  switch (c) {
    case QuadClass::kNotPairwiseIncident: return "NOT_PAIRWISE_INCIDENT";
    case QuadClass::kFlatPencil: return "FLAT_PENCIL";
    case QuadClass::kPlaneTetrad: return "PLANE_TETRAD";
    case QuadClass::kPointTetrad: return "POINT_TETRAD";
    case QuadClass::kPartial: return "PARTIAL";
  }
  return "?";
}

std::string_view to_string(HarmonicityVerdict v) {
  switch (v) {
    case HarmonicityVerdict::kAllHold: return "ALL_HOLD";
    case HarmonicityVerdict::kNoneHold: return "NONE_HOLD";
    case HarmonicityVerdict::kMixed: return "MIXED";
    case HarmonicityVerdict::kVacuous: return "VACUOUS";
  }
  return "?";
}

namespace {

std::string ids(std::initializer_list<LineId> l) {
  std::string s = "(";
  for (LineId id : l) s += (s.size() > 1 ? "," : "") + std::to_string(id);
  return s + ")";
}

void require_kinds(const FlatCatalog& catalog) {
  if (!catalog.kinds_assigned()) throw UsageError("catalog kinds are not assigned");
}

// Which part of [xy] the line z belongs to; z must be incident to both.
enum class Membership { kPencil, kPlane, kPoint };

Membership membership(LineId z, LineId x, LineId y, const FlatCatalog& cat) {
  const bool in_join = cat.bits(cat.join_id(x, y)).test(z);
  const bool in_meet = cat.bits(cat.meet_id(x, y)).test(z);
  if (in_join && in_meet) return Membership::kPencil;
  if (in_meet) return Membership::kPlane;
  if (in_join) return Membership::kPoint;
  throw ModelInvalid("line " + std::to_string(z) + " meets " + ids({x, y}) +
                     " but lies in neither of their flats");
}

TripleClass classify_triple_unchecked(LineId x, LineId y, LineId z, const IncidenceStructure& m,
                                      const FlatCatalog& cat) {
  if (!m.incident(x, y) || !m.incident(y, z) || !m.incident(z, x)) {
    return TripleClass::kNotPairwiseIncident;
  }
  const Membership first = membership(z, x, y, cat);
  if (membership(x, y, z, cat) != first || membership(y, z, x, cat) != first) {
    throw EquivalenceBroken("triad conditions disagree on " + ids({x, y, z}));
  }
  switch (first) {
    case Membership::kPencil: return TripleClass::kFlatPencil;
    case Membership::kPlane: return TripleClass::kPlaneTriad;
    case Membership::kPoint: return TripleClass::kPointTriad;
  }
  return TripleClass::kNotPairwiseIncident;
}

QuadClass classify_quadruple_unchecked(const Quadruple& t, const IncidenceStructure& m,
                                       const FlatCatalog& cat) {
  const auto [o, p, q, r] = t;
  if (!m.incident(o, p) || !m.incident(o, q) || !m.incident(o, r) || !m.incident(p, q) ||
      !m.incident(p, r) || !m.incident(q, r)) {
    return QuadClass::kNotPairwiseIncident;
  }
  const std::array<TripleClass, 4> classes{
      classify_triple_unchecked(p, q, r, m, cat), classify_triple_unchecked(o, q, r, m, cat),
      classify_triple_unchecked(o, r, p, m, cat), classify_triple_unchecked(o, p, q, m, cat)};
  int plane = 0, point = 0, pencil = 0;
  for (auto c : classes) {
    plane += c == TripleClass::kPlaneTriad;
    point += c == TripleClass::kPointTriad;
    pencil += c == TripleClass::kFlatPencil;
  }
  if (plane > 0 && point > 0) {
    throw MixedTriadTypes("quadruple " + ids({o, p, q, r}) +
                          " holds a PLANE triad and a POINT triad");
  }
  if (plane == 4) return QuadClass::kPlaneTetrad;
  if (point == 4) return QuadClass::kPointTetrad;
  if (pencil == 4) return QuadClass::kFlatPencil;
  return QuadClass::kPartial;
}

DiagonalTriple diagonals_unchecked(const Quadruple& t, QuadClass type, const IncidenceStructure& m,
                                   const FlatCatalog& cat) {
  const bool planar = type == QuadClass::kPlaneTetrad;
  auto flat = [&](LineId x, LineId y) { return planar ? cat.join_id(x, y) : cat.meet_id(x, y); };
  auto diagonal = [&](LineId x, LineId y, LineId u, LineId v) {
    const auto line = cat.common_line(flat(x, y), flat(u, v));
    if (!line) {
      throw NonSingletonIntersection("flats of " + ids({x, y}) + " and " + ids({u, v}) +
                                     " do not share exactly one line");
    }
    return *line;
  };
  const auto [o, p, q, r] = t;
  DiagonalTriple d;
  d.tetrad = t;
  d.type = type;
  d.diagonals = {diagonal(o, p, q, r), diagonal(o, q, r, p), diagonal(o, r, p, q)};

  const std::array<LineId, 7> all{o, p, q, r, d.diagonals[0], d.diagonals[1], d.diagonals[2]};
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i] == all[j]) {
        throw ModelInvalid("diagonals of tetrad " + ids({o, p, q, r}) +
                           " coincide with each other or with the tetrad");
      }
    }
  }
  const auto [a, b, c] = d.diagonals;
  d.diagonal_class = classify_triple_unchecked(a, b, c, m, cat);
  return d;
}

bool holds_for(const DiagonalTriple& d) {
  return d.type == QuadClass::kPlaneTetrad ? d.diagonal_class == TripleClass::kPlaneTriad
                                           : d.diagonal_class == TripleClass::kPointTriad;
}

void record(TypeSurvey& s, const DiagonalTriple& d) {
  ++s.tetrads;
  if (holds_for(d)) {
    ++s.holding;
    if (!s.holding_exemplar) s.holding_exemplar = d;
  } else {
    ++s.failing;
    if (!s.failing_exemplar) s.failing_exemplar = d;
  }
}

void merge(TypeSurvey& into, const TypeSurvey& from) {
  into.quadruples_examined += from.quadruples_examined;
  into.tetrads += from.tetrads;
  into.holding += from.holding;
  into.failing += from.failing;
  if (!into.holding_exemplar) into.holding_exemplar = from.holding_exemplar;
  if (!into.failing_exemplar) into.failing_exemplar = from.failing_exemplar;
}

void check_distinct(std::initializer_list<LineId> l, const IncidenceStructure& m) {
  for (auto i = l.begin(); i != l.end(); ++i) {
    m.check_id(*i);
    for (auto j = i + 1; j != l.end(); ++j) {
      if (*i == *j) throw UsageError("line ids must be distinct");
    }
  }
}

// Every 4-subset of one flat; only tetrads of `want` are recorded.
TypeSurvey survey_flat(FlatId f, QuadClass want, const IncidenceStructure& m,
                       const FlatCatalog& cat) {
  TypeSurvey s;
  const auto& lines = cat.flat(f).lines.ids();
  const std::size_t k = lines.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t u = j + 1; u < k; ++u)
        for (std::size_t v = u + 1; v < k; ++v) {
          const Quadruple t{lines[i], lines[j], lines[u], lines[v]};
          ++s.quadruples_examined;
          if (classify_quadruple_unchecked(t, m, cat) == want) {
            record(s, diagonals_unchecked(t, want, m, cat));
          }
        }
  return s;
}

TypeSurvey survey_kind_per_flat(FlatKind kind, const IncidenceStructure& m,
                                const FlatCatalog& cat, unsigned workers) {
  const QuadClass want = kind == FlatKind::kPlane ? QuadClass::kPlaneTetrad
                                                  : QuadClass::kPointTetrad;
  const auto flats = cat.flats_of_kind(kind);
  std::vector<TypeSurvey> per_flat(flats.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < flats.size(); i = next++) {
      per_flat[i] = survey_flat(flats[i], want, m, cat);
    }
  };
  workers = std::max(1u, workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  TypeSurvey total;
  for (const auto& s : per_flat) merge(total, s);
  return total;
}

TypeSurvey survey_kind_sampled(FlatKind kind, const IncidenceStructure& m, const FlatCatalog& cat,
                               std::uint64_t samples, SeededRng& rng) {
  const QuadClass want = kind == FlatKind::kPlane ? QuadClass::kPlaneTetrad
                                                  : QuadClass::kPointTetrad;
  TypeSurvey s;
  const auto flats = cat.flats_of_kind(kind);
  if (flats.empty()) return s;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto& lines = cat.flat(flats[rng.below(flats.size())]).lines.ids();
    if (lines.size() < 4) continue;
    const auto pick = rng.choose_sorted(lines.size(), 4);
    const Quadruple t{lines[pick[0]], lines[pick[1]], lines[pick[2]], lines[pick[3]]};
    ++s.quadruples_examined;
    if (classify_quadruple_unchecked(t, m, cat) == want) {
      record(s, diagonals_unchecked(t, want, m, cat));
    }
  }
  return s;
}

}  // namespace

TripleClass classify_triple(LineId x, LineId y, LineId z, const IncidenceStructure& m,
                            const FlatCatalog& catalog) {
  check_distinct({x, y, z}, m);
  require_kinds(catalog);
  return classify_triple_unchecked(x, y, z, m, catalog);
}

QuadClass classify_quadruple(LineId o, LineId p, LineId q, LineId r,
                             const IncidenceStructure& m, const FlatCatalog& catalog) {
  check_distinct({o, p, q, r}, m);
  require_kinds(catalog);
  return classify_quadruple_unchecked({o, p, q, r}, m, catalog);
}

QuadClass classify_quadruple(const Quadruple& t, const IncidenceStructure& m,
                             const FlatCatalog& catalog) {
  return classify_quadruple(t[0], t[1], t[2], t[3], m, catalog);
}

DiagonalTriple diagonals_of_tetrad(const Quadruple& t, const IncidenceStructure& m,
                                   const FlatCatalog& catalog) {
  const QuadClass type = classify_quadruple(t, m, catalog);
  if (type != QuadClass::kPlaneTetrad && type != QuadClass::kPointTetrad) {
    throw NotATetrad("quadruple " + ids({t[0], t[1], t[2], t[3]}) + " is " +
                     std::string(to_string(type)));
  }
  return diagonals_unchecked(t, type, m, catalog);
}

HarmonicCheck check_harmonic(const Quadruple& t, const IncidenceStructure& m,
                             const FlatCatalog& catalog) {
  HarmonicCheck h{diagonals_of_tetrad(t, m, catalog), false};
  h.holds = holds_for(h.diagonals);
  return h;
}

HarmonicityVerdict TypeSurvey::verdict() const {
  if (tetrads == 0) return HarmonicityVerdict::kVacuous;
  if (failing == 0) return HarmonicityVerdict::kAllHold;
  if (holding == 0) return HarmonicityVerdict::kNoneHold;
  return HarmonicityVerdict::kMixed;
}

bool HarmonicityReport::axiom_holds() const {
  auto ok = [](HarmonicityVerdict v) {
    return v == HarmonicityVerdict::kAllHold || v == HarmonicityVerdict::kVacuous;
  };
  return ok(plane.verdict()) && ok(point.verdict());
}

HarmonicityReport survey_harmonicity(const IncidenceStructure& m, const FlatCatalog& catalog,
                                     const SurveyOptions& options) {
  require_kinds(catalog);
  HarmonicityReport report;
  report.mode = options.mode;
  report.seed = options.seed;
  switch (options.mode) {
    case EnumerationMode::kExhaustive: {
      std::uint64_t examined = 0;
      for_each_incident_quadruple(m, [&](const Quadruple& t) {
        ++examined;
        const QuadClass c = classify_quadruple_unchecked(t, m, catalog);
        if (c == QuadClass::kPlaneTetrad) record(report.plane, diagonals_unchecked(t, c, m, catalog));
        if (c == QuadClass::kPointTetrad) record(report.point, diagonals_unchecked(t, c, m, catalog));
      });
      report.plane.quadruples_examined = examined;
      report.point.quadruples_examined = examined;
      break;
    }
    case EnumerationMode::kPerFlat:
      report.plane = survey_kind_per_flat(FlatKind::kPlane, m, catalog, options.workers);
      report.point = survey_kind_per_flat(FlatKind::kPoint, m, catalog, options.workers);
      break;
    case EnumerationMode::kSampled: {
      report.samples = options.samples;
      SeededRng rng(options.seed);
      report.plane = survey_kind_sampled(FlatKind::kPlane, m, catalog, options.samples, rng);
      report.point = survey_kind_sampled(FlatKind::kPoint, m, catalog, options.samples, rng);
      break;
    }
  }
  return report;
}

TripleCensus triple_census(const IncidenceStructure& m, const FlatCatalog& catalog) {
  require_kinds(catalog);
  TripleCensus census;
  std::uint64_t incident = 0;
  for_each_incident_triple(m, [&](const Triple& t) {
    ++incident;
    switch (classify_triple_unchecked(t[0], t[1], t[2], m, catalog)) {
      case TripleClass::kFlatPencil: ++census.flat_pencil; break;
      case TripleClass::kPlaneTriad: ++census.plane_triad; break;
      case TripleClass::kPointTriad: ++census.point_triad; break;
      case TripleClass::kNotPairwiseIncident: break;
    }
  });
  const std::uint64_t n = m.size();
  const std::uint64_t all = n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
  census.not_pairwise_incident = all - incident;
  return census;
}

namespace {

void check_one_pretetrad(const Quadruple& t, const IncidenceStructure& m, const FlatCatalog& cat,
                         PretetradReport& report) {
  ++report.quadruples;
  auto flag = [&](std::uint64_t& counter) {
    ++counter;
    if (!report.first_violation) report.first_violation = t;
  };
  const std::array<Triple, 4> triples{Triple{t[1], t[2], t[3]}, Triple{t[0], t[2], t[3]},
                                      Triple{t[0], t[3], t[1]}, Triple{t[0], t[1], t[2]}};
  std::array<TripleClass, 4> classes{};
  for (int i = 0; i < 4; ++i) {
    classes[i] = classify_triple_unchecked(triples[i][0], triples[i][1], triples[i][2], m, cat);
  }
  const auto has = [&](TripleClass c) {
    return std::find(classes.begin(), classes.end(), c) != classes.end();
  };
  if (has(TripleClass::kPlaneTriad) && has(TripleClass::kPointTriad)) {
    flag(report.mixed_violations);
    return;
  }
  auto all_in = [&](FlatId f) {
    return std::all_of(t.begin(), t.end(), [&](LineId l) { return cat.bits(f).test(l); });
  };
  for (int i = 0; i < 4; ++i) {
    const auto& tr = triples[i];
    if (classes[i] == TripleClass::kPlaneTriad && !all_in(cat.meet_id(tr[0], tr[1]))) {
      flag(report.confinement_violations);
      return;
    }
    if (classes[i] == TripleClass::kPointTriad && !all_in(cat.join_id(tr[0], tr[1]))) {
      flag(report.confinement_violations);
      return;
    }
  }
  if (std::all_of(classes.begin(), classes.end(),
                  [](TripleClass c) { return c == TripleClass::kFlatPencil; })) {
    if (!all_in(cat.join_id(t[0], t[1])) || !all_in(cat.meet_id(t[0], t[1]))) {
      flag(report.pencil_violations);
    }
  }
}

}  // namespace

PretetradReport check_pretetrad(const IncidenceStructure& m, const FlatCatalog& catalog,
                                const SurveyOptions& options) {
  require_kinds(catalog);
  PretetradReport report;
  if (options.mode == EnumerationMode::kExhaustive) {
    for_each_incident_quadruple(
        m, [&](const Quadruple& t) { check_one_pretetrad(t, m, catalog, report); });
    return report;
  }
  // Random walk a -> b in a† -> c in [ab] -> d in [abc].
  report.sampled = true;
  SeededRng rng(options.seed ^ 0x70726574657472ULL);
  auto pick = [&](const LineBits& s) -> std::optional<LineId> {
    const std::size_t k = s.count();
    if (k == 0) return std::nullopt;
    std::size_t target = rng.below(k);
    std::optional<LineId> x = s.next();
    while (target-- > 0) x = s.next(x);
    return x;
  };
  for (std::uint64_t i = 0; i < options.samples && m.size() >= 4; ++i) {
    const auto a = static_cast<LineId>(rng.below(m.size()));
    LineBits s = m.row(a);
    s.reset(a);
    const auto b = pick(s);
    if (!b) continue;
    s &= m.row(*b);
    s.reset(*b);
    const auto c = pick(s);
    if (!c) continue;
    s &= m.row(*c);
    s.reset(*c);
    const auto d = pick(s);
    if (!d) continue;
    Quadruple t{a, *b, *c, *d};
    std::sort(t.begin(), t.end());
    check_one_pretetrad(t, m, catalog, report);
  }
  return report;
}

std::vector<FlatId> points_of_plane(FlatId plane, const FlatCatalog& catalog) {
  require_kinds(catalog);
  if (catalog.kind(plane) != FlatKind::kPlane) throw UsageError("flat is not a PLANE flat");
  std::vector<FlatId> out;
  for (FlatId f : catalog.flats_of_kind(FlatKind::kPoint)) {
    if (catalog.bits(f).intersects(catalog.bits(plane))) out.push_back(f);
  }
  return out;
}

bool quadrangle_diagonal_points_collinear(FlatId o, FlatId p, FlatId q, FlatId r,
                                          const IncidenceStructure& m,
                                          const FlatCatalog& catalog) {
  require_kinds(catalog);
  const std::array<FlatId, 4> v{o, p, q, r};
  for (std::size_t i = 0; i < 4; ++i) {
    if (v[i] >= catalog.size() || catalog.kind(v[i]) != FlatKind::kPoint) {
      throw DegenerateQuadrangle("quadrangle vertices must be POINT flats");
    }
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (v[i] == v[j]) throw DegenerateQuadrangle("quadrangle vertices must be distinct");
    }
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      for (std::size_t k = j + 1; k < 4; ++k) {
        if ((catalog.bits(v[i]) & catalog.bits(v[j]) & catalog.bits(v[k])).any()) {
          throw DegenerateQuadrangle("three vertices of the quadrangle are collinear");
        }
      }
  auto side = [&](FlatId x, FlatId y) {
    const auto line = catalog.common_line(x, y);
    if (!line) throw NonSingletonIntersection("two points do not share exactly one line");
    return *line;
  };
  auto diagonal_point = [&](LineId s, LineId t) {
    if (!m.incident(s, t)) throw DegenerateQuadrangle("quadrangle vertices are not coplanar");
    return catalog.join_id(s, t);
  };
  const FlatId a = diagonal_point(side(o, p), side(q, r));
  const FlatId b = diagonal_point(side(o, q), side(r, p));
  const FlatId c = diagonal_point(side(o, r), side(p, q));
  const LineBits ab = catalog.bits(a) & catalog.bits(b);
  return ab.any() && ab.intersects(catalog.bits(c));
}

PlaneSection section_by_plane(const Quadruple& point_tetrad, FlatId zeta,
                              const IncidenceStructure& m, const FlatCatalog& catalog) {
  if (zeta >= catalog.size() || catalog.kind(zeta) != FlatKind::kPlane) {
    throw UsageError("section plane must be a PLANE flat");
  }
  const HarmonicCheck tetrad = check_harmonic(point_tetrad, m, catalog);
  if (tetrad.diagonals.type != QuadClass::kPointTetrad) {
    throw NotATetrad("section_by_plane needs a POINT tetrad");
  }
  const auto [o, p, q, r] = point_tetrad;
  const FlatId vertex = catalog.join_id(o, p);
  if (catalog.bits(vertex).intersects(catalog.bits(zeta))) {
    throw DomainError("the section plane passes through the tetrad's common point");
  }

  // The point where line x meets zeta: every line of zeta meeting x runs
  // through it.
  auto pierce = [&](LineId x) {
    const LineBits meeting = m.row(x) & catalog.bits(zeta);
    const auto s = meeting.next();
    if (!s) throw ModelInvalid("line " + std::to_string(x) + " misses the section plane");
    const FlatId point = catalog.join_id(x, *s);
    if (!meeting.is_subset_of(catalog.bits(point))) {
      throw ModelInvalid("line " + std::to_string(x) + " meets the section plane twice");
    }
    return point;
  };
  const auto [a, b, c] = tetrad.diagonals.diagonals;
  PlaneSection out;
  out.pierce_points = {pierce(o), pierce(p), pierce(q), pierce(r),
                       pierce(a), pierce(b), pierce(c)};
  const auto [po, pp, pq, pr, pa, pb, pc] = out.pierce_points;
  auto side = [&](FlatId x, FlatId y) {
    const auto line = catalog.common_line(x, y);
    if (!line) throw NonSingletonIntersection("section points do not share exactly one line");
    return *line;
  };
  out.quadrilateral = {side(pa, pp), side(pp, pb), side(pb, pq), side(pq, pa)};
  out.quadrilateral_class = classify_quadruple(out.quadrilateral, m, catalog);
  if (out.quadrilateral_class != QuadClass::kPlaneTetrad) {
    throw ModelInvalid("section of a POINT tetrad is " +
                       std::string(to_string(out.quadrilateral_class)) + ", not a PLANE tetrad");
  }
  out.harmonic = check_harmonic(out.quadrilateral, m, catalog);
  const Triple expected{side(pp, pq), side(pr, po), side(pa, pb)};
  out.diagonals_are_sections = out.harmonic.diagonals.diagonals == expected;
  return out;
}

}  // namespace tetrad
