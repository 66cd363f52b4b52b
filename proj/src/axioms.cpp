#include "tetrad/axioms.hpp"

#include <algorithm>
#include <map>

#include "tetrad/errors.hpp"

namespace tetrad {

std::string_view to_string(AxiomId id) {
  switch (id) {
    case AxiomId::k1: return "1";
    case AxiomId::k2_1: return "2.1";
    case AxiomId::k2_2: return "2.2";
    case AxiomId::k2_3: return "2.3";
    case AxiomId::k3: return "3";
    case AxiomId::k4Point: return "4-point";
    case AxiomId::k4Plane: return "4-plane";
  }
  return "?";
}

std::string_view to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::kPass: return "PASS";
    case VerdictStatus::kFail: return "FAIL";
    case VerdictStatus::kNotApplicable: return "NOT_APPLICABLE";
  }
  return "?";
}

namespace {

void fail(AxiomVerdict& v, std::vector<LineId> lines, std::string detail) {
  if (v.counterexample) return;
  v.status = VerdictStatus::kFail;
  v.counterexample = Witness{std::move(lines), std::move(detail)};
}

std::string show(std::initializer_list<LineId> l) {
  std::string s;
  for (LineId id : l) s += (s.empty() ? "" : ",") + std::to_string(id);
  return s;
}

// Lexicographically first three pairwise skew members of s.
bool has_skew_triple(const LineBits& s, const IncidenceStructure& m) {
  for (auto x = s.next(); x; x = s.next(x)) {
    const LineBits sx = s - m.row(*x);
    for (auto y = sx.next(x); y; y = sx.next(y)) {
      if ((sx - m.row(*y)).next(y)) return true;
    }
  }
  return false;
}

// First incident pair (x < y) inside flat f whose flats include f.
LinePair generating_pair(FlatId f, const IncidenceStructure& m, const FlatCatalog& cat) {
  const LineBits& bits = cat.bits(f);
  for (auto x = bits.next(); x; x = bits.next(x)) {
    const LineBits rest = bits & m.row(*x);
    for (auto y = rest.next(x); y; y = rest.next(y)) {
      const auto flats = cat.pair_flats(*x, *y);
      if (flats[0] == f || flats[1] == f) return {*x, *y};
    }
  }
  throw ModelInvalid("flat " + std::to_string(f) + " has no generating pair");
}

}  // namespace

AxiomVerdict check_axiom1(const IncidenceStructure& m) {
  AxiomVerdict v{.axiom = AxiomId::k1};
  for (LineId l = 0; l < m.size() && !v.counterexample; ++l) {
    ++v.cases;
    if (!has_skew_triple(m.row(l), m)) {
      fail(v, {l}, "l† of line " + std::to_string(l) + " holds no three pairwise skew lines");
    }
  }
  return v;
}

std::vector<AxiomVerdict> check_axiom2(const IncidenceStructure& m, const CheckOptions& options) {
  AxiomVerdict v21{.axiom = AxiomId::k2_1}, v22{.axiom = AxiomId::k2_2}, v23{.axiom = AxiomId::k2_3};
  const auto pairs = m.upper_pairs();

  for (auto [a, b] : pairs) {
    ++v21.cases;
    if (!contains_skew_pair(m.row(a) & m.row(b), m)) {
      fail(v21, {a, b}, "[" + show({a, b}) + "] holds no skew pair");
      break;
    }
  }

  std::vector<std::size_t> chosen;
  const bool sample = options.mode != EnumerationMode::kExhaustive && options.samples < pairs.size();
  if (sample) {
    SeededRng rng(options.seed);
    chosen = rng.choose_sorted(pairs.size(), options.samples);
  } else {
    chosen.resize(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) chosen[i] = i;
  }
  v22.sampled = v23.sampled = sample;

  for (std::size_t idx : chosen) {
    if (v22.counterexample && v23.counterexample) break;
    const auto [a, b] = pairs[idx];
    const LineBits ab = m.row(a) & m.row(b);
    if (!v22.counterexample) {
      const LineBits sig = ab - dagger(ab, m);
      sig.for_each([&](LineId c) {
        if (v22.counterexample) return;
        ++v22.cases;
        if (auto xy = contains_skew_pair(ab & m.row(c), m)) {
          fail(v22, {a, b, c, xy->first, xy->second},
               "[" + show({a, b, c}) + "] holds the skew pair " + show({xy->first, xy->second}));
        }
      });
    }
    if (!v23.counterexample) {
      for (auto x = ab.next(); x && !v23.counterexample; x = ab.next(x)) {
        const LineBits abx = ab & m.row(*x);
        const LineBits skew_to_x = ab - m.row(*x);
        for (auto y = skew_to_x.next(x); y; y = skew_to_x.next(y)) {
          ++v23.cases;
          const LineBits missing = ab - (abx | (ab & m.row(*y)));
          if (auto z = missing.next()) {
            fail(v23, {a, b, *x, *y, *z},
                 "line " + std::to_string(*z) + " of [" + show({a, b}) + "] is in neither [" +
                     show({a, b, *x}) + "] nor [" + show({a, b, *y}) + "]");
            break;
          }
        }
      }
    }
  }
  return {v21, v22, v23};
}

std::optional<std::size_t> first_flat_without_disjoint(std::span<const LineBits> flats) {
  for (std::size_t i = 0; i < flats.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < flats.size() && !found; ++j) {
      found = !flats[i].intersects(flats[j]);
    }
    if (!found) return i;
  }
  return std::nullopt;
}

AxiomVerdict check_axiom3(const IncidenceStructure& m, const FlatCatalog& catalog) {
  if (catalog.line_count() != m.size()) throw UsageError("catalog does not match structure");
  AxiomVerdict v{.axiom = AxiomId::k3};
  std::vector<LineBits> flats;
  for (FlatId f = 0; f < catalog.size(); ++f) flats.push_back(catalog.bits(f));
  v.cases = flats.size();
  if (auto f = first_flat_without_disjoint(flats)) {
    fail(v, catalog.flat(static_cast<FlatId>(*f)).lines.ids(),
         "flat " + std::to_string(*f) + " meets every flat");
  }
  return v;
}

std::vector<AxiomVerdict> check_axiom4(const IncidenceStructure& m, const FlatCatalog& catalog) {
  if (catalog.line_count() != m.size()) throw UsageError("catalog does not match structure");
  AxiomVerdict vpoint{.axiom = AxiomId::k4Point}, vplane{.axiom = AxiomId::k4Plane};

  if (catalog.kinds_assigned()) {
    for (auto* v : {&vpoint, &vplane}) {
      const FlatKind kind = v == &vpoint ? FlatKind::kPoint : FlatKind::kPlane;
      const auto flats = catalog.flats_of_kind(kind);
      for (std::size_t i = 0; i < flats.size() && !v->counterexample; ++i) {
        for (std::size_t j = i + 1; j < flats.size(); ++j) {
          ++v->cases;
          if (!catalog.bits(flats[i]).intersects(catalog.bits(flats[j]))) {
            const auto [a, b] = generating_pair(flats[i], m, catalog);
            const auto [p, q] = generating_pair(flats[j], m, catalog);
            fail(*v, {a, b, p, q},
                 std::string(kind == FlatKind::kPoint ? "a⊻b" : "a⊼b") + " and " +
                     (kind == FlatKind::kPoint ? "p⊻q" : "p⊼q") + " are disjoint for (a,b)=(" +
                     show({a, b}) + "), (p,q)=(" + show({p, q}) + ")");
            break;
          }
        }
      }
    }
    return {vpoint, vplane};
  }

  // No global labelling: each incident pair contributes an unordered pair of
  // flats. Two such pairs F, G refute the axiom when neither matching of
  // F's flats with G's flats makes both same-named intersections nonempty.
  std::map<std::array<FlatId, 2>, LinePair> flags;
  for (auto [a, b] : m.upper_pairs()) {
    auto f = catalog.pair_flats(a, b);
    std::sort(f.begin(), f.end());
    flags.try_emplace(f, LinePair{a, b});
  }
  const std::vector<std::pair<std::array<FlatId, 2>, LinePair>> list(flags.begin(), flags.end());
  auto meets = [&](FlatId f, FlatId g) { return catalog.bits(f).intersects(catalog.bits(g)); };
  std::uint64_t cases = 0;
  for (std::size_t i = 0; i < list.size() && !vpoint.counterexample; ++i) {
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      ++cases;
      const auto [f1, f2] = list[i].first;
      const auto [g1, g2] = list[j].first;
      const bool straight = meets(f1, g1) && meets(f2, g2);
      const bool crossed = meets(f1, g2) && meets(f2, g1);
      if (!straight && !crossed) {
        const auto [a, b] = list[i].second;
        const auto [p, q] = list[j].second;
        const std::string detail = "no naming of the flats of (" + show({a, b}) + ") and (" +
                                   show({p, q}) + ") makes both intersections nonempty";
        fail(vpoint, {a, b, p, q}, detail);
        fail(vplane, {a, b, p, q}, detail);
        break;
      }
    }
  }
  vpoint.cases = vplane.cases = cases;
  if (!vpoint.counterexample) {
    for (auto* v : {&vpoint, &vplane}) {
      v->status = VerdictStatus::kNotApplicable;
      v->counterexample = Witness{{}, "flat kinds are undefined: the flats admit no global "
                                      "POINT/PLANE bipartition"};
    }
  }
  return {vpoint, vplane};
}

bool AxiomReport::axioms_passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const AxiomVerdict& v) { return v.passed(); });
}

namespace {

std::optional<LinePair> first_sigma_failure(const IncidenceStructure& m) {
  for (auto [a, b] : m.upper_pairs()) {
    try {
      split_sigma_bits(a, b, m);
    } catch (const NotAnEquivalence&) {
      return LinePair{a, b};
    }
  }
  return std::nullopt;
}

TheoremVerdict flats_well_defined(const IncidenceStructure& m, const FlatCatalog& cat,
                                  const CheckOptions& options) {
  TheoremVerdict t{.name = "flat-independent-of-witness"};
  const auto pairs = m.upper_pairs();
  std::vector<std::size_t> chosen;
  t.sampled = options.mode != EnumerationMode::kExhaustive && options.samples < pairs.size();
  if (t.sampled) {
    SeededRng rng(options.seed ^ 0x666c617473ULL);
    chosen = rng.choose_sorted(pairs.size(), options.samples);
  } else {
    for (std::size_t i = 0; i < pairs.size(); ++i) chosen.push_back(i);
  }
  for (std::size_t idx : chosen) {
    const auto [a, b] = pairs[idx];
    const auto flats = cat.pair_flats(a, b);
    const LineBits ab = m.row(a) & m.row(b);
    const auto split = split_sigma_bits(a, b, m);
    for (const LineBits* cls : {&split.class1, &split.class2}) {
      const LineBits& expected = cat.bits(cat.bits(flats[0]).test(*cls->next()) ? flats[0]
                                                                                 : flats[1]);
      cls->for_each([&](LineId c) {
        ++t.cases;
        if (!t.counterexample && (ab & m.row(c)) != expected) {
          t.counterexample = std::vector<LineId>{a, b, c};
        }
      });
    }
  }
  t.passed = !t.counterexample;
  return t;
}

TheoremVerdict same_kind_share_one_line(const FlatCatalog& cat) {
  TheoremVerdict t{.name = "same-kind-flats-share-one-line"};
  for (FlatKind kind : {FlatKind::kPoint, FlatKind::kPlane}) {
    const auto flats = cat.flats_of_kind(kind);
    for (std::size_t i = 0; i < flats.size(); ++i) {
      for (std::size_t j = i + 1; j < flats.size(); ++j) {
        ++t.cases;
        if (!t.counterexample && !cat.common_line(flats[i], flats[j])) {
          t.counterexample = cat.flat(flats[i]).lines.ids();
        }
      }
    }
  }
  t.passed = !t.counterexample;
  return t;
}

}  // namespace

AxiomReport check_all(const IncidenceStructure& m, const CatalogOutcome& outcome,
                      const CheckOptions& options) {
  AxiomReport report;
  report.catalog_stage = outcome.stage;
  report.catalog_error = outcome.error;
  report.verdicts.push_back(check_axiom1(m));
  for (auto& v : check_axiom2(m, options)) report.verdicts.push_back(std::move(v));

  if (outcome.stage == CatalogOutcome::Stage::kSigmaFailed) {
    const auto pair = first_sigma_failure(m);
    std::vector<LineId> lines;
    if (pair) lines = {pair->first, pair->second};
    for (AxiomId id : {AxiomId::k3, AxiomId::k4Point, AxiomId::k4Plane}) {
      AxiomVerdict v{.axiom = id, .status = VerdictStatus::kNotApplicable};
      v.counterexample = Witness{lines, "Σ does not split into two incidence classes: " +
                                            outcome.error};
      report.verdicts.push_back(std::move(v));
    }
    return report;
  }

  const FlatCatalog& cat = *outcome.catalog;
  report.verdicts.push_back(check_axiom3(m, cat));
  for (auto& v : check_axiom4(m, cat)) report.verdicts.push_back(std::move(v));
  if (!outcome.complete()) return report;

  report.theorems.push_back(flats_well_defined(m, cat, options));
  report.theorems.push_back(same_kind_share_one_line(cat));

  SurveyOptions survey{options.mode, options.samples, options.seed, 1};
  TheoremVerdict pretetrad{.name = "pretetrad"};
  TheoremVerdict pencil{.name = "triad-free-quadruple-is-flat-pencil"};
  try {
    const PretetradReport r = check_pretetrad(m, cat, survey);
    pretetrad.cases = pencil.cases = r.quadruples;
    pretetrad.sampled = pencil.sampled = r.sampled;
    pretetrad.passed = r.mixed_violations == 0 && r.confinement_violations == 0;
    pencil.passed = r.pencil_violations == 0;
    if (r.first_violation) {
      const std::vector<LineId> q(r.first_violation->begin(), r.first_violation->end());
      if (!pretetrad.passed) pretetrad.counterexample = q;
      if (!pencil.passed) pencil.counterexample = q;
    }
  } catch (const ModelInvalid& e) {
    pretetrad.note = pencil.note = e.what();
  }
  report.theorems.push_back(std::move(pretetrad));
  report.theorems.push_back(std::move(pencil));
  return report;
}

}  // namespace tetrad
