#include "tetrad/verify.hpp"

#include "tetrad/errors.hpp"
#include "tetrad/pg3.hpp"

namespace tetrad {

VerificationReport run_verification(const ModelFile& file, const VerifyOptions& options) {
  const IncidenceStructure& m = file.structure;
  const RunSettings& s = options.settings;
  VerificationReport r;
  const std::string canonical = serialize_model(m, file.metadata);
  r.lines = m.size();
  r.pairs = m.pair_count();
  r.hash = content_hash(canonical);
  r.metadata = file.metadata;
  r.settings = s;

  CatalogOutcome outcome = try_build_catalog(m);
  r.axioms = check_all(m, outcome, {s.mode, s.samples, s.seed});
  if (!outcome.complete()) {
    r.duality_note = "flat kinds unavailable: " + outcome.error;
    return r;
  }
  const FlatCatalog& cat = *outcome.catalog;

  try {
    r.triples = triple_census(m, cat);
    r.harmonicity = survey_harmonicity(m, cat, {s.mode, s.samples, s.seed, options.workers});
  } catch (const ModelInvalid& e) {
    r.triples.reset();
    r.harmonicity.reset();
    r.survey_error = e.what();
  }

  if (!file.metadata.generator_q) {
    r.duality_note = "model carries no coordinates";
  } else {
    const pg3::Pg3Model model = pg3::build_model(gf::PrimeField(*file.metadata.generator_q));
    if (!(model.structure == m)) {
      r.duality_note = "incidence differs from the generated PG(3,q) model";
    } else {
      DualityOptions d;
      d.exhaustive = s.mode == EnumerationMode::kExhaustive;
      d.seed = s.seed;
      try {
        r.duality = check_duality(model, cat, d);
      } catch (const ModelInvalid& e) {
        r.duality_note = e.what();
      }
    }
  }
  r.catalog = std::move(outcome.catalog);
  return r;
}

}  // namespace tetrad
