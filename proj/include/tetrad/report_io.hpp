#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tetrad/axioms.hpp"
#include "tetrad/duality.hpp"
#include "tetrad/flats.hpp"
#include "tetrad/incidence.hpp"
#include "tetrad/tetra.hpp"

// Model files:
//
//   incidence-model v1
//   lines <n>
//   generator pg3 q=<q>        (optional)
//   <i> <j>                    (one per incident pair, i < j, sorted)
//
// Reflexive pairs are implied and must be omitted. Blank lines and lines
// starting with '#' are ignored on input and never written.
namespace tetrad {

inline constexpr std::string_view kToolName = "tetrad";
inline constexpr std::string_view kToolVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

struct ModelMetadata {
  std::optional<std::uint32_t> generator_q;  // set for generated PG(3,q) models

  friend bool operator==(const ModelMetadata&, const ModelMetadata&) = default;
};

struct ModelFile {
  ModelMetadata metadata;
  IncidenceStructure structure;
};

// All-or-nothing: throws ParseError (with line and column) on any defect.
ModelFile parse_model_file(std::string_view text);
IncidenceStructure parse_model(std::string_view text);

// Canonical text. Throws UsageError for an empty structure.
std::string serialize_model(const IncidenceStructure& m, const ModelMetadata& metadata = {});

// "fnv1a64:<16 hex digits>" over the canonical serialization.
std::string content_hash(std::string_view canonical_text);

struct RunSettings {
  EnumerationMode mode = EnumerationMode::kExhaustive;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

struct VerificationReport {
  std::size_t lines = 0;
  std::size_t pairs = 0;
  std::string hash;
  ModelMetadata metadata;
  RunSettings settings;

  AxiomReport axioms;
  std::optional<FlatCatalog> catalog;  // kinds assigned when present
  std::optional<TripleCensus> triples;
  std::optional<HarmonicityReport> harmonicity;
  std::optional<DualityReport> duality;
  std::string duality_note;  // why duality is absent
  std::string survey_error;  // a model-invalid condition hit while surveying
};

// Stable key order, integers only, trailing newline.
std::string emit_report(const VerificationReport& report);

// Human-readable summary of an emitted JSON report.
std::string render_report_text(std::string_view json_text);

}  // namespace tetrad
