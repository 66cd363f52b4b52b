#pragma once

#include "tetrad/report_io.hpp"

namespace tetrad {

struct VerifyOptions {
  RunSettings settings;
  unsigned workers = 1;
};

// Axioms, flat census, triple census, harmonicity survey and (for generated
// models whose incidence matches the generator) the duality checks.
VerificationReport run_verification(const ModelFile& file, const VerifyOptions& options);

}  // namespace tetrad
