#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tetrad/duality.hpp"
#include "tetrad/errors.hpp"
#include "tetrad/pg3.hpp"
#include "tetrad/report_io.hpp"
#include "tetrad/tetra.hpp"
#include "tetrad/verify.hpp"

namespace tetrad::cli {

namespace {

struct Config {
  std::uint32_t q = 0;
  std::string in;
  std::string out;
  std::string mode;
  std::uint64_t samples = 10000;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  std::vector<std::uint64_t> ids;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw InputError("cannot write '" + path + "'");
}

ModelFile load_model(const std::string& path) {
  if (path.empty()) throw UsageError("--in is required");
  return parse_model_file(read_file(path));
}

void check_q(std::uint32_t q) {
  if (!gf::is_prime(q)) throw UsageError("q must be prime");
  if (q > 7) throw UsageError("q must be at most 7");
}

EnumerationMode default_mode(const ModelFile& file) {
  if (file.metadata.generator_q) {
    const auto q = *file.metadata.generator_q;
    if (q <= 3) return EnumerationMode::kExhaustive;
    if (q == 5) return EnumerationMode::kPerFlat;
    return EnumerationMode::kSampled;
  }
  const std::size_t n = file.structure.size();
  if (n <= 130) return EnumerationMode::kExhaustive;
  if (n <= 806) return EnumerationMode::kPerFlat;
  return EnumerationMode::kSampled;
}

RunSettings settings_for(const Config& c, EnumerationMode fallback, std::ostream& err) {
  RunSettings s;
  s.mode = c.mode.empty() ? fallback : parse_mode(c.mode);
  s.samples = c.samples;
  if (c.seed) {
    s.seed = *c.seed;
  } else if (s.mode != EnumerationMode::kExhaustive) {
    std::random_device rd;
    s.seed = (std::uint64_t{rd()} << 32) | rd();
    err << "seed: " << s.seed << "\n";
  }
  return s;
}

unsigned worker_count() {
  if (const char* env = std::getenv("TETRAD_WORKERS")) {
    const long w = std::strtol(env, nullptr, 10);
    if (w >= 1 && w <= 256) return static_cast<unsigned>(w);
  }
  return 1;
}

int cmd_gen(const Config& c, std::ostream& out) {
  check_q(c.q);
  const pg3::Pg3Model model = pg3::build_model(gf::PrimeField(c.q));
  write_output(c.out, serialize_model(model.structure, {c.q}), out);
  return kOk;
}

int cmd_check(const Config& c, std::ostream& out, std::ostream& err) {
  const ModelFile file = load_model(c.in);
  const VerifyOptions options{settings_for(c, default_mode(file), err), worker_count()};
  const VerificationReport report = run_verification(file, options);
  const std::string json = emit_report(report);
  write_output(c.out, c.format == "text" ? render_report_text(json) : json, out);

  if (!report.axioms.axioms_passed()) return kAxiomFailure;
  if (!report.harmonicity || !report.harmonicity->axiom_holds()) return kHarmonicityFailure;
  return kOk;
}

int cmd_classify(const Config& c, std::ostream& out) {
  const ModelFile file = load_model(c.in);
  const IncidenceStructure& m = file.structure;
  if (c.ids.size() != 3 && c.ids.size() != 4) throw UsageError("classify takes 3 or 4 line ids");
  std::vector<LineId> ids;
  for (auto id : c.ids) {
    if (id >= m.size()) throw UsageError("line id " + std::to_string(id) + " out of range");
    ids.push_back(static_cast<LineId>(id));
  }
  const FlatCatalog catalog = build_catalog(m);
  if (ids.size() == 3) {
    out << to_string(classify_triple(ids[0], ids[1], ids[2], m, catalog)) << "\n";
    return kOk;
  }
  const Quadruple t{ids[0], ids[1], ids[2], ids[3]};
  const QuadClass cls = classify_quadruple(t, m, catalog);
  out << to_string(cls);
  if (cls == QuadClass::kPlaneTetrad || cls == QuadClass::kPointTetrad) {
    const HarmonicCheck h = check_harmonic(t, m, catalog);
    const auto [a, b, d] = h.diagonals.diagonals;
    out << " diagonals=[" << a << "," << b << "," << d << "]"
        << " diagonal_class=" << to_string(h.diagonals.diagonal_class)
        << " harmonic=" << (h.holds ? "true" : "false");
  }
  out << "\n";
  return kOk;
}

int cmd_dual(const Config& c, std::ostream& out, std::ostream& err) {
  std::uint32_t q = c.q;
  EnumerationMode fallback = EnumerationMode::kExhaustive;
  if (!c.in.empty()) {
    const ModelFile file = load_model(c.in);
    if (!file.metadata.generator_q) {
      throw UnsupportedOperation(
          "duality needs line coordinates; this model has no 'generator pg3' header");
    }
    q = *file.metadata.generator_q;
    check_q(q);
    if (!(pg3::build_model(gf::PrimeField(q)).structure == file.structure)) {
      throw UnsupportedOperation("model incidence differs from the generated PG(3,q) model");
    }
  } else if (q == 0) {
    throw UsageError("dual needs --q or --in");
  }
  check_q(q);
  if (q > 2) fallback = EnumerationMode::kSampled;
  const RunSettings s = settings_for(c, fallback, err);

  const pg3::Pg3Model model = pg3::build_model(gf::PrimeField(q));
  const FlatCatalog catalog = build_catalog(model.structure);
  DualityOptions options;
  options.exhaustive = s.mode == EnumerationMode::kExhaustive;
  options.seed = s.seed;
  const DualityReport report = check_duality(model, catalog, options);

  if (c.format == "text") {
    for (const auto& check : report.checks) {
      out << check.property << ": " << (check.passed ? "pass" : "FAIL") << " (" << check.cases
          << " cases)" << (check.detail.empty() ? "" : " -- " + check.detail) << "\n";
    }
  } else {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& check : report.checks) {
      checks.push_back({{"property", check.property},
                        {"passed", check.passed},
                        {"cases", check.cases},
                        {"detail", check.detail}});
    }
    nlohmann::json doc = {{"q", q},
                          {"exhaustive", report.exhaustive},
                          {"seed", report.seed},
                          {"status", report.all_passed() ? "pass" : "fail"},
                          {"checks", checks}};
    write_output(c.out, doc.dump(2) + "\n", out);
  }
  return report.all_passed() ? kOk : kAxiomFailure;
}

int cmd_report(const Config& c, std::ostream& out) {
  if (c.in.empty()) throw UsageError("--in is required");
  const std::string text = read_file(c.in);
  try {
    write_output(c.out, c.format == "json" ? text : render_report_text(text), out);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("not a verification report: ") + e.what());
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-model verification of the line axioms of projective 3-space"};
  app.require_subcommand(1);
  Config c;

  auto* gen = app.add_subcommand("gen", "Write the PG(3,q) incidence model");
  gen->add_option("--q", c.q, "Prime field order, 2..7")->required();
  gen->add_option("--out", c.out, "Output path (default stdout)");

  auto add_run_flags = [&](CLI::App* sub) {
    sub->add_option("--mode", c.mode, "exhaustive | per-flat | sample")
        ->check(CLI::IsMember({"exhaustive", "per-flat", "sample"}));
    sub->add_option("--samples", c.samples, "Sample size for sampled checks");
    sub->add_option("--seed", c.seed, "64-bit seed for every sampled check");
    sub->add_option("--format", c.format, "json | text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", c.out, "Output path (default stdout)");
  };

  auto* check = app.add_subcommand("check", "Verify axioms and harmonicity of a model file");
  check->add_option("--in", c.in, "Model file")->required();
  add_run_flags(check);

  auto* classify = app.add_subcommand("classify", "Classify three or four lines of a model");
  classify->add_option("--in", c.in, "Model file")->required();
  classify->add_option("ids", c.ids, "Line ids")->required();

  auto* dual = app.add_subcommand("dual", "Check the Plücker duality on a PG(3,q) model");
  dual->add_option("--q", c.q, "Prime field order");
  dual->add_option("--in", c.in, "Generated model file");
  add_run_flags(dual);

  auto* report = app.add_subcommand("report", "Render a JSON verification report");
  report->add_option("--in", c.in, "Report file")->required();
  report->add_option("--format", c.format, "text | json")->check(CLI::IsMember({"json", "text"}));
  report->add_option("--out", c.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }
  if (report->parsed() && report->count("--format") == 0) c.format = "text";

  try {
    if (gen->parsed()) return cmd_gen(c, out);
    if (check->parsed()) return cmd_check(c, out, err);
    if (classify->parsed()) return cmd_classify(c, out);
    if (dual->parsed()) return cmd_dual(c, out, err);
    return cmd_report(c, out);
  } catch (const ParseError& e) {
    err << "error: " << c.in << ":" << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const UnsupportedOperation& e) {
    err << "error: unsupported operation: " << e.what() << "\n";
    return kUsageError;
  } catch (const ModelInvalid& e) {
    err << "error: model invalid: " << e.what() << "\n";
    return kModelInvalid;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace tetrad::cli
