#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "tetrad/errors.hpp"
#include "tetrad/report_io.hpp"
#include "tetrad/verify.hpp"
#include "test_models.hpp"

namespace tetrad {
namespace {

using testing::pg;

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(TETRAD_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Canonical text written out by hand from the structure.
std::string expected_text(const IncidenceStructure& m, std::optional<std::uint32_t> q) {
  std::string out = "incidence-model v1\nlines " + std::to_string(m.size()) + "\n";
  if (q) out += "generator pg3 q=" + std::to_string(*q) + "\n";
  for (LineId a = 0; a < m.size(); ++a)
    for (LineId b = a + 1; b < m.size(); ++b)
      if (m.incident(a, b)) out += std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

void expect_parse_error(const std::string& text, std::size_t line, std::size_t column,
                        const std::string& fragment) {
  try {
    parse_model_file(text);
    ADD_FAILURE() << "no error for:\n" << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

TEST(ModelFileTest, ParsesSmallExample) {
  const auto f = parse_model_file(
      "# a path\nincidence-model v1\n\nlines 3\n0 1\n# middle\n1 2\n");
  EXPECT_EQ(f.structure.size(), 3u);
  EXPECT_EQ(f.structure.pair_count(), 2u);
  EXPECT_FALSE(f.metadata.generator_q.has_value());
  const auto g = parse_model_file("incidence-model v1\nlines 2\ngenerator pg3 q=3\n0 1\n");
  EXPECT_EQ(g.metadata.generator_q, std::optional<std::uint32_t>{3});
}

TEST(ModelFileTest, ErrorsCarryPositions) {
  const std::string head = "incidence-model v1\nlines 4\n";
  expect_parse_error(head + "0 1\n2 2\n", 4, 1, "reflexive pair must be omitted");
  expect_parse_error(head + "2 1\n", 3, 1, "pairs must be ordered i<j");
  expect_parse_error(head + "0 1\n0 1\n", 4, 1, "duplicate pair");
  expect_parse_error(head + "1 2\n0 1\n", 4, 1, "pairs must be sorted lexicographically");
  expect_parse_error(head + "0 7\n", 3, 3, "out of range");
  expect_parse_error(head + "0 x\n", 3, 3, "found 'x'");
  expect_parse_error("incidence-model v1\nlines 0\n", 2, 7, "line count must be positive");
  expect_parse_error("incidence-model v2\nlines 3\n", 1, 1, "expected header");
  expect_parse_error("incidence-model v1\n", 2, 1, "unexpected end of file");
  expect_parse_error(head + "generator pg3 q=4\n", 3, 17, "must be prime");
}

TEST(ModelFileTest, PairCountsOfGeneratedModels) {
  EXPECT_EQ(parse_model(read_golden("pg3_q2.model")).pair_count(), 315u);
  EXPECT_EQ(parse_model(read_golden("pg3_q3.model")).pair_count(), 3120u);
}

TEST(ModelFileTest, SerializationMatchesHandWrittenText) {
  for (std::uint32_t q : {2u, 3u}) {
    const auto& m = pg(q).model.structure;
    EXPECT_EQ(serialize_model(m, {.generator_q = q}), expected_text(m, q));
    EXPECT_EQ(serialize_model(m, {.generator_q = q}),
              read_golden("pg3_q" + std::to_string(q) + ".model"));
  }
  EXPECT_THROW(serialize_model(IncidenceStructure{}), UsageError);
}

TEST(ModelFileTest, RoundTripOnRandomStructures) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    std::vector<LinePair> pairs;
    for (LineId a = 0; a < n; ++a)
      for (LineId b = a + 1; b < n; ++b)
        if (rng() % 3 == 0) pairs.emplace_back(a, b);
    const auto m = IncidenceStructure::from_pairs(n, pairs);
    const auto text = serialize_model(m);
    const auto back = parse_model_file(text);
    ASSERT_EQ(back.structure, m);
    ASSERT_EQ(serialize_model(back.structure), text);
  }
}

TEST(ContentHashTest, MatchesIndependentFnv) {
  for (std::uint32_t q : {2u, 3u}) {
    const auto text = serialize_model(pg(q).model.structure, {.generator_q = q});
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                  static_cast<unsigned long long>(fnv1a(text)));
    EXPECT_EQ(content_hash(text), buf);
  }
  EXPECT_EQ(content_hash(read_golden("pg3_q2.model")), "fnv1a64:89990f378dd1fa14");
  EXPECT_EQ(content_hash(read_golden("pg3_q3.model")), "fnv1a64:8c5f11bb1403993f");
  EXPECT_EQ(content_hash(""), "fnv1a64:cbf29ce484222325");
}

VerificationReport verify_golden(const std::string& name, std::uint64_t seed = 0) {
  const auto file = parse_model_file(read_golden(name));
  VerifyOptions opt;
  opt.settings = {.mode = EnumerationMode::kExhaustive, .samples = 10000, .seed = seed};
  return run_verification(file, opt);
}

TEST(ReportTest, DeterministicAndWellFormed) {
  const auto a = emit_report(verify_golden("pg3_q2.model"));
  const auto b = emit_report(verify_golden("pg3_q2.model"));
  EXPECT_EQ(a, b);
  ASSERT_FALSE(a.empty());
  EXPECT_EQ(a.back(), '\n');
  const auto j = nlohmann::json::parse(a);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"axioms", "duality", "flats", "harmonicity", "model",
                                            "runtime", "seeds", "triples"}));
  EXPECT_EQ(j["model"]["hash"], "fnv1a64:89990f378dd1fa14");
  EXPECT_EQ(j["axioms"]["passed"], true);
}

TEST(ReportTest, GoldenReportsReproduce) {
  EXPECT_EQ(emit_report(verify_golden("pg3_q2.model")), read_golden("pg3_q2.report.json"));
  EXPECT_EQ(emit_report(verify_golden("pg3_q3.model")), read_golden("pg3_q3.report.json"));
}

TEST(ReportTest, FrozenHarmonicityCounts) {
  const auto j2 = nlohmann::json::parse(read_golden("pg3_q2.report.json"));
  const auto j3 = nlohmann::json::parse(read_golden("pg3_q3.report.json"));
  EXPECT_EQ(j2["harmonicity"]["plane"]["verdict"], "NONE_HOLD");
  EXPECT_EQ(j2["harmonicity"]["point"]["tetrads"], 105);
  EXPECT_EQ(j3["harmonicity"]["point"]["verdict"], "ALL_HOLD");
  EXPECT_EQ(j3["harmonicity"]["plane"]["tetrads"], 9360);
}

TEST(ReportTest, RendersText) {
  const auto text = render_report_text(read_golden("pg3_q2.report.json"));
  EXPECT_NE(text.find("fnv1a64:89990f378dd1fa14"), std::string::npos);
  EXPECT_NE(text.find("NONE_HOLD"), std::string::npos);
  EXPECT_THROW(render_report_text("{not json"), nlohmann::json::exception);
}

}  // namespace
}  // namespace tetrad
