#include "tetrad/report_io.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "tetrad/errors.hpp"
#include "tetrad/gf.hpp"

namespace tetrad {

namespace {

using nlohmann::json;

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::uint64_t parse_uint(const Token& t, std::size_t line_no, std::string_view what) {
  std::uint64_t v = 0;
  const auto* first = t.text.data();
  const auto* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line_no, t.column,
                     "expected " + std::string(what) + ", found '" + std::string(t.text) + "'");
  }
  return v;
}

}  // namespace

ModelFile parse_model_file(std::string_view text) {
  // Split into (line number, content) pairs, dropping comments and blanks.
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    pos = end + 1;
    const auto toks = tokenize(line);
    if (toks.empty() || toks.front().text.starts_with('#')) continue;
    lines.emplace_back(line_no, line);
  }

  std::size_t cursor = 0;
  auto expect_line = [&](std::string_view what) {
    if (cursor == lines.size()) {
      throw ParseError(line_no + 1, 1, "unexpected end of file, expected " + std::string(what));
    }
    return lines[cursor++];
  };

  auto [header_no, header] = expect_line("'incidence-model v1'");
  const auto header_toks = tokenize(header);
  if (header_toks.size() != 2 || header_toks[0].text != "incidence-model" ||
      header_toks[1].text != "v1") {
    throw ParseError(header_no, header_toks[0].column, "expected header 'incidence-model v1'");
  }

  auto [count_no, count_line] = expect_line("'lines <n>'");
  const auto count_toks = tokenize(count_line);
  if (count_toks.size() != 2 || count_toks[0].text != "lines") {
    throw ParseError(count_no, count_toks[0].column, "expected 'lines <n>'");
  }
  const std::uint64_t n = parse_uint(count_toks[1], count_no, "a line count");
  if (n == 0) throw ParseError(count_no, count_toks[1].column, "line count must be positive");
  if (n > 100000) throw ParseError(count_no, count_toks[1].column, "line count too large");

  ModelFile file;
  if (cursor < lines.size()) {
    const auto [gen_no, gen_line] = lines[cursor];
    const auto toks = tokenize(gen_line);
    if (toks[0].text == "generator") {
      ++cursor;
      if (toks.size() != 3 || toks[1].text != "pg3" || !toks[2].text.starts_with("q=")) {
        throw ParseError(gen_no, toks[0].column, "expected 'generator pg3 q=<q>'");
      }
      const Token qtok{toks[2].text.substr(2), toks[2].column + 2};
      const std::uint64_t q = parse_uint(qtok, gen_no, "a field order");
      if (q > 0xFFFFFFFFu || !gf::is_prime(static_cast<std::uint32_t>(q))) {
        throw ParseError(gen_no, qtok.column, "generator field order must be prime");
      }
      file.metadata.generator_q = static_cast<std::uint32_t>(q);
    }
  }

  std::vector<LinePair> pairs;
  for (; cursor < lines.size(); ++cursor) {
    const auto [no, line] = lines[cursor];
    const auto toks = tokenize(line);
    if (toks.size() != 2) {
      const std::size_t col = toks.size() < 2 ? line.size() + 1 : toks[2].column;
      throw ParseError(no, col, "expected a pair '<i> <j>'");
    }
    const std::uint64_t i = parse_uint(toks[0], no, "a line id");
    const std::uint64_t j = parse_uint(toks[1], no, "a line id");
    if (i >= n) throw ParseError(no, toks[0].column, "line id " + std::to_string(i) + " out of range");
    if (j >= n) throw ParseError(no, toks[1].column, "line id " + std::to_string(j) + " out of range");
    if (i == j) throw ParseError(no, toks[0].column, "reflexive pair must be omitted");
    if (i > j) throw ParseError(no, toks[0].column, "pairs must be ordered i<j");
    const LinePair p{static_cast<LineId>(i), static_cast<LineId>(j)};
    if (!pairs.empty()) {
      if (p == pairs.back()) throw ParseError(no, toks[0].column, "duplicate pair");
      if (p < pairs.back()) {
        throw ParseError(no, toks[0].column, "pairs must be sorted lexicographically");
      }
    }
    pairs.push_back(p);
  }
  file.structure = IncidenceStructure::from_pairs(n, pairs);
  return file;
}

IncidenceStructure parse_model(std::string_view text) { return parse_model_file(text).structure; }

std::string serialize_model(const IncidenceStructure& m, const ModelMetadata& metadata) {
  if (m.size() == 0) throw UsageError("cannot serialize an empty structure");
  std::string out = "incidence-model v1\nlines " + std::to_string(m.size()) + "\n";
  if (metadata.generator_q) out += "generator pg3 q=" + std::to_string(*metadata.generator_q) + "\n";
  for (auto [i, j] : m.upper_pairs()) {
    out += std::to_string(i);
    out += ' ';
    out += std::to_string(j);
    out += '\n';
  }
  return out;
}

std::string content_hash(std::string_view canonical_text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : canonical_text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return "fnv1a64:" + std::string(buf);
}

namespace {

json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return {{"lines", w->lines}, {"detail", w->detail}};
}

json diagonal_json(const std::optional<DiagonalTriple>& d) {
  if (!d) return nullptr;
  return {{"tetrad", d->tetrad},
          {"type", to_string(d->type)},
          {"diagonals", d->diagonals},
          {"diagonal_class", to_string(d->diagonal_class)}};
}

json survey_json(const TypeSurvey& s) {
  return {{"quadruples_examined", s.quadruples_examined},
          {"tetrads", s.tetrads},
          {"holding", s.holding},
          {"failing", s.failing},
          {"verdict", to_string(s.verdict())},
          {"holding_exemplar", diagonal_json(s.holding_exemplar)},
          {"failing_exemplar", diagonal_json(s.failing_exemplar)}};
}

std::string_view stage_name(CatalogOutcome::Stage s) {
  switch (s) {
    case CatalogOutcome::Stage::kComplete: return "complete";
    case CatalogOutcome::Stage::kSigmaFailed: return "sigma-not-two-class";
    case CatalogOutcome::Stage::kBipartitionFailed: return "no-bipartition";
  }
  return "?";
}

}  // namespace

std::string emit_report(const VerificationReport& r) {
  json model = {{"lines", r.lines}, {"pairs", r.pairs}, {"hash", r.hash}, {"generator", nullptr}};
  if (r.metadata.generator_q) {
    model["generator"] = {{"family", "pg3"}, {"q", *r.metadata.generator_q}};
  }

  json verdicts = json::array();
  for (const auto& v : r.axioms.verdicts) {
    verdicts.push_back({{"axiom", to_string(v.axiom)},
                        {"status", to_string(v.status)},
                        {"cases", v.cases},
                        {"sampled", v.sampled},
                        {"counterexample", witness_json(v.counterexample)}});
  }
  json theorems = json::array();
  for (const auto& t : r.axioms.theorems) {
    json cx = nullptr;
    if (t.counterexample) cx = *t.counterexample;
    theorems.push_back({{"name", t.name},
                        {"passed", t.passed},
                        {"cases", t.cases},
                        {"sampled", t.sampled},
                        {"counterexample", cx},
                        {"note", t.note}});
  }
  json axioms = {{"passed", r.axioms.axioms_passed()},
                 {"verdicts", verdicts},
                 {"theorems", theorems},
                 {"catalog_stage", stage_name(r.axioms.catalog_stage)},
                 {"catalog_error", r.axioms.catalog_error}};

  json flats = nullptr;
  if (r.catalog) {
    json list = json::array();
    for (FlatId f = 0; f < r.catalog->size(); ++f) {
      const Flat& fl = r.catalog->flat(f);
      list.push_back({{"id", f}, {"kind", to_string(fl.kind)}, {"lines", fl.lines.ids()}});
    }
    flats = {{"points", r.catalog->flats_of_kind(FlatKind::kPoint).size()},
             {"planes", r.catalog->flats_of_kind(FlatKind::kPlane).size()},
             {"total", r.catalog->size()},
             {"catalog", list}};
  }

  json triples = nullptr;
  if (r.triples) {
    triples = {{"NOT_PAIRWISE_INCIDENT", r.triples->not_pairwise_incident},
               {"FLAT_PENCIL", r.triples->flat_pencil},
               {"PLANE_TRIAD", r.triples->plane_triad},
               {"POINT_TRIAD", r.triples->point_triad}};
  }

  json harmonicity = nullptr;
  if (r.harmonicity) {
    const auto& h = *r.harmonicity;
    harmonicity = {{"mode", to_string(h.mode)},
                   {"plane", survey_json(h.plane)},
                   {"point", survey_json(h.point)},
                   {"consistent", h.consistent()},
                   {"axiom_H", h.axiom_holds()}};
  }
  if (!r.survey_error.empty()) harmonicity = {{"error", r.survey_error}};

  json duality = {{"status", "unsupported"}, {"note", r.duality_note}};
  if (r.duality) {
    json checks = json::array();
    for (const auto& c : r.duality->checks) {
      checks.push_back({{"property", c.property},
                        {"passed", c.passed},
                        {"cases", c.cases},
                        {"detail", c.detail}});
    }
    duality = {{"status", r.duality->all_passed() ? "pass" : "fail"},
               {"exhaustive", r.duality->exhaustive},
               {"checks", checks}};
  }

  json doc = {{"model", model},
              {"axioms", axioms},
              {"flats", flats},
              {"triples", triples},
              {"harmonicity", harmonicity},
              {"duality", duality},
              {"runtime", {{"tool", kToolName},
                           {"version", kToolVersion},
                           {"schema_version", kReportSchemaVersion}}},
              {"seeds", {{"mode", to_string(r.settings.mode)},
                         {"seed", r.settings.seed},
                         {"samples", r.settings.samples}}}};
  return doc.dump(2) + "\n";
}

std::string render_report_text(std::string_view json_text) {
  const json doc = json::parse(json_text);
  std::ostringstream os;
  const auto& model = doc.at("model");
  os << "model: " << model.at("lines").get<std::uint64_t>() << " lines, "
     << model.at("pairs").get<std::uint64_t>() << " incident pairs, "
     << model.at("hash").get<std::string>();
  if (!model.at("generator").is_null()) {
    os << " (PG(3," << model.at("generator").at("q").get<int>() << "))";
  }
  os << "\n";
  const auto& seeds = doc.at("seeds");
  os << "mode: " << seeds.at("mode").get<std::string>() << ", seed "
     << seeds.at("seed").get<std::uint64_t>() << "\n";
  for (const auto& v : doc.at("axioms").at("verdicts")) {
    os << "axiom " << v.at("axiom").get<std::string>() << ": " << v.at("status").get<std::string>()
       << " (" << v.at("cases").get<std::uint64_t>() << " cases"
       << (v.at("sampled").get<bool>() ? ", sampled" : "") << ")";
    if (!v.at("counterexample").is_null()) {
      os << " -- " << v.at("counterexample").at("detail").get<std::string>();
    }
    os << "\n";
  }
  for (const auto& t : doc.at("axioms").at("theorems")) {
    os << "theorem " << t.at("name").get<std::string>() << ": "
       << (t.at("passed").get<bool>() ? "PASS" : "FAIL") << " ("
       << t.at("cases").get<std::uint64_t>() << " cases)\n";
  }
  if (!doc.at("flats").is_null()) {
    os << "flats: " << doc.at("flats").at("points").get<std::uint64_t>() << " POINT, "
       << doc.at("flats").at("planes").get<std::uint64_t>() << " PLANE\n";
  }
  if (!doc.at("triples").is_null()) {
    const auto& t = doc.at("triples");
    os << "triples: FLAT_PENCIL " << t.at("FLAT_PENCIL").get<std::uint64_t>() << ", PLANE_TRIAD "
       << t.at("PLANE_TRIAD").get<std::uint64_t>() << ", POINT_TRIAD "
       << t.at("POINT_TRIAD").get<std::uint64_t>() << "\n";
  }
  const auto& h = doc.at("harmonicity");
  if (!h.is_null() && h.contains("plane")) {
    for (const char* kind : {"plane", "point"}) {
      const auto& s = h.at(kind);
      os << "harmonicity " << kind << ": " << s.at("verdict").get<std::string>() << " ("
         << s.at("tetrads").get<std::uint64_t>() << " tetrads)\n";
    }
    os << "harmonicity consistent: " << (h.at("consistent").get<bool>() ? "yes" : "no") << "\n";
  } else if (!h.is_null()) {
    os << "harmonicity: " << h.at("error").get<std::string>() << "\n";
  }
  os << "duality: " << doc.at("duality").at("status").get<std::string>() << "\n";
  return os.str();
}

}  // namespace tetrad
