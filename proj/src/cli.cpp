#include "bcgim/cli.hpp"

#include "bcgim/coordalg.hpp"
#include "bcgim/error.hpp"
#include "bcgim/liealg.hpp"
#include "bcgim/witness.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

namespace bcgim {

using json = nlohmann::ordered_json;

std::vector<Suite> all_suites() {
  return {Suite::Matrix, Suite::Brackets, Suite::Coords, Suite::Hom,
          Suite::Grading, Suite::Witness, Suite::Selftest};
}

std::string suite_name(Suite suite) {
  switch (suite) {
    case Suite::Matrix: return "matrix";
    case Suite::Brackets: return "brackets";
    case Suite::Coords: return "coords";
    case Suite::Hom: return "hom";
    case Suite::Grading: return "grading";
    case Suite::Witness: return "witness";
    case Suite::Selftest: return "selftest";
  }
  return {};
}

Suite parse_suite(const std::string& name) {
  for (Suite s : all_suites()) {
    if (suite_name(s) == name) return s;
  }
  throw Error(ErrorCode::InvalidConfig, "suites: unknown suite '" + name + "'");
}

namespace {

[[noreturn]] void malformed(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::MalformedDocument, field + ": " + what);
}

long long get_integer(const json& v, const std::string& field) {
  if (!v.is_number_integer()) malformed(field, "expected an integer, got " + v.dump());
  return v.get<long long>();
}

std::string kind_name(RootKind k) {
  switch (k) {
    case RootKind::Long: return "long";
    case RootKind::Short: return "short";
    case RootKind::ExtraLong: return "extra-long";
  }
  return {};
}

AdjoinedRoot parse_adjoined(const json& item, int rank, const std::string& field) {
  if (!item.is_object()) malformed(field, "expected an object");
  for (const auto& [key, value] : item.items()) {
    if (key != "root" && key != "copies") malformed(field, "unknown field '" + key + "'");
  }
  if (!item.contains("root") || !item["root"].is_array()) {
    malformed(field + ".root", "expected an array of integers");
  }
  std::vector<int> coeffs;
  for (const json& c : item["root"]) {
    coeffs.push_back(static_cast<int>(get_integer(c, field + ".root")));
  }
  if (static_cast<int>(coeffs.size()) != rank) {
    throw Error(ErrorCode::InvalidRoot, field + ".root: expected " + std::to_string(rank) +
                                            " coordinates, got " + std::to_string(coeffs.size()));
  }
  AdjoinedRoot out;
  try {
    out.root = Root::from_vector(coeffs);
  } catch (const Error& e) {
    throw Error(e.code(), field + ".root: " + e.what());
  }
  if (out.root.kind() != RootKind::Long) {
    throw Error(ErrorCode::UnsupportedRoot, field + ".root: " + out.root.str() + " is a " +
                                                kind_name(out.root.kind()) +
                                                " root; only long roots can be adjoined");
  }
  if (item.contains("copies")) {
    const long long copies = get_integer(item["copies"], field + ".copies");
    if (copies < 1) {
      throw Error(ErrorCode::InvalidConfig,
                  field + ".copies: must be positive, got " + std::to_string(copies));
    }
    out.copies = static_cast<int>(copies);
  }
  return out;
}

}  // namespace

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) malformed("config", "expected an object");
  static const std::set<std::string> known = {"rank",   "adjoined", "suites",  "trials",
                                              "seed",   "output",   "format",  "corrupt"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.count(key)) malformed("config", "unknown field '" + key + "'");
  }
  RunConfig cfg;
  if (!doc.contains("rank")) malformed("rank", "missing");
  const long long rank = get_integer(doc["rank"], "rank");
  if (rank < 3) {
    throw Error(ErrorCode::Rank, "rank: must be at least 3, got " + std::to_string(rank));
  }
  cfg.rank = static_cast<int>(rank);

  if (doc.contains("adjoined")) {
    if (!doc["adjoined"].is_array()) malformed("adjoined", "expected an array");
    std::size_t k = 0;
    for (const json& item : doc["adjoined"]) {
      cfg.adjoined.push_back(
          parse_adjoined(item, cfg.rank, "adjoined[" + std::to_string(k++) + "]"));
    }
  }
  try {
    (void)cfg.spec();
  } catch (const Error& e) {
    throw Error(e.code(), std::string("adjoined: ") + e.what());
  }

  if (doc.contains("suites")) {
    if (!doc["suites"].is_array()) malformed("suites", "expected an array of names");
    std::set<Suite> chosen;
    for (const json& s : doc["suites"]) {
      if (!s.is_string()) malformed("suites", "expected a string, got " + s.dump());
      chosen.insert(parse_suite(s.get<std::string>()));
    }
    cfg.suites.assign(chosen.begin(), chosen.end());
  }
  if (doc.contains("trials")) {
    const long long t = get_integer(doc["trials"], "trials");
    if (t < 1) {
      throw Error(ErrorCode::InvalidConfig, "trials: must be at least 1, got " + std::to_string(t));
    }
    cfg.trials = static_cast<std::size_t>(t);
  }
  if (doc.contains("seed")) {
    const json& s = doc["seed"];
    if (s.is_number_unsigned()) {
      cfg.seed = s.get<std::uint64_t>();
    } else if (s.is_number_integer()) {
      throw Error(ErrorCode::InvalidConfig, "seed: must be non-negative, got " + s.dump());
    } else {
      malformed("seed", "expected an integer, got " + s.dump());
    }
  }
  if (doc.contains("output")) {
    if (!doc["output"].is_string()) malformed("output", "expected a path string");
    cfg.output = doc["output"].get<std::string>();
  }
  if (doc.contains("format")) {
    if (!doc["format"].is_string()) malformed("format", "expected a string");
    const std::string f = doc["format"].get<std::string>();
    if (f == "json") {
      cfg.format = Format::Json;
    } else if (f == "text") {
      cfg.format = Format::Text;
    } else {
      throw Error(ErrorCode::InvalidConfig, "format: expected json or text, got '" + f + "'");
    }
  }
  if (doc.contains("corrupt")) {
    if (!doc["corrupt"].is_string()) malformed("corrupt", "expected a generator name");
    cfg.corrupt = doc["corrupt"].get<std::string>();
    parse_symbol(cfg.spec(), *cfg.corrupt);
  }
  return cfg;
}

RunConfig parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedDocument, std::string("config: ") + e.what());
  }
  return parse_config(doc);
}

json config_to_json(const RunConfig& config) {
  json out;
  out["rank"] = config.rank;
  out["adjoined"] = json::array();
  for (const AdjoinedRoot& a : config.adjoined) {
    out["adjoined"].push_back({{"root", a.root.to_vector()}, {"copies", a.copies}});
  }
  out["suites"] = json::array();
  for (Suite s : config.suites) out["suites"].push_back(suite_name(s));
  out["trials"] = config.trials;
  out["seed"] = config.seed;
  out["output"] = config.output;
  out["format"] = config.format == Format::Json ? "json" : "text";
  if (config.corrupt) out["corrupt"] = *config.corrupt;
  return out;
}

json matrix_document(const AffinizationSpec& spec) {
  const GimMatrix a = build_affinized_matrix(spec);
  const int r = spec.rank();
  const bool base_block = a.entries().topLeftCorner(r, r) == cartan_matrix_b(r);
  const OmegaTheta ot = classify_omega_theta(spec);
  json out;
  out["size"] = a.size();
  out["rows"] = a.rows();
  out["generators"] = json::array();
  for (int g = 0; g < spec.generator_count(); ++g) {
    out["generators"].push_back(symbol_name(spec, {Role::E, g}).substr(1));
  }
  out["omega"] = json::array();
  for (const Root& w : ot.omega) out["omega"].push_back(w.str());
  out["theta"] = json::array();
  for (const Root& t : ot.theta) out["theta"].push_back(t.str());
  out["is_gim"] = is_gim(a.entries());
  out["base_block"] = base_block;
  return out;
}

namespace {

/// Fills passed/failed/skipped from records[*].passed and sets status.
void tally(json& suite) {
  std::size_t passed = 0;
  std::size_t failed = 0;
  for (const json& rec : suite["records"]) (rec["passed"].get<bool>() ? passed : failed)++;
  json head;
  head["status"] = failed == 0 ? "passed" : "failed";
  head["passed"] = passed;
  head["failed"] = failed;
  head["skipped"] = 0;
  for (auto& [key, value] : suite.items()) head[key] = value;
  suite = std::move(head);
}

std::uint64_t suite_seed(std::uint64_t seed, Suite s) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(s)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

json run_matrix(const AffinizationSpec& spec) {
  const json m = matrix_document(spec);
  json out;
  out["records"] = json::array({
      {{"check", "is_gim"}, {"passed", m["is_gim"]}},
      {{"check", "base_block"}, {"passed", m["base_block"]}},
  });
  return out;
}

json run_brackets(const RunConfig& cfg, const CoordinateAlgebra& ctx) {
  const BracketLemmaReport rep =
      verify_bracket_lemmas(cfg.rank, ctx, cfg.trials, suite_seed(cfg.seed, Suite::Brackets));
  json out;
  out["trials"] = rep.trials;
  out["records"] = json::array();
  for (const LemmaRecord& rec : rep.lemmas) {
    json j;
    j["lemma"] = lemma_name(rec.id);
    j["passed"] = rec.passed();
    j["tuples"] = rec.tuples;
    j["tuples_passed"] = rec.tuples_passed;
    j["evaluations"] = rec.evaluations;
    if (!rec.passed()) {
      j["failed_tuples"] = rec.failed_tuples;
      j["failures"] = json::array();
      for (const LemmaFailure& f : rec.failures) {
        j["failures"].push_back({{"indices", f.indices}, {"a", f.a}, {"b", f.b},
                                 {"lhs", f.lhs}, {"rhs", f.rhs}});
      }
    }
    out["records"].push_back(std::move(j));
  }
  return out;
}

json run_coords(const RunConfig& cfg, const AffinizationSpec& spec, const ImageTable& table) {
  const CoordinateAlgebra& ctx = table.context();
  json out;
  out["rules"] = ctx.rewriting().size();
  out["records"] = json::array();
  for (const ConsequenceRecord& rec : verify_coordinate_consequences(spec, table).records) {
    json j = {{"check", rec.proposition}, {"subject", rec.subject}, {"passed", rec.passed}};
    if (!rec.passed) j["detail"] = rec.detail;
    out["records"].push_back(std::move(j));
  }
  const CoordinateSoundnessReport s =
      verify_coordinate_algebra(ctx, 1000, 12, suite_seed(cfg.seed, Suite::Coords));
  json j = {{"check", "soundness"},          {"passed", s.passed()},
            {"rules", s.rules},              {"words", s.words},
            {"max_steps", s.max_steps},      {"max_normal_length", s.max_normal_length},
            {"eta_pairs", s.eta_pairs},      {"mixing_relations", s.mixing_relations}};
  if (!s.passed()) {
    j["failures"] = json::array();
    for (const SoundnessFailure& f : s.failures) {
      j["failures"].push_back({{"check", f.check}, {"detail", f.detail}});
    }
  }
  out["records"].push_back(std::move(j));
  return out;
}

json run_hom(const AffinizationSpec& spec, const ImageTable& table) {
  const RelationReport rep = verify_gim_relations(spec, table, build_affinized_matrix(spec));
  json out;
  out["records"] = json::array();
  for (const RelationRecord& rec : rep.records) {
    json j = {{"relation", rec.relation},
              {"pair", {symbol_name(spec, {Role::E, rec.i - 1}).substr(1),
                        symbol_name(spec, {Role::E, rec.j - 1}).substr(1)}},
              {"passed", rec.passed}};
    if (!rec.passed) {
      j["lhs"] = rec.lhs;
      j["rhs"] = rec.rhs;
    }
    out["records"].push_back(std::move(j));
  }
  out["observations"] = json::array();
  for (const CopyObservation& o : rep.observations) {
    out["observations"].push_back({{"e", symbol_name(spec, {Role::E, o.i - 1})},
                                   {"f", symbol_name(spec, {Role::F, o.j - 1})},
                                   {"bracket", o.value}});
  }
  return out;
}

json run_grading(const RunConfig& cfg, const ImageTable& table) {
  const GradednessReport rep =
      verify_gradedness(table, 500, 4, suite_seed(cfg.seed, Suite::Grading));
  json out;
  out["images_checked"] = rep.images_checked;
  out["words_sampled"] = rep.words_sampled;
  out["radical_words"] = rep.radical_words;
  out["records"] = json::array();
  for (const char* check : {"image-degree", "radical", "word-degree"}) {
    json j = {{"check", check}, {"passed", true}};
    json failures = json::array();
    for (const GradednessFailure& f : rep.failures) {
      if (f.check == check) failures.push_back({{"subject", f.subject}, {"detail", f.detail}});
    }
    if (!failures.empty()) {
      j["passed"] = false;
      j["failures"] = std::move(failures);
    }
    out["records"].push_back(std::move(j));
  }
  return out;
}

json run_witness(const RunConfig& cfg, const ImageTable& table) {
  std::mt19937_64 rng(suite_seed(cfg.seed, Suite::Witness));
  json out;
  out["targets_per_shape"] = cfg.trials;
  out["records"] = json::array();
  for (TargetShape shape : {TargetShape::Vert, TargetShape::Hort, TargetShape::Ul,
                            TargetShape::Ur, TargetShape::Bl}) {
    for (std::size_t n = 0; n < cfg.trials; ++n) {
      const TargetSpec t = random_target(table.context(), shape, 4, rng);
      const WitnessReport rep = verify_witness(t, table);
      json j = {{"target", rep.target},
                {"passed", rep.passed},
                {"depth", rep.depth},
                {"size", rep.size}};
      if (!rep.passed) j["detail"] = rep.detail;
      out["records"].push_back(std::move(j));
    }
  }
  return out;
}

json run_selftest(const RunConfig& cfg, const AffinizationSpec& spec, const ImageTable& table) {
  json out;
  out["records"] = json::array();
  const LieAxiomReport lie =
      verify_lie_axioms(table.context(), cfg.trials, suite_seed(cfg.seed, Suite::Selftest));
  json j = {{"check", "lie-axioms"},
            {"passed", lie.passed()},
            {"triples", lie.triples},
            {"brackets", lie.brackets}};
  if (!lie.passed()) {
    j["failures"] = json::array();
    for (const LieAxiomFailure& f : lie.failures) {
      j["failures"].push_back({{"axiom", f.axiom}, {"detail", f.detail}});
    }
  }
  out["records"].push_back(std::move(j));

  // The relation checker must notice a doubled e_1.
  const GeneratorSymbol e1{Role::E, 0};
  const ImageTable bad = table.with_override(e1, Scalar(2) * table.image(e1));
  const RelationReport rep = verify_gim_relations(spec, bad, build_affinized_matrix(spec));
  out["records"].push_back(
      {{"check", "negative-control"}, {"passed", rep.failed() > 0}, {"caught", rep.failed()}});
  return out;
}

}  // namespace

RunReport run(const RunConfig& config) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const AffinizationSpec spec = config.spec();
  json doc;
  doc["config"] = config_to_json(config);
  doc["matrix"] = matrix_document(spec);

  const auto ctx = make_coordinate_algebra(spec);
  ImageTable table = build_image_table(spec, *ctx);
  if (config.corrupt) {
    const GeneratorSymbol sym = parse_symbol(spec, *config.corrupt);
    table = table.with_override(sym, Scalar(2) * table.image(sym));
  }
  json timings;
  timings["setup"] = std::chrono::duration<double>(Clock::now() - start).count();

  RunReport report;
  json suites;
  for (Suite s : all_suites()) {
    const std::string name = suite_name(s);
    if (std::find(config.suites.begin(), config.suites.end(), s) == config.suites.end()) {
      suites[name] = {{"status", "skipped"}, {"passed", 0}, {"failed", 0}, {"skipped", 1}};
      ++report.skipped;
      continue;
    }
    const auto t0 = Clock::now();
    json out;
    switch (s) {
      case Suite::Matrix: out = run_matrix(spec); break;
      case Suite::Brackets: out = run_brackets(config, *ctx); break;
      case Suite::Coords: out = run_coords(config, spec, table); break;
      case Suite::Hom: out = run_hom(spec, table); break;
      case Suite::Grading: out = run_grading(config, table); break;
      case Suite::Witness: out = run_witness(config, table); break;
      case Suite::Selftest: out = run_selftest(config, spec, table); break;
    }
    tally(out);
    report.passed += out["passed"].get<std::size_t>();
    report.failed += out["failed"].get<std::size_t>();
    suites[name] = std::move(out);
    timings[name] = std::chrono::duration<double>(Clock::now() - t0).count();
  }
  timings["total"] = std::chrono::duration<double>(Clock::now() - start).count();
  doc["suites"] = std::move(suites);
  doc["summary"] = {{"passed", report.passed}, {"failed", report.failed},
                    {"skipped", report.skipped}};
  doc["timings"] = std::move(timings);
  report.document = std::move(doc);
  return report;
}

std::string format_report(const RunReport& report, Format format, bool include_timings) {
  json doc = report.document;
  if (!include_timings) doc.erase("timings");
  if (format == Format::Json) return doc.dump(2) + "\n";

  std::ostringstream os;
  const json& cfg = doc["config"];
  os << "rank " << cfg["rank"].get<int>() << ", adjoined";
  if (cfg["adjoined"].empty()) os << " none";
  for (const json& a : cfg["adjoined"]) {
    os << " " << a["root"].dump() << "x" << a["copies"].get<int>();
  }
  os << "\n";
  for (const auto& [name, suite] : doc["suites"].items()) {
    os << name << ": " << suite["status"].get<std::string>();
    if (suite["status"] != "skipped") {
      os << " (" << suite["passed"].get<std::size_t>() << " passed, "
         << suite["failed"].get<std::size_t>() << " failed)";
    }
    if (include_timings && doc.contains("timings") && doc["timings"].contains(name)) {
      os << " " << doc["timings"][name].get<double>() << "s";
    }
    os << "\n";
    if (!suite.contains("records")) continue;
    for (const json& rec : suite["records"]) {
      if (!rec["passed"].get<bool>()) os << "  FAIL " << rec.dump() << "\n";
    }
  }
  const json& sum = doc["summary"];
  os << "summary: " << sum["passed"].get<std::size_t>() << " passed, "
     << sum["failed"].get<std::size_t>() << " failed, " << sum["skipped"].get<std::size_t>()
     << " skipped\n";
  return os.str();
}

}  // namespace bcgim
