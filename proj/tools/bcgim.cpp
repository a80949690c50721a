// Command-line front end: matrix, verify, witness, selftest.

#include "bcgim/cli.hpp"
#include "bcgim/coordalg.hpp"
#include "bcgim/error.hpp"
#include "bcgim/witness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace bcgim;
using json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& output) {
  if (output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + output + "'");
  out << text;
}

std::vector<int> parse_indices(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::MalformedDocument, "--indices: not an integer list: '" + text + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GIM affinization checker for so_{2r+1} over a coordinate algebra"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string format = "json";
  std::string output;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", output, "output path, - for stdout");
  auto* seed_opt = app.add_option("--seed", seed, "RNG seed");
  auto* trials_opt = app.add_option("--trials", trials, "trials per randomized check")
                         ->check(CLI::PositiveNumber);

  auto* matrix_cmd = app.add_subcommand("matrix", "print A^[d] and its GIM validation");
  app.add_subcommand("verify", "run the configured suites");

  auto* witness_cmd = app.add_subcommand("witness", "emit a verified bracket expression");
  std::string shape;
  std::string indices;
  std::string monomial = "1";
  witness_cmd->add_option("--shape", shape, "VERT, HORT, UL, UR or BL")->required();
  witness_cmd->add_option("--indices", indices, "i or i,j")->required();
  witness_cmd->add_option("--monomial", monomial, "word such as y[1,0,-1;1]·x[1,1,0;1]^-1");

  auto* selftest_cmd = app.add_subcommand("selftest", "Lie axioms and a negative control");

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg = config_path.empty() ? parse_config_text(R"({"rank":3})")
                                        : parse_config_text(read_file(config_path));
    if (app.count("--format")) cfg.format = format == "text" ? Format::Text : Format::Json;
    if (!output.empty()) cfg.output = output;
    if (seed_opt->count()) cfg.seed = seed;
    if (trials_opt->count()) cfg.trials = trials;

    if (matrix_cmd->parsed()) {
      const json m = matrix_document(cfg.spec());
      if (cfg.format == Format::Json) {
        emit(m.dump(2) + "\n", cfg.output);
      } else {
        std::ostringstream os;
        for (const json& row : m["rows"]) {
          for (const json& v : row) os << (v.get<int>() >= 0 ? "  " : " ") << v.get<int>();
          os << "\n";
        }
        os << "is_gim " << m["is_gim"] << ", base block " << m["base_block"] << "\n";
        emit(os.str(), cfg.output);
      }
      return m["is_gim"].get<bool>() && m["base_block"].get<bool>() ? 0 : 1;
    }

    if (witness_cmd->parsed()) {
      const AffinizationSpec spec = cfg.spec();
      const auto ctx = make_coordinate_algebra(spec);
      const ImageTable table = build_image_table(spec, *ctx);
      TargetSpec t;
      t.shape = parse_shape(shape);
      const std::vector<int> ix = parse_indices(indices);
      const bool pair = t.shape != TargetShape::Vert && t.shape != TargetShape::Hort;
      if (ix.size() != (pair ? 2U : 1U)) {
        throw Error(ErrorCode::MalformedDocument,
                    "--indices: " + shape + " takes " + (pair ? "two indices" : "one index"));
      }
      t.i = ix[0];
      t.j = pair ? ix[1] : ix[0];
      t.monomial = ctx->normal_form(ctx->parse_word(monomial));
      const WitnessReport rep = verify_witness(t, table);
      json out = {{"target", rep.target}, {"passed", rep.passed},  {"depth", rep.depth},
                  {"size", rep.size},     {"expression", rep.expression}};
      if (!rep.passed) out["detail"] = rep.detail;
      if (cfg.format == Format::Json) {
        emit(out.dump(2) + "\n", cfg.output);
      } else {
        emit(rep.target + " = " + rep.expression + "\n" +
                 (rep.passed ? "verified\n" : "FAILED " + rep.detail + "\n"),
             cfg.output);
      }
      return rep.passed ? 0 : 1;
    }

    if (selftest_cmd->parsed()) cfg.suites = {Suite::Selftest};
    const RunReport report = run(cfg);
    emit(format_report(report, cfg.format), cfg.output);
    return report.exit_status();
  } catch (const Error& e) {
    std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return static_cast<int>(e.code());
  }
}
