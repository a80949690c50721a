#pragma once

#include "bcgim/homsuite.hpp"
#include "bcgim/rootsys.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bcgim {

/// Declaration order is the run order.
enum class Suite { Matrix, Brackets, Coords, Hom, Grading, Witness, Selftest };

std::vector<Suite> all_suites();
std::string suite_name(Suite suite);
/// Throws Error(InvalidConfig).
Suite parse_suite(const std::string& name);

enum class Format { Json, Text };

struct RunConfig {
  int rank = 3;
  std::vector<AdjoinedRoot> adjoined;
  /// Sorted into run order, no repeats.
  std::vector<Suite> suites = all_suites();
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  std::string output = "-";
  Format format = Format::Json;
  /// Test hook: the named generator image is doubled before any suite runs.
  std::optional<std::string> corrupt;

  AffinizationSpec spec() const { return AffinizationSpec(rank, adjoined); }
};

/// Field names: rank, adjoined[{root, copies}], suites, trials, seed, output,
/// format, corrupt. Errors name the offending field: MalformedDocument for
/// wrong types or unknown keys, Rank, InvalidRoot, UnsupportedRoot for short
/// or extra-long roots, InvalidConfig for the rest.
RunConfig parse_config(const nlohmann::ordered_json& doc);
/// Parses JSON text first; syntax errors are MalformedDocument.
RunConfig parse_config_text(const std::string& text);
nlohmann::ordered_json config_to_json(const RunConfig& config);

struct RunReport {
  /// {config, matrix, suites, summary, timings}
  nlohmann::ordered_json document;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  int exit_status() const { return failed == 0 ? 0 : 1; }
};

/// Construction errors propagate as Error.
RunReport run(const RunConfig& config);

/// JSON text (2-space indent) or a line-per-record summary. Timings are
/// omitted when include_timings is false.
std::string format_report(const RunReport& report, Format format, bool include_timings = true);

/// The A^[d] block of a report plus GIM validation, for the `matrix` command.
nlohmann::ordered_json matrix_document(const AffinizationSpec& spec);

}  // namespace bcgim
