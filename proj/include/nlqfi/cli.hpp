#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nlqfi/qfi_engine.hpp"
#include "nlqfi/state_library.hpp"

namespace nlqfi::cli {

/// One entry of a --states list.  Tokens are a name plus optional
/// ":key=value" overrides, e.g. "scs:z=0.5:phi=pi/2", "sn:m=1", "ecs".
/// The pseudo-state "ns" is the number-state reference curve F(N) at real N.
struct StateEntry {
  std::string label;
  Family family = Family::Coherent;
  SolveAux aux;
  bool number_state_curve = false;
};

/// Parses "pi", "pi/2", "3*pi/4", "-pi/2" or a plain number.
double parse_angle(std::string_view text);

StateEntry parse_state_token(std::string_view token, const SolveAux& defaults);
std::vector<StateEntry> parse_state_list(std::string_view list, const SolveAux& defaults);

enum class OutputFormat { Csv, Json };
OutputFormat parse_format(std::string_view name);

using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Header row, comma separated, LF endings, doubles with 17 significant digits.
std::string to_csv(const Table& table);
/// Array of row objects keyed by column name; empty cells become null.
std::string to_json(const Table& table);
std::string render(const Table& table, OutputFormat format);

std::string format_double(double v);

// --- sweep ------------------------------------------------------------------

struct SweepConfig {
  std::vector<StateEntry> states;
  double n_min = 1.0;
  double n_max = 10.0;
  int n_steps = 10;
  /// When non-empty, replaces the n_min/n_max/n_steps grid.
  std::vector<double> n_values;
  TruncationPolicy policy;
  OutputFormat format = OutputFormat::Csv;
  std::string output_path;

  /// Throws DomainError on an empty state list, a bad grid, or odd cat
  /// states below one photon.
  void validate() const;
  std::vector<double> grid() const;
};

struct SweepRow {
  double n = 0.0;
  std::string state;
  std::string family;
  std::optional<StateSpec> spec;
  QfiResult result;
  std::string error;
};

/// Rows ordered by (N, declaration order of states).
std::vector<SweepRow> run_sweep(const SweepConfig& config);
Table sweep_table(const std::vector<SweepRow>& rows);

// --- dist -------------------------------------------------------------------

struct DistRequest {
  StateEntry state;
  double n = 1.0;
  /// Used instead of (state, n) when set, e.g. for GeneralGaussian.
  std::optional<StateSpec> explicit_spec;
  std::int64_t cutoff = 40;
};

/// Rows (n, p_n) for n = 0..cutoff followed by a "captured_mass" footer row.
Table run_dist(const DistRequest& request);

// --- verify -----------------------------------------------------------------

enum class VerifyLevel { Fast, Full };
VerifyLevel parse_level(std::string_view name);

struct CheckResult {
  std::string name;
  bool passed = false;
  double max_error = 0.0;
  double tolerance = 0.0;
  std::int64_t cases = 0;
};

/// Closed forms against the Fock-space oracle.  Deterministic for a fixed
/// (seed, level); the seed only drives the random mixtures.
std::vector<CheckResult> run_verify(std::uint64_t seed, VerifyLevel level);
Table verify_table(const std::vector<CheckResult>& checks);

}  // namespace nlqfi::cli
