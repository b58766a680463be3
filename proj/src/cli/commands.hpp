#pragma once

// Command-line front end. Each command writes to the given streams and
// returns the process exit code; `run` parses argv and dispatches.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gjms/high_precision.hpp"
#include "gjms/quadrature.hpp"

namespace gjms::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalid = 2;

/// Environment variable overriding the default working precision (digits).
inline constexpr const char* kPrecisionEnv = "GJMS_DIGITS";

enum class OutputFormat { Plain, Latex, Json, Csv };

std::optional<OutputFormat> parse_format(std::string_view name);

/// Default working precision, honouring GJMS_DIGITS when it parses.
PrecisionContext default_precision();

struct LogdetOptions {
  int d = 3;
  int k = 1;
  OutputFormat format = OutputFormat::Plain;
  int digits = 10;
  PrecisionContext precision;
};

int cmd_logdet(const LogdetOptions& opts, std::ostream& out, std::ostream& err);

struct QuadOptions {
  int d = 3;
  int k = 1;
  QuadratureConfig config;
  OutputFormat format = OutputFormat::Plain;
};

int cmd_quad(const QuadOptions& opts, std::ostream& out, std::ostream& err);

struct CrosscheckRow {
  int d = 0;
  int k = 0;
  double closed_form = 0.0;
  double quadrature = 0.0;
  double product_rule = 0.0;
  double factor_sum = 0.0;
  bool exact_product_match = false;
  double max_deviation = 0.0;
  bool pass = false;
};

struct CrosscheckOptions {
  int d_max = 7;
  double tolerance = 1e-9;
  QuadratureConfig config;
  OutputFormat format = OutputFormat::Plain;
  PrecisionContext precision;
};

/// All valid (d, k) with d <= d_max, ordered by (d, k). Cells run concurrently.
std::vector<CrosscheckRow> crosscheck_rows(const CrosscheckOptions& opts);

int cmd_crosscheck(const CrosscheckOptions& opts, std::ostream& out, std::ostream& err);

enum class SweepMode { FixedD, FixedK };

struct SweepOptions {
  SweepMode mode = SweepMode::FixedD;
  int fixed = 35;  // d for FixedD, k for FixedK
  int from = 1;    // k range for FixedD, d range for FixedK (even d skipped)
  int to = 17;
  int digits = 10;
  PrecisionContext precision;
};

struct SweepRow {
  int d = 0;
  int k = 0;
  BigFloat value{64};
};

std::vector<SweepRow> sweep_rows(const SweepOptions& opts);

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err);

enum class TableKind { DNorlund, F, Central };

struct TablesOptions {
  TableKind which = TableKind::F;
  int first = 9;   // m_max, f index max, or n_max
  int second = 0;  // k_max for DNorlund
  OutputFormat format = OutputFormat::Plain;
  int digits = 10;
  PrecisionContext precision;
};

int cmd_tables(const TablesOptions& opts, std::ostream& out, std::ostream& err);

struct RuleOptions {
  int k = 2;
  std::optional<int> d;
  OutputFormat format = OutputFormat::Plain;
};

int cmd_rule(const RuleOptions& opts, std::ostream& out, std::ostream& err);

/// Parses argv (subcommands logdet, quad, crosscheck, sweep, tables, rule).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gjms::cli
