#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gjms/central_factorials.hpp"
#include "gjms/closed_form.hpp"
#include "gjms/errors.hpp"
#include "gjms/norlund.hpp"
#include "gjms/product_rules.hpp"

namespace gjms::cli {

namespace {

std::string format_double(double v, int significant = 15) {
  std::ostringstream os;
  os << std::setprecision(significant) << v;
  return os.str();
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const DivergentDeterminant& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

std::string scheme_name(QuadratureScheme s) {
  return s == QuadratureScheme::TanhSinh ? "tanh-sinh" : "gauss-kronrod";
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "plain") return OutputFormat::Plain;
  if (name == "latex") return OutputFormat::Latex;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

PrecisionContext default_precision() {
  PrecisionContext ctx;
  if (const char* env = std::getenv(kPrecisionEnv)) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 15 && v <= 100000) ctx.decimal_digits = static_cast<int>(v);
  }
  return ctx;
}

int cmd_logdet(const LogdetOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ZetaExpr expr = logdet_gjms(opts.d, opts.k);
    const std::string value = evaluate(expr, opts.precision).to_string(opts.digits);
    switch (opts.format) {
      case OutputFormat::Json: {
        nlohmann::json doc = {{"d", opts.d},
                              {"k", opts.k},
                              {"expr", nlohmann::json::parse(expr.to_json())},
                              {"value", value}};
        out << doc.dump() << "\n";
        break;
      }
      case OutputFormat::Latex:
        out << "\\log\\det P_{" << 2 * opts.k << "}(" << opts.d << ")=" << expr.to_latex() << "\\approx " << value
            << "\n";
        break;
      case OutputFormat::Csv:
        out << "d,k,logdet\n" << opts.d << "," << opts.k << "," << value << "\n";
        break;
      case OutputFormat::Plain:
        out << "log det P_" << 2 * opts.k << "(" << opts.d << ") = " << expr.to_plain() << "\n";
        out << "  ≈ " << value << "\n";
        break;
    }
    return kExitOk;
  });
}

int cmd_quad(const QuadOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const QuadratureResult r = logdet_quadrature(opts.d, opts.k, opts.config);
    if (opts.format == OutputFormat::Json) {
      nlohmann::json doc = {{"d", opts.d},
                            {"k", opts.k},
                            {"scheme", scheme_name(opts.config.scheme)},
                            {"value", r.value},
                            {"error_estimate", r.error_estimate},
                            {"evaluations", r.evaluations},
                            {"converged", r.converged}};
      out << doc.dump() << "\n";
    } else {
      out << "log det P_" << 2 * opts.k << "(" << opts.d << ") = " << format_double(r.value) << "\n";
      out << "error estimate: " << format_double(r.error_estimate, 3) << "\n";
      out << "evaluations: " << r.evaluations << "\n";
      out << "scheme: " << scheme_name(opts.config.scheme) << ", cut at x = " << format_double(r.truncation_x, 6)
          << (r.converged ? "" : " (not converged)") << "\n";
    }
    return r.converged ? kExitOk : kExitCheckFailed;
  });
}

std::vector<CrosscheckRow> crosscheck_rows(const CrosscheckOptions& opts) {
  if (opts.d_max < 3 || opts.d_max % 2 == 0) throw InvalidInput("d_max must be odd and >= 3");
  opts.config.validate();
  opts.precision.validate();

  std::vector<std::future<CrosscheckRow>> cells;
  for (int d = 3; d <= opts.d_max; d += 2) {
    for (int k = 1; 2 * k < d; ++k) {
      cells.push_back(std::async(std::launch::async, [d, k, &opts] {
        CrosscheckRow row;
        row.d = d;
        row.k = k;
        const ZetaExpr closed = logdet_gjms(d, k);
        const ZetaExpr product = logdet_via_product(d, k);
        row.exact_product_match = closed == product;
        row.closed_form = evaluate(closed, opts.precision).to_double();
        row.product_rule = evaluate(product, opts.precision).to_double();
        row.quadrature = logdet_quadrature(d, k, opts.config).value;
        for (int j = 0; j < k; ++j) row.factor_sum += logdet_factor_quadrature(d, j, opts.config).value;
        const double values[] = {row.closed_form, row.quadrature, row.product_rule, row.factor_sum};
        const auto [lo, hi] = std::minmax_element(std::begin(values), std::end(values));
        row.max_deviation = *hi - *lo;
        row.pass = row.exact_product_match && row.max_deviation <= opts.tolerance;
        return row;
      }));
    }
  }
  std::vector<CrosscheckRow> rows;
  rows.reserve(cells.size());
  for (auto& c : cells) rows.push_back(c.get());
  return rows;
}

int cmd_crosscheck(const CrosscheckOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto rows = crosscheck_rows(opts);
    bool all_pass = true;
    if (opts.format == OutputFormat::Json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : rows) {
        arr.push_back({{"d", r.d},
                       {"k", r.k},
                       {"closed_form", r.closed_form},
                       {"quadrature", r.quadrature},
                       {"product_rule", r.product_rule},
                       {"factor_sum", r.factor_sum},
                       {"exact_product_match", r.exact_product_match},
                       {"max_deviation", r.max_deviation},
                       {"pass", r.pass}});
        all_pass = all_pass && r.pass;
      }
      out << arr.dump() << "\n";
    } else if (opts.format == OutputFormat::Csv) {
      out << "d,k,closed_form,quadrature,product_rule,factor_sum,max_deviation,pass\n";
      for (const auto& r : rows) {
        out << r.d << "," << r.k << "," << format_double(r.closed_form, 17) << ","
            << format_double(r.quadrature, 17) << "," << format_double(r.product_rule, 17) << ","
            << format_double(r.factor_sum, 17) << "," << format_double(r.max_deviation, 3) << ","
            << (r.pass ? "pass" : "FAIL") << "\n";
        all_pass = all_pass && r.pass;
      }
    } else {
      out << std::left << std::setw(4) << "d" << std::setw(4) << "k" << std::setw(22) << "closed form"
          << std::setw(22) << "quadrature" << std::setw(22) << "product rule" << std::setw(22) << "factor sum"
          << std::setw(11) << "max dev" << "\n";
      for (const auto& r : rows) {
        out << std::left << std::setw(4) << r.d << std::setw(4) << r.k << std::setw(22)
            << format_double(r.closed_form) << std::setw(22) << format_double(r.quadrature) << std::setw(22)
            << format_double(r.product_rule) << std::setw(22) << format_double(r.factor_sum) << std::setw(11)
            << format_double(r.max_deviation, 3) << (r.pass ? "ok" : "FAIL") << "\n";
        all_pass = all_pass && r.pass;
      }
      out << rows.size() << " cases, tolerance " << format_double(opts.tolerance, 3) << ": "
          << (all_pass ? "all pass" : "FAILURES") << "\n";
    }
    return all_pass ? kExitOk : kExitCheckFailed;
  });
}

std::vector<SweepRow> sweep_rows(const SweepOptions& opts) {
  opts.precision.validate();
  if (opts.from > opts.to) throw InvalidInput("sweep range is empty");
  std::vector<std::pair<int, int>> cells;
  for (int v = opts.from; v <= opts.to; ++v) {
    if (opts.mode == SweepMode::FixedD) {
      cells.emplace_back(opts.fixed, v);
    } else if (v % 2 != 0) {
      cells.emplace_back(v, opts.fixed);
    }
  }
  if (cells.empty()) throw InvalidInput("sweep range contains no odd dimension");
  for (const auto& [d, k] : cells) require_odd_sphere_operator(d, k);

  std::vector<std::future<SweepRow>> futures;
  for (const auto& [d, k] : cells) {
    futures.push_back(std::async(std::launch::async, [d = d, k = k, &opts] {
      return SweepRow{d, k, evaluate(logdet_gjms(d, k), opts.precision)};
    }));
  }
  std::vector<SweepRow> rows;
  for (auto& f : futures) rows.push_back(f.get());
  return rows;
}

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto rows = sweep_rows(opts);
    out << "d,k,logdet\n";
    for (const auto& r : rows) out << r.d << "," << r.k << "," << r.value.to_string(opts.digits) << "\n";
    return kExitOk;
  });
}

namespace {

void table_d_norlund(const TablesOptions& opts, std::ostream& out) {
  const int m_max = opts.first;
  const int k_max = opts.second;
  if (m_max < 1 || k_max < 0) throw InvalidInput("tables --d-norlund needs m_max >= 1 and k_max >= 0");
  switch (opts.format) {
    case OutputFormat::Csv:
      out << "m";
      for (int k = 0; k <= k_max; ++k) out << ",k=" << k;
      out << "\n";
      for (int m = 1; m <= m_max; ++m) {
        out << m;
        for (int k = 0; k <= k_max; ++k) out << "," << d_norlund(m, k).to_string();
        out << "\n";
      }
      break;
    case OutputFormat::Latex:
      out << "\\begin{tabular}{l||" << std::string(static_cast<std::size_t>(k_max) + 1, 'c') << "}\n";
      out << "  $m\\backslash k$";
      for (int k = 0; k <= k_max; ++k) out << " & $k=" << k << "$";
      out << "\\\\\\hline\\hline\n";
      for (int m = 1; m <= m_max; ++m) {
        out << "  $m=" << m << "$";
        for (int k = 0; k <= k_max; ++k) {
          const BigRational v = d_norlund(m, k);
          out << " & $";
          if (v.sign() < 0) out << "-";
          if (v.is_integer()) {
            out << v.abs().to_string();
          } else {
            out << "\\frac{" << v.abs().numerator().get_str() << "}{" << v.denominator().get_str() << "}";
          }
          out << "$";
        }
        out << "\\\\\n";
      }
      out << "\\end{tabular}\n";
      break;
    case OutputFormat::Json: {
      nlohmann::json rows = nlohmann::json::array();
      for (int m = 1; m <= m_max; ++m) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k <= k_max; ++k) row.push_back(d_norlund(m, k).to_string());
        rows.push_back({{"m", m}, {"values", row}});
      }
      out << rows.dump() << "\n";
      break;
    }
    case OutputFormat::Plain:
      out << std::left << std::setw(6) << "m\\k";
      for (int k = 0; k <= k_max; ++k) out << std::setw(16) << k;
      out << "\n";
      for (int m = 1; m <= m_max; ++m) {
        out << std::setw(6) << m;
        for (int k = 0; k <= k_max; ++k) out << std::setw(16) << d_norlund(m, k).to_string();
        out << "\n";
      }
      break;
  }
}

void table_f(const TablesOptions& opts, std::ostream& out) {
  if (opts.first < 0) throw InvalidInput("tables --f needs a non-negative maximum index");
  nlohmann::json rows = nlohmann::json::array();
  if (opts.format == OutputFormat::Csv) out << "m,exact,value\n";
  for (int m = 0; m <= opts.first; ++m) {
    const ZetaExpr expr = m % 2 == 0 ? ZetaExpr::rational(f_even(m / 2)) : f_odd(m / 2);
    const std::string value = evaluate(expr, opts.precision).to_string(opts.digits);
    switch (opts.format) {
      case OutputFormat::Plain: out << "f_" << m << " = " << expr.to_plain() << "  ≈ " << value << "\n"; break;
      case OutputFormat::Latex:
        out << "f_{" << m << "}=" << expr.to_latex() << "\\approx " << value << "\\\\\n";
        break;
      case OutputFormat::Csv: out << m << ",\"" << expr.to_plain() << "\"," << value << "\n"; break;
      case OutputFormat::Json:
        rows.push_back({{"m", m}, {"expr", nlohmann::json::parse(expr.to_json())}, {"value", value}});
        break;
    }
  }
  if (opts.format == OutputFormat::Json) out << rows.dump() << "\n";
}

void table_central(const TablesOptions& opts, std::ostream& out) {
  if (opts.first < 1) throw InvalidInput("tables --central needs n_max >= 1");
  nlohmann::json rows = nlohmann::json::array();
  if (opts.format == OutputFormat::Csv) out << "n,k,t\n";
  for (int n = 1; n <= opts.first; n += 2) {
    if (opts.format == OutputFormat::Plain) out << "n=" << n << ":";
    for (int k = 1; k <= n; k += 2) {
      const BigRational t = central_t(n, k);
      switch (opts.format) {
        case OutputFormat::Plain: out << "  t(" << n << "," << k << ")=" << t.to_string(); break;
        case OutputFormat::Latex:
          out << "t(" << n << "," << k << ")=" << t.to_string() << (k + 2 <= n ? ",\\ " : "");
          break;
        case OutputFormat::Csv: out << n << "," << k << "," << t.to_string() << "\n"; break;
        case OutputFormat::Json: rows.push_back({{"n", n}, {"k", k}, {"t", t.to_string()}}); break;
      }
    }
    if (opts.format == OutputFormat::Plain) out << "\n";
    if (opts.format == OutputFormat::Latex) out << "\\\\\n";
  }
  if (opts.format == OutputFormat::Json) out << rows.dump() << "\n";
}

}  // namespace

int cmd_tables(const TablesOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    switch (opts.which) {
      case TableKind::DNorlund: table_d_norlund(opts, out); break;
      case TableKind::F: table_f(opts, out); break;
      case TableKind::Central: table_central(opts, out); break;
    }
    return kExitOk;
  });
}

int cmd_rule(const RuleOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.k < 1) throw InvalidInput("k must be at least 1");
    const ProductRule rule = opts.d ? product_rule(*opts.d, opts.k) : product_rule(opts.k);
    if (opts.format == OutputFormat::Latex) {
      out << rule.to_latex() << "\n";
    } else if (opts.format == OutputFormat::Json) {
      nlohmann::json factors = nlohmann::json::array();
      for (const auto& f : rule.factors) {
        nlohmann::json item = {{"offset", f.offset}, {"exponent", f.exponent.get_str()}};
        if (f.dimension) item["dimension"] = *f.dimension;
        factors.push_back(item);
      }
      nlohmann::json doc = {{"k", rule.k}, {"factors", factors}};
      if (rule.d) doc["d"] = *rule.d;
      out << doc.dump() << "\n";
    } else {
      out << rule.to_plain() << "\n";
    }
    return kExitOk;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Log-determinants of GJMS operators on odd-dimensional spheres"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Write output to PATH instead of standard output");

  const std::map<std::string, OutputFormat> formats = {{"plain", OutputFormat::Plain},
                                                       {"latex", OutputFormat::Latex},
                                                       {"json", OutputFormat::Json},
                                                       {"csv", OutputFormat::Csv}};
  const std::map<std::string, QuadratureScheme> schemes = {{"gauss-kronrod", QuadratureScheme::GaussKronrod},
                                                           {"gk", QuadratureScheme::GaussKronrod},
                                                           {"tanh-sinh", QuadratureScheme::TanhSinh}};

  const PrecisionContext precision = default_precision();
  int precision_digits = precision.decimal_digits;
  app.add_option("--precision", precision_digits, "Working precision in decimal digits (default from GJMS_DIGITS, else 50)");

  LogdetOptions logdet;
  auto* logdet_cmd = app.add_subcommand("logdet", "Exact closed form and numeric value of log det P_2k(d)");
  logdet_cmd->add_option("--d", logdet.d, "Odd sphere dimension")->required();
  logdet_cmd->add_option("--k", logdet.k, "Operator order parameter (P_2k)")->required();
  logdet_cmd->add_option("--format", logdet.format)->transform(CLI::CheckedTransformer(formats));
  logdet_cmd->add_option("--digits", logdet.digits, "Significant digits shown")->check(CLI::Range(1, 1000));

  QuadOptions quad;
  double quad_x = 0.0;
  auto* quad_cmd = app.add_subcommand("quad", "Direct quadrature of the determinant integral");
  quad_cmd->add_option("--d", quad.d)->required();
  quad_cmd->add_option("--k", quad.k)->required();
  quad_cmd->add_option("--tol", quad.config.abs_tol, "Absolute tolerance");
  quad_cmd->add_option("--scheme", quad.config.scheme)->transform(CLI::CheckedTransformer(schemes));
  quad_cmd->add_option("--max-evals", quad.config.max_evals);
  auto* quad_x_opt = quad_cmd->add_option("--truncate", quad_x, "Upper cut of the integration range");
  quad_cmd->add_option("--format", quad.format)->transform(CLI::CheckedTransformer(formats));

  CrosscheckOptions cross;
  auto* cross_cmd = app.add_subcommand("crosscheck", "Compare closed form, quadrature, product rule, factor sum");
  cross_cmd->add_option("--d-max", cross.d_max)->required();
  cross_cmd->add_option("--tol", cross.tolerance, "Maximum allowed deviation");
  cross_cmd->add_option("--quad-tol", cross.config.abs_tol);
  cross_cmd->add_option("--scheme", cross.config.scheme)->transform(CLI::CheckedTransformer(schemes));
  cross_cmd->add_option("--format", cross.format)->transform(CLI::CheckedTransformer(formats));

  SweepOptions sweep;
  int sweep_fixed_d = 0;
  int sweep_fixed_k = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "CSV of log det over k at fixed d, or over d at fixed k");
  auto* fixed_d_opt = sweep_cmd->add_option("--fixed-d", sweep_fixed_d, "Sweep k at this dimension");
  auto* fixed_k_opt = sweep_cmd->add_option("--fixed-k", sweep_fixed_k, "Sweep odd d at this k");
  fixed_d_opt->excludes(fixed_k_opt);
  sweep_cmd->add_option("--from", sweep.from, "First k (fixed d) or d (fixed k)")->required();
  sweep_cmd->add_option("--to", sweep.to, "Last k (fixed d) or d (fixed k)")->required();
  sweep_cmd->add_option("--digits", sweep.digits)->check(CLI::Range(1, 1000));

  TablesOptions tables;
  std::vector<int> dn_args;
  int f_max = -1;
  int central_max = -1;
  auto* tables_cmd = app.add_subcommand("tables", "Nörlund numbers, f_m values, or central factorial coefficients");
  auto* dn_opt = tables_cmd->add_option("--d-norlund", dn_args, "m_max k_max")->expected(2);
  auto* f_opt = tables_cmd->add_option("--f", f_max, "Largest index m of f_m");
  auto* central_opt = tables_cmd->add_option("--central", central_max, "Largest odd n of t(n,k)");
  dn_opt->excludes(f_opt)->excludes(central_opt);
  f_opt->excludes(central_opt);
  tables_cmd->add_option("--format", tables.format)->transform(CLI::CheckedTransformer(formats));
  tables_cmd->add_option("--digits", tables.digits)->check(CLI::Range(1, 1000));

  RuleOptions rule;
  int rule_d = 0;
  auto* rule_cmd = app.add_subcommand("rule", "Symbolic product rule P_2k ~ products of P_2 powers");
  rule_cmd->add_option("--k", rule.k)->required();
  auto* rule_d_opt = rule_cmd->add_option("--d", rule_d, "Concrete odd dimension");
  rule_cmd->add_option("--format", rule.format)->transform(CLI::CheckedTransformer(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream usage_out;
    std::ostringstream usage_err;
    const int code = app.exit(e, usage_out, usage_err);
    out << usage_out.str();
    err << usage_err.str();
    return code == 0 ? kExitOk : kExitInvalid;
  }

  const PrecisionContext ctx{precision_digits};
  if (ctx.decimal_digits < 15) {
    err << "error: precision must be at least 15 decimal digits\n";
    return kExitInvalid;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "error: cannot open " << out_path << "\n";
      return kExitInvalid;
    }
  }
  std::ostream& sink = out_path.empty() ? out : file;

  if (*logdet_cmd) {
    logdet.precision = ctx;
    return cmd_logdet(logdet, sink, err);
  }
  if (*quad_cmd) {
    if (quad_x_opt->count() > 0) quad.config.truncation_x = quad_x;
    return guarded(err, [&] {
      quad.config.validate();
      return cmd_quad(quad, sink, err);
    });
  }
  if (*cross_cmd) {
    cross.precision = ctx;
    return cmd_crosscheck(cross, sink, err);
  }
  if (*sweep_cmd) {
    if (fixed_d_opt->count() == 0 && fixed_k_opt->count() == 0) {
      err << "error: sweep needs --fixed-d or --fixed-k\n";
      return kExitInvalid;
    }
    sweep.mode = fixed_d_opt->count() > 0 ? SweepMode::FixedD : SweepMode::FixedK;
    sweep.fixed = fixed_d_opt->count() > 0 ? sweep_fixed_d : sweep_fixed_k;
    sweep.precision = ctx;
    return cmd_sweep(sweep, sink, err);
  }
  if (*tables_cmd) {
    tables.precision = ctx;
    if (dn_opt->count() > 0) {
      tables.which = TableKind::DNorlund;
      tables.first = dn_args.at(0);
      tables.second = dn_args.at(1);
    } else if (f_opt->count() > 0) {
      tables.which = TableKind::F;
      tables.first = f_max;
    } else if (central_opt->count() > 0) {
      tables.which = TableKind::Central;
      tables.first = central_max;
    } else {
      err << "error: tables needs --d-norlund, --f or --central\n";
      return kExitInvalid;
    }
    return cmd_tables(tables, sink, err);
  }
  if (*rule_cmd) {
    if (rule_d_opt->count() > 0) rule.d = rule_d;
    return cmd_rule(rule, sink, err);
  }
  return kExitInvalid;
}

}  // namespace gjms::cli
