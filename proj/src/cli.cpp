#include "zetagb/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetagb/audit.hpp"
#include "zetagb/bernoulli.hpp"
#include "zetagb/records_io.hpp"
#include "zetagb/zero_scan.hpp"
#include "zetagb/zeta.hpp"

namespace zetagb::cli {

namespace {

using Json = nlohmann::ordered_json;
using io::format_real;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNone: return kOk;
    case ErrorKind::kParameter: return kParameterError;
    case ErrorKind::kPrecision: return kPrecisionError;
    case ErrorKind::kInconclusive: return kInconclusive;
    case ErrorKind::kRefinement: return kRefinementFailure;
    case ErrorKind::kOther: return kFailure;
  }
  return kFailure;
}

struct ResolvedParams {
  EvalParams params;
  bool override_used = false;
};

// --N/--nu bypass auto_params only as a pair.
ResolvedParams resolve_params(const CliConfig& cfg, const std::function<EvalParams()>& automatic) {
  if (cfg.cutoff_N.has_value() != cfg.tail_order_nu.has_value())
    throw ParameterError("--N and --nu must be given together");
  if (cfg.cutoff_N) {
    EvalParams p{*cfg.cutoff_N, *cfg.tail_order_nu};
    validate(p);
    return {p, true};
  }
  return {automatic(), false};
}

Json params_json(const ResolvedParams& r) {
  Json j;
  j["N"] = r.params.cutoff_N;
  j["nu"] = r.params.tail_order_nu;
  j["target_eps"] = std::isfinite(r.params.target_eps) ? Json(r.params.target_eps) : Json(nullptr);
  j["source"] = r.override_used ? "override" : "auto";
  return j;
}

std::string params_text(const ResolvedParams& r) {
  return "N = " + std::to_string(r.params.cutoff_N) + ", nu = " + std::to_string(r.params.tail_order_nu) +
         (r.override_used ? " (override)" : " (auto)");
}

Real eps_of(const CliConfig& cfg) { return cfg.eps ? *cfg.eps : default_eps(); }

int cmd_eval(const CliConfig& cfg, std::ostream& out) {
  const ComplexPoint s{cfg.re, cfg.im};
  const Real eps = eps_of(cfg);
  const ResolvedParams rp = resolve_params(cfg, [&] { return auto_params(s, eps); });
  const EvalResult r = zeta_gb(s, rp.params);

  if (cfg.format == "json") {
    Json j;
    j["s"] = Json{{"re", s.re}, {"im", s.im}};
    j["value"] = Json{{"re", r.value.real()}, {"im", r.value.imag()}};
    j["remainder_bound"] = r.remainder_bound;
    j["params"] = params_json(rp);
    out << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "re,im,value_re,value_im,remainder_bound,N,nu\n"
        << format_real(s.re) << ',' << format_real(s.im) << ',' << format_real(r.value.real()) << ','
        << format_real(r.value.imag()) << ',' << format_real(r.remainder_bound) << ','
        << rp.params.cutoff_N << ',' << rp.params.tail_order_nu << '\n';
  } else {
    out << "s               = " << format_real(s.re) << " + " << format_real(s.im) << "i\n"
        << "Z_GB(s)         = " << format_real(r.value.real()) << " + " << format_real(r.value.imag()) << "i\n"
        << "remainder_bound = " << format_real(r.remainder_bound) << '\n'
        << "params          : " << params_text(rp) << '\n';
  }
  return kOk;
}

int cmd_params(const CliConfig& cfg, std::ostream& out) {
  const ComplexPoint s{cfg.re, cfg.im};
  const Real eps = eps_of(cfg);
  const ResolvedParams rp = resolve_params(cfg, [&] { return auto_params(s, eps); });
  const Real bound = remainder_bound(s, rp.params.cutoff_N, rp.params.tail_order_nu);

  if (cfg.format == "json") {
    Json j;
    j["s"] = Json{{"re", s.re}, {"im", s.im}};
    j["eps"] = eps;
    j["params"] = params_json(rp);
    j["remainder_bound"] = bound;
    out << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "re,im,eps,N,nu,remainder_bound\n"
        << format_real(s.re) << ',' << format_real(s.im) << ',' << format_real(eps) << ','
        << rp.params.cutoff_N << ',' << rp.params.tail_order_nu << ',' << format_real(bound) << '\n';
  } else {
    out << params_text(rp) << ", remainder_bound = " << format_real(bound) << '\n';
  }
  return kOk;
}

int cmd_zeros(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  ScanConfig scan{cfg.step, cfg.tol, cfg.max_iter, std::nullopt};
  const ResolvedParams rp = resolve_params(cfg, [] { return EvalParams{}; });
  if (rp.override_used) scan.params = rp.params;
  const ScanResult result = scan_critical_line(cfg.t_min, cfg.t_max, scan);

  if (cfg.format == "csv") {
    io::write_zero_csv(out, result.records);
  } else if (cfg.format == "json") {
    io::write_zero_jsonl(out, result.records);
  } else {
    out << "# " << result.records.size() << " zero(s) on 1/2 + it, t in [" << format_real(cfg.t_min) << ", "
        << format_real(cfg.t_max) << "]\n";
    for (const auto& r : result.records) {
      out << "t = " << format_real(r.t) << "  xi = " << format_real(r.xi) << "  |Z| = " << format_real(r.z_modulus)
          << "  Q = " << format_real(r.q_value.real()) << " + " << format_real(r.q_value.imag()) << "i  (N = "
          << r.params_used.cutoff_N << ", nu = " << r.params_used.tail_order_nu << ")\n";
    }
  }
  if (result.failed_refinements > 0)
    err << "warning: " << result.failed_refinements << " of " << result.candidates
        << " candidate minima did not refine to a zero\n";
  return cfg.strict && result.failed_refinements > 0 ? kRefinementFailure : kOk;
}

int cmd_count(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const Rectangle rect{cfg.sigma_min, cfg.sigma_max, cfg.t_min, cfg.t_max};
  const Real eps = eps_of(cfg);
  const ResolvedParams rp = resolve_params(cfg, [&] { return rectangle_params(rect, eps); });
  WindingCount count;
  try {
    count = count_zeros_rectangle(rect, rp.params);
  } catch (const BoundaryError&) {
    err << "hint: a zero sits near the contour; retry with --t-min " << format_real(rect.t_min - 0.05)
        << " --t-max " << format_real(rect.t_max + 0.05) << '\n';
    throw;
  }

  if (cfg.format == "json") {
    Json j;
    j["rect"] = Json{{"sigma_min", rect.sigma_min},
                     {"sigma_max", rect.sigma_max},
                     {"t_min", rect.t_min},
                     {"t_max", rect.t_max}};
    j["zeros"] = count.zeros;
    j["winding"] = count.winding;
    j["residual"] = count.residual;
    j["evaluations"] = count.evaluations;
    j["params"] = params_json(rp);
    out << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "sigma_min,sigma_max,t_min,t_max,zeros,winding,residual,N,nu\n"
        << format_real(rect.sigma_min) << ',' << format_real(rect.sigma_max) << ',' << format_real(rect.t_min)
        << ',' << format_real(rect.t_max) << ',' << count.zeros << ',' << format_real(count.winding) << ','
        << format_real(count.residual) << ',' << rp.params.cutoff_N << ',' << rp.params.tail_order_nu << '\n';
  } else {
    out << count.zeros << '\n';
  }
  return kOk;
}

int cmd_audit(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  ScanConfig scan{cfg.step, cfg.tol, cfg.max_iter, std::nullopt};
  const ResolvedParams rp = resolve_params(cfg, [] { return EvalParams{}; });
  std::optional<EvalParams> override_params;
  if (rp.override_used) {
    scan.params = rp.params;
    override_params = rp.params;
  }
  const AuditReport report =
      audit_range(cfg.t_min, cfg.t_max, scan, override_params, cfg.seed.value_or(kDefaultAuditSeed));
  out << io::audit_report_json(report) << '\n';
  err << render_verdicts(report);
  if (!report.complete) return exit_code_for(report.error_kind);
  return cfg.strict && report.failed_refinements > 0 ? kRefinementFailure : kOk;
}

int cmd_bernoulli(const CliConfig& cfg, std::ostream& out) {
  const BernoulliTable table = build_table(cfg.max_index);
  if (cfg.format == "json") {
    out << io::bernoulli_json(table) << '\n';
  } else if (cfg.format == "csv") {
    out << "index,numerator,denominator\n";
    for (int n = 0; n <= table.max_index(); ++n)
      out << n << ',' << numerator(table.value(n)).str() << ',' << denominator(table.value(n)).str() << '\n';
  } else {
    for (int n = 0; n <= table.max_index(); ++n) {
      if (n > 1 && n % 2 == 1) continue;
      out << "B_" << n << " = " << table.value(n).str() << '\n';
    }
  }
  return kOk;
}

int dispatch(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.command == "eval") return cmd_eval(cfg, out);
  if (cfg.command == "params") return cmd_params(cfg, out);
  if (cfg.command == "zeros") return cmd_zeros(cfg, out, err);
  if (cfg.command == "count") return cmd_count(cfg, out, err);
  if (cfg.command == "audit") return cmd_audit(cfg, out, err);
  if (cfg.command == "bernoulli") {
    resolve_params(cfg, [] { return EvalParams{}; });  // flags are accepted but unused here
    return cmd_bernoulli(cfg, out);
  }
  throw ParameterError("unknown command " + cfg.command);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Gram-Backlund zeta evaluation, zero scanning, zero counting and audits", "zeta-gb"};
  app.require_subcommand(1, 1);

  auto common = [&](CLI::App* sub, bool with_format) {
    if (with_format)
      sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", cfg.output_path, "Write results to this file instead of stdout");
    sub->add_option("--N", cfg.cutoff_N, "Cutoff N (with --nu, bypasses automatic parameters)");
    sub->add_option("--nu", cfg.tail_order_nu, "Tail order nu (with --N)");
    sub->add_option("--seed", cfg.seed, "Seed for pseudo-random sample points");
  };

  auto* eval = app.add_subcommand("eval", "Evaluate Z_GB(s) with a certified remainder bound");
  eval->add_option("--re", cfg.re, "Re s");
  eval->add_option("--im", cfg.im, "Im s");
  eval->add_option("--eps", cfg.eps, "Target accuracy (default $ZETAGB_DEFAULT_EPS or 1e-8)");
  common(eval, true);

  auto* params = app.add_subcommand("params", "Show the automatically chosen (N, nu) for s and eps");
  params->add_option("--re", cfg.re, "Re s");
  params->add_option("--im", cfg.im, "Im s");
  params->add_option("--eps", cfg.eps, "Target accuracy");
  common(params, true);

  auto* zeros = app.add_subcommand("zeros", "Scan the critical line for zeros");
  zeros->add_option("--t-min", cfg.t_min, "Lower ordinate")->required();
  zeros->add_option("--t-max", cfg.t_max, "Upper ordinate")->required();
  zeros->add_option("--step", cfg.step, "Grid step (<= 0.5)");
  zeros->add_option("--tol", cfg.tol, "Refinement tolerance on |Z|");
  zeros->add_option("--max-iter", cfg.max_iter, "Newton iteration cap");
  zeros->add_flag("--strict", cfg.strict, "Exit 5 if any candidate fails to refine");
  common(zeros, true);

  auto* count = app.add_subcommand("count", "Count zeros in a rectangle by the argument principle");
  count->add_option("--sigma-min", cfg.sigma_min, "Left edge")->required();
  count->add_option("--sigma-max", cfg.sigma_max, "Right edge")->required();
  count->add_option("--t-min", cfg.t_min, "Bottom edge")->required();
  count->add_option("--t-max", cfg.t_max, "Top edge")->required();
  count->add_option("--eps", cfg.eps, "Evaluation accuracy");
  common(count, true);

  auto* audit = app.add_subcommand("audit", "Audit the zero-condition propositions over a range");
  audit->add_option("--t-min", cfg.t_min, "Lower ordinate")->required();
  audit->add_option("--t-max", cfg.t_max, "Upper ordinate")->required();
  audit->add_option("--step", cfg.step, "Grid step");
  audit->add_option("--tol", cfg.tol, "Refinement tolerance");
  audit->add_option("--max-iter", cfg.max_iter, "Newton iteration cap");
  audit->add_flag("--strict", cfg.strict, "Exit 5 if any candidate fails to refine");
  common(audit, false);

  auto* bernoulli = app.add_subcommand("bernoulli", "Dump exact Bernoulli numbers");
  bernoulli->add_option("--max-index", cfg.max_index, "Largest even index (<= 60)");
  common(bernoulli, true);

  std::vector<const char*> argv{"zeta-gb"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kParameterError;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    std::ostringstream buffer;
    const int code = dispatch(cfg, buffer, err);
    if (cfg.output_path) {
      std::ofstream file(*cfg.output_path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open output file " + *cfg.output_path);
      file << buffer.str();
    } else {
      out << buffer.str();
    }
    return code;
  } catch (const PrecisionError& e) {
    err << "precision error: " << e.what() << " (best achievable bound " << format_real(e.best_bound())
        << ")\n";
    return kPrecisionError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(error_kind(e));
  }
}

}  // namespace zetagb::cli
