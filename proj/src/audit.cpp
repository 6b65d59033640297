#include "zetagb/audit.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <sstream>

#include "zetagb/qfunction.hpp"

namespace zetagb {

namespace {

Real uniform(std::mt19937_64& rng, Real lo, Real hi) {
  // 53 random mantissa bits; std::uniform_real_distribution is not
  // reproducible across standard libraries.
  const Real u = static_cast<Real>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

std::string format_sci(Real x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string format_tol(Real x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.0e", x);
  return buf;
}

template <class F>
Real max_over(const std::vector<ZeroAudit>& audits, F field) {
  Real m = 0.0;
  for (const auto& a : audits) m = std::max(m, field(a));
  return m;
}

}  // namespace

std::vector<ComplexPoint> factorization_samples(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<ComplexPoint> samples;
  samples.reserve(count);
  for (int i = 0; i < count; ++i) {
    const Real re = uniform(rng, -2.0, 3.0);
    const Real im = uniform(rng, -50.0, 50.0);
    samples.push_back({re, im});
  }
  return samples;
}

Real factorization_check(const ComplexPoint& s_H, const Complex& q_at_sH,
                         const std::vector<ComplexPoint>& samples) {
  if (samples.empty()) throw ParameterError("factorization_check needs at least one sample");
  const Complex h = s_H.value();
  Real max_dev = 0.0;
  for (const auto& p : samples) {
    if (p == s_H) throw ParameterError("factorization sample coincides with s_H");
    const Complex s = p.value();
    const Complex lhs = s * (s - Real(1)) + q_at_sH;
    const Complex rhs = (s - h) * (s - (Real(1) - h));
    max_dev = std::max(max_dev, std::abs(lhs - rhs));
  }
  return max_dev;
}

PropositionChecks audit_point(const ComplexPoint& s, const EvalParams& params, std::uint64_t seed) {
  const Complex z = s.value();
  const Complex zc = std::conj(z);
  const Complex q = q_gb(s, params).value;
  const Complex qc = q_gb(s.conj(), params).value;
  const Real t = s.im;
  const Real quarter_plus_t2 = 0.25 + t * t;
  const auto samples = factorization_samples(seed, kFactorizationSamples);

  PropositionChecks c;
  c.zero_residual_abs = std::max(std::abs(z * (z - Real(1)) + q), std::abs(zc * (zc - Real(1)) + qc));
  c.q_imag_rel = std::max(std::abs(q.imag()) / std::abs(q), std::abs(qc.imag()) / std::abs(qc));
  c.q_vs_quarter_plus_t2 = std::max(std::abs(q - quarter_plus_t2), std::abs(qc - quarter_plus_t2));
  c.xi_abs = std::abs(s.xi());
  c.conj_relation_abs = std::abs(zc - (Real(1) - z));
  c.division_rest_abs = std::max(std::abs(q - z * (Real(1) - z)), std::abs(qc - zc * (Real(1) - zc)));
  c.factorization_max_dev =
      std::max(factorization_check(s, q, samples), factorization_check(s.conj(), qc, samples));

  for (const auto& p : samples) {
    const Complex x = p.value();
    const Complex lhs = x * (x - Real(1)) + q;
    c.pair_factorization_max_dev = std::max(c.pair_factorization_max_dev, std::abs(lhs - (x - z) * (x - zc)));
  }
  c.q_conj_symmetry_abs = std::abs(qc - std::conj(q));
  c.q_pair_gap_abs = std::abs(qc - q);
  return c;
}

PropositionChecks audit_zero(const ZeroRecord& rec, const EvalParams& params, std::uint64_t seed) {
  if (!(rec.t > 0.0) || !(rec.s.im > 0.0))
    throw ParameterError("zero records live in the upper half-plane (t > 0)");
  if (params.cutoff_N < rec.params_used.cutoff_N || params.tail_order_nu < rec.params_used.tail_order_nu)
    throw ParameterError("audit parameters are coarser than the record's refinement parameters");
  return audit_point(rec.s, params, seed);
}

QVariation q_variation(const std::vector<ComplexPoint>& samples, const EvalParams& params) {
  if (samples.size() < 2) throw ParameterError("q_variation needs at least two samples");
  QVariation v;
  v.params_used = params;
  for (const auto& s : samples) v.samples.push_back({s, q_gb(s, params).value});
  for (std::size_t i = 0; i < v.samples.size(); ++i)
    for (std::size_t j = i + 1; j < v.samples.size(); ++j)
      v.max_pairwise_delta = std::max(v.max_pairwise_delta, std::abs(v.samples[i].q - v.samples[j].q));
  return v;
}

std::vector<ComplexPoint> audit_control_points() {
  return {{2.0, 0.0}, {3.0, 0.0}, {0.75, 5.0}, {0.25, 5.0}};
}

namespace {

Verdict make_verdict(std::string item, std::string statement) {
  Verdict v;
  v.item = std::move(item);
  v.statement = std::move(statement);
  v.measurement = "not evaluated";
  return v;
}

void fill_verdicts(AuditReport& r, bool zeros_done, bool controls_done, bool counts_done) {
  const auto& tol = r.tolerances;
  const auto& zs = r.zero_checks;
  const std::string nz = std::to_string(zs.size()) + " zero(s)";

  std::vector<Verdict> v;
  v.push_back(make_verdict("I", "every conjugate zero pair found lies on Re s = 1/2"));
  v.push_back(make_verdict("II", "Z_GB(s) = 0 is equivalent to s(s-1) + Q_GB(s) = 0"));
  v.push_back(make_verdict("III", "no zeros off the line in range (counter-hypothesis)"));
  v.push_back(make_verdict("IV", "s(s-1) + Q = (s - s_H)(s - conj s_H)"));
  v.push_back(make_verdict("V", "Q(s_H) = s_H conj(s_H) = 1/4 + t^2, real"));
  v.push_back(make_verdict("VI", "division rest R(s_H) = Q(s_H) - s_H(1 - s_H) = 0"));
  v.push_back(make_verdict("VII", "s(s-1) + Q = (s - s_H)(s - (1 - s_H))"));
  v.push_back(make_verdict("VIII", "conj(s_H) = 1 - s_H"));

  if (zeros_done) {
    const Real xi = max_over(zs, [](const ZeroAudit& a) { return a.checks.xi_abs; });
    v[0].evaluated = true;
    v[0].pass = xi <= tol.xi;
    v[0].measurement = nz + ", max |xi| = " + format_sci(xi) + " (tol " + format_tol(tol.xi) + ")";

    const Real pair = max_over(zs, [](const ZeroAudit& a) { return a.checks.pair_factorization_max_dev; });
    v[3].evaluated = true;
    v[3].pass = pair <= tol.q_quarter;
    v[3].measurement = nz + ", max deviation = " + format_sci(pair) + " (tol " + format_tol(tol.q_quarter) + ")";

    const Real imag = max_over(zs, [](const ZeroAudit& a) { return a.checks.q_imag_rel; });
    const Real quarter = max_over(zs, [](const ZeroAudit& a) { return a.checks.q_vs_quarter_plus_t2; });
    const Real gap = max_over(zs, [](const ZeroAudit& a) { return a.checks.q_pair_gap_abs; });
    v[4].evaluated = true;
    v[4].pass = imag <= tol.q_imag_rel && quarter <= tol.q_quarter;
    v[4].measurement = nz + ", max |Im Q|/|Q| = " + format_sci(imag) + " (tol " + format_tol(tol.q_imag_rel) +
                       "), max |Q - 1/4 - t^2| = " + format_sci(quarter) + " (tol " +
                       format_tol(tol.q_quarter) + "), max |Q(conj s) - Q(s)| = " + format_sci(gap);

    const Real rest = max_over(zs, [](const ZeroAudit& a) { return a.checks.division_rest_abs; });
    const Real residual = max_over(zs, [](const ZeroAudit& a) { return a.checks.zero_residual_abs; });
    v[5].evaluated = true;
    v[5].pass = rest <= tol.division_rest && residual <= tol.division_rest;
    v[5].measurement = nz + ", max |R(s_H)| = " + format_sci(rest) + ", max |s(s-1) + Q| = " +
                       format_sci(residual) + " (tol " + format_tol(tol.division_rest) + ")";

    Real fact = 0.0;
    bool fact_matches_rest = true;
    for (const auto& a : zs) {
      fact = std::max(fact, a.checks.factorization_max_dev);
      const Real q_abs = std::abs(a.record.q_value);
      if (std::abs(a.checks.factorization_max_dev - a.checks.division_rest_abs) >
          tol.factorization_vs_rest * (1.0 + q_abs))
        fact_matches_rest = false;
    }
    v[6].evaluated = true;
    v[6].pass = fact <= tol.division_rest && fact_matches_rest;
    v[6].measurement = nz + ", max deviation = " + format_sci(fact) + " (tol " + format_tol(tol.division_rest) +
                       "), deviation equals |R(s_H)|: " + (fact_matches_rest ? "yes" : "no");

    const Real conj = max_over(zs, [](const ZeroAudit& a) { return a.checks.conj_relation_abs; });
    v[7].evaluated = true;
    v[7].pass = conj <= tol.conj_relation;
    v[7].measurement =
        nz + ", max |conj(s) - (1 - s)| = " + format_sci(conj) + " (tol " + format_tol(tol.conj_relation) + ")";
  }

  if (controls_done) {
    Real worst = 0.0;
    for (const auto& c : r.controls)
      worst = std::max(worst, c.consistency / std::max(1.0, c.zeta_modulus));
    v[1].evaluated = true;
    v[1].pass = worst <= tol.consistency_rel;
    v[1].measurement = std::to_string(r.controls.size()) + " controls, max identity gap / max(1,|Z|) = " +
                       format_sci(worst) + " (tol " + format_tol(tol.consistency_rel) +
                       "), Q variation over controls = " + format_sci(r.q_variation.max_pairwise_delta);
  }

  if (counts_done) {
    bool all_zero = true;
    std::string detail;
    for (const auto& h : r.off_line_counts) {
      if (!detail.empty()) detail += ", ";
      char buf[96];
      std::snprintf(buf, sizeof buf, "[%.2f,%.2f]x[%.2f,%.2f]: ", h.rect.sigma_min, h.rect.sigma_max,
                    h.rect.t_min, h.rect.t_max);
      detail += buf;
      if (h.count) {
        detail += std::to_string(h.count->zeros) + " zero(s)";
        all_zero = all_zero && h.count->zeros == 0;
      } else {
        detail += "error: " + h.error;
        all_zero = false;
      }
    }
    v[2].evaluated = true;
    // The counter-hypothesis is refuted on the range when both half-strips are empty.
    v[2].pass = all_zero;
    v[2].measurement = r.off_line_counts.empty() ? "range too short for a half-strip count" : detail;
  }
  r.verdict_lines = std::move(v);
}

}  // namespace

AuditReport audit_range(Real t_min, Real t_max, const ScanConfig& scan_cfg,
                        const std::optional<EvalParams>& params, std::uint64_t seed) {
  if (!(t_min >= 0.0) || !(t_max > t_min)) throw ParameterError("audit range needs 0 <= t_min < t_max");
  if (t_max > kMaxImag) throw ParameterError("audit range beyond t = 500");

  AuditReport report;
  report.t_min = t_min;
  report.t_max = t_max;
  report.scan = scan_cfg;
  report.seed = seed;

  bool zeros_done = false;
  bool controls_done = false;
  bool counts_done = false;
  try {
    const ScanResult scan = scan_critical_line(t_min, t_max, scan_cfg);
    report.failed_refinements = scan.failed_refinements;
    for (const auto& rec : scan.records)
      report.zero_checks.push_back({rec, audit_zero(rec, params.value_or(rec.params_used), seed)});
    zeros_done = true;

    const auto controls = audit_control_points();
    EvalParams control_params{2, 1};
    if (params) {
      control_params = *params;
    } else {
      const Real eps = std::max(kMinEps, scan_cfg.tol * 1e-2);
      for (const auto& c : controls) {
        const EvalParams p = auto_params(c, eps);
        control_params.cutoff_N = std::max(control_params.cutoff_N, p.cutoff_N);
        control_params.tail_order_nu = std::max(control_params.tail_order_nu, p.tail_order_nu);
      }
      control_params.target_eps = eps;
    }
    EvalParams unconstrained = control_params;
    unconstrained.target_eps = std::numeric_limits<Real>::infinity();
    for (const auto& c : controls) {
      ControlCheck check;
      check.s = c;
      check.consistency = consistency_identity(c, control_params);
      check.zeta_modulus = std::abs(zeta_gb(c, unconstrained).value);
      check.zero_residual_abs = std::abs(zero_residual(c, control_params));
      report.controls.push_back(check);
    }
    report.q_variation = q_variation(controls, control_params);
    controls_done = true;

    Real lo = std::max(t_min, 0.1);
    Real hi = t_max;
    for (const auto& rec : scan.records) {
      if (std::abs(rec.t - lo) < 1e-3) lo = std::max(0.05, lo - 0.05);
      if (std::abs(rec.t - hi) < 1e-3) hi += 0.05;
    }
    if (hi - lo > 1e-3) {
      for (const auto& [sig_lo, sig_hi] : {std::pair{0.01, 0.49}, std::pair{0.51, 0.99}}) {
        HalfStripCount h;
        h.rect = Rectangle{sig_lo, sig_hi, lo, hi};
        const EvalParams count_params = params.value_or(rectangle_params(h.rect, 1e-8));
        try {
          h.count = count_zeros_rectangle(h.rect, count_params);
        } catch (const BoundaryError& e) {
          h.error = e.what();
        } catch (const InconclusiveError& e) {
          h.error = e.what();
        }
        report.off_line_counts.push_back(h);
      }
    }
    counts_done = true;
  } catch (const Error& e) {
    report.complete = false;
    report.error = e.what();
    report.error_kind = error_kind(e);
  }

  fill_verdicts(report, zeros_done, controls_done, counts_done);
  return report;
}

std::string render_verdicts(const AuditReport& report) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-5s %-6s %-52s %s\n", "item", "result", "statement", "measurement");
  out << line;
  for (const auto& v : report.verdict_lines) {
    const char* result = !v.evaluated ? "SKIP" : (v.pass ? "PASS" : "FAIL");
    std::snprintf(line, sizeof line, "%-5s %-6s %-52s ", v.item.c_str(), result, v.statement.c_str());
    out << line << v.measurement << '\n';
  }
  if (!report.complete) out << "audit incomplete: " << report.error << '\n';
  return out.str();
}

}  // namespace zetagb
