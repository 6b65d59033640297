// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "zetagb/audit.hpp"
#include "zetagb/qfunction.hpp"
#include "zetagb/records_io.hpp"
#include "zetagb/zero_scan.hpp"
#include "zetagb/zeta.hpp"

using namespace zetagb;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Outcome classical_values() {
  const auto start = Clock::now();
  const EvalParams p{50, 10};
  const double e2 = std::abs(zeta_gb({2, 0}, p).value - std::numbers::pi * std::numbers::pi / 6);
  const double e0 = std::abs(zeta_gb({0, 0}, p).value + 0.5);
  const double em1 = std::abs(zeta_gb({-1, 0}, p).value + 1.0 / 12);
  const double ms = seconds_since(start) * 1e3;
  return {e2 <= 1e-10 && e0 <= 1e-10 && em1 <= 1e-9 && ms < 10,
          "err(2) = " + fmt("%.2e", e2) + ", err(0) = " + fmt("%.2e", e0) + ", err(-1) = " + fmt("%.2e", em1) +
              ", " + fmt("%.3f", ms) + " ms"};
}

Outcome self_consistency() {
  const auto start = Clock::now();
  oracle::Sampler rng(2);
  int bad = 0;
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const ComplexPoint s{rng.uniform(0.001, 0.999), rng.uniform(-50, 50)};
    const EvalParams a = auto_params(s, 1e-8);
    const EvalParams b{2 * a.cutoff_N, a.tail_order_nu + 4};
    const EvalResult ra = zeta_gb(s, a);
    const EvalResult rb = zeta_gb(s, b);
    const double gap = std::abs(ra.value - rb.value);
    const double allowed = ra.remainder_bound + rb.remainder_bound + 1e-12;
    worst = std::max(worst, gap / allowed);
    if (gap > allowed) ++bad;
  }
  const double sec = seconds_since(start);
  return {bad == 0 && sec < 5,
          std::to_string(bad) + "/100 violations, max gap/allowed = " + fmt("%.3f", worst) + ", " +
              fmt("%.2f", sec * 1e3) + " ms"};
}

Outcome series_agreement() {
  oracle::Sampler rng(3);
  int bad = 0;
  double worst = 0;
  for (int i = 0; i < 20; ++i) {
    const ComplexPoint s{rng.uniform(2.5, 6), rng.uniform(-50, 50)};
    const EvalResult r = zeta_gb(s, 1e-12);
    const double gap = std::abs(r.value - oracle::direct_series(s.value(), 1000000));
    worst = std::max(worst, gap);
    if (gap > r.remainder_bound + 1e-9) ++bad;
  }
  return {bad == 0, std::to_string(bad) + "/20 violations, max |Z - direct| = " + fmt("%.2e", worst)};
}

Outcome zeros_to_30() {
  const auto start = Clock::now();
  const ScanResult r = scan_critical_line(0, 30, ScanConfig{});
  const double sec = seconds_since(start);
  const auto ref = oracle::critical_line_zeros(10, 30);
  const double frozen[] = {14.134725, 21.022040, 25.010858};
  bool ok = r.records.size() == 3 && ref.size() == 3;
  double worst = 0;
  for (std::size_t i = 0; ok && i < 3; ++i) {
    worst = std::max(worst, std::abs(r.records[i].t - ref[i]));
    ok = ok && std::abs(r.records[i].t - ref[i]) <= 1e-6 && std::abs(r.records[i].t - frozen[i]) <= 1e-6;
  }
  return {ok && sec < 10,
          std::to_string(r.records.size()) + " records, max |t - oracle| = " + fmt("%.2e", worst) + ", " +
              fmt("%.2f", sec * 1e3) + " ms"};
}

Outcome xi_conformance() {
  const ScanResult r = scan_critical_line(0, 50, ScanConfig{});
  double worst = 0;
  int seeded = 0;
  for (const auto& z : r.records) worst = std::max(worst, std::abs(z.xi));
  for (double t : oracle::kZeroOrdinates) {
    for (double re : {0.3, 0.7}) {
      const ZeroRecord z = refine_zero({re, t}, 1e-8, 50);
      worst = std::max(worst, std::abs(z.xi));
      if (std::abs(z.t - t) < 1e-6) ++seeded;
    }
  }
  return {worst <= 1e-6 && r.records.size() == 10 && seeded == 20,
          std::to_string(r.records.size()) + " scanned + " + std::to_string(seeded) +
              "/20 off-line seeds, max |xi| = " + fmt("%.2e", worst)};
}

Outcome argument_principle() {
  const Rectangle strip{0.01, 0.99, 0.1, 30};
  const Rectangle left{0.01, 0.49, 0.1, 30};
  const WindingCount a = count_zeros_rectangle(strip, rectangle_params(strip, 1e-8));
  const WindingCount b = count_zeros_rectangle(left, rectangle_params(left, 1e-8));
  const std::size_t scanned = scan_critical_line(0, 30, ScanConfig{}).records.size();
  const bool ok = a.zeros == 3 && static_cast<std::size_t>(a.zeros) == scanned && b.zeros == 0 &&
                  a.residual < 0.25 && b.residual < 0.25;
  return {ok, "strip " + std::to_string(a.zeros) + " (residual " + fmt("%.1e", a.residual) + "), left half " +
                  std::to_string(b.zeros) + " (residual " + fmt("%.1e", b.residual) + "), scan " +
                  std::to_string(scanned)};
}

Outcome propositions() {
  const ScanResult r = scan_critical_line(0, 50, ScanConfig{});
  PropositionChecks worst;
  for (const auto& z : r.records) {
    const PropositionChecks c = audit_zero(z, z.params_used);
    worst.division_rest_abs = std::max(worst.division_rest_abs, c.division_rest_abs);
    worst.q_imag_rel = std::max(worst.q_imag_rel, c.q_imag_rel);
    worst.q_vs_quarter_plus_t2 = std::max(worst.q_vs_quarter_plus_t2, c.q_vs_quarter_plus_t2);
    worst.conj_relation_abs = std::max(worst.conj_relation_abs, c.conj_relation_abs);
  }
  const bool ok = !r.records.empty() && worst.division_rest_abs <= 1e-4 && worst.q_imag_rel <= 1e-6 &&
                  worst.q_vs_quarter_plus_t2 <= 1e-4 && worst.conj_relation_abs <= 2e-6;
  return {ok, std::to_string(r.records.size()) + " zeros, |s(1-s) - Q| " + fmt("%.1e", worst.division_rest_abs) +
                  ", |Im Q|/|Q| " + fmt("%.1e", worst.q_imag_rel) + ", |Q - 1/4 - t^2| " +
                  fmt("%.1e", worst.q_vs_quarter_plus_t2) + ", |conj s - (1-s)| " +
                  fmt("%.1e", worst.conj_relation_abs)};
}

Outcome factorization() {
  oracle::Sampler rng(8);
  const auto samples = factorization_samples(kDefaultAuditSeed, kFactorizationSamples);
  int bad = 0;
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const ComplexPoint sh{rng.uniform(-1, 2), rng.uniform(-60, 60)};
    const Complex q(rng.uniform(-4000, 4000), rng.uniform(-4000, 4000));
    const Complex h = sh.value();
    const double gap = std::abs(factorization_check(sh, q, samples) - std::abs(q - h * (1.0 - h)));
    const double rel = gap / (1 + std::abs(q));
    worst = std::max(worst, rel);
    if (rel > 1e-10) ++bad;
  }
  return {bad == 0, std::to_string(bad) + "/1000 violations, max gap/(1+|Q|) = " + fmt("%.1e", worst)};
}

Outcome consistency() {
  oracle::Sampler rng(9);
  int bad = 0, done = 0;
  double worst = 0;
  while (done < 1000) {
    const ComplexPoint s{rng.uniform(-2, 3), rng.uniform(-50, 50)};
    if (std::abs(s.value()) < 0.01 || std::abs(s.value() - 1.0) < 0.01) continue;
    const EvalParams p = auto_params(s, 1e-8);
    EvalParams loose = p;
    loose.target_eps = std::numeric_limits<double>::infinity();
    const double rel = consistency_identity(s, p) / std::max(1.0, std::abs(zeta_gb(s, loose).value));
    worst = std::max(worst, rel);
    if (rel > 1e-9) ++bad;
    ++done;
  }
  return {bad == 0, std::to_string(bad) + "/1000 violations, max gap/max(1,|Z|) = " + fmt("%.1e", worst)};
}

Outcome q_nonconstancy() {
  const double eps = default_eps();
  const EvalParams a = auto_params({2, 0}, eps);
  const EvalParams b = auto_params({3, 0}, eps);
  const EvalParams p{std::max(a.cutoff_N, b.cutoff_N), std::max(a.tail_order_nu, b.tail_order_nu)};
  const Complex q2 = q_gb({2, 0}, p).value;
  const Complex q3 = q_gb({3, 0}, p).value;
  const double gap = std::abs(q2 - q3);
  // Oracle: Q from the independent zeta at the same truncation.
  auto oracle_q = [&](double x) {
    const double scale = std::pow(static_cast<double>(p.cutoff_N), 1.0 - x);
    return x * scale / (oracle::em_zeta(x, p.cutoff_N, p.tail_order_nu) - scale / (x - 1.0));
  };
  const double oracle_gap = std::abs(oracle_q(2) - oracle_q(3));
  return {gap > 0.1 && std::abs(gap - oracle_gap) < 1e-9,
          "N = " + std::to_string(p.cutoff_N) + ", nu = " + std::to_string(p.tail_order_nu) +
              ": |Q(2) - Q(3)| = " + fmt("%.4f", gap) + " (oracle " + fmt("%.4f", oracle_gap) + ", need > 0.1)"};
}

}  // namespace

int main() {
  const auto start = Clock::now();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"classical values", classical_values},
      {"self-consistency", self_consistency},
      {"series agreement", series_agreement},
      {"zeros on (0, 30)", zeros_to_30},
      {"xi-conformance", xi_conformance},
      {"argument principle", argument_principle},
      {"zero-condition and Q propositions", propositions},
      {"factorization property", factorization},
      {"consistency identity", consistency},
      {"Q non-constancy", q_nonconstancy},
  };

  int failures = 0;
  int index = 1;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("criterion %2d %-34s %s  %s\n", index++, name.c_str(), o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }

  const std::string first = io::audit_report_json(audit_range(0, 50, ScanConfig{}));
  const std::string second = io::audit_report_json(audit_range(0, 50, ScanConfig{}));
  const double total = seconds_since(start);
  const bool ok11 = first == second && total < 60;
  if (!ok11) ++failures;
  std::printf("criterion %2d %-34s %s  total %.2f s, audit JSON %s (%zu bytes)\n", 11, "runtime and determinism",
              ok11 ? "PASS" : "FAIL", total, first == second ? "identical" : "differs", first.size());

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
