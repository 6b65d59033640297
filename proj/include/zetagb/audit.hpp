#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zetagb/zero_scan.hpp"

// Measurements of the conjugate-pair zero-condition argument: each algebraic
// step (zero condition s(s-1) + Q = 0, Q = s conj(s) real, division rest
// R(s_H), the factorization (s - s_H)(s - (1 - s_H)), conj(s) = 1 - s, and
// xi = 0) becomes a number evaluated at refined zeros and at control points.
// The report records what was measured; it does not rule on the argument.
namespace zetagb {

struct PropositionChecks {
  Real zero_residual_abs = 0.0;       ///< |s(s-1) + Q(s)|
  Real q_imag_rel = 0.0;              ///< |Im Q| / |Q|
  Real q_vs_quarter_plus_t2 = 0.0;    ///< |Q - (1/4 + t^2)|
  Real xi_abs = 0.0;                  ///< |Re s - 1/2|
  Real conj_relation_abs = 0.0;       ///< |conj(s) - (1 - s)|
  Real division_rest_abs = 0.0;       ///< |Q(s_H) - s_H (1 - s_H)|
  Real factorization_max_dev = 0.0;   ///< factorization_check over the samples
  /// max over samples of |[s(s-1) + Q] - (s - s_H)(s - conj(s_H))|, the
  /// conjugate-pair factorization; s-independent only when xi = 0.
  Real pair_factorization_max_dev = 0.0;
  Real q_conj_symmetry_abs = 0.0;     ///< |Q(conj s) - conj(Q(s))|
  Real q_pair_gap_abs = 0.0;          ///< |Q(conj s) - Q(s)|
};

/// Tolerances the verdicts are judged against.
struct AuditTolerances {
  Real xi = 1e-6;
  Real conj_relation = 2e-6;
  Real q_imag_rel = 1e-6;
  Real q_quarter = 1e-4;
  Real division_rest = 1e-4;
  Real consistency_rel = 1e-9;         ///< times max(1, |Z_GB|)
  Real factorization_vs_rest = 1e-10;  ///< times (1 + |Q|)
};

inline constexpr std::uint64_t kDefaultAuditSeed = 20170625;
inline constexpr int kFactorizationSamples = 100;

/// Deterministic sample points uniform in [-2, 3] x [-50, 50]
/// (mt19937_64, 53-bit mantissa mapping; identical on every platform).
std::vector<ComplexPoint> factorization_samples(std::uint64_t seed, int count);

/// max over samples s of |[s(s-1) + q_at_sH] - (s - s_H)(s - (1 - s_H))|.
/// The difference is the constant rest q_at_sH - s_H(1 - s_H) for every s.
/// Throws ParameterError for empty samples or a sample equal to s_H.
Real factorization_check(const ComplexPoint& s_H, const Complex& q_at_sH,
                         const std::vector<ComplexPoint>& samples);

/// Every PropositionChecks field at rec.s and its conjugate (the larger of
/// the two is reported where both apply). params must be at least as fine
/// as rec.params_used (N and nu not smaller), else ParameterError; records
/// with t <= 0 are rejected.
PropositionChecks audit_zero(const ZeroRecord& rec, const EvalParams& params,
                             std::uint64_t seed = kDefaultAuditSeed);

/// Checks for an arbitrary point, used for off-line control inputs. No
/// precondition that s is a zero.
PropositionChecks audit_point(const ComplexPoint& s, const EvalParams& params,
                              std::uint64_t seed = kDefaultAuditSeed);

struct QSample {
  ComplexPoint s;
  Complex q;
};

struct QVariation {
  std::vector<QSample> samples;
  Real max_pairwise_delta = 0.0;
  EvalParams params_used;
};

/// Q_GB at every sample under one parameter set, plus max pairwise |dQ|.
QVariation q_variation(const std::vector<ComplexPoint>& samples, const EvalParams& params);

struct ZeroAudit {
  ZeroRecord record;
  PropositionChecks checks;
};

struct ControlCheck {
  ComplexPoint s;
  Real consistency = 0.0;   ///< consistency_identity
  Real zeta_modulus = 0.0;  ///< |Z_GB(s)|
  Real zero_residual_abs = 0.0;
};

struct HalfStripCount {
  Rectangle rect;
  std::optional<WindingCount> count;
  std::string error;  ///< set when the count could not be taken
};

struct Verdict {
  std::string item;       ///< "I" .. "VIII"
  std::string statement;
  bool evaluated = false;
  bool pass = false;
  std::string measurement;
};

struct AuditReport {
  static constexpr int kSchemaVersion = 1;

  Real t_min = 0.0;
  Real t_max = 0.0;
  ScanConfig scan;
  std::uint64_t seed = kDefaultAuditSeed;
  AuditTolerances tolerances;
  int failed_refinements = 0;
  std::vector<ZeroAudit> zero_checks;
  std::vector<ControlCheck> controls;
  QVariation q_variation;
  std::vector<HalfStripCount> off_line_counts;
  std::vector<Verdict> verdict_lines;  ///< always 8 entries, I..VIII
  bool complete = true;
  std::string error;
  ErrorKind error_kind = ErrorKind::kNone;
};

/// Control points Q variation and the consistency identity are measured at.
std::vector<ComplexPoint> audit_control_points();

/// Scan [t_min, t_max], audit each zero, evaluate the controls, count zeros
/// in the two half-strips that exclude the critical line, and fill the eight
/// verdict lines. `params` overrides the evaluation parameters for audits and
/// controls. A failing sub-step stops the audit and yields a report with
/// complete = false; argument errors (inverted range, t_max > 500) throw.
AuditReport audit_range(Real t_min, Real t_max, const ScanConfig& scan_cfg,
                        const std::optional<EvalParams>& params = std::nullopt,
                        std::uint64_t seed = kDefaultAuditSeed);

/// Fixed-width text table of the verdict lines.
std::string render_verdicts(const AuditReport& report);

}  // namespace zetagb
