#include "zetagb/records_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace zetagb::io {

using Json = nlohmann::ordered_json;

namespace {

Real parse_real(const std::string& field, int line) {
  char* end = nullptr;
  const Real x = std::strtod(field.c_str(), &end);
  if (field.empty() || *end != '\0')
    throw ParameterError("line " + std::to_string(line) + ": not a number: '" + field + "'");
  return x;
}

int parse_int(const std::string& field, int line) {
  char* end = nullptr;
  const long v = std::strtol(field.c_str(), &end, 10);
  if (field.empty() || *end != '\0')
    throw ParameterError("line " + std::to_string(line) + ": not an integer: '" + field + "'");
  return static_cast<int>(v);
}

ZeroRecord make_record(Real t, Real re_s, Real xi, Real z_modulus, Real q_re, Real q_im, int N, int nu,
                       int iterations) {
  ZeroRecord rec;
  rec.t = t;
  rec.s = ComplexPoint{re_s, t};
  rec.xi = xi;
  rec.z_modulus = z_modulus;
  rec.q_value = Complex(q_re, q_im);
  rec.params_used.cutoff_N = N;
  rec.params_used.tail_order_nu = nu;
  rec.refine_iterations = iterations;
  return rec;
}

Json record_json(const ZeroRecord& r) {
  Json j;
  j["t"] = r.t;
  j["re_s"] = r.s.re;
  j["xi"] = r.xi;
  j["z_modulus"] = r.z_modulus;
  j["q_re"] = r.q_value.real();
  j["q_im"] = r.q_value.imag();
  j["N"] = r.params_used.cutoff_N;
  j["nu"] = r.params_used.tail_order_nu;
  j["iterations"] = r.refine_iterations;
  return j;
}

Json params_json(const EvalParams& p) {
  Json j;
  j["N"] = p.cutoff_N;
  j["nu"] = p.tail_order_nu;
  // Infinite target (explicit parameters) serializes as null.
  j["target_eps"] = std::isfinite(p.target_eps) ? Json(p.target_eps) : Json(nullptr);
  return j;
}

Json point_json(const ComplexPoint& s) { return Json{{"re", s.re}, {"im", s.im}}; }

}  // namespace

std::string format_real(Real x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_zero_csv(std::ostream& out, const std::vector<ZeroRecord>& records) {
  out << kZeroCsvHeader << '\n';
  for (const auto& r : records) {
    out << format_real(r.t) << ',' << format_real(r.s.re) << ',' << format_real(r.xi) << ','
        << format_real(r.z_modulus) << ',' << format_real(r.q_value.real()) << ','
        << format_real(r.q_value.imag()) << ',' << r.params_used.cutoff_N << ','
        << r.params_used.tail_order_nu << ',' << r.refine_iterations << '\n';
  }
}

std::vector<ZeroRecord> read_zero_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParameterError("empty zero CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kZeroCsvHeader) throw ParameterError("unexpected zero CSV header: " + line);

  std::vector<ZeroRecord> records;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 9)
      throw ParameterError("line " + std::to_string(line_no) + ": expected 9 fields, got " +
                           std::to_string(f.size()));
    records.push_back(make_record(parse_real(f[0], line_no), parse_real(f[1], line_no), parse_real(f[2], line_no),
                                  parse_real(f[3], line_no), parse_real(f[4], line_no), parse_real(f[5], line_no),
                                  parse_int(f[6], line_no), parse_int(f[7], line_no), parse_int(f[8], line_no)));
  }
  return records;
}

void write_zero_jsonl(std::ostream& out, const std::vector<ZeroRecord>& records) {
  for (const auto& r : records) out << record_json(r).dump() << '\n';
}

std::vector<ZeroRecord> read_zero_jsonl(std::istream& in) {
  std::vector<ZeroRecord> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const Json j = Json::parse(line);
      records.push_back(make_record(j.at("t").get<Real>(), j.at("re_s").get<Real>(), j.at("xi").get<Real>(),
                                    j.at("z_modulus").get<Real>(), j.at("q_re").get<Real>(),
                                    j.at("q_im").get<Real>(), j.at("N").get<int>(), j.at("nu").get<int>(),
                                    j.at("iterations").get<int>()));
    } catch (const Json::exception& e) {
      throw ParameterError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return records;
}

std::string audit_report_json(const AuditReport& r) {
  Json j;
  j["schema_version"] = AuditReport::kSchemaVersion;
  j["complete"] = r.complete;
  j["error"] = r.error;
  j["range"] = Json{{"t_min", r.t_min}, {"t_max", r.t_max}};
  Json scan;
  scan["step"] = r.scan.step;
  scan["tol"] = r.scan.tol;
  scan["max_iter"] = r.scan.max_iter;
  scan["params_override"] = r.scan.params ? params_json(*r.scan.params) : Json(nullptr);
  j["scan"] = scan;
  j["seed"] = r.seed;
  j["factorization_samples"] = kFactorizationSamples;

  const auto& tol = r.tolerances;
  Json tj;
  tj["xi"] = tol.xi;
  tj["conj_relation"] = tol.conj_relation;
  tj["q_imag_rel"] = tol.q_imag_rel;
  tj["q_quarter"] = tol.q_quarter;
  tj["division_rest"] = tol.division_rest;
  tj["consistency_rel"] = tol.consistency_rel;
  tj["factorization_vs_rest"] = tol.factorization_vs_rest;
  j["tolerances_used"] = tj;

  j["failed_refinements"] = r.failed_refinements;
  Json zeros = Json::array();
  for (const auto& z : r.zero_checks) {
    const auto& c = z.checks;
    Json cj;
    cj["zero_residual_abs"] = c.zero_residual_abs;
    cj["q_imag_rel"] = c.q_imag_rel;
    cj["q_vs_quarter_plus_t2"] = c.q_vs_quarter_plus_t2;
    cj["xi_abs"] = c.xi_abs;
    cj["conj_relation_abs"] = c.conj_relation_abs;
    cj["division_rest_abs"] = c.division_rest_abs;
    cj["factorization_max_dev"] = c.factorization_max_dev;
    cj["pair_factorization_max_dev"] = c.pair_factorization_max_dev;
    cj["q_conj_symmetry_abs"] = c.q_conj_symmetry_abs;
    cj["q_pair_gap_abs"] = c.q_pair_gap_abs;
    zeros.push_back(Json{{"record", record_json(z.record)}, {"checks", cj}});
  }
  j["zero_checks"] = zeros;

  Json controls = Json::array();
  for (const auto& c : r.controls) {
    Json cj;
    cj["s"] = point_json(c.s);
    cj["consistency"] = c.consistency;
    cj["zeta_modulus"] = c.zeta_modulus;
    cj["zero_residual_abs"] = c.zero_residual_abs;
    controls.push_back(cj);
  }
  j["controls"] = controls;

  Json qv;
  Json samples = Json::array();
  for (const auto& s : r.q_variation.samples)
    samples.push_back(Json{{"s", point_json(s.s)}, {"q_re", s.q.real()}, {"q_im", s.q.imag()}});
  qv["samples"] = samples;
  qv["max_pairwise_delta"] = r.q_variation.max_pairwise_delta;
  qv["params"] = params_json(r.q_variation.params_used);
  j["q_variation"] = qv;

  Json counts = Json::array();
  for (const auto& h : r.off_line_counts) {
    Json hj;
    hj["rect"] = Json{{"sigma_min", h.rect.sigma_min},
                      {"sigma_max", h.rect.sigma_max},
                      {"t_min", h.rect.t_min},
                      {"t_max", h.rect.t_max}};
    if (h.count) {
      hj["zeros"] = h.count->zeros;
      hj["winding"] = h.count->winding;
      hj["residual"] = h.count->residual;
    } else {
      hj["zeros"] = nullptr;
    }
    hj["error"] = h.error;
    counts.push_back(hj);
  }
  j["off_line_counts"] = counts;

  Json verdicts = Json::array();
  for (const auto& v : r.verdict_lines) {
    Json vj;
    vj["item"] = v.item;
    vj["statement"] = v.statement;
    vj["result"] = !v.evaluated ? "skip" : (v.pass ? "pass" : "fail");
    vj["measurement"] = v.measurement;
    verdicts.push_back(vj);
  }
  j["verdict_lines"] = verdicts;
  return j.dump(2);
}

std::string bernoulli_json(const BernoulliTable& table) {
  Json arr = Json::array();
  for (int n = 0; n <= table.max_index(); ++n) {
    const Rational& b = table.value(n);
    Json e;
    e["index"] = n;
    e["numerator"] = boost::multiprecision::numerator(b).str();
    e["denominator"] = boost::multiprecision::denominator(b).str();
    arr.push_back(e);
  }
  return arr.dump(2);
}

}  // namespace zetagb::io
