#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zetagb/audit.hpp"
#include "zetagb/bernoulli.hpp"
#include "zetagb/zero_scan.hpp"

// Persistent formats. Zero records travel as CSV (comma separated, header
// row, LF endings) or JSON lines with the columns
//   t, re_s, xi, z_modulus, q_re, q_im, N, nu, iterations
// and every real written so that parsing it back gives the same bits.
namespace zetagb::io {

inline constexpr const char* kZeroCsvHeader = "t,re_s,xi,z_modulus,q_re,q_im,N,nu,iterations";

/// %.17g; parses back to the identical double.
std::string format_real(Real x);

void write_zero_csv(std::ostream& out, const std::vector<ZeroRecord>& records);
/// Throws ParameterError on a malformed header or row.
std::vector<ZeroRecord> read_zero_csv(std::istream& in);

void write_zero_jsonl(std::ostream& out, const std::vector<ZeroRecord>& records);
std::vector<ZeroRecord> read_zero_jsonl(std::istream& in);

/// The audit report, fields in a fixed order, with "schema_version" first.
std::string audit_report_json(const AuditReport& report);

/// [{"index": n, "numerator": "...", "denominator": "..."}, ...] for every
/// stored index, odd zeros included.
std::string bernoulli_json(const BernoulliTable& table);

}  // namespace zetagb::io
