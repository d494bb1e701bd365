#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "triprimes/certificate_engine.hpp"
#include "triprimes/inequality_scanner.hpp"
#include "triprimes/limit_explorer.hpp"

namespace triprimes {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class ReportFormat { json, csv, text };

ReportFormat parse_format(const std::string& name);

struct GapCheckReport {
  std::uint64_t c;
  std::uint64_t n_max;
  std::optional<std::uint64_t> checked_n0;
  std::vector<std::uint64_t> failures;  // n where c*(p_{n+1}-p_n-1) >= p_n
  std::uint64_t max_failure;            // 0 when failures is empty
  bool holds_beyond_n0;                 // true when checked_n0 is unset

  friend bool operator==(const GapCheckReport&, const GapCheckReport&) = default;
};

GapCheckReport gap_check(std::uint64_t c, std::uint64_t n_max,
                         std::optional<std::uint64_t> n0,
                         const SieveConfig& config = {});

struct SieveReport {
  std::uint64_t limit;
  std::vector<std::uint64_t> primes;

  friend bool operator==(const SieveReport&, const SieveReport&) = default;
};

// JSON envelopes: {"schema_version":1,"type":...,...}. Integers that can
// exceed 64 bits travel as decimal strings; rationals as num/den strings.
Json to_json(const TripleVerdict&);
Json to_json(const ScanSummary&);
Json to_json(const ThresholdResult&);
Json to_json(const TheoremCheck&);
Json to_json(const Certificate&);
Json to_json(const TheoremReport&);
Json to_json(const LimitSample&);
Json to_json(const RealLimitSample&);
Json to_json(const EpsilonThreshold&);
Json to_json(const GapCheckReport&);
Json to_json(const SieveReport&);

TripleVerdict verdict_from_json(const Json&);
ScanSummary scan_summary_from_json(const Json&);
ThresholdResult threshold_from_json(const Json&);
TheoremCheck theorem_check_from_json(const Json&);
Certificate certificate_from_json(const Json&);
TheoremReport theorem_report_from_json(const Json&);
LimitSample limit_sample_from_json(const Json&);
RealLimitSample real_limit_sample_from_json(const Json&);
EpsilonThreshold epsilon_threshold_from_json(const Json&);
GapCheckReport gap_check_from_json(const Json&);
SieveReport sieve_from_json(const Json&);

// Serialized report bytes; byte-stable for identical inputs. CSV
// columns are listed in the README.
std::string emit_report(const TripleVerdict&, ReportFormat);
std::string emit_report(const ScanSummary&, ReportFormat);
std::string emit_report(const ThresholdResult&, ReportFormat);
std::string emit_report(const TheoremCheck&, ReportFormat);
std::string emit_report(const TheoremReport&, ReportFormat);
std::string emit_report(const LimitSample&, ReportFormat);
std::string emit_report(const RealLimitSample&, ReportFormat);
std::string emit_report(const EpsilonThreshold&, ReportFormat);
std::string emit_report(const GapCheckReport&, ReportFormat);
std::string emit_report(const SieveReport&, ReportFormat);

// Registry = built-ins plus the entries of a JSON config file
// ([{"name","c","n0","provenance"?}, ...]). Duplicate names and invalid
// entries raise ConfigError naming the offender.
std::vector<GapBound> load_gap_bounds(const std::string& path);
std::vector<GapBound> parse_gap_bounds(const std::string& json_text);

}  // namespace triprimes
