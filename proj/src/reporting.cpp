#include "triprimes/reporting.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "triprimes/errors.hpp"

namespace triprimes {

namespace {

Json envelope(const char* type) {
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;
  j["type"] = type;
  return j;
}

void check_envelope(const Json& j, const char* type) {
  if (!j.is_object() || j.value("schema_version", -1) != kSchemaVersion ||
      j.value("type", std::string{}) != type)
    throw std::invalid_argument(std::string("not a ") + type +
                                " report with schema_version 1");
}

Json rational_json(const Rational& q) {
  Json j = Json::object();
  j["num"] = numerator_string(q);
  j["den"] = denominator_string(q);
  return j;
}

Rational rational_from_json(const Json& j) {
  Rational q(BigInt(j.at("num").get<std::string>()),
             BigInt(j.at("den").get<std::string>()));
  q.canonicalize();
  return q;
}

Relation relation_from_name(const std::string& name) {
  if (name == "lhs_greater") return Relation::lhs_greater;
  if (name == "equal") return Relation::equal;
  if (name == "rhs_greater") return Relation::rhs_greater;
  throw std::invalid_argument("unknown relation: " + name);
}

const char* status_name(AssemblyStatus s) {
  return s == AssemblyStatus::complete ? "complete" : "head_gap";
}

AssemblyStatus status_from_name(const std::string& name) {
  if (name == "complete") return AssemblyStatus::complete;
  if (name == "head_gap") return AssemblyStatus::head_gap;
  throw std::invalid_argument("unknown assembly status: " + name);
}

template <typename T>
std::string join(const std::vector<T>& values, const char* sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); i++) {
    if (i) out << sep;
    out << values[i];
  }
  return out.str();
}

std::string join_coeffs(const std::vector<BigInt>& coeffs, const char* sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < coeffs.size(); i++) {
    if (i) out << sep;
    out << to_decimal(coeffs[i]);
  }
  return out.str();
}

std::string join_exceptions(const std::vector<ScanException>& exceptions,
                            const char* sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < exceptions.size(); i++) {
    if (i) out << sep;
    out << exceptions[i].n << ':' << relation_name(exceptions[i].relation);
  }
  return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "text") return ReportFormat::text;
  throw ConfigError("unknown report format: " + name);
}

GapCheckReport gap_check(std::uint64_t c, std::uint64_t n_max,
                         std::optional<std::uint64_t> n0,
                         const SieveConfig& config) {
  if (c < 2) throw std::invalid_argument("gap check needs c >= 2");
  if (n_max == 0) throw std::invalid_argument("n_max must be >= 1");

  GapCheckReport report;
  report.c = c;
  report.n_max = n_max;
  report.checked_n0 = n0;

  PrimeStream stream(config);
  std::uint64_t p = stream.next();
  for (std::uint64_t n = 1; n <= n_max; n++) {
    std::uint64_t p1 = stream.next();
    if (!gap_bound_holds(p, p1, c)) report.failures.push_back(n);
    p = p1;
  }
  report.max_failure = report.failures.empty() ? 0 : report.failures.back();
  report.holds_beyond_n0 = !n0.has_value() || report.max_failure <= *n0;
  return report;
}

Json to_json(const TripleVerdict& v) {
  Json j = envelope("triple_verdict");
  j["n"] = v.n;
  j["k"] = v.k;
  j["lhs"] = to_decimal(v.lhs);
  j["rhs"] = to_decimal(v.rhs);
  j["relation"] = relation_name(v.relation);
  return j;
}

TripleVerdict verdict_from_json(const Json& j) {
  check_envelope(j, "triple_verdict");
  TripleVerdict v;
  v.n = j.at("n").get<std::uint64_t>();
  v.k = j.at("k").get<std::uint64_t>();
  v.lhs = BigInt(j.at("lhs").get<std::string>());
  v.rhs = BigInt(j.at("rhs").get<std::string>());
  v.relation = relation_from_name(j.at("relation").get<std::string>());
  return v;
}

Json to_json(const ScanSummary& s) {
  Json j = envelope("scan_summary");
  j["k"] = s.k;
  j["n_from"] = s.n_from;
  j["n_to"] = s.n_to;
  j["lhs_greater_count"] = s.lhs_greater_count;
  j["equal_count"] = s.equal_count;
  j["rhs_greater_count"] = s.rhs_greater_count;
  Json exceptions = Json::array();
  for (const ScanException& e : s.exceptions) {
    Json item = Json::object();
    item["n"] = e.n;
    item["relation"] = relation_name(e.relation);
    exceptions.push_back(std::move(item));
  }
  j["exceptions"] = std::move(exceptions);
  return j;
}

ScanSummary scan_summary_from_json(const Json& j) {
  check_envelope(j, "scan_summary");
  ScanSummary s;
  s.k = j.at("k").get<std::uint64_t>();
  s.n_from = j.at("n_from").get<std::uint64_t>();
  s.n_to = j.at("n_to").get<std::uint64_t>();
  s.lhs_greater_count = j.at("lhs_greater_count").get<std::uint64_t>();
  s.equal_count = j.at("equal_count").get<std::uint64_t>();
  s.rhs_greater_count = j.at("rhs_greater_count").get<std::uint64_t>();
  for (const Json& item : j.at("exceptions"))
    s.exceptions.push_back(
        {item.at("n").get<std::uint64_t>(),
         relation_from_name(item.at("relation").get<std::string>())});
  return s;
}

Json to_json(const ThresholdResult& r) {
  Json j = envelope("threshold");
  j["k"] = r.k;
  j["n_max"] = r.n_max;
  j["threshold"] = r.threshold;
  j["failures"] = r.failures;
  return j;
}

ThresholdResult threshold_from_json(const Json& j) {
  check_envelope(j, "threshold");
  ThresholdResult r;
  r.k = j.at("k").get<std::uint64_t>();
  r.n_max = j.at("n_max").get<std::uint64_t>();
  r.threshold = j.at("threshold").get<std::uint64_t>();
  r.failures = j.at("failures").get<std::vector<std::uint64_t>>();
  return r;
}

Json to_json(const TheoremCheck& c) {
  Json j = envelope("theorem_check");
  j["theorem"] = c.theorem_id;
  j["k"] = c.k;
  j["claimed_from"] = c.claimed_from;
  j["n_max"] = c.n_max;
  j["passed"] = c.passed;
  j["violations"] = c.violations;
  j["equalities"] = c.equalities;
  return j;
}

TheoremCheck theorem_check_from_json(const Json& j) {
  check_envelope(j, "theorem_check");
  TheoremCheck c;
  c.theorem_id = j.at("theorem").get<int>();
  c.k = j.at("k").get<std::uint64_t>();
  c.claimed_from = j.at("claimed_from").get<std::uint64_t>();
  c.n_max = j.at("n_max").get<std::uint64_t>();
  c.passed = j.at("passed").get<bool>();
  c.violations = j.at("violations").get<std::vector<std::uint64_t>>();
  c.equalities = j.at("equalities").get<std::vector<std::uint64_t>>();
  return c;
}

Json to_json(const Certificate& cert) {
  Json j = envelope("certificate");
  j["k"] = cert.k;
  j["c"] = cert.c;
  j["scale"] = to_decimal(cert.scale);
  j["alpha"] = rational_json(cert.alpha);
  Json coeffs = Json::array();
  for (const BigInt& a : cert.coeffs) coeffs.push_back(to_decimal(a));
  j["coeffs"] = std::move(coeffs);
  return j;
}

Certificate certificate_from_json(const Json& j) {
  check_envelope(j, "certificate");
  Certificate cert;
  cert.k = j.at("k").get<std::uint64_t>();
  cert.c = j.at("c").get<std::uint64_t>();
  cert.scale = BigInt(j.at("scale").get<std::string>());
  cert.alpha = rational_from_json(j.at("alpha"));
  for (const Json& a : j.at("coeffs"))
    cert.coeffs.push_back(BigInt(a.get<std::string>()));
  return cert;
}

Json to_json(const TheoremReport& r) {
  Json j = envelope("theorem_report");
  j["k"] = r.k;
  j["c"] = r.bound.c;
  j["n0"] = r.bound.n0;
  j["scale"] = to_decimal(r.certificate.scale);
  Json coeffs = Json::array();
  for (const BigInt& a : r.certificate.coeffs) coeffs.push_back(to_decimal(a));
  j["coeffs"] = std::move(coeffs);
  j["positivity_threshold"] = r.positivity_m;
  j["analytic_from"] = r.analytic_from;
  j["n_min"] = r.n_min;
  j["status"] = status_name(r.status);
  Json bound = Json::object();
  bound["name"] = r.bound.name;
  bound["c"] = r.bound.c;
  bound["n0"] = r.bound.n0;
  bound["provenance"] = r.bound.provenance;
  j["conditional_on"] = std::move(bound);
  j["verified_to"] = r.verified_to;
  j["head_failures"] = r.head_failures;
  return j;
}

TheoremReport theorem_report_from_json(const Json& j) {
  check_envelope(j, "theorem_report");
  TheoremReport r;
  r.k = j.at("k").get<std::uint64_t>();
  const Json& bound = j.at("conditional_on");
  r.bound.name = bound.at("name").get<std::string>();
  r.bound.c = bound.at("c").get<std::uint64_t>();
  r.bound.n0 = bound.at("n0").get<std::uint64_t>();
  r.bound.provenance = bound.at("provenance").get<std::string>();
  r.certificate.k = r.k;
  r.certificate.c = j.at("c").get<std::uint64_t>();
  r.certificate.scale = BigInt(j.at("scale").get<std::string>());
  r.certificate.alpha = Rational(r.certificate.c + 1, r.certificate.c);
  r.certificate.alpha.canonicalize();
  for (const Json& a : j.at("coeffs"))
    r.certificate.coeffs.push_back(BigInt(a.get<std::string>()));
  r.positivity_m = j.at("positivity_threshold").get<std::uint64_t>();
  r.analytic_from = j.at("analytic_from").get<std::uint64_t>();
  r.verified_to = j.at("verified_to").get<std::uint64_t>();
  r.head_failures = j.at("head_failures").get<std::vector<std::uint64_t>>();
  r.n_min = j.at("n_min").get<std::uint64_t>();
  r.status = status_from_name(j.at("status").get<std::string>());
  return r;
}

Json to_json(const LimitSample& s) {
  Json j = envelope("limit_sample");
  j["n"] = s.n;
  j["k"] = s.k;
  j["value"] = rational_json(s.value);
  j["deviation"] = rational_json(s.deviation);
  return j;
}

LimitSample limit_sample_from_json(const Json& j) {
  check_envelope(j, "limit_sample");
  LimitSample s;
  s.n = j.at("n").get<std::uint64_t>();
  s.k = j.at("k").get<std::int64_t>();
  s.value = rational_from_json(j.at("value"));
  s.deviation = rational_from_json(j.at("deviation"));
  return s;
}

Json to_json(const RealLimitSample& s) {
  Json j = envelope("real_limit_sample");
  j["n"] = s.n;
  j["k"] = s.k_label;
  j["precision_bits"] = s.precision_bits;
  j["value_lo"] = s.value_lo;
  j["value_hi"] = s.value_hi;
  j["deviation_lo"] = s.deviation_lo;
  j["deviation_hi"] = s.deviation_hi;
  return j;
}

RealLimitSample real_limit_sample_from_json(const Json& j) {
  check_envelope(j, "real_limit_sample");
  RealLimitSample s;
  s.n = j.at("n").get<std::uint64_t>();
  s.k_label = j.at("k").get<std::string>();
  s.precision_bits = j.at("precision_bits").get<unsigned>();
  s.value_lo = j.at("value_lo").get<std::string>();
  s.value_hi = j.at("value_hi").get<std::string>();
  s.deviation_lo = j.at("deviation_lo").get<std::string>();
  s.deviation_hi = j.at("deviation_hi").get<std::string>();
  return s;
}

Json to_json(const EpsilonThreshold& t) {
  Json j = envelope("epsilon_threshold");
  j["k"] = t.k_label;
  j["epsilon"] = rational_json(t.epsilon);
  j["n_max"] = t.n_max;
  j["threshold"] = t.threshold;
  j["exact"] = t.exact;
  j["precision_bits"] = t.precision_bits;
  j["caveat"] = t.caveat;
  return j;
}

EpsilonThreshold epsilon_threshold_from_json(const Json& j) {
  check_envelope(j, "epsilon_threshold");
  EpsilonThreshold t;
  t.k_label = j.at("k").get<std::string>();
  t.epsilon = rational_from_json(j.at("epsilon"));
  t.n_max = j.at("n_max").get<std::uint64_t>();
  t.threshold = j.at("threshold").get<std::uint64_t>();
  t.exact = j.at("exact").get<bool>();
  t.precision_bits = j.at("precision_bits").get<unsigned>();
  t.caveat = j.at("caveat").get<std::string>();
  return t;
}

Json to_json(const GapCheckReport& r) {
  Json j = envelope("gap_check");
  j["c"] = r.c;
  j["n_max"] = r.n_max;
  if (r.checked_n0)
    j["checked_n0"] = *r.checked_n0;
  else
    j["checked_n0"] = nullptr;
  j["failures"] = r.failures;
  j["max_failure"] = r.max_failure;
  j["holds_beyond_n0"] = r.holds_beyond_n0;
  return j;
}

GapCheckReport gap_check_from_json(const Json& j) {
  check_envelope(j, "gap_check");
  GapCheckReport r;
  r.c = j.at("c").get<std::uint64_t>();
  r.n_max = j.at("n_max").get<std::uint64_t>();
  if (!j.at("checked_n0").is_null())
    r.checked_n0 = j.at("checked_n0").get<std::uint64_t>();
  r.failures = j.at("failures").get<std::vector<std::uint64_t>>();
  r.max_failure = j.at("max_failure").get<std::uint64_t>();
  r.holds_beyond_n0 = j.at("holds_beyond_n0").get<bool>();
  return r;
}

Json to_json(const SieveReport& r) {
  Json j = envelope("sieve");
  j["limit"] = r.limit;
  j["primes"] = r.primes;
  return j;
}

SieveReport sieve_from_json(const Json& j) {
  check_envelope(j, "sieve");
  SieveReport r;
  r.limit = j.at("limit").get<std::uint64_t>();
  r.primes = j.at("primes").get<std::vector<std::uint64_t>>();
  return r;
}

std::string emit_report(const TripleVerdict& v, ReportFormat format) {
  switch (format) {
    case ReportFormat::json:
      return dump(to_json(v));
    case ReportFormat::csv: {
      std::ostringstream out;
      out << "n,k,lhs,rhs,relation\n";
      out << v.n << ',' << v.k << ',' << to_decimal(v.lhs) << ','
          << to_decimal(v.rhs) << ',' << relation_name(v.relation) << '\n';
      return out.str();
    }
    case ReportFormat::text: {
      std::ostringstream out;
      out << "n: " << v.n << "\nk: " << v.k << "\nlhs: " << to_decimal(v.lhs)
          << "\nrhs: " << to_decimal(v.rhs)
          << "\nrelation: " << relation_name(v.relation) << '\n';
      return out.str();
    }
  }
  throw std::logic_error("bad format");
}

std::string emit_report(const ScanSummary& s, ReportFormat format) {
  switch (format) {
    case ReportFormat::json:
      return dump(to_json(s));
    case ReportFormat::csv: {
      std::ostringstream out;
      out << "k,n_from,n_to,lhs_greater_count,equal_count,rhs_greater_count,"
             "exceptions\n";
      out << s.k << ',' << s.n_from << ',' << s.n_to << ','
          << s.lhs_greater_count << ',' << s.equal_count << ','
          << s.rhs_greater_count << ',' << join_exceptions(s.exceptions, ";")
          << '\n';
      return out.str();
    }
    case ReportFormat::text: {
      std::ostringstream out;
      out << "k: " << s.k << "\nrange: [" << s.n_from << ", " << s.n_to
          << "]\nlhs_greater: " << s.lhs_greater_count
          << "\nequal: " << s.equal_count
          << "\nrhs_greater: " << s.rhs_greater_count
          << "\nexceptions: " << join_exceptions(s.exceptions, ", ") << '\n';
      return out.str();
    }
  }
  throw std::logic_error("bad format");
}

std::string emit_report(const ThresholdResult& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::json:
      return dump(to_json(r));
    case ReportFormat::csv: {
      std::ostringstream out;
      out << "k,n_max,threshold,failures\n";
      out << r.k << ',' << r.n_max << ',' << r.threshold << ','
          << join(r.failures, ";") << '\n';
      return out.str();
    }
    case ReportFormat::text: {
      std::ostringstream out;
      out << "k: " << r.k << "\nn_max: " << r.n_max
          << "\nthreshold: " << r.threshold
          << "\nfailures: " << join(r.failures, ", ") << '\n';
      return out.str();
    }
  }
  throw std::logic_error("bad format");
}

std::string emit_report(const TheoremCheck& c, ReportFormat format) {
  switch (format) {
    case ReportFormat::json:
      return dump(to_json(c));
    case ReportFormat::csv: {
      std::ostringstream out;
      out << "theorem,k,claimed_from,n_max,passed,violations,equalities\n";
      out << c.theorem_id << ',' << c.k << ',' << c.claimed_from << ','
          << c.n_max << ',' << (c.passed ? "true" : "false") << ','
          << join(c.violations, ";") << ',' << join(c.equalities, ";") << '\n';
      return out.str();
    }
    case ReportFormat::text: {
      std::ostringstream out;
      out << "theorem: " << c.theorem_id << "\nk: " << c.k
          << "\nclaimed_from: " << c.claimed_from << "\nn_max: " << c.n_max
          << "\npassed: " << (c.passed ? "true" : "false")
          << "\nviolations: " << join(c.violations, ", ")
          << "\nequalities: " << join(c.equalities, ", ") << '\n';
      return out.str();
    }
  }
  throw std::logic_error("bad format");
}

std::string emit_report(const TheoremReport& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::json:
      return dump(to_json(r));
    case ReportFormat::csv: {
      std::ostringstream out;
      out << "k,c,n0,scale,coeffs,positivity_threshold,analytic_from,"
             "verified_to,n_min,status,head_failures\n";
      out << r.k << ',' << r.bound.c << ',' << r.bound.n0 << ','
          << to_decimal(r.certificate.scale) << ','
          << join_coeffs(r.certificate.coeffs, ";") << ',' << r.positivity_m
          << ',' << r.analytic_from << ',' << r.verified_to << ',' << r.n_min
          << ',' << status_name(r.status) << ',' << join(r.head_failures, ";")
          << '\n';
      return out.str();
    }
    case ReportFormat::text: {
      std::ostringstream out;
      out << "k: " << r.k << "\nbound: " << r.bound.name
          << " (c=" << r.bound.c << ", n0=" << r.bound.n0 << ")"
          << "\nscale: " << to_decimal(r.certificate.scale)
          << "\ncoeffs: " << join_coeffs(r.certificate.coeffs, ", ")
          << "\npositivity_threshold: " << r.positivity_m
          << "\nanalytic_from: " << r.analytic_from
          << "\nverified_to: " << r.verified_to
          << "\nhead_failures: " << join(r.head_failures, ", ")
          << "\nn_min: " << r.n_min << "\nstatus: " << status_name(r.status)
          << '\n';
      return out.str();
    }
  }
  throw std::logic_error("bad format");
}

std::string emit_report(const LimitSample& s, ReportFormat format) {
  switch (format) {
    case ReportFormat::json:
      return dump(to_json(s));
    case ReportFormat::csv: {
      std::ostringstream out;
      out << "n,k,value_num,value_den,deviation_num,deviation_den\n";
      out << s.n << ',' << s.k << ',' << numerator_string(s.value) << ','
          << denominator_string(s.value) << ','
          << numerator_string(s.deviation) << ','
          << denominator_string(s.deviation) << '\n';
      return out.str();
    }
    case ReportFormat::text: {
      std::ostringstream out;
      out << "n: " << s.n << "\nk: " << s.k
          << "\nvalue: " << numerator_string(s.value) << "/"
          << denominator_string(s.value)
          << "\ndeviation: " << numerator_string(s.deviation) << "/"
          << denominator_string(s.deviation) << '\n';
      return out.str();
    }
  }
  throw std::logic_error("bad format");
}

std::string emit_report(const RealLimitSample& s, ReportFormat format) {
  switch (format) {
    case ReportFormat::json:
      return dump(to_json(s));
    case ReportFormat::csv: {
      std::ostringstream out;
      out << "n,k,precision_bits,value_lo,value_hi,deviation_lo,"
             "deviation_hi\n";
      out << s.n << ',' << s.k_label << ',' << s.precision_bits << ','
          << s.value_lo << ',' << s.value_hi << ',' << s.deviation_lo << ','
          << s.deviation_hi << '\n';
      return out.str();
    }
    case ReportFormat::text: {
      std::ostringstream out;
      out << "n: " << s.n << "\nk: " << s.k_label
          << "\nprecision_bits: " << s.precision_bits << "\nvalue: ["
          << s.value_lo << ", " << s.value_hi << "]"
          << "\ndeviation: [" << s.deviation_lo << ", " << s.deviation_hi
          << "]" << '\n';
      return out.str();
    }
  }
  throw std::logic_error("bad format");
}

std::string emit_report(const EpsilonThreshold& t, ReportFormat format) {
  switch (format) {
    case ReportFormat::json:
      return dump(to_json(t));
    case ReportFormat::csv: {
      std::ostringstream out;
      out << "k,epsilon_num,epsilon_den,n_max,threshold,exact,"
             "precision_bits\n";
      out << t.k_label << ',' << numerator_string(t.epsilon) << ','
          << denominator_string(t.epsilon) << ',' << t.n_max << ','
          << t.threshold << ',' << (t.exact ? "true" : "false") << ','
          << t.precision_bits << '\n';
      return out.str();
    }
    case ReportFormat::text: {
      std::ostringstream out;
      out << "k: " << t.k_label
          << "\nepsilon: " << numerator_string(t.epsilon) << "/"
          << denominator_string(t.epsilon) << "\nn_max: " << t.n_max
          << "\nthreshold: " << t.threshold
          << "\nexact: " << (t.exact ? "true" : "false")
          << "\nprecision_bits: " << t.precision_bits
          << "\ncaveat: " << t.caveat << '\n';
      return out.str();
    }
  }
  throw std::logic_error("bad format");
}

std::string emit_report(const GapCheckReport& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::json:
      return dump(to_json(r));
    case ReportFormat::csv: {
      std::ostringstream out;
      out << "c,n_max,checked_n0,failures,max_failure,holds_beyond_n0\n";
      out << r.c << ',' << r.n_max << ',';
      if (r.checked_n0) out << *r.checked_n0;
      out << ',' << join(r.failures, ";") << ',' << r.max_failure << ','
          << (r.holds_beyond_n0 ? "true" : "false") << '\n';
      return out.str();
    }
    case ReportFormat::text: {
      std::ostringstream out;
      out << "c: " << r.c << "\nn_max: " << r.n_max << "\nchecked_n0: ";
      if (r.checked_n0)
        out << *r.checked_n0;
      else
        out << "none";
      out << "\nfailures: " << join(r.failures, ", ")
          << "\nmax_failure: " << r.max_failure << "\nholds_beyond_n0: "
          << (r.holds_beyond_n0 ? "true" : "false") << '\n';
      return out.str();
    }
  }
  throw std::logic_error("bad format");
}

std::string emit_report(const SieveReport& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::json:
      return dump(to_json(r));
    case ReportFormat::csv: {
      std::ostringstream out;
      out << "prime\n";
      for (std::uint64_t p : r.primes) out << p << '\n';
      return out.str();
    }
    case ReportFormat::text: {
      std::ostringstream out;
      for (std::uint64_t p : r.primes) out << p << '\n';
      return out.str();
    }
  }
  throw std::logic_error("bad format");
}

std::vector<GapBound> load_gap_bounds(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read gap bound file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_gap_bounds(buffer.str());
}

std::vector<GapBound> parse_gap_bounds(const std::string& json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("gap bound file is not valid JSON: ") +
                      e.what());
  }
  if (!doc.is_array())
    throw ConfigError("gap bound file must hold a JSON array");

  std::vector<GapBound> bounds = builtin_gap_bounds();
  for (const Json& entry : doc) {
    if (!entry.is_object())
      throw ConfigError("gap bound entries must be objects");
    if (!entry.contains("name") || !entry.at("name").is_string())
      throw ConfigError("gap bound entry without a name");
    GapBound bound;
    bound.name = entry.at("name").get<std::string>();
    if (bound.name.empty()) throw ConfigError("gap bound entry without a name");
    for (const GapBound& known : bounds) {
      if (known.name == bound.name)
        throw ConfigError("duplicate gap bound name: " + bound.name);
    }
    if (!entry.contains("c") || !entry.at("c").is_number_unsigned())
      throw ConfigError("gap bound '" + bound.name +
                        "': c must be an unsigned integer");
    if (!entry.contains("n0") || !entry.at("n0").is_number_unsigned())
      throw ConfigError("gap bound '" + bound.name +
                        "': n0 must be an unsigned integer");
    bound.c = entry.at("c").get<std::uint64_t>();
    bound.n0 = entry.at("n0").get<std::uint64_t>();
    if (bound.c < 2)
      throw ConfigError("gap bound '" + bound.name + "': c must be >= 2");
    if (bound.n0 < 1)
      throw ConfigError("gap bound '" + bound.name + "': n0 must be >= 1");
    if (entry.contains("provenance")) {
      if (!entry.at("provenance").is_string())
        throw ConfigError("gap bound '" + bound.name +
                          "': provenance must be a string");
      bound.provenance = entry.at("provenance").get<std::string>();
    }
    bounds.push_back(std::move(bound));
  }
  return bounds;
}

}  // namespace triprimes
