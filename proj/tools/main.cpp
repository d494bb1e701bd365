#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "triprimes/certificate_engine.hpp"
#include "triprimes/errors.hpp"
#include "triprimes/inequality_scanner.hpp"
#include "triprimes/limit_explorer.hpp"
#include "triprimes/prime_engine.hpp"
#include "triprimes/reporting.hpp"

namespace {

using namespace triprimes;

struct GlobalOptions {
  std::string format = "json";
  std::string output;
  std::size_t segment_flags = SieveConfig{}.segment_flags;
  std::uint64_t memory_budget = SieveConfig{}.memory_budget;
  unsigned workers = 1;
  std::string gap_bounds_path;
};

ScanConfig make_scan_config(const GlobalOptions& opts) {
  ScanConfig config;
  config.sieve.segment_flags = opts.segment_flags;
  config.sieve.memory_budget = opts.memory_budget;
  config.workers = opts.workers;
  return config;
}

void write_output(const GlobalOptions& opts, const std::string& content) {
  if (opts.output.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(opts.output, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + opts.output);
  out.write(content.data(), std::streamsize(content.size()));
  if (!out) throw Error("short write to " + opts.output);
}

// Failure diagnostics stay machine readable in json mode; every mode
// also gets a one-line message on stderr.
void emit_error(const GlobalOptions& opts, const char* kind,
                const std::string& message, Json extra = Json::object()) {
  std::cerr << "error: " << message << "\n";
  if (opts.format != "json") return;
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;
  j["type"] = "error";
  j["error"] = kind;
  for (auto& [key, value] : extra.items()) j[key] = value;
  j["message"] = message;
  write_output(opts, j.dump(2) + "\n");
}

std::vector<GapBound> bound_registry(const GlobalOptions& opts) {
  if (opts.gap_bounds_path.empty()) return builtin_gap_bounds();
  return load_gap_bounds(opts.gap_bounds_path);
}

std::string sieve_to_bin(const SieveReport& report) {
  std::string bytes;
  bytes.reserve(report.primes.size() * 8);
  for (std::uint64_t p : report.primes)
    for (int i = 0; i < 8; i++) bytes.push_back(char((p >> (8 * i)) & 0xff));
  return bytes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of power inequalities over consecutive "
               "prime triples"};
  app.require_subcommand(1);
  // global options are accepted after the subcommand name as well
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("--format", opts.format,
                 "report format: json, csv or text (sieve also takes bin)")
      ->default_val("json");
  app.add_option("--output", opts.output, "write the report to this file");
  app.add_option("--segment-size", opts.segment_flags,
                 "sieve segment size in odd-number flags")
      ->envname("TRIPRIMES_SEGMENT_SIZE")
      ->check(CLI::PositiveNumber);
  app.add_option("--memory-budget", opts.memory_budget,
                 "budget in bytes for materialized results")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", opts.workers, "worker threads for scans")
      ->check(CLI::PositiveNumber);
  app.add_option("--gap-bounds", opts.gap_bounds_path,
                 "JSON file with extra gap bounds");

  auto* verify = app.add_subcommand(
      "verify", "scan one of the built-in inequality claims");
  int theorem_id = 0;
  std::uint64_t verify_max_n = 0;
  verify->add_option("--theorem", theorem_id, "claim to check: 1, 2 or 3")
      ->required()
      ->check(CLI::Range(1, 3));
  verify->add_option("--max-n", verify_max_n, "scan indices up to this n")
      ->required()
      ->check(CLI::PositiveNumber);

  auto* threshold = app.add_subcommand(
      "threshold", "find where the strict inequality starts to hold");
  std::uint64_t threshold_k = 0;
  std::uint64_t threshold_max_n = 0;
  threshold->add_option("--k", threshold_k, "integer exponent, >= 1")
      ->required()
      ->check(CLI::PositiveNumber);
  threshold->add_option("--max-n", threshold_max_n, "scan indices up to this n")
      ->required()
      ->check(CLI::PositiveNumber);

  auto* certificate = app.add_subcommand(
      "certificate", "derive a polynomial certificate and assemble the "
                     "conditional theorem");
  std::uint64_t cert_k = 0;
  std::uint64_t cert_c = 0;
  std::uint64_t cert_n0 = 0;
  std::string cert_name;
  std::uint64_t scan_budget = 10000;
  certificate->add_option("--k", cert_k, "exponent to certify, >= 2")
      ->required();
  auto* c_opt = certificate->add_option("--c", cert_c,
                                        "gap bound denominator, >= 2");
  auto* n0_opt = certificate->add_option(
      "--n0", cert_n0, "index the gap bound is asserted beyond");
  auto* name_opt = certificate->add_option(
      "--name", cert_name, "named gap bound from the registry");
  name_opt->excludes(c_opt)->excludes(n0_opt);
  c_opt->needs(n0_opt);
  n0_opt->needs(c_opt);
  certificate->add_option("--scan-budget", scan_budget,
                          "largest head index the scan may verify")
      ->check(CLI::PositiveNumber);

  auto* limit = app.add_subcommand(
      "limit", "epsilon threshold for the deviation of a_n^k from 2");
  std::string limit_k;
  std::string limit_epsilon;
  std::uint64_t limit_max_n = 0;
  unsigned limit_precision = 128;
  limit->add_option("--k", limit_k, "exponent: integer, decimal or fraction")
      ->required();
  limit->add_option("--epsilon", limit_epsilon,
                    "positive tolerance, decimal or fraction")
      ->required();
  limit->add_option("--max-n", limit_max_n, "scan indices up to this n")
      ->required()
      ->check(CLI::PositiveNumber);
  limit->add_option("--precision", limit_precision,
                    "interval precision in bits for non-integer exponents");

  auto* gapcheck = app.add_subcommand(
      "gapcheck", "probe a gap bound empirically over the small primes");
  std::uint64_t gap_c = 0;
  std::uint64_t gap_max_n = 0;
  std::optional<std::uint64_t> gap_n0;
  gapcheck->add_option("--c", gap_c, "gap bound denominator, >= 2")
      ->required();
  gapcheck->add_option("--max-n", gap_max_n, "check indices up to this n")
      ->required()
      ->check(CLI::PositiveNumber);
  gapcheck->add_option("--n0", gap_n0,
                       "fail when any violation lies beyond this index");

  auto* sieve = app.add_subcommand("sieve", "list the primes up to a limit");
  std::uint64_t sieve_limit = 0;
  sieve->add_option("--limit", sieve_limit, "upper bound, inclusive")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    const ScanConfig config = make_scan_config(opts);

    if (*sieve) {
      SieveReport report{sieve_limit,
                         sieve_upto(sieve_limit, config.sieve)};
      if (opts.format == "bin") {
        write_output(opts, sieve_to_bin(report));
      } else {
        write_output(opts, emit_report(report, parse_format(opts.format)));
      }
      return 0;
    }

    const ReportFormat format = parse_format(opts.format);

    if (*verify) {
      TheoremCheck check = verify_theorem(theorem_id, verify_max_n, config);
      write_output(opts, emit_report(check, format));
      return check.passed ? 0 : 1;
    }

    if (*threshold) {
      ThresholdResult result =
          find_threshold(threshold_k, threshold_max_n, config);
      write_output(opts, emit_report(result, format));
      return 0;
    }

    if (*certificate) {
      GapBound bound;
      if (!cert_name.empty()) {
        bool found = false;
        for (const GapBound& known : bound_registry(opts)) {
          if (known.name == cert_name) {
            bound = known;
            found = true;
            break;
          }
        }
        if (!found) throw ConfigError("unknown gap bound: " + cert_name);
      } else if (c_opt->count() && n0_opt->count()) {
        bound = {"custom", cert_c, cert_n0, "supplied on the command line"};
      } else {
        throw ConfigError("certificate needs either --name or --c with --n0");
      }
      TheoremReport report = assemble_theorem(cert_k, bound, scan_budget,
                                              config);
      write_output(opts, emit_report(report, format));
      return report.status == AssemblyStatus::complete ? 0 : 1;
    }

    if (*limit) {
      Rational k = rational_from_string(limit_k);
      Rational epsilon = rational_from_string(limit_epsilon);
      EpsilonThreshold result;
      if (is_integral(k)) {
        BigInt num = k.get_num();
        if (!num.fits_slong_p())
          throw ConfigError("integer exponent out of range: " + limit_k);
        result = epsilon_threshold(num.get_si(), epsilon, limit_max_n,
                                   config);
      } else {
        result = epsilon_threshold_real(k, epsilon, limit_max_n,
                                        limit_precision, config);
      }
      write_output(opts, emit_report(result, format));
      return 0;
    }

    if (*gapcheck) {
      GapCheckReport report =
          gap_check(gap_c, gap_max_n, gap_n0, config.sieve);
      write_output(opts, emit_report(report, format));
      return report.holds_beyond_n0 ? 0 : 1;
    }

    return 4;
  } catch (const WeakBoundError& e) {
    Json extra = Json::object();
    extra["k"] = e.k();
    extra["c"] = e.c();
    extra["leading_coefficient"] = to_decimal(e.leading_coefficient());
    emit_error(opts, "weak_bound", e.what(), extra);
    return 1;
  } catch (const NoThresholdError& e) {
    Json extra = Json::object();
    extra["k"] = e.k_label();
    extra["n_max"] = e.n_max();
    emit_error(opts, "no_threshold", e.what(), extra);
    return 1;
  } catch (const PrecisionError& e) {
    emit_error(opts, "precision", e.what());
    return 3;
  } catch (const ResourceLimitError& e) {
    emit_error(opts, "resource_limit", e.what());
    return 3;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
