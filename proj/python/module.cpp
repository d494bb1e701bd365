#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "triprimes/certificate_engine.hpp"
#include "triprimes/errors.hpp"
#include "triprimes/inequality_scanner.hpp"
#include "triprimes/limit_explorer.hpp"
#include "triprimes/prime_engine.hpp"
#include "triprimes/reporting.hpp"

namespace py = pybind11;

namespace {

triprimes::BigInt big_from_py(py::handle h) {
  return triprimes::BigInt(std::string(py::str(h)));
}

py::object big_to_py(const triprimes::BigInt& v) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(triprimes::to_decimal(v).c_str(), nullptr, 10));
}

}  // namespace

namespace pybind11::detail {

// mpz_class travels as a plain python int, both directions via the
// decimal rendering (exact, no word-size limit).
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr()) || PyBool_Check(src.ptr())) return false;
    value = big_from_py(src);
    return true;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return big_to_py(v).release();
  }
};

// mpq_class maps to fractions.Fraction; plain ints are accepted on the
// way in.
template <>
struct type_caster<mpq_class> {
  PYBIND11_TYPE_CASTER(mpq_class, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (PyFloat_Check(src.ptr()) || PyBool_Check(src.ptr())) return false;
    if (PyLong_Check(src.ptr())) {
      value = mpq_class(big_from_py(src));
      return true;
    }
    if (!hasattr(src, "numerator") || !hasattr(src, "denominator"))
      return false;
    object num = getattr(src, "numerator");
    object den = getattr(src, "denominator");
    if (!PyLong_Check(num.ptr()) || !PyLong_Check(den.ptr())) return false;
    triprimes::BigInt den_big = big_from_py(den);
    if (sgn(den_big) <= 0) return false;
    value = mpq_class(big_from_py(num), den_big);
    value.canonicalize();
    return true;
  }

  static handle cast(const mpq_class& v, return_value_policy, handle) {
    object fraction = module_::import("fractions").attr("Fraction");
    return fraction(big_to_py(triprimes::BigInt(v.get_num())),
                    big_to_py(triprimes::BigInt(v.get_den())))
        .release();
  }
};

}  // namespace pybind11::detail

namespace {

using namespace triprimes;

template <typename T, typename Class>
void add_report_method(Class& cls) {
  cls.def(
      "report",
      [](const T& self, const std::string& format) {
        return emit_report(self, parse_format(format));
      },
      py::arg("format") = "json");
}

}  // namespace

PYBIND11_MODULE(triprimes, m) {
  m.doc() = "exact power inequalities over consecutive prime triples";

  auto error_base = py::register_exception<Error>(m, "Error");
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError",
                                             error_base);
  py::register_exception<ConfigError>(m, "ConfigError", error_base);
  py::register_exception<PrecisionError>(m, "PrecisionError", error_base);
  py::register_exception<WeakBoundError>(m, "WeakBoundError", error_base);
  py::register_exception<NoThresholdError>(m, "NoThresholdError", error_base);

  py::enum_<Relation>(m, "Relation")
      .value("lhs_greater", Relation::lhs_greater)
      .value("equal", Relation::equal)
      .value("rhs_greater", Relation::rhs_greater);

  py::enum_<AssemblyStatus>(m, "AssemblyStatus")
      .value("complete", AssemblyStatus::complete)
      .value("head_gap", AssemblyStatus::head_gap);

  py::class_<PrimeTriple>(m, "PrimeTriple")
      .def(py::init<std::uint64_t, std::uint64_t, std::uint64_t,
                    std::uint64_t>(),
           py::arg("n"), py::arg("p"), py::arg("p1"), py::arg("p2"))
      .def_readonly("n", &PrimeTriple::n)
      .def_readonly("p", &PrimeTriple::p)
      .def_readonly("p1", &PrimeTriple::p1)
      .def_readonly("p2", &PrimeTriple::p2)
      .def("__repr__", [](const PrimeTriple& t) {
        return "PrimeTriple(n=" + std::to_string(t.n) +
               ", p=" + std::to_string(t.p) + ", p1=" + std::to_string(t.p1) +
               ", p2=" + std::to_string(t.p2) + ")";
      });

  auto verdict = py::class_<TripleVerdict>(m, "TripleVerdict")
                     .def_readonly("n", &TripleVerdict::n)
                     .def_readonly("k", &TripleVerdict::k)
                     .def_readonly("lhs", &TripleVerdict::lhs)
                     .def_readonly("rhs", &TripleVerdict::rhs)
                     .def_readonly("relation", &TripleVerdict::relation);
  add_report_method<TripleVerdict>(verdict);

  py::class_<ScanException>(m, "ScanException")
      .def_readonly("n", &ScanException::n)
      .def_readonly("relation", &ScanException::relation);

  auto summary =
      py::class_<ScanSummary>(m, "ScanSummary")
          .def_readonly("k", &ScanSummary::k)
          .def_readonly("n_from", &ScanSummary::n_from)
          .def_readonly("n_to", &ScanSummary::n_to)
          .def_readonly("lhs_greater_count", &ScanSummary::lhs_greater_count)
          .def_readonly("equal_count", &ScanSummary::equal_count)
          .def_readonly("rhs_greater_count", &ScanSummary::rhs_greater_count)
          .def_readonly("exceptions", &ScanSummary::exceptions);
  add_report_method<ScanSummary>(summary);

  auto threshold = py::class_<ThresholdResult>(m, "ThresholdResult")
                       .def_readonly("k", &ThresholdResult::k)
                       .def_readonly("n_max", &ThresholdResult::n_max)
                       .def_readonly("threshold", &ThresholdResult::threshold)
                       .def_readonly("failures", &ThresholdResult::failures);
  add_report_method<ThresholdResult>(threshold);

  auto check = py::class_<TheoremCheck>(m, "TheoremCheck")
                   .def_readonly("theorem_id", &TheoremCheck::theorem_id)
                   .def_readonly("k", &TheoremCheck::k)
                   .def_readonly("claimed_from", &TheoremCheck::claimed_from)
                   .def_readonly("n_max", &TheoremCheck::n_max)
                   .def_readonly("passed", &TheoremCheck::passed)
                   .def_readonly("violations", &TheoremCheck::violations)
                   .def_readonly("equalities", &TheoremCheck::equalities);
  add_report_method<TheoremCheck>(check);

  py::class_<GapBound>(m, "GapBound")
      .def(py::init<>())
      .def(py::init<std::string, std::uint64_t, std::uint64_t, std::string>(),
           py::arg("name"), py::arg("c"), py::arg("n0"),
           py::arg("provenance") = "")
      .def_readwrite("name", &GapBound::name)
      .def_readwrite("c", &GapBound::c)
      .def_readwrite("n0", &GapBound::n0)
      .def_readwrite("provenance", &GapBound::provenance);

  py::class_<Certificate>(m, "Certificate")
      .def_readonly("k", &Certificate::k)
      .def_readonly("c", &Certificate::c)
      .def_readonly("coeffs", &Certificate::coeffs)
      .def_readonly("scale", &Certificate::scale)
      .def_readonly("alpha", &Certificate::alpha);

  auto report = py::class_<TheoremReport>(m, "TheoremReport")
                    .def_readonly("k", &TheoremReport::k)
                    .def_readonly("bound", &TheoremReport::bound)
                    .def_readonly("certificate", &TheoremReport::certificate)
                    .def_readonly("positivity_m", &TheoremReport::positivity_m)
                    .def_readonly("analytic_from", &TheoremReport::analytic_from)
                    .def_readonly("verified_to", &TheoremReport::verified_to)
                    .def_readonly("head_failures", &TheoremReport::head_failures)
                    .def_readonly("n_min", &TheoremReport::n_min)
                    .def_readonly("status", &TheoremReport::status);
  add_report_method<TheoremReport>(report);

  auto sample = py::class_<LimitSample>(m, "LimitSample")
                    .def_readonly("n", &LimitSample::n)
                    .def_readonly("k", &LimitSample::k)
                    .def_readonly("value", &LimitSample::value)
                    .def_readonly("deviation", &LimitSample::deviation);
  add_report_method<LimitSample>(sample);

  auto real_sample =
      py::class_<RealLimitSample>(m, "RealLimitSample")
          .def_readonly("n", &RealLimitSample::n)
          .def_readonly("k_label", &RealLimitSample::k_label)
          .def_readonly("precision_bits", &RealLimitSample::precision_bits)
          .def_readonly("value_lo", &RealLimitSample::value_lo)
          .def_readonly("value_hi", &RealLimitSample::value_hi)
          .def_readonly("deviation_lo", &RealLimitSample::deviation_lo)
          .def_readonly("deviation_hi", &RealLimitSample::deviation_hi);
  add_report_method<RealLimitSample>(real_sample);

  auto eps = py::class_<EpsilonThreshold>(m, "EpsilonThreshold")
                 .def_readonly("k_label", &EpsilonThreshold::k_label)
                 .def_readonly("epsilon", &EpsilonThreshold::epsilon)
                 .def_readonly("n_max", &EpsilonThreshold::n_max)
                 .def_readonly("threshold", &EpsilonThreshold::threshold)
                 .def_readonly("exact", &EpsilonThreshold::exact)
                 .def_readonly("precision_bits", &EpsilonThreshold::precision_bits)
                 .def_readonly("caveat", &EpsilonThreshold::caveat);
  add_report_method<EpsilonThreshold>(eps);

  auto gap_report =
      py::class_<GapCheckReport>(m, "GapCheckReport")
          .def_readonly("c", &GapCheckReport::c)
          .def_readonly("n_max", &GapCheckReport::n_max)
          .def_readonly("checked_n0", &GapCheckReport::checked_n0)
          .def_readonly("failures", &GapCheckReport::failures)
          .def_readonly("max_failure", &GapCheckReport::max_failure)
          .def_readonly("holds_beyond_n0", &GapCheckReport::holds_beyond_n0);
  add_report_method<GapCheckReport>(gap_report);

  m.def(
      "sieve_upto", [](std::uint64_t limit) { return sieve_upto(limit); },
      py::arg("limit"), py::call_guard<py::gil_scoped_release>());
  m.def(
      "nth_prime", [](std::uint64_t n) { return nth_prime(n); }, py::arg("n"),
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "triples", [](std::uint64_t n_max) { return triples(n_max); },
      py::arg("n_max"), py::call_guard<py::gil_scoped_release>());

  m.def(
      "check_triple",
      [](const PrimeTriple& t, std::uint64_t k) { return check_triple(t, k); },
      py::arg("triple"), py::arg("k"));
  m.def(
      "classify_triple",
      [](const PrimeTriple& t, std::uint64_t k) {
        return classify_triple(t, k);
      },
      py::arg("triple"), py::arg("k"));
  m.def(
      "scan",
      [](std::uint64_t k, std::uint64_t n_from, std::uint64_t n_to,
         unsigned workers) {
        ScanConfig config;
        config.workers = workers;
        return scan(k, n_from, n_to, config);
      },
      py::arg("k"), py::arg("n_from"), py::arg("n_to"), py::arg("workers") = 1,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "find_threshold",
      [](std::uint64_t k, std::uint64_t n_max) {
        return find_threshold(k, n_max);
      },
      py::arg("k"), py::arg("n_max"),
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "verify_theorem",
      [](int theorem_id, std::uint64_t n_max) {
        return verify_theorem(theorem_id, n_max);
      },
      py::arg("theorem_id"), py::arg("n_max"),
      py::call_guard<py::gil_scoped_release>());

  m.def("builtin_gap_bounds", &builtin_gap_bounds);
  m.def(
      "derive_certificate",
      [](std::uint64_t k, const GapBound& bound) {
        return derive_certificate(k, bound);
      },
      py::arg("k"), py::arg("bound"));
  m.def("evaluate_certificate", &evaluate_certificate, py::arg("certificate"),
        py::arg("p"));
  m.def("positivity_threshold", &positivity_threshold, py::arg("certificate"));
  m.def(
      "assemble_theorem",
      [](std::uint64_t k, const GapBound& bound, std::uint64_t scan_budget) {
        return assemble_theorem(k, bound, scan_budget);
      },
      py::arg("k"), py::arg("bound"), py::arg("scan_budget") = 10000,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "gap_check",
      [](std::uint64_t c, std::uint64_t n_max,
         std::optional<std::uint64_t> n0) { return gap_check(c, n_max, n0); },
      py::arg("c"), py::arg("n_max"), py::arg("n0") = py::none(),
      py::call_guard<py::gil_scoped_release>());
  m.def("parse_gap_bounds", &parse_gap_bounds, py::arg("json_text"));
  m.def("load_gap_bounds", &load_gap_bounds, py::arg("path"));

  m.def(
      "a_value",
      [](const PrimeTriple& t, std::int64_t k) { return a_value(t, k); },
      py::arg("triple"), py::arg("k"));
  m.def(
      "a_value", [](std::uint64_t n, std::int64_t k) { return a_value(n, k); },
      py::arg("n"), py::arg("k"));
  m.def(
      "deviation_bound",
      [](std::uint64_t n, std::int64_t k) { return deviation_bound(n, k); },
      py::arg("n"), py::arg("k"));
  m.def(
      "epsilon_threshold",
      [](std::int64_t k, const Rational& epsilon, std::uint64_t n_max) {
        return epsilon_threshold(k, epsilon, n_max);
      },
      py::arg("k"), py::arg("epsilon"), py::arg("n_max"),
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "a_value_real",
      [](std::uint64_t n, const Rational& k, unsigned precision_bits) {
        return a_value_real(n, k, precision_bits);
      },
      py::arg("n"), py::arg("k"), py::arg("precision_bits") = 128);
  m.def(
      "epsilon_threshold_real",
      [](const Rational& k, const Rational& epsilon, std::uint64_t n_max,
         unsigned precision_bits) {
        return epsilon_threshold_real(k, epsilon, n_max, precision_bits);
      },
      py::arg("k"), py::arg("epsilon"), py::arg("n_max"),
      py::arg("precision_bits") = 128,
      py::call_guard<py::gil_scoped_release>());
}
