#include <doctest.h>
#include <mpfr.h>

#include <string>

#include "triprimes/errors.hpp"
#include "triprimes/limit_explorer.hpp"

using namespace triprimes;

namespace {

// Reads the outward decimal bounds back at higher precision and checks
// they bracket the reference value.
bool encloses(const std::string& lo_s, const std::string& hi_s,
              const std::string& reference) {
  mpfr_t lo, hi, ref;
  mpfr_inits2(256, lo, hi, ref, (mpfr_ptr) nullptr);
  int rc = mpfr_set_str(lo, lo_s.c_str(), 10, MPFR_RNDD);
  rc |= mpfr_set_str(hi, hi_s.c_str(), 10, MPFR_RNDU);
  rc |= mpfr_set_str(ref, reference.c_str(), 10, MPFR_RNDN);
  bool ok = rc == 0 && mpfr_cmp(lo, ref) <= 0 && mpfr_cmp(ref, hi) <= 0;
  mpfr_clears(lo, hi, ref, (mpfr_ptr) nullptr);
  return ok;
}

bool tighter_than(const std::string& lo_s, const std::string& hi_s,
                  int width_exp) {
  mpfr_t lo, hi, width, bound;
  mpfr_inits2(256, lo, hi, width, bound, (mpfr_ptr) nullptr);
  mpfr_set_str(lo, lo_s.c_str(), 10, MPFR_RNDD);
  mpfr_set_str(hi, hi_s.c_str(), 10, MPFR_RNDU);
  mpfr_sub(width, hi, lo, MPFR_RNDU);
  mpfr_set_ui_2exp(bound, 1, width_exp, MPFR_RNDN);
  bool ok = mpfr_cmp(width, bound) < 0;
  mpfr_clears(lo, hi, width, bound, (mpfr_ptr) nullptr);
  return ok;
}

}  // namespace

TEST_SUITE("limit_explorer") {

TEST_CASE("a_value pins the frozen samples") {
  LimitSample s = a_value(std::uint64_t(1), std::int64_t(1));
  CHECK(s.value == 1);
  CHECK(s.deviation == 1);

  s = a_value(std::uint64_t(4), std::int64_t(2));
  CHECK(s.value == Rational(170, 169));
  CHECK(s.deviation == Rational(168, 169));

  s = a_value(std::uint64_t(5), std::int64_t(0));
  CHECK(s.value == 2);
  CHECK(s.deviation == 0);

  s = a_value(std::uint64_t(10), std::int64_t(-1));
  CHECK(s.value == Rational(2220, 899));
  CHECK(s.deviation == Rational(422, 899));

  CHECK(a_value(PrimeTriple{4, 7, 11, 13}, 2).value == Rational(170, 169));
}

TEST_CASE("deviation_bound pins and dominates") {
  CHECK(deviation_bound(std::uint64_t(1), std::int64_t(1)) == Rational(6, 5));
  CHECK(deviation_bound(std::uint64_t(4), std::int64_t(2)) ==
        Rational(240, 169));
  CHECK_THROWS_AS(deviation_bound(std::uint64_t(1), std::int64_t(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(deviation_bound(std::uint64_t(1), std::int64_t(-1)),
                  std::invalid_argument);
}

TEST_CASE("positive exponents stay below two, negative above") {
  TripleStream stream(2000);
  while (auto t = stream.next()) {
    for (std::int64_t k : {1, 2, 3, 5}) {
      LimitSample s = a_value(*t, k);
      CHECK(s.value < 2);
      CHECK(s.deviation == 2 - s.value);
      CHECK(s.deviation <= deviation_bound(*t, k));
    }
    LimitSample neg = a_value(*t, -2);
    CHECK(neg.value > 2);
    CHECK(neg.deviation == neg.value - 2);
  }
}

TEST_CASE("a_value sits on the same side as the power comparison") {
  TripleStream stream(500);
  while (auto t = stream.next()) {
    LimitSample s = a_value(*t, 2);
    Relation r = classify_triple(*t, 2);
    CHECK((s.value > 1) == (r == Relation::lhs_greater));
    CHECK((s.value == 1) == (r == Relation::equal));
  }
}

TEST_CASE("epsilon thresholds over the scanned window") {
  CHECK(epsilon_threshold(2, Rational(1, 2), 10000).threshold == 16);
  CHECK(epsilon_threshold(2, Rational(1, 10), 10000).threshold == 217);
  CHECK(epsilon_threshold(1, Rational(3, 2), 1000).threshold == 1);
  CHECK(epsilon_threshold(2, Rational(2), 100).threshold == 1);
  CHECK(epsilon_threshold(3, Rational(1, 4), 2000).threshold == 66);
  CHECK(epsilon_threshold(-1, Rational(1, 10), 2000).threshold == 66);
  CHECK(epsilon_threshold(-2, Rational(1, 2), 2000).threshold == 30);

  EpsilonThreshold t = epsilon_threshold(2, Rational(1, 2), 10000);
  CHECK(t.k_label == "2");
  CHECK(t.epsilon == Rational(1, 2));
  CHECK(t.n_max == 10000);
  CHECK(t.exact);
  CHECK(t.precision_bits == 0);
  CHECK(t.caveat == kEpsilonTailCaveat);
  CHECK(t.caveat.find("n_max") != std::string::npos);
}

TEST_CASE("epsilon_threshold rejects unusable input") {
  CHECK_THROWS_AS(epsilon_threshold(2, Rational(0), 100),
                  std::invalid_argument);
  CHECK_THROWS_AS(epsilon_threshold(2, Rational(-1, 2), 100),
                  std::invalid_argument);
  CHECK_THROWS_AS(epsilon_threshold(2, Rational(1, 2), 0),
                  std::invalid_argument);
}

TEST_CASE("epsilon_threshold throws when the window ends at or above epsilon") {
  try {
    epsilon_threshold(2, Rational(1, 1000), 30);
    FAIL("expected NoThresholdError");
  } catch (const NoThresholdError& e) {
    CHECK(e.k_label() == "2");
    CHECK(e.n_max() == 30);
  }
}

TEST_CASE("interval samples bracket high-precision references") {
  RealLimitSample s =
      a_value_real(std::uint64_t(4), rational_from_string("5/2"), 128);
  CHECK(s.k_label == "5/2");
  CHECK(s.precision_bits == 128);
  CHECK(encloses(s.value_lo, s.value_hi,
                 "0.8713608368728140776702299993860039212643"));
  CHECK(encloses(s.deviation_lo, s.deviation_hi,
                 "1.1286391631271859223297700006139960787357"));
  CHECK(tighter_than(s.value_lo, s.value_hi, -100));

  s = a_value_real(std::uint64_t(4), rational_from_string("0.5"), 128);
  CHECK(s.k_label == "1/2");
  CHECK(encloses(s.value_lo, s.value_hi,
                 "1.653665596713142654819696662802144770503"));

  s = a_value_real(std::uint64_t(1), rational_from_string("3/2"), 128);
  CHECK(encloses(s.value_lo, s.value_hi,
                 "0.7177402143583603727814233315285054359975"));
  CHECK(encloses(s.deviation_lo, s.deviation_hi,
                 "1.2822597856416396272185766684714945640025"));

  s = a_value_real(std::uint64_t(10), rational_from_string("-1/2"), 128);
  CHECK(encloses(s.value_lo, s.value_hi,
                 "2.222037046525788845132391172527209221059"));
  CHECK(encloses(s.deviation_lo, s.deviation_hi,
                 "0.222037046525788845132391172527209221059"));
}

TEST_CASE("interval samples enclose the exact value at integer exponents") {
  RealLimitSample s =
      a_value_real(std::uint64_t(4), rational_from_string("2"), 192);
  mpfr_t lo, hi;
  mpfr_inits2(256, lo, hi, (mpfr_ptr) nullptr);
  REQUIRE(mpfr_set_str(lo, s.value_lo.c_str(), 10, MPFR_RNDD) == 0);
  REQUIRE(mpfr_set_str(hi, s.value_hi.c_str(), 10, MPFR_RNDU) == 0);
  Rational exact(170, 169);
  CHECK(mpfr_cmp_q(lo, exact.get_mpq_t()) <= 0);
  CHECK(mpfr_cmp_q(hi, exact.get_mpq_t()) >= 0);
  mpfr_clears(lo, hi, (mpfr_ptr) nullptr);
}

TEST_CASE("interval threshold agrees with the exact path at integer k") {
  EpsilonThreshold t = epsilon_threshold_real(rational_from_string("2"),
                                              Rational(1, 2), 10000, 128);
  CHECK(t.threshold == 16);
  CHECK_FALSE(t.exact);
  CHECK(t.precision_bits == 128);
  CHECK(t.caveat == kEpsilonTailCaveat);
}

TEST_CASE("a straddling enclosure raises a precision error") {
  // epsilon matches the deviation at n=1 for k = 3/2 to sixteen decimal
  // digits; eight bits cannot split them.
  Rational eps = rational_from_string("1.2822597856416396");
  CHECK_THROWS_AS(
      epsilon_threshold_real(rational_from_string("3/2"), eps, 10, 8),
      PrecisionError);
}

TEST_CASE("interval threshold reports a window that never settles") {
  try {
    epsilon_threshold_real(rational_from_string("1/2"), Rational(1, 100), 20,
                           128);
    FAIL("expected NoThresholdError");
  } catch (const NoThresholdError& e) {
    CHECK(e.k_label() == "1/2");
    CHECK(e.n_max() == 20);
  }
}

TEST_CASE("precision limits are enforced") {
  Rational half = rational_from_string("1/2");
  CHECK_THROWS_AS(a_value_real(std::uint64_t(1), half, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      epsilon_threshold_real(half, Rational(1, 2), 10, (1u << 20) + 1),
      ResourceLimitError);
}

}  // TEST_SUITE
