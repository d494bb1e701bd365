#include <doctest.h>

#include <vector>

#include "support/naive_bigint.hpp"
#include "triprimes/errors.hpp"
#include "triprimes/inequality_scanner.hpp"

using namespace triprimes;
using testsupport::NaiveBigint;

TEST_SUITE("inequality_scanner") {

TEST_CASE("check_triple pins the worked examples") {
  TripleVerdict v = check_triple({1, 2, 3, 5}, 1);
  CHECK(v.lhs == 5);
  CHECK(v.rhs == 5);
  CHECK(v.relation == Relation::equal);

  v = check_triple({3, 5, 7, 11}, 2);
  CHECK(v.lhs == 74);
  CHECK(v.rhs == 121);
  CHECK(v.relation == Relation::rhs_greater);

  v = check_triple({4, 7, 11, 13}, 2);
  CHECK(v.lhs == 170);
  CHECK(v.rhs == 169);
  CHECK(v.relation == Relation::lhs_greater);

  v = check_triple({9, 23, 29, 31}, 3);
  CHECK(v.lhs == 36556);
  CHECK(v.rhs == 29791);
  CHECK(v.relation == Relation::lhs_greater);
}

TEST_CASE("exponent zero is rejected") {
  CHECK_THROWS_AS(check_triple({1, 2, 3, 5}, 0), std::invalid_argument);
  CHECK_THROWS_AS(classify_triple({1, 2, 3, 5}, 0), std::invalid_argument);
  CHECK_THROWS_AS(scan(0, 1, 10), std::invalid_argument);
}

TEST_CASE("classify agrees with the materializing check") {
  auto list = triples(400);
  // 64 and 65 straddle the 128-bit fast path for small primes; large k
  // forces the big-integer fallback.
  for (std::uint64_t k : {1, 2, 3, 4, 7, 64, 65, 120}) {
    for (const PrimeTriple& t : list) {
      CHECK(classify_triple(t, k) == check_triple(t, k).relation);
    }
  }
}

TEST_CASE("verdict powers agree with a gmp-free bignum") {
  auto list = triples(1000);
  for (std::uint64_t k : {2, 3, 8}) {
    for (std::size_t i = 0; i < list.size(); i += 17) {
      const PrimeTriple& t = list[i];
      TripleVerdict v = check_triple(t, k);
      NaiveBigint lhs = NaiveBigint::from_u64(t.p1).pow(k).plus(
          NaiveBigint::from_u64(t.p).pow(k));
      NaiveBigint rhs = NaiveBigint::from_u64(t.p2).pow(k);
      CHECK(lhs.str() == to_decimal(v.lhs));
      CHECK(rhs.str() == to_decimal(v.rhs));
      int cmp = lhs.compare(rhs);
      Relation expected = cmp > 0   ? Relation::lhs_greater
                          : cmp < 0 ? Relation::rhs_greater
                                    : Relation::equal;
      CHECK(v.relation == expected);
    }
  }
}

TEST_CASE("scan counts the frozen window") {
  ScanSummary s = scan(2, 1, 500);
  CHECK(s.k == 2);
  CHECK(s.n_from == 1);
  CHECK(s.n_to == 500);
  CHECK(s.lhs_greater_count == 497);
  CHECK(s.equal_count == 0);
  CHECK(s.rhs_greater_count == 3);
  REQUIRE(s.exceptions.size() == 3);
  for (std::size_t i = 0; i < 3; i++) {
    CHECK(s.exceptions[i].n == i + 1);
    CHECK(s.exceptions[i].relation == Relation::rhs_greater);
  }
}

TEST_CASE("scan reports equality only at the first index for k=1") {
  ScanSummary s = scan(1, 1, 1000);
  CHECK(s.rhs_greater_count == 0);
  CHECK(s.equal_count == 1);
  REQUIRE(s.exceptions.size() == 1);
  CHECK(s.exceptions[0].n == 1);
  CHECK(s.exceptions[0].relation == Relation::equal);
}

TEST_CASE("scan of the settled region is clean") {
  ScanSummary s = scan(2, 4, 1000);
  CHECK(s.exceptions.empty());
  CHECK(s.lhs_greater_count == 997);
}

TEST_CASE("scan output is identical for any worker and chunk choice") {
  ScanSummary reference = scan(2, 1, 2000);
  for (unsigned workers : {1u, 2u, 8u}) {
    for (std::size_t chunk : {std::size_t(1), std::size_t(7),
                              std::size_t(100), std::size_t(8192)}) {
      ScanConfig config;
      config.workers = workers;
      config.chunk_size = chunk;
      CHECK(scan(2, 1, 2000, config) == reference);
    }
  }
}

TEST_CASE("a partitioned scan merges to the whole") {
  ScanSummary whole = scan(3, 1, 2000);
  ScanSummary left = scan(3, 1, 777);
  ScanSummary right = scan(3, 778, 2000);
  CHECK(merge_summaries(left, right) == whole);

  CHECK_THROWS_AS(merge_summaries(left, scan(3, 779, 800)),
                  std::invalid_argument);
  CHECK_THROWS_AS(merge_summaries(left, scan(2, 778, 800)),
                  std::invalid_argument);
}

TEST_CASE("scan rejects an empty or inverted range") {
  CHECK_THROWS_AS(scan(2, 0, 10), std::invalid_argument);
  CHECK_THROWS_AS(scan(2, 11, 10), std::invalid_argument);
}

TEST_CASE("find_threshold pins the frozen values") {
  ThresholdResult r = find_threshold(1, 10000);
  CHECK(r.threshold == 2);
  CHECK(r.failures == std::vector<std::uint64_t>{1});

  r = find_threshold(2, 10000);
  CHECK(r.threshold == 4);
  CHECK(r.failures == std::vector<std::uint64_t>{1, 2, 3});

  r = find_threshold(3, 10000);
  CHECK(r.threshold == 9);
  CHECK(r.failures == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 7, 8});

  r = find_threshold(4, 10000);
  CHECK(r.threshold == 12);
  CHECK(r.failures ==
        std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7, 8, 10, 11});

  r = find_threshold(5, 10000);
  CHECK(r.threshold == 16);
  CHECK(r.failures ==
        std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 14, 15});
}

TEST_CASE("the cube inequality already holds at n=6") {
  // 13^3 + 17^3 = 7110 beats 19^3 = 6859, so 6 is absent from the
  // failure list even though 7 and 8 fail.
  TripleVerdict v = check_triple({6, 13, 17, 19}, 3);
  CHECK(v.lhs == 7110);
  CHECK(v.rhs == 6859);
  CHECK(v.relation == Relation::lhs_greater);
}

TEST_CASE("find_threshold throws when the window ends on a failure") {
  CHECK_THROWS_AS(find_threshold(2, 3), NoThresholdError);
  CHECK_THROWS_AS(find_threshold(2, 1), NoThresholdError);
  CHECK(find_threshold(2, 4).threshold == 4);
  try {
    find_threshold(3, 8);
    FAIL("expected NoThresholdError");
  } catch (const NoThresholdError& e) {
    CHECK(e.k_label() == "3");
    CHECK(e.n_max() == 8);
  }
}

TEST_CASE("verify_theorem covers the three claims") {
  TheoremCheck one = verify_theorem(1, 10000);
  CHECK(one.passed);
  CHECK(one.k == 1);
  CHECK(one.claimed_from == 1);
  CHECK(one.violations.empty());
  CHECK(one.equalities == std::vector<std::uint64_t>{1});

  TheoremCheck two = verify_theorem(2, 10000);
  CHECK(two.passed);
  CHECK(two.k == 2);
  CHECK(two.claimed_from == 4);
  CHECK(two.violations.empty());
  CHECK(two.equalities.empty());

  TheoremCheck three = verify_theorem(3, 10000);
  CHECK(three.passed);
  CHECK(three.claimed_from == 9);
  CHECK(three.violations.empty());
}

TEST_CASE("verify_theorem rejects bad input") {
  CHECK_THROWS_AS(verify_theorem(0, 100), std::invalid_argument);
  CHECK_THROWS_AS(verify_theorem(4, 100), std::invalid_argument);
  CHECK_THROWS_AS(verify_theorem(1, 9), std::invalid_argument);
}

}  // TEST_SUITE
