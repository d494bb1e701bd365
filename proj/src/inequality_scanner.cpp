#include "triprimes/inequality_scanner.hpp"

#include <deque>
#include <future>
#include <stdexcept>
#include <utility>

namespace triprimes {

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::lhs_greater: return "lhs_greater";
    case Relation::equal: return "equal";
    case Relation::rhs_greater: return "rhs_greater";
  }
  throw std::logic_error("bad relation");
}

namespace {

Relation relation_from_cmp(int cmp) {
  if (cmp > 0) return Relation::lhs_greater;
  if (cmp < 0) return Relation::rhs_greater;
  return Relation::equal;
}

Relation classify_mpz(const PrimeTriple& t, std::uint64_t k) {
  BigInt lhs = pow_big(t.p1, k) + pow_big(t.p, k);
  BigInt rhs = pow_big(t.p2, k);
  return relation_from_cmp(cmp(lhs, rhs));
}

}  // namespace

TripleVerdict check_triple(const PrimeTriple& t, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("exponent must be >= 1");
  TripleVerdict v;
  v.n = t.n;
  v.k = k;
  v.lhs = pow_big(t.p1, k) + pow_big(t.p, k);
  v.rhs = pow_big(t.p2, k);
  v.relation = relation_from_cmp(cmp(v.lhs, v.rhs));
  return v;
}

Relation classify_triple(const PrimeTriple& t, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("exponent must be >= 1");
  if (k == 1) {
    std::uint64_t lhs = t.p1 + t.p;
    if (lhs > t.p2) return Relation::lhs_greater;
    if (lhs < t.p2) return Relation::rhs_greater;
    return Relation::equal;
  }
  // p2 is the largest of the three, so the whole comparison fits once
  // its power does (sum of two powers stays below 2^127).
  if (pow_fits_uint128(t.p2, k)) {
    uint128 lhs = pow_u128(t.p1, k) + pow_u128(t.p, k);
    uint128 rhs = pow_u128(t.p2, k);
    if (lhs > rhs) return Relation::lhs_greater;
    if (lhs < rhs) return Relation::rhs_greater;
    return Relation::equal;
  }
  return classify_mpz(t, k);
}

namespace {

struct ChunkOutcome {
  std::uint64_t lhs_greater = 0;
  std::uint64_t equal = 0;
  std::uint64_t rhs_greater = 0;
  std::vector<ScanException> exceptions;
};

ChunkOutcome classify_chunk(const std::vector<PrimeTriple>& chunk,
                            std::uint64_t k) {
  ChunkOutcome out;
  for (const PrimeTriple& t : chunk) {
    Relation r = classify_triple(t, k);
    switch (r) {
      case Relation::lhs_greater:
        out.lhs_greater++;
        break;
      case Relation::equal:
        out.equal++;
        out.exceptions.push_back({t.n, r});
        break;
      case Relation::rhs_greater:
        out.rhs_greater++;
        out.exceptions.push_back({t.n, r});
        break;
    }
  }
  return out;
}

void absorb(ScanSummary& summary, ChunkOutcome&& chunk) {
  summary.lhs_greater_count += chunk.lhs_greater;
  summary.equal_count += chunk.equal;
  summary.rhs_greater_count += chunk.rhs_greater;
  summary.exceptions.insert(summary.exceptions.end(),
                            std::make_move_iterator(chunk.exceptions.begin()),
                            std::make_move_iterator(chunk.exceptions.end()));
}

}  // namespace

ScanSummary scan(std::uint64_t k, std::uint64_t n_from, std::uint64_t n_to,
                 const ScanConfig& config) {
  if (k == 0) throw std::invalid_argument("exponent must be >= 1");
  if (n_from == 0 || n_from > n_to)
    throw std::invalid_argument("need 1 <= n_from <= n_to");
  if (config.chunk_size == 0)
    throw std::invalid_argument("chunk_size must be positive");

  ScanSummary summary{k, n_from, n_to, 0, 0, 0, {}};
  const unsigned workers = config.workers == 0 ? 1 : config.workers;

  TripleStream stream(n_to, config.sieve);
  // Skip the head of the stream; triples before n_from still have to be
  // sieved, just not classified.
  for (std::uint64_t n = 1; n < n_from; n++) stream.next();

  std::vector<PrimeTriple> chunk;
  chunk.reserve(config.chunk_size);

  if (workers == 1) {
    while (auto t = stream.next()) {
      chunk.push_back(*t);
      if (chunk.size() == config.chunk_size) {
        absorb(summary, classify_chunk(chunk, k));
        chunk.clear();
      }
    }
    if (!chunk.empty()) absorb(summary, classify_chunk(chunk, k));
    return summary;
  }

  // Chunks are classified in parallel but merged strictly in dispatch
  // order, so output never depends on scheduling.
  std::deque<std::future<ChunkOutcome>> pending;
  auto dispatch = [&](std::vector<PrimeTriple>&& work) {
    pending.push_back(std::async(
        std::launch::async,
        [k](std::vector<PrimeTriple> w) { return classify_chunk(w, k); },
        std::move(work)));
  };
  while (auto t = stream.next()) {
    chunk.push_back(*t);
    if (chunk.size() == config.chunk_size) {
      if (pending.size() == 2 * workers) {
        absorb(summary, pending.front().get());
        pending.pop_front();
      }
      dispatch(std::move(chunk));
      chunk = {};
      chunk.reserve(config.chunk_size);
    }
  }
  if (!chunk.empty()) dispatch(std::move(chunk));
  while (!pending.empty()) {
    absorb(summary, pending.front().get());
    pending.pop_front();
  }
  return summary;
}

ScanSummary merge_summaries(const ScanSummary& a, const ScanSummary& b) {
  if (a.k != b.k) throw std::invalid_argument("summaries disagree on exponent");
  if (b.n_from != a.n_to + 1)
    throw std::invalid_argument("summaries are not adjacent");
  ScanSummary out = a;
  out.n_to = b.n_to;
  out.lhs_greater_count += b.lhs_greater_count;
  out.equal_count += b.equal_count;
  out.rhs_greater_count += b.rhs_greater_count;
  out.exceptions.insert(out.exceptions.end(), b.exceptions.begin(),
                        b.exceptions.end());
  return out;
}

ThresholdResult find_threshold(std::uint64_t k, std::uint64_t n_max,
                               const ScanConfig& config) {
  if (n_max == 0) throw std::invalid_argument("n_max must be >= 1");
  ScanSummary s = scan(k, 1, n_max, config);
  if (!s.exceptions.empty() && s.exceptions.back().n == n_max)
    throw NoThresholdError(std::to_string(k), n_max);
  ThresholdResult result{k, n_max, 1, {}};
  for (const ScanException& e : s.exceptions) result.failures.push_back(e.n);
  if (!result.failures.empty()) result.threshold = result.failures.back() + 1;
  return result;
}

TheoremCheck verify_theorem(int theorem_id, std::uint64_t n_max,
                            const ScanConfig& config) {
  if (theorem_id < 1 || theorem_id > 3)
    throw std::invalid_argument("theorem id must be 1, 2 or 3");
  if (n_max < 10) throw std::invalid_argument("n_max must be >= 10");

  static const std::uint64_t claim_k[] = {1, 2, 3};
  static const std::uint64_t claim_from[] = {1, 4, 9};
  TheoremCheck check;
  check.theorem_id = theorem_id;
  check.k = claim_k[theorem_id - 1];
  check.claimed_from = claim_from[theorem_id - 1];
  check.n_max = n_max;

  ScanSummary s = scan(check.k, check.claimed_from, n_max, config);
  for (const ScanException& e : s.exceptions) {
    if (e.relation == Relation::equal) check.equalities.push_back(e.n);
    // Check 1 claims a non-strict bound, so equality is not a violation
    // there; checks 2 and 3 claim strict inequalities.
    if (theorem_id != 1 || e.relation == Relation::rhs_greater)
      check.violations.push_back(e.n);
  }
  check.passed = check.violations.empty();
  return check;
}

}  // namespace triprimes
