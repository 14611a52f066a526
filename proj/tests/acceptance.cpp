// Acceptance suite: one PASS/FAIL line per criterion.  Every check is exact;
// the only tolerances are the wall-clock limits below.  Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ffstat/cli.hpp"
#include "ffstat/ffstat.hpp"
#include "oracle.hpp"

using namespace ffstat;

namespace {

// Wall-clock limits in seconds, one per criterion.
constexpr double kLimitPpt = 30;
constexpr double kLimitMean = 120;
constexpr double kLimitOracle = 120;
constexpr double kLimitCycle = 10;
constexpr double kLimitM0 = 30;
constexpr double kLimitM1 = 60;
constexpr double kLimitRadical = 120;
constexpr double kLimitDecomposition = 120;
constexpr double kLimitScans = 600;  // not stated for criterion 9; generous cap
constexpr double kLimitTrend = 300;
constexpr double kLimitDeterminism = 60;

// Worker count for the multi-threaded runs.
constexpr unsigned kManyThreads = 4;

struct Check {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;  // keep the first failure
    ok = false;
  }
};

std::uint64_t upow(std::uint64_t q, int e) { return oracle::ipow(q, e); }

Poly tpow(const Field& F, int k) { return Poly::monomial(F, k, F.one()); }

nlohmann::json load(const std::string& name) {
  std::ifstream in(std::string(FFSTAT_TEST_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing baseline " + name);
  return nlohmann::json::parse(in);
}

ScanOptions scan_options(unsigned threads) {
  ScanOptions o;
  o.threads = threads;
  return o;
}

// 1. Sum of Lambda over M(k, q) is q^k.
Check ppt_identity() {
  Check c;
  for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
    const Field& F = field_of_order(q);
    for (int k = 1; k <= 6; ++k) {
      std::uint64_t sum = 0;
      for (std::uint64_t idx = 0; idx < upow(q, k); ++idx) sum += von_mangoldt(Poly::monic_from_index(F, k, idx));
      if (sum != upow(q, k)) c.fail("q=" + std::to_string(q) + " k=" + std::to_string(k) + " sum " + std::to_string(sum));
    }
  }
  return c;
}

// 2. Mean of nu(.; m) equals q^{m+1}(1 - q^{-k}).
Check mean_identity() {
  Check c;
  for (std::uint64_t q : {2u, 3u, 5u}) {
    const Field& F = field_of_order(q);
    for (int k = 2; k <= 6; ++k)
      for (int m = 1; m < k; ++m) {
        const MeanVariance mv = mean_variance_nu(F, k, m);
        if (mv.mean != mean_nu_closed_form(q, k, m))
          c.fail("q=" + std::to_string(q) + " k=" + std::to_string(k) + " m=" + std::to_string(m) + " mean " +
                 to_string(mv.mean));
      }
  }
  return c;
}

// 3. Exhaustive irreducible counts and full type censuses against the
// closed forms.
Check oracle_equivalence() {
  Check c;
  for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
    const Field& F = field_of_order(q);
    for (int k = 1; k <= 6; ++k) {
      std::uint64_t irreducible = 0;
      for (std::uint64_t idx = 0; idx < upow(q, k); ++idx)
        if (is_irreducible(Poly::monic_from_index(F, k, idx))) ++irreducible;
      const std::string at = "q=" + std::to_string(q) + " k=" + std::to_string(k);
      if (BigInt(irreducible) != exact_prime_count(q, k)) c.fail(at + " irreducible count " + std::to_string(irreducible));
      const TypeCensus census = interval_counts(IntervalSpec(tpow(F, k), k - 1));
      for (const auto& lambda : partitions_of(k))
        if (BigInt(census.at(lambda)) != exact_type_count(q, k, lambda)) c.fail(at + " type " + lambda.to_string());
    }
  }
  return c;
}

// 4. Cycle-type probabilities against a census of all permutations.
Check cycle_law() {
  Check c;
  for (int k = 1; k <= 7; ++k) {
    const auto census = oracle::cycle_census(k);
    std::uint64_t fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    for (const auto& lambda : partitions_of(k)) {
      const auto it = census.find(lambda.parts());
      const std::uint64_t n = it == census.end() ? 0 : it->second;
      if (cycle_type_probability(lambda) != Rational(BigInt(n), BigInt(fact))) c.fail("k=" + std::to_string(k) + " " + lambda.to_string());
    }
  }
  return c;
}

// 5. Irreducibles among t^k + a against the closed form.
Check m0_closed_form() {
  Check c;
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u})
    for (int k = 2; k <= 6; ++k) {
      const CounterexampleResult r = counterexample_m0(field_of_order(q), k);
      if (!r.agrees.value_or(false))
        c.fail("q=" + std::to_string(q) + " k=" + std::to_string(k) + " actual " + std::to_string(r.actual));
    }
  const CounterexampleResult pinned = counterexample_m0(field_of_order(7), 3);
  if (pinned.expected != 4 || pinned.actual != 4) c.fail("q=7 k=3 is not 4");
  return c;
}

// 6. No irreducibles in I(t^{p^2}, 1) over F_{p^{2n}}.
Check m1_vanishing() {
  Check c;
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {2, 2}, {3, 1}}) {
    const CounterexampleResult r = counterexample_m1(p, n, M1Variant::PSquared);
    if (r.actual != 0) c.fail("p=" + std::to_string(p) + " n=" + std::to_string(n) + " actual " + std::to_string(r.actual));
  }
  return c;
}

// 7 and 8 share the grid q in {2,3,4}, k <= 6, 1 <= m < k, all canonical
// intervals.
template <class Fn>
void for_each_interval(Fn&& fn) {
  for (std::uint64_t q : {2u, 3u, 4u}) {
    const Field& F = field_of_order(q);
    for (int k = 2; k <= 6; ++k)
      for (int m = 1; m < k; ++m)
        for (std::uint64_t cell = 0; cell < upow(q, k - m - 1); ++cell) fn(F, k, m, IntervalSpec::canonical(F, k, m, cell));
  }
}

Check radical_lemma() {
  Check c;
  for_each_interval([&](const Field& F, int k, int m, const IntervalSpec& I) {
    for (int d : divisors(k)) {
      if (d == 1) continue;
      const std::size_t size = radical_set(I, d).size();
      if (size > upow(F.q(), m))
        c.fail("q=" + std::to_string(F.q()) + " k=" + std::to_string(k) + " m=" + std::to_string(m) + " d=" +
               std::to_string(d) + " size " + std::to_string(size));
    }
  });
  return c;
}

Check nu_decomposition_identity() {
  Check c;
  const NuDecomposition hand = nu_decomposition(tpow(make_field(2, 1), 2), 1);
  if (hand.nu != 3 || hand.reconstructed != 3 || hand.reconstructed_plus_epsilon != 5) c.fail("hand case q=2 k=2 m=1");
  for_each_interval([&](const Field& F, int k, int m, const IntervalSpec& I) {
    const NuDecomposition d = nu_decomposition(I.center(), m);
    if (d.reconstructed != d.nu)
      c.fail("q=" + std::to_string(F.q()) + " k=" + std::to_string(k) + " m=" + std::to_string(m) + " f=" + render_poly(I.center()));
  });
  return c;
}

// 9. (a) census totals, (b) snapshot of normalized constants at 1 and N
// workers, (c) residue classes partition the primes.
Check scan_properties(std::string& detail) {
  Check c;
  const nlohmann::json baseline = load("interval_constants.json");
  std::size_t compared = 0;
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 9u}) {
    const Field& F = field_of_order(q);
    for (int k = 2; k <= 6; ++k)
      for (int m = 1; m < k; ++m) {
        const std::string key = "q=" + std::to_string(q) + ",k=" + std::to_string(k) + ",m=" + std::to_string(m);
        const nlohmann::json& want = baseline.at("entries").at(key);
        for (unsigned threads : {1u, kManyThreads}) {
          const DeviationReport r = scan_intervals(F, k, m, Partition({k}), scan_options(threads));
          const std::string at = key + " threads=" + std::to_string(threads);
          // (a)
          if (!r.census_consistent || r.aggregate.total() != upow(q, k)) c.fail(at + " census total");
          if (BigInt(r.total_count) != exact_prime_count(q, k)) c.fail(at + " prime total");
          for (const auto& lambda : partitions_of(k))
            if (BigInt(r.aggregate.at(lambda)) != exact_type_count(q, k, lambda)) c.fail(at + " aggregate " + lambda.to_string());
          // (b)
          const nlohmann::json got = r.normalized_constant.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.normalized_constant);
          if (got != want.at("normalized_constant")) c.fail(at + " constant " + got.dump() + " vs " + want.at("normalized_constant").dump());
          if (to_string(r.max_abs_dev) != want.at("max_abs_dev").get<std::string>()) c.fail(at + " max_abs_dev");
          if (r.covered_cells != want.at("covered_cells").get<std::uint64_t>()) c.fail(at + " covered cells");
          ++compared;
        }
      }
  }
  // (c)
  std::size_t classes = 0;
  for (std::uint64_t q : {2u, 3u, 5u}) {
    const Field& F = field_of_order(q);
    for (int deg_d = 1; deg_d <= 2; ++deg_d)
      for (std::uint64_t di = 0; di < upow(q, deg_d); ++di) {
        const Poly D = Poly::monic_from_index(F, deg_d, di);
        for (int k = deg_d + 1; k <= 5; ++k) {
          std::uint64_t primes = 0;
          for (std::uint64_t fi = 1; fi < upow(q, deg_d); ++fi) {
            const Poly f = Poly::from_index(F, deg_d, fi);
            if (!gcd(f, D).is_one()) continue;
            const TypeCensus census = progression_counts(ProgressionSpec(D, f, k));
            if (census.total() != upow(q, k - deg_d)) c.fail("progression census total");
            primes += census.at(Partition({k}));
          }
          if (BigInt(primes) != exact_prime_count(q, k))
            c.fail("q=" + std::to_string(q) + " D=" + render_poly(D) + " k=" + std::to_string(k) + " sum " + std::to_string(primes));
          ++classes;
        }
      }
  }
  // progression scans obey (a) too
  for (std::uint64_t q : {2u, 3u}) {
    const DeviationReport r = scan_progressions(field_of_order(q), 5, 2, Partition({5}), scan_options(1));
    if (!r.census_consistent || BigInt(r.total_count) != exact_prime_count(q, 5) * upow(q, 2))
      c.fail("progression scan totals q=" + std::to_string(q));
  }
  detail = std::to_string(compared) + " snapshot comparisons, " + std::to_string(classes) + " moduli";
  return c;
}

// 10. Var nu / q^2 for k = 5, m = 1 approaches 2.
Check variance_trend_check(std::string& detail) {
  Check c;
  const nlohmann::json baseline = load("variance_trend.json");
  RunOptions opts;
  opts.threads = kManyThreads;
  const VarianceTrend t = variance_trend(5, 1, {3, 5, 7, 11, 13}, opts);
  if (t.limit != 2) c.fail("limit " + std::to_string(t.limit));
  std::ostringstream gaps;
  gaps << std::setprecision(4);
  for (const auto& pt : t.per_q) {
    const auto& want = baseline.at("per_q").at(std::to_string(pt.q));
    if (to_string(pt.ratio) != want.at("ratio").get<std::string>()) c.fail("ratio at q=" + std::to_string(pt.q));
    gaps << " q=" << pt.q << ":" << pt.gap.convert_to<double>();
  }
  const Rational& first = t.per_q.front().gap;
  const Rational& last = t.per_q.back().gap;
  if (last > first) c.fail("gap at q=13 exceeds gap at q=3");
  if (to_string(last) != baseline.at("final_gap").get<std::string>()) c.fail("final gap " + to_string(last));
  detail = "gaps" + gaps.str();
  return c;
}

// 11. Byte-identical JSON documents at 1 and N workers.
Check determinism() {
  Check c;
  const std::vector<std::vector<std::string>> configs = {
      {"scan-intervals", "--p", "2", "--nu", "2", "--k", "5", "--m", "2", "--lambda", "5", "--per-cell"},
      {"scan-intervals", "--p", "3", "--k", "6", "--m", "3", "--lambda", "2+2+1+1", "--per-cell"},
      {"scan-progressions", "--p", "3", "--k", "5", "--m", "2", "--lambda", "5", "--per-cell"},
  };
  for (const auto& cfg : configs) {
    std::string first;
    for (unsigned threads : {1u, kManyThreads}) {
      std::vector<std::string> argv = {"ffstat", "--no-timing", "--threads", std::to_string(threads)};
      argv.insert(argv.end(), cfg.begin(), cfg.end());
      std::ostringstream out, err;
      if (run_command(argv, out, err) != 0) c.fail(cfg[0] + " exited nonzero: " + err.str());
      if (threads == 1)
        first = out.str();
      else if (out.str() != first)
        c.fail(cfg[0] + " output differs between 1 and " + std::to_string(threads) + " workers");
    }
  }
  return c;
}

}  // namespace

int main() {
  // The comparisons across worker counts need explicit thread counts.
  ::unsetenv("FFSTAT_THREADS");

  struct Criterion {
    int id;
    std::string name;
    double limit;
    std::function<Check(std::string&)> run;
  };
  auto plain = [](Check (*fn)()) { return [fn](std::string&) { return fn(); }; };
  const std::vector<Criterion> criteria = {
      {1, "prime polynomial theorem: sum of Lambda over M(k,q) = q^k", kLimitPpt, plain(ppt_identity)},
      {2, "mean of nu equals q^{m+1}(1 - q^-k)", kLimitMean, plain(mean_identity)},
      {3, "exhaustive counts match Moebius and multiset closed forms", kLimitOracle, plain(oracle_equivalence)},
      {4, "cycle-type law matches S_k census", kLimitCycle, plain(cycle_law)},
      {5, "t^k + a closed form (m = 0)", kLimitM0, plain(m0_closed_form)},
      {6, "I(t^{p^2}, 1) has no primes over F_{p^2n}", kLimitM1, plain(m1_vanishing)},
      {7, "radical sets have at most q^m elements", kLimitRadical, plain(radical_lemma)},
      {8, "nu decomposition identity with epsilon subtracted", kLimitDecomposition, plain(nu_decomposition_identity)},
      {9, "scan totals, constant snapshots, progression partition", kLimitScans, scan_properties},
      {10, "variance trend toward k - m - 2 for (k,m) = (5,1)", kLimitTrend, variance_trend_check},
      {11, "scan JSON identical at 1 and N workers", kLimitDeterminism, plain(determinism)},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = cr.run(detail);
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > cr.limit) c.fail("took " + std::to_string(secs) + " s");
    if (!c.ok) ++failed;
    std::ostringstream line;
    line << (c.ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << cr.id << "  " << cr.name << "  ("
         << std::fixed << std::setprecision(2) << secs << " s, limit " << std::setprecision(0) << cr.limit << " s)";
    if (!detail.empty()) line << "  " << detail;
    if (!c.ok) line << "  -- " << c.note;
    std::cout << line.str() << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed;
}
