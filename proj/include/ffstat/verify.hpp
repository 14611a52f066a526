#ifndef FFSTAT_VERIFY_HPP
#define FFSTAT_VERIFY_HPP

// Executable checks of the short-interval and progression counting
// statements: hypothesis coverage, grid scans with normalized deviation
// constants, the small-m counterexamples and the variance trend.
//
// Nothing here asserts an a-priori bound for the deviation constant; scans
// only record what exhaustive enumeration finds.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ffstat/combinatorics.hpp"
#include "ffstat/factor.hpp"
#include "ffstat/parallel.hpp"
#include "ffstat/statistics.hpp"
#include "ffstat/text.hpp"

namespace ffstat {

enum class CoverageStatus {
  Covered,
  ExcludedSmallM,
  ExcludedCharDividesKKminus1,
  ExcludedChar2LowDerivative,
  ExcludedChar2ConstantRationalDerivative,
};

inline std::string to_string(CoverageStatus s) {
  switch (s) {
    case CoverageStatus::Covered: return "Covered";
    case CoverageStatus::ExcludedSmallM: return "ExcludedSmallM";
    case CoverageStatus::ExcludedCharDividesKKminus1: return "ExcludedCharDividesKKminus1";
    case CoverageStatus::ExcludedChar2LowDerivative: return "ExcludedChar2LowDerivative";
    case CoverageStatus::ExcludedChar2ConstantRationalDerivative: return "ExcludedChar2ConstantRationalDerivative";
  }
  return "?";
}

struct Coverage {
  CoverageStatus status = CoverageStatus::Covered;
  std::string detail;
  bool covered() const { return status == CoverageStatus::Covered; }
};

/// Short-interval conditions, checked on the given representative f:
/// m >= 1; m >= 2 when p | k(k-1); m >= 3 when p = 2 and deg f' <= 1.
inline Coverage check_hypotheses_interval(const Poly& f, int m) {
  if (!f.is_monic()) throw std::invalid_argument("interval center must be monic");
  const int k = f.degree();
  if (m < 0 || m >= k) throw std::invalid_argument("need 0 <= m < k, got m = " + std::to_string(m));
  const std::uint32_t p = f.field().p();
  if (m < 1) return {CoverageStatus::ExcludedSmallM, "m = 0 < 1"};
  const std::uint64_t kk1 = static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(k - 1);
  if (kk1 % p == 0 && m < 2)
    return {CoverageStatus::ExcludedCharDividesKKminus1,
            "p = " + std::to_string(p) + " divides k(k-1) = " + std::to_string(kk1) + " and m < 2"};
  if (p == 2 && derivative(f).degree() <= 1 && m < 3) {
    const int d = derivative(f).degree();
    return {CoverageStatus::ExcludedChar2LowDerivative,
            "p = 2, deg f' = " + (d == kZeroDegree ? std::string("-inf") : std::to_string(d)) + " <= 1 and m < 3"};
  }
  return {CoverageStatus::Covered, "all conditions hold"};
}

/// Progression conditions: deg D = k - m - 1 >= 1, m >= 2, and (f/D)' not
/// constant when p = m = 2.
inline Coverage check_hypotheses_progression(int k, int m, const Poly& D, const Poly& f) {
  require_same_field(D, f);
  if (!D.is_monic() || D.degree() < 1) throw std::invalid_argument("modulus D must be monic of degree >= 1");
  if (D.degree() != k - m - 1)
    throw std::invalid_argument("deg D = " + std::to_string(D.degree()) + " but k - m - 1 = " + std::to_string(k - m - 1));
  if (m < 2) return {CoverageStatus::ExcludedSmallM, "m = " + std::to_string(m) + " < 2"};
  if (D.field().p() == 2 && m == 2 && rational_derivative_is_constant(f, D))
    return {CoverageStatus::ExcludedChar2ConstantRationalDerivative, "p = m = 2 and (f/D)' is constant"};
  return {CoverageStatus::Covered, "all conditions hold"};
}

/// max_dev / q^{m + 1/2} as a decimal truncated to `places` digits, computed
/// with integer square roots so the text is platform independent.
inline std::string normalized_constant(const Rational& max_dev, std::uint64_t q, int m, int places = 12) {
  const BigInt num = boost::multiprecision::numerator(max_dev);
  const BigInt den = boost::multiprecision::denominator(max_dev);
  const BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(places));
  const BigInt radicand = num * num * q * scale * scale;
  const BigInt value = boost::multiprecision::sqrt(radicand) / (den * big_pow(q, static_cast<unsigned>(m + 1)));
  const BigInt whole = value / scale;
  std::string frac = BigInt(value % scale).str();
  frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
  return whole.str() + "." + frac;
}

enum class ScanMode { Interval, Progression };

struct CellResult {
  std::uint64_t cell_id = 0;
  std::string label;  // representative text ("f" or "D;f")
  std::uint64_t count = 0;
  std::uint64_t census_total = 0;
  Rational expected;
  Rational abs_dev;
  CoverageStatus status = CoverageStatus::Covered;
};

struct StatusSummary {
  std::uint64_t cells = 0;
  Rational max_abs_dev = 0;
  friend bool operator==(const StatusSummary&, const StatusSummary&) = default;
};

struct DeviationReport {
  ScanMode mode = ScanMode::Interval;
  std::uint64_t q = 0;
  int k = 0;
  int m = 0;
  Partition lambda;
  std::uint64_t cells = 0;
  std::uint64_t covered_cells = 0;
  Rational max_abs_dev = 0;         // over covered cells only
  std::string normalized_constant;  // empty when no cell is covered
  std::map<CoverageStatus, StatusSummary> excluded;
  std::uint64_t total_count = 0;    // sum of the lambda counts over all cells
  TypeCensus aggregate;             // sum of the per-cell censuses
  bool census_consistent = true;    // each cell census sums to its domain size
  bool truncated = false;
  std::vector<CellResult> per_cell;
};

struct ScanOptions {
  unsigned threads = 0;
  std::uint64_t budget = kDefaultBudget;
  bool per_cell = false;
  std::uint64_t max_cells = 0;  // progressions only; 0 means no cap
};

namespace detail {

struct ScanAccumulator {
  std::uint64_t covered_cells = 0;
  Rational max_abs_dev = 0;
  std::map<CoverageStatus, StatusSummary> excluded;
  std::uint64_t total_count = 0;
  TypeCensus aggregate;
  bool consistent = true;
  std::vector<CellResult> cells;

  void absorb(CellResult cell, const TypeCensus& census, std::uint64_t domain, bool keep) {
    total_count += cell.count;
    aggregate.merge(census);
    if (census.total() != domain) consistent = false;
    if (cell.status == CoverageStatus::Covered) {
      ++covered_cells;
      if (cell.abs_dev > max_abs_dev) max_abs_dev = cell.abs_dev;
    } else {
      auto& s = excluded[cell.status];
      ++s.cells;
      if (cell.abs_dev > s.max_abs_dev) s.max_abs_dev = cell.abs_dev;
    }
    if (keep) cells.push_back(std::move(cell));
  }

  void merge(ScanAccumulator&& o) {
    covered_cells += o.covered_cells;
    if (o.max_abs_dev > max_abs_dev) max_abs_dev = o.max_abs_dev;
    for (auto& [st, s] : o.excluded) {
      auto& mine = excluded[st];
      mine.cells += s.cells;
      if (s.max_abs_dev > mine.max_abs_dev) mine.max_abs_dev = s.max_abs_dev;
    }
    total_count += o.total_count;
    aggregate.merge(o.aggregate);
    consistent = consistent && o.consistent;
    for (auto& c : o.cells) cells.push_back(std::move(c));
  }
};

inline Rational abs_diff(const Rational& a, const Rational& b) { return a > b ? a - b : b - a; }

inline void finish_report(DeviationReport& r, ScanAccumulator&& acc) {
  r.covered_cells = acc.covered_cells;
  r.max_abs_dev = acc.max_abs_dev;
  r.normalized_constant = acc.covered_cells ? normalized_constant(acc.max_abs_dev, r.q, r.m) : std::string();
  r.excluded = std::move(acc.excluded);
  r.total_count = acc.total_count;
  r.aggregate = std::move(acc.aggregate);
  r.census_consistent = acc.consistent;
  r.per_cell = std::move(acc.cells);
}

/// Census of base + g * a(t) over all a of degree <= m, single-threaded.
inline TypeCensus local_census(const Poly& base, const Poly& g, int m, std::uint64_t width) {
  TypeCensus census;
  const Field& F = base.field();
  for (std::uint64_t idx = 0; idx < width; ++idx)
    census.add(factorization_type(base + g * Poly::from_index(F, m + 1, idx)));
  return census;
}

}  // namespace detail

/// Exhaustive scan of every canonical interval I(f, m) of M(k, q):
/// deviation of the lambda count from P(lambda) q^{m+1}.
inline DeviationReport scan_intervals(const Field& F, int k, int m, const Partition& lambda,
                                      const ScanOptions& opts = {}) {
  if (m < 1 || m >= k) throw std::invalid_argument("scan needs 1 <= m < k");
  if (lambda.k() != k) throw std::invalid_argument("partition " + lambda.to_string() + " is not of k = " + std::to_string(k));
  checked_pow(F.q(), k, opts.budget);
  const std::uint64_t width = checked_pow(F.q(), m + 1, opts.budget);
  const std::uint64_t cells = checked_pow(F.q(), k - m - 1, opts.budget);
  const Rational expected = cycle_type_probability(lambda) * Rational(BigInt(width));
  const Poly one = Poly::one(F);

  DeviationReport r;
  r.mode = ScanMode::Interval;
  r.q = F.q();
  r.k = k;
  r.m = m;
  r.lambda = lambda;
  r.cells = cells;
  auto acc = parallel_reduce(
      cells, resolve_threads(opts.threads), detail::ScanAccumulator{},
      [&](std::uint64_t begin, std::uint64_t end, detail::ScanAccumulator& a) {
        for (std::uint64_t cell = begin; cell < end; ++cell) {
          const IntervalSpec I = IntervalSpec::canonical(F, k, m, cell);
          const TypeCensus census = detail::local_census(I.center(), one, m, width);
          CellResult c;
          c.cell_id = cell;
          c.label = render_poly(I.center());
          c.count = census.at(lambda);
          c.census_total = census.total();
          c.expected = expected;
          c.abs_dev = detail::abs_diff(Rational(BigInt(c.count)), expected);
          c.status = check_hypotheses_interval(I.center(), m).status;
          a.absorb(std::move(c), census, width, opts.per_cell);
        }
      },
      [](detail::ScanAccumulator& a, detail::ScanAccumulator&& b) { a.merge(std::move(b)); });
  detail::finish_report(r, std::move(acc));
  return r;
}

/// Projected number of polynomials scan_progressions would factor.
inline std::uint64_t projected_progression_work(const Field& F, int k, int m, std::uint64_t max_cells) {
  const int delta = k - m - 1;
  std::uint64_t cells = checked_pow(F.q(), 2 * delta, ~std::uint64_t{0} / 2);
  if (max_cells && max_cells < cells) cells = max_cells;
  const std::uint64_t width = checked_pow(F.q(), m + 1, ~std::uint64_t{0} / 2);
  return cells * width;
}

/// Scan over monic moduli D of degree k - m - 1 and coprime residues f with
/// deg f < deg D, in canonical order: deviation of the lambda count among
/// {f + D g : g monic of degree m + 1} from pi_q(k; lambda) / phi(D).
inline DeviationReport scan_progressions(const Field& F, int k, int m, const Partition& lambda,
                                         const ScanOptions& opts = {}) {
  const int delta = k - m - 1;
  if (m < 0 || delta < 1) throw std::invalid_argument("progression scan needs deg D = k - m - 1 >= 1");
  if (lambda.k() != k) throw std::invalid_argument("partition " + lambda.to_string() + " is not of k = " + std::to_string(k));
  ensure_budget(projected_progression_work(F, k, m, opts.max_cells), opts.budget);
  const std::uint64_t width = checked_pow(F.q(), m + 1, opts.budget);
  const std::uint64_t span = checked_pow(F.q(), delta, opts.budget);
  const BigInt type_count = exact_type_count(F.q(), k, lambda);

  struct Cell {
    std::uint64_t d_index, f_index;
  };
  std::vector<Cell> list;
  std::map<std::uint64_t, Rational> expected_by_d;
  bool truncated = false;
  for (std::uint64_t di = 0; di < span && !truncated; ++di) {
    const Poly D = Poly::monic_from_index(F, delta, di);
    bool any = false;
    for (std::uint64_t fi = 0; fi < span; ++fi) {
      if (opts.max_cells && list.size() == opts.max_cells) {
        truncated = true;
        break;
      }
      const Poly f = Poly::from_index(F, delta, fi);
      if (f.is_zero() || !gcd(f, D).is_one()) continue;
      list.push_back({di, fi});
      any = true;
    }
    if (any) expected_by_d[di] = Rational(type_count, poly_totient(D));
  }

  DeviationReport r;
  r.mode = ScanMode::Progression;
  r.q = F.q();
  r.k = k;
  r.m = m;
  r.lambda = lambda;
  r.cells = list.size();
  r.truncated = truncated;
  auto acc = parallel_reduce(
      static_cast<std::uint64_t>(list.size()), resolve_threads(opts.threads), detail::ScanAccumulator{},
      [&](std::uint64_t begin, std::uint64_t end, detail::ScanAccumulator& a) {
        for (std::uint64_t i = begin; i < end; ++i) {
          const Poly D = Poly::monic_from_index(F, delta, list[i].d_index);
          const Poly f = Poly::from_index(F, delta, list[i].f_index);
          const Poly base = f + shift(D, m + 1);
          const TypeCensus census = detail::local_census(base, D, m, width);
          CellResult c;
          c.cell_id = i;
          c.label = render_poly(D) + ";" + render_poly(f);
          c.count = census.at(lambda);
          c.census_total = census.total();
          c.expected = expected_by_d.at(list[i].d_index);
          c.abs_dev = detail::abs_diff(Rational(BigInt(c.count)), c.expected);
          c.status = check_hypotheses_progression(k, m, D, f).status;
          a.absorb(std::move(c), census, width, opts.per_cell);
        }
      },
      [](detail::ScanAccumulator& a, detail::ScanAccumulator&& b) { a.merge(std::move(b)); });
  detail::finish_report(r, std::move(acc));
  return r;
}

struct CounterexampleResult {
  std::uint64_t q = 0;
  int k = 0;
  std::optional<std::int64_t> expected;  // absent when no closed form is asserted
  std::int64_t actual = 0;
  std::optional<bool> agrees;
};

/// Irreducibles among t^k + a, a in F_q, against the closed form
/// phi(k)(q-1)/k when q = 1 mod k and 0 otherwise.
inline CounterexampleResult counterexample_m0(const Field& F, int k) {
  if (k < 2) throw std::invalid_argument("m = 0 counterexample needs k > 1");
  CounterexampleResult r;
  r.q = F.q();
  r.k = k;
  r.expected = F.q() % static_cast<std::uint64_t>(k) == 1
                   ? euler_phi(k) * static_cast<std::int64_t>(F.q() - 1) / k
                   : 0;
  const Poly lead = Poly::monomial(F, k, F.one());
  for (std::uint32_t a = 0; a < F.q(); ++a)
    if (is_irreducible(lead + Poly::constant(F, Elem{a}))) ++r.actual;
  r.agrees = *r.expected == r.actual;
  return r;
}

enum class M1Variant { PSquared, PSquaredPlusOne };

/// Irreducibles in I(t^k, 1) over F_q with q = p^{2n}, k = p^2 (asserted to
/// be zero) or k = p^2 + 1 (recorded only).
inline CounterexampleResult counterexample_m1(std::uint32_t p, unsigned n, M1Variant variant,
                                              const RunOptions& opts = {}) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const Field& F = make_field(p, 2 * n);
  const int k = static_cast<int>(p * p) + (variant == M1Variant::PSquaredPlusOne ? 1 : 0);
  const std::uint64_t count = checked_pow(F.q(), 2, opts.budget);
  const Poly center = Poly::monomial(F, k, F.one());
  CounterexampleResult r;
  r.q = F.q();
  r.k = k;
  r.actual = parallel_reduce(
      count, resolve_threads(opts.threads), std::int64_t{0},
      [&](std::uint64_t begin, std::uint64_t end, std::int64_t& acc) {
        for (std::uint64_t idx = begin; idx < end; ++idx)
          if (is_irreducible(center + Poly::from_index(F, 2, idx))) ++acc;
      },
      [](std::int64_t& acc, std::int64_t&& part) { acc += part; });
  if (variant == M1Variant::PSquared) {
    r.expected = 0;
    r.agrees = r.actual == 0;
  }
  return r;
}

struct VarianceTrendPoint {
  std::uint64_t q = 0;
  Rational variance;
  Rational ratio;  // variance / q^{m+1}
  Rational gap;    // |ratio - limit|
};

struct VarianceTrend {
  int k = 0;
  int m = 0;
  std::int64_t limit = 0;  // k - m - 2
  std::vector<VarianceTrendPoint> per_q;
};

/// Exact Var nu(.; m) / q^{m+1} for each q next to the limit k - m - 2,
/// which applies in the range 1 <= m < k - 3.
inline VarianceTrend variance_trend(int k, int m, const std::vector<std::uint64_t>& qs, const RunOptions& opts = {}) {
  if (m < 1 || m >= k - 3)
    throw std::invalid_argument("variance limit k - m - 2 applies only for 1 <= m < k - 3");
  VarianceTrend t;
  t.k = k;
  t.m = m;
  t.limit = k - m - 2;
  for (auto q : qs) {
    const Field& F = field_of_order(q);
    const MeanVariance mv = mean_variance_nu(F, k, m, opts);
    VarianceTrendPoint pt;
    pt.q = q;
    pt.variance = mv.variance;
    pt.ratio = mv.variance / Rational(big_pow(q, static_cast<unsigned>(m + 1)));
    pt.gap = detail::abs_diff(pt.ratio, Rational(t.limit));
    t.per_q.push_back(std::move(pt));
  }
  return t;
}

}  // namespace ffstat

#endif  // FFSTAT_VERIFY_HPP
