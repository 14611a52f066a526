#ifndef FFSTAT_STATISTICS_HPP
#define FFSTAT_STATISTICS_HPP

// Counting objects over F_q[t]: factorization-type censuses of the
// specialization family f + g * (a_0 + a_1 t + ... + a_m t^m), short
// intervals I(f, m) = f + P_{<=m}, arithmetic progressions f + D g, the
// polynomial totient, and the von Mangoldt sums nu(f; m).

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ffstat/combinatorics.hpp"
#include "ffstat/factor.hpp"
#include "ffstat/gf.hpp"
#include "ffstat/parallel.hpp"
#include "ffstat/partition.hpp"
#include "ffstat/poly.hpp"

namespace ffstat {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 26;

struct RunOptions {
  unsigned threads = 0;  // 0: resolve_threads default
  std::uint64_t budget = kDefaultBudget;
};

/// q^e, throwing BudgetExceeded once the value passes limit.
inline std::uint64_t checked_pow(std::uint64_t q, int e, std::uint64_t limit = kDefaultBudget) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > limit / q)
      throw BudgetExceeded("enumeration of " + std::to_string(q) + "^" + std::to_string(e) +
                           " cells exceeds the budget of " + std::to_string(limit));
    r *= q;
  }
  return r;
}

inline void ensure_budget(std::uint64_t projected, std::uint64_t budget) {
  if (projected > budget)
    throw BudgetExceeded("projected " + std::to_string(projected) + " cells exceeds the budget of " +
                         std::to_string(budget));
}

/// Partition -> count; zero entries are omitted.
struct TypeCensus {
  std::map<Partition, std::uint64_t, ReverseLex> counts;

  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (const auto& [lambda, c] : counts) s += c;
    return s;
  }
  std::uint64_t at(const Partition& lambda) const {
    auto it = counts.find(lambda);
    return it == counts.end() ? 0 : it->second;
  }
  void add(const Partition& lambda, std::uint64_t n = 1) { counts[lambda] += n; }
  void merge(const TypeCensus& other) {
    for (const auto& [lambda, c] : other.counts) counts[lambda] += c;
  }
  friend bool operator==(const TypeCensus&, const TypeCensus&) = default;
};

/// Factorization-type census of f + g * sum_{i<=m} a_i t^i over all
/// (a_0, ..., a_m) in F_q^{m+1}.
inline TypeCensus specialization_counts(const Poly& f, const Poly& g, int m, const RunOptions& opts = {}) {
  require_same_field(f, g);
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  if (g.is_zero()) throw std::invalid_argument("g must be nonzero");
  if (f.degree() <= g.degree() + m)
    throw std::invalid_argument("need deg f > deg g + m");
  if (!gcd(f, g).is_one()) throw std::invalid_argument("f and g must be coprime");
  const Field& F = f.field();
  const std::uint64_t n = checked_pow(F.q(), m + 1, opts.budget);
  return parallel_reduce(
      n, resolve_threads(opts.threads), TypeCensus{},
      [&](std::uint64_t begin, std::uint64_t end, TypeCensus& acc) {
        for (std::uint64_t idx = begin; idx < end; ++idx) {
          const Poly h = f + g * Poly::from_index(F, m + 1, idx);
          acc.add(factorization_type(h));
        }
      },
      [](TypeCensus& acc, TypeCensus&& part) { acc.merge(part); });
}

/// I(f, m) = {g : deg(g - f) <= m} around a monic f of degree k > m.
class IntervalSpec {
 public:
  IntervalSpec(Poly f, int m) : f_(std::move(f)), m_(m) {
    if (!f_.is_monic()) throw std::invalid_argument("interval center must be monic");
    if (m_ < 0 || m_ >= f_.degree())
      throw std::invalid_argument("interval needs 0 <= m < deg f");
  }
  /// Interval number idx in canonical order: t^k + sum_{i>m} c_i t^i where
  /// the digits of idx are c_{m+1}, ..., c_{k-1}.
  static IntervalSpec canonical(const Field& field, int k, int m, std::uint64_t idx) {
    std::vector<Elem> c(static_cast<std::size_t>(k) + 1, field.zero());
    for (int i = m + 1; i < k; ++i) {
      c[i] = Elem{static_cast<std::uint32_t>(idx % field.q())};
      idx /= field.q();
    }
    c[k] = field.one();
    return IntervalSpec(Poly(field, std::move(c)), m);
  }

  const Poly& center() const { return f_; }
  int m() const { return m_; }
  int k() const { return f_.degree(); }
  const Field& field() const { return f_.field(); }

  /// Representative with coefficients 0..m zeroed.
  Poly canonical_center() const {
    Poly c = f_;
    for (int i = 0; i <= m_; ++i) c.set_coeff(i, field().zero());
    return c;
  }
  /// Index of this interval among the canonical ones.
  std::uint64_t canonical_index() const {
    std::uint64_t idx = 0;
    for (int i = k() - 1; i > m_; --i) idx = idx * field().q() + f_.coeff(i).v;
    return idx;
  }
  bool contains(const Poly& g) const {
    require_same_field(g, f_);
    return (g - f_).degree() <= m_;
  }
  /// Member number idx: canonical center plus the degree <= m polynomial
  /// with base-q digits idx.
  Poly member(std::uint64_t idx) const { return canonical_center() + Poly::from_index(field(), m_ + 1, idx); }

 private:
  Poly f_;
  int m_;
};

/// {f + D g : g monic of degree k - deg D}, with D monic, deg f < deg D,
/// gcd(f, D) = 1 and k > deg D.
class ProgressionSpec {
 public:
  ProgressionSpec(Poly D, Poly f, int k) : D_(std::move(D)), f_(std::move(f)), k_(k) {
    require_same_field(D_, f_);
    if (!D_.is_monic() || D_.degree() < 1) throw std::invalid_argument("modulus D must be monic of degree >= 1");
    if (f_.degree() >= D_.degree())
      throw std::invalid_argument("residue must satisfy deg f < deg D (reduce f modulo D first)");
    if (!gcd(f_, D_).is_one()) throw std::invalid_argument("residue f must be coprime to D");
    if (k_ <= D_.degree()) throw std::invalid_argument("target degree k must exceed deg D");
  }
  const Poly& modulus() const { return D_; }
  const Poly& residue() const { return f_; }
  int k() const { return k_; }
  const Field& field() const { return D_.field(); }

 private:
  Poly D_, f_;
  int k_;
};

inline TypeCensus interval_counts(const IntervalSpec& I, const RunOptions& opts = {}) {
  return specialization_counts(I.canonical_center(), Poly::one(I.field()), I.m(), opts);
}

inline TypeCensus progression_counts(const ProgressionSpec& P, const RunOptions& opts = {}) {
  const int free_deg = P.k() - P.modulus().degree();
  // f + D (t^n + g_low) = (f + D t^n) + D g_low with deg g_low < n.
  const Poly base = P.residue() + shift(P.modulus(), free_deg);
  return specialization_counts(base, P.modulus(), free_deg - 1, opts);
}

/// Units of F_q[t]/D: prod over P^e || D of |P|^{e-1} (|P| - 1).
inline BigInt poly_totient(const Poly& D) {
  if (D.is_zero()) throw std::domain_error("totient of the zero polynomial");
  const std::uint64_t q = D.field().q();
  BigInt phi = 1;
  for (const auto& [P, e] : factor(D).factors) {
    const BigInt norm = big_pow(q, static_cast<unsigned>(P.degree()));
    phi *= boost::multiprecision::pow(norm, static_cast<unsigned>(e - 1)) * (norm - 1);
  }
  return phi;
}

/// deg P if g = c P^e for a prime P, else 0.
inline int von_mangoldt(const Poly& g) {
  if (g.is_zero()) throw std::domain_error("von Mangoldt of the zero polynomial");
  if (g.degree() == 0) return 0;
  const auto profile = degree_profile(g);
  return profile.size() == 1 && profile.front().count == 1 ? profile.front().degree : 0;
}

/// Sum of Lambda(g) over g in I(f, m) with g(0) != 0.
inline std::int64_t nu(const Poly& f, int m, const RunOptions& opts = {}) {
  if (!f.is_monic()) throw std::invalid_argument("nu needs a monic center");
  if (m < 1 || m >= f.degree()) throw std::invalid_argument("nu needs 1 <= m < deg f");
  const IntervalSpec I(f, m);
  const Field& F = f.field();
  const Poly base = I.canonical_center();
  const std::uint64_t n = checked_pow(F.q(), m + 1, opts.budget);
  return parallel_reduce(
      n, resolve_threads(opts.threads), std::int64_t{0},
      [&](std::uint64_t begin, std::uint64_t end, std::int64_t& acc) {
        for (std::uint64_t idx = begin; idx < end; ++idx) {
          const Poly g = base + Poly::from_index(F, m + 1, idx);
          if (g.coeff(0) == F.zero()) continue;
          acc += von_mangoldt(g);
        }
      },
      [](std::int64_t& acc, std::int64_t&& part) { acc += part; });
}

/// nu(f; m) for every canonical interval of M(k, q), in canonical order,
/// from one pass over M(k, q).
inline std::vector<std::int64_t> nu_by_interval(const Field& F, int k, int m, const RunOptions& opts = {}) {
  if (m < 1 || m >= k) throw std::invalid_argument("need 1 <= m < k");
  checked_pow(F.q(), k, opts.budget);
  const std::uint64_t width = checked_pow(F.q(), m + 1, opts.budget);
  const std::uint64_t cells = checked_pow(F.q(), k - m - 1, opts.budget);
  using Vec = std::vector<std::int64_t>;
  return parallel_reduce(
      cells, resolve_threads(opts.threads), Vec(cells, 0),
      [&](std::uint64_t begin, std::uint64_t end, Vec& acc) {
        for (std::uint64_t cell = begin; cell < end; ++cell) {
          std::int64_t s = 0;
          for (std::uint64_t low = 0; low < width; ++low) {
            const std::uint64_t idx = cell * width + low;
            if (idx % F.q() == 0) continue;  // g(0) = 0
            s += von_mangoldt(Poly::monic_from_index(F, k, idx));
          }
          acc[cell] = s;
        }
      },
      [](Vec& acc, Vec&& part) {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
      });
}

struct MeanVariance {
  Rational mean;
  Rational variance;
};

/// Mean and variance of nu(.; m) over f in M(k, q).  Each distinct interval
/// carries weight q^{m+1}.
inline MeanVariance mean_variance_nu(const Field& F, int k, int m, const RunOptions& opts = {}) {
  const auto values = nu_by_interval(F, k, m, opts);
  const BigInt weight = big_pow(F.q(), static_cast<unsigned>(m + 1));
  const BigInt total = big_pow(F.q(), static_cast<unsigned>(k));
  BigInt sum = 0;
  for (auto v : values) sum += v;
  const Rational mean(sum * weight, total);
  Rational sq = 0;
  for (auto v : values) {
    const Rational dev = Rational(v) - mean;
    sq += dev * dev;
  }
  return {mean, sq * Rational(weight, total)};
}

/// Closed form of the mean: q^{m+1} (1 - q^{-k}).
inline Rational mean_nu_closed_form(std::uint64_t q, int k, int m) {
  return Rational(big_pow(q, static_cast<unsigned>(m + 1))) *
         (Rational(1) - Rational(BigInt(1), big_pow(q, static_cast<unsigned>(k))));
}

/// I^{1/d} = {g monic of degree k/d : g^d in I}, in canonical order.
inline std::vector<Poly> radical_set(const IntervalSpec& I, int d, const RunOptions& opts = {}) {
  if (d <= 1 || I.k() % d != 0)
    throw std::invalid_argument("radical order d must satisfy d > 1 and d | k");
  const Field& F = I.field();
  const int deg = I.k() / d;
  const std::uint64_t n = checked_pow(F.q(), deg, opts.budget);
  std::vector<Poly> out;
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    Poly g = Poly::monic_from_index(F, deg, idx);
    if (I.contains(power(g, static_cast<unsigned>(d)))) out.push_back(std::move(g));
  }
  return out;
}

struct NuDecomposition {
  std::int64_t k_pi = 0;                         // k * pi_q(I)
  std::map<int, std::int64_t> proper_terms;      // d -> (k/d) * pi_q(I^{1/d})
  int epsilon = 0;                               // 1 iff t^k in I
  std::int64_t reconstructed = 0;                // k_pi + sum - epsilon
  std::int64_t reconstructed_plus_epsilon = 0;   // k_pi + sum + epsilon
  std::int64_t nu = 0;
};

/// Splits nu(f; m) by the degree of the prime underlying each prime power in
/// the interval.  The filtered sum drops t^k (the only g with g(0) = 0 and
/// Lambda(g) != 0), so the identity holds with epsilon subtracted.
inline NuDecomposition nu_decomposition(const Poly& f, int m, const RunOptions& opts = {}) {
  if (!f.is_monic() || m < 1 || m >= f.degree()) throw std::invalid_argument("nu needs monic f and 1 <= m < deg f");
  const IntervalSpec I(f, m);
  const int k = I.k();
  NuDecomposition out;
  const Partition prime_type({k});
  out.k_pi = static_cast<std::int64_t>(k) * static_cast<std::int64_t>(interval_counts(I, opts).at(prime_type));
  std::int64_t proper_sum = 0;
  for (int d : divisors(k)) {
    if (d == 1) continue;
    std::int64_t primes = 0;
    for (const Poly& g : radical_set(I, d, opts))
      if (is_irreducible(g)) ++primes;
    out.proper_terms[d] = static_cast<std::int64_t>(k / d) * primes;
    proper_sum += out.proper_terms[d];
  }
  out.epsilon = I.contains(Poly::monomial(I.field(), k, I.field().one())) ? 1 : 0;
  out.reconstructed = out.k_pi + proper_sum - out.epsilon;
  out.reconstructed_plus_epsilon = out.k_pi + proper_sum + out.epsilon;
  out.nu = nu(f, m, opts);
  return out;
}

}  // namespace ffstat

#endif  // FFSTAT_STATISTICS_HPP
