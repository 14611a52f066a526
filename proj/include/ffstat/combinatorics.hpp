#ifndef FFSTAT_COMBINATORICS_HPP
#define FFSTAT_COMBINATORICS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ffstat/partition.hpp"

namespace ffstat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kDefaultMaxPartitionSize = 30;

/// "num/den", or just "num" for integers.
inline std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline BigInt big_pow(std::uint64_t base, unsigned e) {
  return boost::multiprecision::pow(BigInt(base), e);
}

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// All partitions of k in reverse-lexicographic order.
inline std::vector<Partition> partitions_of(int k, int max_k = kDefaultMaxPartitionSize) {
  if (k < 1 || k > max_k)
    throw std::invalid_argument("k = " + std::to_string(k) + " outside [1, " + std::to_string(max_k) + "]");
  std::vector<Partition> out;
  std::vector<int> cur;
  detail::partitions_rec(k, k, cur, out);
  return out;
}

/// Probability that a uniform permutation of S_k has cycle type lambda:
/// 1 / prod_i (i^{m_i} m_i!).
inline Rational cycle_type_probability(const Partition& lambda) {
  BigInt den = 1;
  for (auto [part, mult] : lambda.multiplicities()) {
    for (int j = 0; j < mult; ++j) den *= part;
    for (int j = 2; j <= mult; ++j) den *= j;
  }
  return Rational(BigInt(1), den);
}

inline int moebius(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("moebius needs n >= 1");
  int sign = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

inline std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

/// Number of monic irreducibles of degree k over F_q:
/// (1/k) sum_{d|k} mu(d) q^{k/d}.
inline BigInt exact_prime_count(std::uint64_t q, int k) {
  if (k < 1) throw std::invalid_argument("degree must be positive");
  BigInt sum = 0;
  for (int d : divisors(k)) {
    const int mu = moebius(static_cast<std::uint64_t>(d));
    if (mu == 0) continue;
    const BigInt term = big_pow(q, static_cast<unsigned>(k / d));
    if (mu > 0)
      sum += term;
    else
      sum -= term;
  }
  return sum / k;
}

/// C(n, r) for big n, small r.
inline BigInt binomial(const BigInt& n, int r) {
  BigInt acc = 1;
  for (int j = 1; j <= r; ++j) acc = acc * (n - r + j) / j;
  return acc;
}

/// Number of monic polynomials of degree k over F_q with factorization
/// type lambda: multisets of m_i irreducibles of each degree i.
inline BigInt exact_type_count(std::uint64_t q, int k, const Partition& lambda) {
  if (lambda.k() != k) throw std::invalid_argument("partition " + lambda.to_string() + " is not of " + std::to_string(k));
  BigInt count = 1;
  for (auto [part, mult] : lambda.multiplicities())
    count *= binomial(exact_prime_count(q, part) + mult - 1, mult);
  return count;
}

/// sigma(k) - k, the sum of k/d over divisors 1 < d <= k.
inline std::int64_t divisor_excess(int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  std::int64_t s = 0;
  for (int d : divisors(k)) s += d;
  return s - k;
}

inline std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    while (n % d == 0) n /= d;
    result -= result / d;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace ffstat

#endif  // FFSTAT_COMBINATORICS_HPP
