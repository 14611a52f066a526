#ifndef FFSTAT_FACTOR_HPP
#define FFSTAT_FACTOR_HPP

// Factorization in F_q[t] and the derivative predicates that appear in the
// coverage conditions of the counting theorems.
//
// factor() runs squarefree decomposition, distinct-degree splitting through
// gcd(g, t^{q^d} - t), then equal-degree splitting.  The equal-degree step is
// derandomized: candidate splitters are tried in canonical index order, so
// the output is a pure function of the input.  A trial-division backend over
// a precomputed table of irreducibles is kept alongside; tests run the two
// against each other.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ffstat/gf.hpp"
#include "ffstat/partition.hpp"
#include "ffstat/poly.hpp"

namespace ffstat {

struct Factorization {
  Elem unit;
  /// (monic irreducible, multiplicity), sorted by canonical_less.
  std::vector<std::pair<Poly, int>> factors;

  Poly expand(const Field& field) const {
    Poly out = Poly::constant(field, unit);
    for (const auto& [p, e] : factors) out = out * power(p, static_cast<unsigned>(e));
    return out;
  }
};

namespace detail {

/// g with g^p = f, for f whose exponents are all multiples of p.
inline Poly pth_root_poly(const Poly& f) {
  const Field& F = f.field();
  const int p = static_cast<int>(F.p());
  std::vector<Elem> out(static_cast<std::size_t>(f.degree() / p) + 1, F.zero());
  for (int i = 0; i <= f.degree(); i += p) out[i / p] = F.pth_root(f.coeff(i));
  return Poly(F, std::move(out));
}

/// Squarefree decomposition of a monic polynomial of positive degree.
/// Returns pairwise coprime squarefree monic parts with multiplicities.
inline void squarefree_parts(const Poly& f, int scale_by, std::vector<std::pair<Poly, int>>& out) {
  const Field& F = f.field();
  const int p = static_cast<int>(F.p());
  const Poly fp = derivative(f);
  if (fp.is_zero()) {
    squarefree_parts(pth_root_poly(f), scale_by * p, out);
    return;
  }
  Poly c = gcd(f, fp);
  if (c.is_one()) {
    out.emplace_back(f, scale_by);
    return;
  }
  Poly w = f / c;
  int i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (!fac.is_one()) out.emplace_back(fac, i * scale_by);
    ++i;
    w = std::move(y);
    c = c / w;
  }
  if (!c.is_one()) squarefree_parts(pth_root_poly(c), scale_by * p, out);
}

/// Distinct-degree factorization of a squarefree monic polynomial.
inline std::vector<std::pair<Poly, int>> distinct_degree(Poly g) {
  const Field& F = g.field();
  std::vector<std::pair<Poly, int>> out;
  const Poly t = Poly::t(F);
  Poly h = t % g;
  for (int d = 1; g.degree() >= 2 * d; ++d) {
    h = powmod(h, F.q(), g);
    Poly part = gcd(g, h - t);
    if (!part.is_one()) {
      out.emplace_back(part, d);
      g = g / part;
      h = h % g;
    }
  }
  if (g.degree() > 0) out.emplace_back(g, g.degree());
  return out;
}

/// Candidate splitter image: a^{(q^d-1)/2} - 1 for odd q, the absolute
/// trace sum a + a^2 + ... + a^{2^{nu d - 1}} for even q.
inline Poly splitter_image(const Poly& a, const Poly& g, int d) {
  const Field& F = g.field();
  if (F.p() == 2) {
    Poly acc = a % g;
    Poly term = acc;
    const unsigned steps = F.nu() * static_cast<unsigned>(d);
    for (unsigned i = 1; i < steps; ++i) {
      term = mulmod(term, term, g);
      acc = acc + term;
    }
    return acc;
  }
  // (q^d - 1)/2 = ((q - 1)/2) * (1 + q + ... + q^{d-1})
  Poly prod = a % g;
  Poly frob = prod;
  for (int i = 1; i < d; ++i) {
    frob = powmod(frob, F.q(), g);
    prod = mulmod(prod, frob, g);
  }
  return powmod(prod, (F.q() - 1) / 2, g) - Poly::one(F);
}

/// Equal-degree splitting of a squarefree monic g whose irreducible factors
/// all have degree d.
inline void equal_degree(const Poly& g, int d, std::vector<Poly>& out) {
  const int n = g.degree();
  if (n == d) {
    out.push_back(g);
    return;
  }
  const Field& F = g.field();
  for (std::uint64_t idx = F.q();; ++idx) {
    const Poly a = Poly::from_index(F, n, idx);
    const Poly img = splitter_image(a, g, d);
    if (img.is_zero()) continue;
    const Poly part = gcd(g, img);
    if (part.degree() > 0 && part.degree() < n) {
      equal_degree(part, d, out);
      equal_degree(g / part, d, out);
      return;
    }
  }
}

inline void sort_and_merge(std::vector<std::pair<Poly, int>>& factors) {
  std::sort(factors.begin(), factors.end(),
            [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
  std::vector<std::pair<Poly, int>> merged;
  for (auto& fe : factors) {
    if (!merged.empty() && merged.back().first == fe.first)
      merged.back().second += fe.second;
    else
      merged.push_back(std::move(fe));
  }
  factors = std::move(merged);
}

}  // namespace detail

/// Complete factorization into monic irreducibles and a unit.
inline Factorization factor(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  Factorization result{f.lead(), {}};
  if (f.degree() == 0) return result;
  std::vector<std::pair<Poly, int>> sqf;
  detail::squarefree_parts(make_monic(f), 1, sqf);
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : detail::distinct_degree(part)) {
      std::vector<Poly> irreducibles;
      detail::equal_degree(block, d, irreducibles);
      for (auto& p : irreducibles) result.factors.emplace_back(std::move(p), mult);
    }
  }
  detail::sort_and_merge(result.factors);
  return result;
}

/// Degrees of the irreducible factors with multiplicity, read off the
/// squarefree and distinct-degree stages without equal-degree splitting.
/// Entries are (degree d, number of distinct factors of degree d, multiplicity).
struct DegreeBlock {
  int degree;
  int count;
  int multiplicity;
};

inline std::vector<DegreeBlock> degree_profile(const Poly& f) {
  if (f.degree() < 1) throw std::domain_error("degree profile needs a polynomial of positive degree");
  std::vector<std::pair<Poly, int>> sqf;
  detail::squarefree_parts(make_monic(f), 1, sqf);
  std::vector<DegreeBlock> out;
  for (const auto& [part, mult] : sqf)
    for (const auto& [block, d] : detail::distinct_degree(part))
      out.push_back({d, block.degree() / d, mult});
  return out;
}

inline Partition type_of(const Factorization& fac) {
  std::vector<int> parts;
  for (const auto& [p, e] : fac.factors)
    for (int i = 0; i < e; ++i) parts.push_back(p.degree());
  return Partition(std::move(parts));
}

/// Factor degrees counted with multiplicity, as a partition of deg f.
inline Partition factorization_type(const Poly& f) {
  if (f.degree() < 1) throw std::domain_error("factorization type needs a polynomial of positive degree");
  std::vector<int> parts;
  for (const auto& b : degree_profile(f))
    for (int i = 0; i < b.count * b.multiplicity; ++i) parts.push_back(b.degree);
  return Partition(std::move(parts));
}

/// Ben-Or's test: f of degree n is irreducible iff gcd(f, t^{q^d} - t) = 1
/// for every d <= n/2 (a reducible f, squarefree or not, has a factor of
/// degree at most n/2).
inline bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) throw std::domain_error("irreducibility is defined for positive degree only");
  const int n = f.degree();
  if (n == 1) return true;
  const Poly g = make_monic(f);
  const Field& F = g.field();
  const Poly t = Poly::t(F);
  Poly h = t % g;
  for (int d = 1; 2 * d <= n; ++d) {
    h = powmod(h, F.q(), g);
    if (!gcd(g, h - t).is_one()) return false;
  }
  return true;
}

/// First and second Hasse-Schmidt derivatives: the coefficients of u and
/// u^2 in f(t + u).
inline std::pair<Poly, Poly> hasse_derivatives(const Poly& f) {
  const Field& F = f.field();
  std::vector<Elem> second;
  for (int n = 2; n <= f.degree(); ++n) {
    const std::uint64_t binom = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    second.push_back(F.mul(F.from_int(static_cast<std::int64_t>(binom % F.p())), f.coeff(n)));
  }
  return {derivative(f), Poly(F, std::move(second))};
}

/// True iff (f/D)' = (f'D - fD')/D^2 is a constant of F_q (zero included).
inline bool rational_derivative_is_constant(const Poly& f, const Poly& D) {
  require_same_field(f, D);
  if (D.is_zero()) throw std::domain_error("denominator must be nonzero");
  if (!gcd(f, D).is_one()) throw std::invalid_argument("numerator and denominator must be coprime");
  const Poly num = derivative(f) * D - f * derivative(D);
  if (num.is_zero()) return true;
  const Poly den = D * D;
  if (num.degree() != den.degree()) return false;
  return num == scale(den, num.field().div(num.lead(), den.lead()));
}

/// Monic irreducibles of each degree up to a bound, built by sieving with
/// trial division against lower degrees.  Read-only after construction.
class IrreducibleTable {
 public:
  IrreducibleTable(const Field& field, int max_degree) : field_(&field), by_degree_(max_degree + 1) {
    for (int d = 1; d <= max_degree; ++d) {
      std::uint64_t count = 1;
      for (int i = 0; i < d; ++i) count *= field.q();
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly g = Poly::monic_from_index(field, d, idx);
        bool irreducible = true;
        for (int e = 1; 2 * e <= d && irreducible; ++e)
          for (const Poly& p : by_degree_[e])
            if ((g % p).is_zero()) {
              irreducible = false;
              break;
            }
        if (irreducible) by_degree_[d].push_back(std::move(g));
      }
    }
  }

  const Field& field() const { return *field_; }
  int max_degree() const { return static_cast<int>(by_degree_.size()) - 1; }
  const std::vector<Poly>& of_degree(int d) const { return by_degree_.at(d); }

 private:
  const Field* field_;
  std::vector<std::vector<Poly>> by_degree_;
};

/// Alternate backend: trial division by the table.  Needs
/// table.max_degree() >= deg f / 2.
inline Factorization factor_by_trial_division(const Poly& f, const IrreducibleTable& table) {
  if (f.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  if (!(table.field() == f.field())) throw std::invalid_argument("table built over a different field");
  if (2 * table.max_degree() < f.degree()) throw std::invalid_argument("irreducible table too small");
  Factorization result{f.lead(), {}};
  Poly rest = make_monic(f);
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    for (const Poly& p : table.of_degree(d)) {
      int e = 0;
      for (;;) {
        auto [quo, rem] = divrem(rest, p);
        if (!rem.is_zero()) break;
        rest = std::move(quo);
        ++e;
      }
      if (e) result.factors.emplace_back(p, e);
    }
  }
  if (rest.degree() > 0) result.factors.emplace_back(rest, 1);
  detail::sort_and_merge(result.factors);
  return result;
}

}  // namespace ffstat

#endif  // FFSTAT_FACTOR_HPP
