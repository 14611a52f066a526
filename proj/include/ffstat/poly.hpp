#ifndef FFSTAT_POLY_HPP
#define FFSTAT_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ffstat/gf.hpp"

namespace ffstat {

/// Degree of the zero polynomial; compares below every real degree.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

/// Dense univariate polynomial over F_q, coefficients low-to-high with
/// trailing zeros trimmed.
class Poly {
 public:
  explicit Poly(const Field& field) : field_(&field) {}
  Poly(const Field& field, std::vector<Elem> coeffs) : field_(&field), c_(std::move(coeffs)) {
    for (Elem e : c_)
      if (!field.contains(e)) throw std::invalid_argument("coefficient outside the field");
    trim();
  }

  static Poly constant(const Field& field, Elem c) { return Poly(field, {c}); }
  static Poly one(const Field& field) { return constant(field, field.one()); }
  /// c * t^deg
  static Poly monomial(const Field& field, int deg, Elem c) {
    std::vector<Elem> v(static_cast<std::size_t>(deg) + 1, field.zero());
    v.back() = c;
    return Poly(field, std::move(v));
  }
  static Poly t(const Field& field) { return monomial(field, 1, field.one()); }

  /// Monic polynomial of degree k whose lower coefficients are the base-q
  /// digits of index (coefficient of t^0 least significant).
  static Poly monic_from_index(const Field& field, int k, std::uint64_t index) {
    std::vector<Elem> v(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i < k; ++i) {
      v[i] = Elem{static_cast<std::uint32_t>(index % field.q())};
      index /= field.q();
    }
    v[k] = field.one();
    return Poly(field, std::move(v), Trusted{});
  }
  /// Polynomial of degree < len from the base-q digits of index.
  static Poly from_index(const Field& field, int len, std::uint64_t index) {
    std::vector<Elem> v(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
      v[i] = Elem{static_cast<std::uint32_t>(index % field.q())};
      index /= field.q();
    }
    Poly out(field, std::move(v), Trusted{});
    out.trim();
    return out;
  }

  const Field& field() const { return *field_; }
  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == field_->one(); }
  bool is_monic() const { return !c_.empty() && c_.back() == field_->one(); }
  Elem lead() const { return c_.empty() ? field_->zero() : c_.back(); }
  Elem coeff(int i) const {
    return i >= 0 && static_cast<std::size_t>(i) < c_.size() ? c_[i] : field_->zero();
  }
  std::span<const Elem> coeffs() const { return c_; }

  void set_coeff(int i, Elem v) {
    if (static_cast<std::size_t>(i) >= c_.size()) c_.resize(i + 1, field_->zero());
    c_[i] = v;
    trim();
  }

  /// Canonical base-q index of the coefficient vector below the leading term
  /// of a monic polynomial (inverse of monic_from_index).
  std::uint64_t monic_index() const {
    std::uint64_t idx = 0;
    for (int i = degree() - 1; i >= 0; --i) idx = idx * field_->q() + c_[i].v;
    return idx;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return *a.field_ == *b.field_ && a.c_ == b.c_;
  }

  /// Ordering by (degree, coefficient vector as a base-q integer).
  friend bool canonical_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.c_.size(); i-- > 0;)
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
  }

 private:
  struct Trusted {};
  Poly(const Field& field, std::vector<Elem> coeffs, Trusted) : field_(&field), c_(std::move(coeffs)) {}

  void trim() {
    while (!c_.empty() && c_.back() == field_->zero()) c_.pop_back();
  }

  const Field* field_;
  std::vector<Elem> c_;
};

inline void require_same_field(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field()))
    throw std::invalid_argument("polynomials over different fields");
}

inline Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const Field& F = a.field();
  const auto ca = a.coeffs(), cb = b.coeffs();
  std::vector<Elem> out(std::max(ca.size(), cb.size()), F.zero());
  for (std::size_t i = 0; i < ca.size(); ++i) out[i] = ca[i];
  for (std::size_t i = 0; i < cb.size(); ++i) out[i] = F.add(out[i], cb[i]);
  return Poly(F, std::move(out));
}

inline Poly operator-(const Poly& a) {
  const Field& F = a.field();
  std::vector<Elem> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& e : out) e = F.neg(e);
  return Poly(F, std::move(out));
}

inline Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

inline Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const Field& F = a.field();
  if (a.is_zero() || b.is_zero()) return Poly(F);
  const auto ca = a.coeffs(), cb = b.coeffs();
  std::vector<Elem> out(ca.size() + cb.size() - 1, F.zero());
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == F.zero()) continue;
    for (std::size_t j = 0; j < cb.size(); ++j)
      out[i + j] = F.add(out[i + j], F.mul(ca[i], cb[j]));
  }
  return Poly(F, std::move(out));
}

inline Poly scale(const Poly& a, Elem c) {
  const Field& F = a.field();
  std::vector<Elem> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& e : out) e = F.mul(e, c);
  return Poly(F, std::move(out));
}

/// a * t^n
inline Poly shift(const Poly& a, int n) {
  if (a.is_zero()) return a;
  std::vector<Elem> out(static_cast<std::size_t>(n), a.field().zero());
  out.insert(out.end(), a.coeffs().begin(), a.coeffs().end());
  return Poly(a.field(), std::move(out));
}

/// Euclidean division a = quotient * b + remainder, deg remainder < deg b.
inline std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& F = a.field();
  if (a.degree() < b.degree()) return {Poly(F), a};
  std::vector<Elem> r(a.coeffs().begin(), a.coeffs().end());
  const auto cb = b.coeffs();
  const std::size_t db = cb.size() - 1;
  const Elem inv_lead = F.inv(cb.back());
  std::vector<Elem> quot(r.size() - db, F.zero());
  for (std::size_t i = r.size(); i-- > db;) {
    const Elem c = F.mul(r[i], inv_lead);
    quot[i - db] = c;
    if (c == F.zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(c, cb[j]));
  }
  r.resize(db);
  return {Poly(F, std::move(quot)), Poly(F, std::move(r))};
}

inline Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }
inline Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }

inline Poly make_monic(const Poly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return scale(a, a.field().inv(a.lead()));
}

namespace detail {

/// a <- a mod b in place; b nonzero and trimmed.
inline void reduce_in_place(std::vector<Elem>& a, std::span<const Elem> b, const Field& F) {
  const std::size_t db = b.size() - 1;
  const Elem inv_lead = F.inv(b.back());
  while (!a.empty() && a.size() > db) {
    const std::size_t top = a.size() - 1;
    const Elem c = F.mul(a[top], inv_lead);
    for (std::size_t j = 0; j < db; ++j) a[top - db + j] = F.sub(a[top - db + j], F.mul(c, b[j]));
    a.pop_back();
    while (!a.empty() && a.back() == F.zero()) a.pop_back();
  }
}

}  // namespace detail

/// Monic greatest common divisor; throws if both inputs are zero.
inline Poly gcd(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  const Field& F = a.field();
  std::vector<Elem> x(a.coeffs().begin(), a.coeffs().end()), y(b.coeffs().begin(), b.coeffs().end());
  while (!y.empty()) {
    detail::reduce_in_place(x, y, F);
    x.swap(y);
  }
  return make_monic(Poly(F, std::move(x)));
}

namespace detail {

/// out = a * b mod m on raw coefficient vectors (trimmed, low-to-high).
inline void mulmod_into(std::span<const Elem> a, std::span<const Elem> b, std::span<const Elem> m,
                        Elem inv_lead, const Field& F, std::vector<Elem>& out) {
  out.clear();
  if (a.empty() || b.empty()) return;
  out.assign(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == F.zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = out.size(); i-- > dm;) {
    if (out[i] == F.zero()) continue;
    const Elem c = F.mul(out[i], inv_lead);
    for (std::size_t j = 0; j < dm; ++j) out[i - dm + j] = F.sub(out[i - dm + j], F.mul(c, m[j]));
    out[i] = F.zero();
  }
  if (out.size() > dm) out.resize(dm);
  while (!out.empty() && out.back() == F.zero()) out.pop_back();
}

}  // namespace detail

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m) {
  require_same_field(a, b);
  require_same_field(a, m);
  if (m.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& F = m.field();
  std::vector<Elem> out;
  detail::mulmod_into((a % m).coeffs(), (b % m).coeffs(), m.coeffs(), F.inv(m.lead()), F, out);
  return Poly(F, std::move(out));
}

/// base^e mod m by square-and-multiply.
inline Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
  require_same_field(base, m);
  if (m.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& F = m.field();
  if (m.degree() == 0) return Poly(F);
  const Elem inv_lead = F.inv(m.lead());
  const Poly reduced = base % m;
  std::vector<Elem> result{F.one()}, b(reduced.coeffs().begin(), reduced.coeffs().end()), tmp;
  while (e) {
    if (e & 1) {
      detail::mulmod_into(result, b, m.coeffs(), inv_lead, F, tmp);
      result.swap(tmp);
    }
    e >>= 1;
    if (e) {
      detail::mulmod_into(b, b, m.coeffs(), inv_lead, F, tmp);
      b.swap(tmp);
    }
  }
  return Poly(F, std::move(result));
}

/// a^e without reduction.
inline Poly power(const Poly& a, unsigned e) {
  Poly result = Poly::one(a.field());
  Poly base = a;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

/// Formal derivative.
inline Poly derivative(const Poly& f) {
  const Field& F = f.field();
  const auto c = f.coeffs();
  if (c.size() <= 1) return Poly(F);
  std::vector<Elem> out(c.size() - 1);
  for (std::size_t n = 1; n < c.size(); ++n) out[n - 1] = F.mul(F.from_int(static_cast<std::int64_t>(n % F.p())), c[n]);
  return Poly(F, std::move(out));
}

/// Horner evaluation.
inline Elem eval(const Poly& f, Elem x) {
  const Field& F = f.field();
  if (!F.contains(x)) throw std::invalid_argument("evaluation point outside the field");
  Elem acc = F.zero();
  const auto c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), c[i]);
  return acc;
}

}  // namespace ffstat

#endif  // FFSTAT_POLY_HPP
