#ifndef FFSTAT_GF_HPP
#define FFSTAT_GF_HPP

// Exact arithmetic in F_q = F_{p^nu}.
//
// Elements are encoded as integers in [0, q): the base-p digits of the index
// are the coordinates of the element over F_p, low-to-high, relative to the
// field modulus.  So index 0 is zero, index 1 is one, and for nu > 1 index p
// is the class of x.  Multiplication goes through exp/log tables built from
// the smallest primitive element; addition is digitwise mod p.
//
// Fields are interned: make_field(p, nu) always returns a reference to the
// same immutable object, which lives until program exit.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ffstat {

/// Element of a finite field, stored as its base-p digit index.
struct Elem {
  std::uint32_t v = 0;
  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

inline constexpr std::uint64_t kDefaultMaxFieldSize = std::uint64_t{1} << 16;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Dense F_p polynomials on digit vectors, low-to-high, used only while the
// field is being constructed.
using DigitPoly = std::vector<std::uint32_t>;

inline void trim(DigitPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline DigitPoly digit_mod(DigitPoly a, const DigitPoly& b, std::uint32_t p) {
  // b monic
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = std::uint64_t{lead} * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

inline DigitPoly digits_of(std::uint64_t index, std::uint32_t p, unsigned len) {
  DigitPoly d(len, 0);
  for (unsigned i = 0; i < len; ++i) {
    d[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return d;
}

// Irreducible over F_p iff no monic polynomial of degree 1..deg/2 divides it.
inline bool digit_irreducible(const DigitPoly& f, std::uint32_t p) {
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      DigitPoly g = digits_of(idx, p, d);
      g.push_back(1);
      if (digit_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

/// The finite field F_{p^nu} with a canonical modulus.
class Field {
 public:
  std::uint32_t p() const { return p_; }
  unsigned nu() const { return nu_; }
  std::uint32_t q() const { return q_; }
  /// Monic irreducible of degree nu over F_p, nu+1 digits low-to-high.
  /// For nu = 1 this is the placeholder x.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  /// Embedding of the integer n via n mod p.
  Elem from_int(std::int64_t n) const {
    const std::int64_t r = ((n % static_cast<std::int64_t>(p_)) + p_) % p_;
    return Elem{static_cast<std::uint32_t>(r)};
  }
  Elem at(std::uint32_t index) const {
    if (index >= q_) throw std::invalid_argument("field element index out of range");
    return Elem{index};
  }
  bool contains(Elem a) const { return a.v < q_; }

  std::vector<std::uint32_t> digits(Elem a) const {
    return detail::digits_of(a.v, p_, nu_);
  }
  Elem from_digits(std::span<const std::uint32_t> d) const {
    if (d.size() != nu_)
      throw std::invalid_argument("field element needs exactly " + std::to_string(nu_) +
                                  " components, got " + std::to_string(d.size()));
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) {
      if (d[i] >= p_)
        throw std::invalid_argument("digit " + std::to_string(d[i]) + " is not below p = " +
                                    std::to_string(p_));
      v = v * p_ + d[i];
    }
    return Elem{v};
  }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return Elem{a.v ^ b.v};
    if (nu_ == 1) {
      const std::uint32_t s = a.v + b.v;
      return Elem{s >= p_ ? s - p_ : s};
    }
    if (!add_table_.empty()) return Elem{add_table_[std::size_t{a.v} * q_ + b.v]};
    return Elem{digitwise(a.v, b.v, false)};
  }
  Elem neg(Elem a) const { return Elem{neg_table_[a.v]}; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (a.v == 0 || b.v == 0) return Elem{0};
    return Elem{exp_[log_[a.v] + log_[b.v]]};
  }
  Elem inv(Elem a) const {
    if (a.v == 0) throw std::domain_error("zero has no multiplicative inverse");
    const std::uint32_t l = log_[a.v];
    return Elem{exp_[l == 0 ? 0 : (q_ - 1) - l]};
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// a^n with 0^0 = 1.
  Elem pow(Elem a, std::uint64_t n) const {
    if (n == 0) return one();
    if (a.v == 0) return zero();
    const std::uint64_t e = (std::uint64_t{log_[a.v]} * (n % (q_ - 1))) % (q_ - 1);
    return Elem{exp_[e]};
  }
  /// The unique b with b^p = a (F_q is perfect).
  Elem pth_root(Elem a) const { return pow(a, q_ / p_); }

  /// Schoolbook square-and-multiply; independent of the log tables.
  Elem pow_by_squaring(Elem a, std::uint64_t n) const {
    Elem r = one();
    while (n) {
      if (n & 1) r = mul_digits(r, a);
      a = mul_digits(a, a);
      n >>= 1;
    }
    return r;
  }
  /// Product computed directly as F_p polynomials reduced mod the modulus.
  Elem mul_digits(Elem a, Elem b) const {
    auto da = digits(a), db = digits(b);
    detail::DigitPoly prod(2 * nu_ - 1, 0);
    for (unsigned i = 0; i < nu_; ++i)
      for (unsigned j = 0; j < nu_; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_);
    auto r = detail::digit_mod(prod, modulus_, p_);
    r.resize(nu_, 0);
    return from_digits(r);
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.nu_ == b.nu_;
  }

 private:
  friend const Field& make_field(std::uint32_t, unsigned, std::uint64_t);

  Field(std::uint32_t p, unsigned nu, std::uint32_t q) : p_(p), nu_(nu), q_(q) {
    if (nu_ == 1) {
      modulus_ = {0, 1};
    } else {
      std::uint64_t count = q_;  // p^nu candidates for the low digits
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        auto cand = detail::digits_of(idx, p_, nu_);
        cand.push_back(1);
        if (detail::digit_irreducible(cand, p_)) {
          modulus_ = std::move(cand);
          break;
        }
      }
    }
    build_tables();
  }

  std::uint32_t digitwise(std::uint32_t a, std::uint32_t b, bool negate_b) const {
    std::uint32_t out = 0, scale = 1;
    for (unsigned i = 0; i < nu_; ++i) {
      const std::uint32_t da = a % p_, db = b % p_;
      a /= p_;
      b /= p_;
      const std::uint32_t s = negate_b ? (da + p_ - db) % p_ : (da + db) % p_;
      out += s * scale;
      scale *= p_;
    }
    return out;
  }

  void build_tables() {
    neg_table_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) neg_table_[a] = digitwise(0, a, true);
    if (p_ != 2 && nu_ > 1 && q_ <= 1024) {
      add_table_.resize(std::size_t{q_} * q_);
      for (std::uint32_t a = 0; a < q_; ++a)
        for (std::uint32_t b = 0; b < q_; ++b)
          add_table_[std::size_t{a} * q_ + b] = digitwise(a, b, false);
    }
    // Smallest primitive element by index.
    const std::uint32_t order = q_ - 1;
    const auto primes = detail::prime_divisors(order);
    Elem gen{1};
    for (std::uint32_t g = 1; g < q_; ++g) {
      bool primitive = true;
      for (auto r : primes) {
        if (pow_by_squaring(Elem{g}, order / r) == one()) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        gen = Elem{g};
        break;
      }
    }
    exp_.assign(2 * std::size_t{order} + 1, 0);
    log_.assign(q_, 0);
    Elem x = one();
    for (std::uint32_t i = 0; i < order; ++i) {
      exp_[i] = x.v;
      log_[x.v] = i;
      x = mul_digits(x, gen);
    }
    for (std::size_t i = order; i < exp_.size(); ++i) exp_[i] = exp_[i - order];
  }

  std::uint32_t p_;
  unsigned nu_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_, log_, neg_table_, add_table_;
};

/// Interned construction of F_{p^nu}.  Throws std::invalid_argument for a
/// non-prime p or nu < 1, BudgetExceeded when p^nu > max_q.
inline const Field& make_field(std::uint32_t p, unsigned nu,
                               std::uint64_t max_q = kDefaultMaxFieldSize) {
  if (!detail::is_prime_u64(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (nu < 1) throw std::invalid_argument("field degree nu must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < nu; ++i) {
    q *= p;
    if (q > max_q || q > (std::uint64_t{1} << 31))
      throw BudgetExceeded("field size " + std::to_string(p) + "^" + std::to_string(nu) +
                           " exceeds the limit " + std::to_string(max_q));
  }
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, unsigned>, std::unique_ptr<Field>> registry;
  std::lock_guard lock(mu);
  auto& slot = registry[{p, nu}];
  if (!slot) slot.reset(new Field(p, nu, static_cast<std::uint32_t>(q)));
  return *slot;
}

/// Splits a prime power q into (p, nu); throws if q is not a prime power.
inline std::pair<std::uint32_t, unsigned> split_prime_power(std::uint64_t q) {
  const auto primes = detail::prime_divisors(q);
  if (q < 2 || primes.size() != 1)
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  unsigned nu = 0;
  while (q > 1) {
    q /= primes[0];
    ++nu;
  }
  return {static_cast<std::uint32_t>(primes[0]), nu};
}

inline const Field& field_of_order(std::uint64_t q, std::uint64_t max_q = kDefaultMaxFieldSize) {
  auto [p, nu] = split_prime_power(q);
  return make_field(p, nu, max_q);
}

}  // namespace ffstat

#endif  // FFSTAT_GF_HPP
