#ifndef FFSTAT_TEXT_HPP
#define FFSTAT_TEXT_HPP

// Text grammars for field elements and polynomials.
//
//   element:  [d0,d1,...,d_{nu-1}]   base-p digits low-to-high
//             n                       bare integer, prime fields only
//   poly:     e0,e1,...,e_n           coefficients low-to-high
//
// Over F_4, "[1],[0,1],[1]" is 1 + x t + t^2; over F_p the shorthand
// "1,0,2,1" is allowed.  Whitespace is ignored.

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ffstat/gf.hpp"
#include "ffstat/poly.hpp"

namespace ffstat {

inline std::string render_elem(const Field& F, Elem a) {
  std::string s = "[";
  const auto d = F.digits(a);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(d[i]);
  }
  return s + "]";
}

/// Prime fields use the bare shorthand, extension fields the bracket form.
inline std::string render_poly(const Poly& f) {
  const Field& F = f.field();
  if (f.is_zero()) return F.nu() == 1 ? "0" : render_elem(F, F.zero());
  std::string s;
  const auto c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += F.nu() == 1 ? std::to_string(c[i].v) : render_elem(F, c[i]);
  }
  return s;
}

namespace detail {

inline std::uint32_t parse_digit(std::string_view tok, std::uint32_t p) {
  if (tok.empty()) throw std::invalid_argument("empty digit");
  std::uint64_t v = 0;
  for (char ch : tok) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("malformed digit '" + std::string(tok) + "'");
    v = v * 10 + static_cast<std::uint64_t>(ch - '0');
    if (v >= p) throw std::invalid_argument("digit " + std::string(tok) + " is not below p = " + std::to_string(p));
  }
  return static_cast<std::uint32_t>(v);
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out(1);
  for (char ch : s) {
    if (ch == sep)
      out.emplace_back();
    else
      out.back() += ch;
  }
  return out;
}

inline std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  return out;
}

}  // namespace detail

inline Elem parse_elem(std::string_view text, const Field& F) {
  const std::string s = detail::strip_spaces(text);
  if (s.empty()) throw std::invalid_argument("empty field element");
  if (s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("unterminated field element '" + s + "'");
    std::vector<std::uint32_t> digits;
    for (const auto& tok : detail::split(std::string_view(s).substr(1, s.size() - 2), ','))
      digits.push_back(detail::parse_digit(tok, F.p()));
    // Omitted high digits are zero, so "[1]" is the unit in every field.
    if (digits.size() > F.nu())
      throw std::invalid_argument("field element '" + s + "' has more than " + std::to_string(F.nu()) +
                                  " components");
    digits.resize(F.nu(), 0);
    return F.from_digits(digits);
  }
  if (F.nu() != 1)
    throw std::invalid_argument("bare integer '" + s + "' needs " + std::to_string(F.nu()) +
                                " components in bracket form");
  return Elem{detail::parse_digit(s, F.p())};
}

inline Poly parse_poly(std::string_view text, const Field& F) {
  const std::string s = detail::strip_spaces(text);
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  std::vector<Elem> coeffs;
  if (s.find('[') != std::string::npos) {
    std::size_t pos = 0;
    while (pos < s.size()) {
      if (s[pos] != '[') throw std::invalid_argument("expected '[' at offset " + std::to_string(pos) + " in '" + s + "'");
      const std::size_t close = s.find(']', pos);
      if (close == std::string::npos) throw std::invalid_argument("unterminated coefficient in '" + s + "'");
      coeffs.push_back(parse_elem(std::string_view(s).substr(pos, close - pos + 1), F));
      pos = close + 1;
      if (pos < s.size()) {
        if (s[pos] != ',') throw std::invalid_argument("expected ',' at offset " + std::to_string(pos) + " in '" + s + "'");
        ++pos;
        if (pos == s.size()) throw std::invalid_argument("trailing ',' in '" + s + "'");
      }
    }
  } else {
    for (const auto& tok : detail::split(s, ',')) coeffs.push_back(parse_elem(tok, F));
  }
  return Poly(F, std::move(coeffs));
}

}  // namespace ffstat

#endif  // FFSTAT_TEXT_HPP
