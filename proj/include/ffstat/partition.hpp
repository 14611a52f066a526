#ifndef FFSTAT_PARTITION_HPP
#define FFSTAT_PARTITION_HPP

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ffstat {

/// A partition of k: nonincreasing positive parts.  Doubles as the
/// factorization type of a degree-k polynomial and the cycle type of a
/// permutation in S_k.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    if (!parts_.empty() && parts_.back() < 1)
      throw std::invalid_argument("partition parts must be positive");
  }

  const std::vector<int>& parts() const { return parts_; }
  int k() const {
    int s = 0;
    for (int x : parts_) s += x;
    return s;
  }
  std::size_t length() const { return parts_.size(); }
  /// part size -> number of occurrences
  std::map<int, int> multiplicities() const {
    std::map<int, int> m;
    for (int x : parts_) ++m[x];
    return m;
  }

  /// "4+1+1"
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += '+';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  /// Accepts "4+1+1", "4 + 1 + 1"; parts may be given in any order.
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    std::string digits;
    auto flush = [&] {
      if (digits.empty()) throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
      parts.push_back(std::stoi(digits));
      digits.clear();
    };
    for (char ch : text) {
      if (std::isspace(static_cast<unsigned char>(ch))) continue;
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        digits += ch;
      } else if (ch == '+') {
        flush();
      } else {
        throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
      }
    }
    flush();
    for (int x : parts)
      if (x < 1) throw std::invalid_argument("partition parts must be positive");
    return Partition(std::move(parts));
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Orders partitions reverse-lexicographically: (3) before (2,1) before (1,1,1).
struct ReverseLex {
  bool operator()(const Partition& a, const Partition& b) const { return a.parts() > b.parts(); }
};

}  // namespace ffstat

#endif  // FFSTAT_PARTITION_HPP
