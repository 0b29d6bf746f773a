#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "drg/exactnum.hpp"

namespace drg {

/// {b0,...,b_{D-1}; c1,...,c_D}. Entries are positive; monotonicity is a
/// separate check (formal_validity) so that invalid arrays stay reportable.
class IntersectionArray {
 public:
  IntersectionArray() = default;
  /// Throws std::invalid_argument on empty halves, unequal lengths or
  /// non-positive entries.
  IntersectionArray(std::vector<std::int64_t> b, std::vector<std::int64_t> c);

  int diameter() const { return static_cast<int>(b_.size()); }
  std::int64_t k() const { return b_.front(); }
  /// b_i for 0 <= i <= D, with b_D = 0.
  std::int64_t b(int i) const;
  /// c_i for 0 <= i <= D, with c_0 = 0.
  std::int64_t c(int i) const;
  /// a_i = k - b_i - c_i.
  std::int64_t a(int i) const { return k() - b(i) - c(i); }

  const std::vector<std::int64_t>& b_values() const { return b_; }
  const std::vector<std::int64_t>& c_values() const { return c_; }

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
  friend auto operator<=>(const IntersectionArray&, const IntersectionArray&) = default;

 private:
  std::vector<std::int64_t> b_;
  std::vector<std::int64_t> c_;
};

struct DerivedParams {
  std::vector<std::int64_t> a;  // a_0..a_D
  std::vector<Rational> k_seq;  // k_0..k_D
  Rational v;
  Rational t;  // k / (a_1 + 1)
};

DerivedParams derive(const IntersectionArray& ia);

struct Validity {
  bool ok = true;
  std::string reason;
};

/// Monotone b and c, c_1 = 1, b_i >= c_j whenever i + j <= D, a_i >= 0.
Validity formal_validity(const IntersectionArray& ia);

struct ArrayFlags {
  bool bipartite_formal = false;
  bool antipodal_formal = false;
};

ArrayFlags array_tests(const IntersectionArray& ia);

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "{b0,b1,...;c1,c2,...}", whitespace tolerant.
IntersectionArray parse_array(std::string_view text);
std::string format_array(const IntersectionArray& ia);

/// Ordering used for search output: k, then b_1, then c_2, then the rest.
bool search_order_less(const IntersectionArray& x, const IntersectionArray& y);

}  // namespace drg
