#pragma once

// Exact arithmetic: big integers, rationals, integer polynomials and
// exactly isolated real algebraic numbers.
//
// Every decision in the library (strict inequalities against eigenvalues,
// integrality of multiplicities, thresholds in the case scans) goes through
// the types in this header. Floating point values appear only as cached
// approximations for reporting.

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace drg {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Reduced num/den; throws std::domain_error on a zero denominator.
Rational make_rational(const BigInt& num, const BigInt& den);

std::string to_string(const BigInt& value);
/// "7/2", "-3", "0".
std::string to_string(const Rational& value);
double to_double(const Rational& value);

BigInt floor_of(const Rational& value);
BigInt ceil_of(const Rational& value);

std::strong_ordering compare(const Rational& lhs, const Rational& rhs);

class RatPoly;

/// Polynomial with arbitrary-precision integer coefficients, constant term
/// first. The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and has degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  /// x - r
  static IntPoly linear_root(const BigInt& r);
  /// den*x - num, the primitive linear polynomial vanishing at q.
  static IntPoly linear_root(const Rational& q);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  std::span<const BigInt> coeffs() const { return coeffs_; }
  /// Coefficient of x^i (zero beyond the degree).
  BigInt coeff(std::size_t i) const;
  const BigInt& leading() const;

  Rational eval(const Rational& x) const;
  BigInt eval(const BigInt& x) const;
  long double eval(long double x) const;
  /// Sign of p(x), computed without rational normalization.
  int sign_at(const Rational& x) const;

  IntPoly derivative() const;
  BigInt content() const;
  /// Divides by the content; leading coefficient made positive.
  IntPoly primitive() const;
  IntPoly operator-() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const BigInt& s, const IntPoly& p);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  /// Human readable, highest power first, e.g. "x^3 - x".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Polynomial over the rationals. Used for Euclidean algorithms and for
/// arithmetic in Q[x]/(f).
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  explicit RatPoly(const IntPoly& p);

  static RatPoly constant(const Rational& c);
  static RatPoly x();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Rational> coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;

  Rational eval(const Rational& x) const;
  long double eval(long double x) const;
  RatPoly monic() const;
  /// Positive multiple with coprime integer coefficients. The sign of every
  /// value is preserved, which is what Sturm sequences rely on.
  IntPoly to_primitive() const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const Rational& s, const RatPoly& p);
  friend bool operator==(const RatPoly& a, const RatPoly& b) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct PolyDivision {
  RatPoly quotient;
  RatPoly remainder;
};

/// Euclidean division; throws std::domain_error when dividing by zero.
PolyDivision divmod(const RatPoly& num, const RatPoly& den);
/// Monic gcd (zero only when both inputs are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);
/// Primitive gcd with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
/// Quotient when den divides num over Z, nullopt otherwise.
std::optional<IntPoly> divide_exact(const IntPoly& num, const IntPoly& den);
/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
RatPoly inverse_mod(const RatPoly& a, const RatPoly& m);
/// a mod m
RatPoly reduce_mod(const RatPoly& a, const RatPoly& m);

bool is_squarefree(const IntPoly& p);
/// p / gcd(p, p'), primitive.
IntPoly squarefree_part(const IntPoly& p);

/// Sturm chain p, p', -rem(...), ... stored as sign-preserving primitive
/// integer polynomials.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& p);

  int variations_at(const Rational& x) const;
  int variations_at_neg_infinity() const;
  int variations_at_pos_infinity() const;

  /// Distinct real roots in the half-open interval (lo, hi].
  int count_roots(const Rational& lo, const Rational& hi) const;
  /// Distinct real roots <= x.
  int count_roots_at_most(const Rational& x) const;
  /// Distinct real roots < x.
  int count_roots_below(const Rational& x) const;
  int count_real_roots() const;

  const IntPoly& polynomial() const { return chain_.front(); }

 private:
  std::vector<IntPoly> chain_;
};

/// A real algebraic number: an exact integer or rational, or the unique root
/// of a squarefree integer polynomial inside an open rational interval whose
/// endpoints are not roots.
class AlgebraicValue {
 public:
  enum class Kind { ExactInteger, ExactRational, IsolatedRoot };

  AlgebraicValue() : AlgebraicValue(Rational(0)) {}
  explicit AlgebraicValue(const Rational& exact);
  explicit AlgebraicValue(const BigInt& exact) : AlgebraicValue(Rational(exact)) {}

  /// Throws std::invalid_argument unless `factor` has exactly one root in
  /// (lo, hi) and neither endpoint is a root.
  static AlgebraicValue isolated(IntPoly factor, Rational lo, Rational hi);

  Kind kind() const { return kind_; }
  bool is_exact() const { return kind_ != Kind::IsolatedRoot; }
  bool is_integer() const { return kind_ == Kind::ExactInteger; }
  /// Throws std::logic_error for isolated roots.
  const Rational& exact_value() const;
  /// For exact values this is the primitive linear polynomial.
  const IntPoly& minimal_factor() const { return factor_; }
  const Rational& lower() const { return lo_; }
  const Rational& upper() const { return hi_; }
  double approx() const { return approx_; }

  /// Same number with the isolating interval shrunk below `max_width`.
  AlgebraicValue refined(const Rational& max_width) const;

  /// "5", "-7/2", "-sqrt(5)", "9+4*sqrt(3)", or "root(<poly>; lo, hi)~x".
  std::string to_string() const;

 private:
  Kind kind_ = Kind::ExactInteger;
  Rational exact_;
  IntPoly factor_;
  Rational lo_;
  Rational hi_;
  double approx_ = 0.0;
};

/// Exact ordering; `equal` only when v is exactly q.
std::strong_ordering compare_to_rational(const AlgebraicValue& v, const Rational& q);
/// Exact ordering of two algebraic values.
std::strong_ordering compare(const AlgebraicValue& a, const AlgebraicValue& b);

struct IntegerRoot {
  BigInt value;
  int multiplicity = 0;
  friend bool operator==(const IntegerRoot&, const IntegerRoot&) = default;
};

/// All integer roots with multiplicity, ascending. Throws
/// std::domain_error("undefined roots") for the zero polynomial.
std::vector<IntegerRoot> integer_roots(const IntPoly& p);
/// p with the given integer roots divided out.
IntPoly deflate(const IntPoly& p, std::span<const IntegerRoot> roots);

/// Isolates every real root of a squarefree polynomial; ascending order.
/// Rational roots are detected and returned exactly. Throws
/// std::invalid_argument for non-squarefree input.
std::vector<AlgebraicValue> isolate_real_roots(const IntPoly& p);

/// Splits a squarefree polynomial whose roots are all real into irreducible
/// factors over Z (primitive, positive leading coefficient). Intended for
/// the small degrees of characteristic polynomials here; linear factors come
/// first.
std::vector<IntPoly> factor_real_rooted(const IntPoly& p);

}  // namespace drg
