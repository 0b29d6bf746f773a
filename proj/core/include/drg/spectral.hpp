#pragma once

#include <optional>
#include <vector>

#include "drg/exactnum.hpp"
#include "drg/intersection_array.hpp"

namespace drg {

/// Tridiagonal matrix: sub[i] = T(i+1, i), super[i] = T(i, i+1).
struct Tridiag {
  std::vector<Rational> sub;
  std::vector<Rational> diag;
  std::vector<Rational> super;

  int order() const { return static_cast<int>(diag.size()); }
  /// Leading j x j principal submatrix.
  Tridiag leading(int j) const;
  Tridiag shifted(const Rational& s) const;  // T + s I
  std::vector<std::vector<double>> dense() const;
};

/// Symmetric tridiagonal with off-diagonals kept as exact squares plus a
/// numeric square root.
struct SymmetricTridiag {
  std::vector<Rational> diag;
  std::vector<Rational> off_squared;
  std::vector<double> off_numeric;

  int order() const { return static_cast<int>(diag.size()); }
  SymmetricTridiag leading(int j) const;
  std::vector<std::vector<double>> dense() const;
};

Tridiag matrix_L(const IntersectionArray& ia);
Tridiag matrix_R(const IntersectionArray& ia);

/// Throws std::domain_error when some product sub[i] * super[i] is <= 0.
SymmetricTridiag symmetrize(const Tridiag& t);

/// det(xI - T), scaled to a primitive integer polynomial when T has
/// non-integer entries.
IntPoly char_poly(const Tridiag& t);
IntPoly char_poly(const SymmetricTridiag& t);

struct SpectrumEntry {
  AlgebraicValue theta;
  /// Present when the multiplicity is rational (always the case for rational
  /// eigenvalues; for irrational ones iff all conjugates share it).
  std::optional<Rational> multiplicity;
  double multiplicity_approx = 0.0;
  /// Index into Spectrum::factors of the minimal polynomial.
  std::size_t factor_index = 0;
};

struct Moments {
  Rational sum_m;
  Rational sum_m_theta;
  Rational sum_m_theta2;
};

struct Spectrum {
  IntPoly char_poly;
  std::vector<IntPoly> factors;
  /// Descending eigenvalues.
  std::vector<SpectrumEntry> entries;
  Moments moments;
  Rational v;

  const SpectrumEntry& theta(int i) const { return entries.at(static_cast<std::size_t>(i)); }
  const SpectrumEntry& theta_min() const { return entries.back(); }
  bool all_multiplicities_positive_integers() const;
};

class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Eigenvalues of L with multiplicities v / sum_i k_i u_i(theta)^2, computed
/// in Q[x]/(f) for each irreducible factor f. The moment identities are
/// verified exactly; failure throws ConsistencyError.
Spectrum spectrum(const IntersectionArray& ia);

/// Sum m, sum m theta, sum m theta^2 as exact traces.
Moments exact_moments(const Spectrum& s);

/// Smallest eigenvalue of the leading j x j submatrix. Throws
/// std::out_of_range unless 1 <= j <= order.
AlgebraicValue truncation_min_eig(const Tridiag& t, int j);
AlgebraicValue truncation_min_eig(const SymmetricTridiag& t, int j);

/// Number of eigenvalues of t strictly below x (and at most x).
int count_eigenvalues_below(const Tridiag& t, const Rational& x);
int count_eigenvalues_at_most(const Tridiag& t, const Rational& x);

/// max(-1, k - b_i - c_{i+1} for 1 <= i < D)
Rational theta1_diag_bound(const IntersectionArray& ia);

/// u_0..u_D at a numeric theta.
std::vector<long double> standard_sequence(const IntersectionArray& ia, long double theta);

}  // namespace drg
