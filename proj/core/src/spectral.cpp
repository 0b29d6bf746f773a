#include "drg/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace drg {

Tridiag Tridiag::leading(int j) const {
  if (j < 1 || j > order()) throw std::out_of_range("truncation size out of range");
  Tridiag t;
  t.diag.assign(diag.begin(), diag.begin() + j);
  t.sub.assign(sub.begin(), sub.begin() + (j - 1));
  t.super.assign(super.begin(), super.begin() + (j - 1));
  return t;
}

Tridiag Tridiag::shifted(const Rational& s) const {
  Tridiag t = *this;
  for (auto& d : t.diag) d += s;
  return t;
}

std::vector<std::vector<double>> Tridiag::dense() const {
  const int n = order();
  std::vector<std::vector<double>> m(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int i = 0; i < n; ++i) {
    m[i][i] = diag[i].get_d();
    if (i + 1 < n) {
      m[i + 1][i] = sub[i].get_d();
      m[i][i + 1] = super[i].get_d();
    }
  }
  return m;
}

SymmetricTridiag SymmetricTridiag::leading(int j) const {
  if (j < 1 || j > order()) throw std::out_of_range("truncation size out of range");
  SymmetricTridiag t;
  t.diag.assign(diag.begin(), diag.begin() + j);
  t.off_squared.assign(off_squared.begin(), off_squared.begin() + (j - 1));
  t.off_numeric.assign(off_numeric.begin(), off_numeric.begin() + (j - 1));
  return t;
}

std::vector<std::vector<double>> SymmetricTridiag::dense() const {
  const int n = order();
  std::vector<std::vector<double>> m(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int i = 0; i < n; ++i) {
    m[i][i] = diag[i].get_d();
    if (i + 1 < n) m[i + 1][i] = m[i][i + 1] = off_numeric[i];
  }
  return m;
}

Tridiag matrix_L(const IntersectionArray& ia) {
  const int D = ia.diameter();
  Tridiag t;
  for (int i = 0; i <= D; ++i) t.diag.emplace_back(ia.a(i));
  for (int i = 1; i <= D; ++i) t.sub.emplace_back(ia.c(i));
  for (int i = 0; i < D; ++i) t.super.emplace_back(ia.b(i));
  return t;
}

Tridiag matrix_R(const IntersectionArray& ia) {
  const int D = ia.diameter();
  Tridiag t;
  t.diag.emplace_back(-1);
  for (int i = 1; i < D; ++i) t.diag.emplace_back(ia.k() - ia.b(i) - ia.c(i + 1));
  for (int i = 1; i < D; ++i) t.super.emplace_back(ia.b(i));
  if (D >= 2) t.sub.emplace_back(1);
  for (int i = 2; i < D; ++i) t.sub.emplace_back(ia.c(i));
  return t;
}

SymmetricTridiag symmetrize(const Tridiag& t) {
  SymmetricTridiag s;
  s.diag = t.diag;
  for (std::size_t i = 0; i < t.sub.size(); ++i) {
    Rational prod = t.sub[i] * t.super[i];
    if (prod <= 0) throw std::domain_error("non-positive off-diagonal product at position " + std::to_string(i));
    s.off_numeric.push_back(std::sqrt(prod.get_d()));
    s.off_squared.push_back(std::move(prod));
  }
  return s;
}

namespace {

IntPoly continuant(const std::vector<Rational>& diag, const std::vector<Rational>& products) {
  RatPoly prev = RatPoly::constant(1);
  if (diag.empty()) return IntPoly::constant(1);
  RatPoly cur = RatPoly::x() - RatPoly::constant(diag[0]);
  for (std::size_t i = 1; i < diag.size(); ++i) {
    RatPoly next = (RatPoly::x() - RatPoly::constant(diag[i])) * cur - products[i - 1] * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur.to_primitive();
}

// p_0..p_{n-1} for the roots of f.
std::vector<Rational> power_sums(const IntPoly& f) {
  const RatPoly g = RatPoly(f).monic();
  const int n = g.degree();
  std::vector<Rational> p(static_cast<std::size_t>(std::max(n, 1)));
  p[0] = n;
  for (int j = 1; j < n; ++j) {
    Rational acc = Rational(j) * g.coeff(static_cast<std::size_t>(n - j));
    for (int i = 1; i < j; ++i) acc += g.coeff(static_cast<std::size_t>(n - i)) * p[static_cast<std::size_t>(j - i)];
    p[static_cast<std::size_t>(j)] = -acc;
  }
  return p;
}

Rational trace_mod(const RatPoly& g, const IntPoly& f, const std::vector<Rational>& sums) {
  const RatPoly r = reduce_mod(g, RatPoly(f));
  Rational acc = 0;
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) acc += r.coeffs()[i] * sums[i];
  return acc;
}

// v / S(x) in Q[x]/(f).
RatPoly multiplicity_residue(const IntersectionArray& ia, const DerivedParams& d, const IntPoly& f) {
  const RatPoly F(f);
  const int D = ia.diameter();
  const RatPoly x = RatPoly::x();
  std::vector<RatPoly> u;
  u.push_back(RatPoly::constant(1));
  u.push_back(reduce_mod(Rational(1, ia.k()) * x, F));
  for (int i = 1; i < D; ++i) {
    RatPoly next = (x - RatPoly::constant(Rational(ia.a(i)))) * u[i] - Rational(ia.c(i)) * u[i - 1];
    u.push_back(reduce_mod(Rational(1) / Rational(ia.b(i)) * next, F));
  }
  RatPoly S;
  for (int i = 0; i <= D; ++i) S = S + d.k_seq[static_cast<std::size_t>(i)] * reduce_mod(u[i] * u[i], F);
  S = reduce_mod(S, F);
  return reduce_mod(d.v * inverse_mod(S, F), F);
}

}  // namespace

IntPoly char_poly(const Tridiag& t) {
  std::vector<Rational> products;
  for (std::size_t i = 0; i < t.sub.size(); ++i) products.push_back(t.sub[i] * t.super[i]);
  return continuant(t.diag, products);
}

IntPoly char_poly(const SymmetricTridiag& t) { return continuant(t.diag, t.off_squared); }

bool Spectrum::all_multiplicities_positive_integers() const {
  return std::all_of(entries.begin(), entries.end(), [](const SpectrumEntry& e) {
    return e.multiplicity && e.multiplicity->get_den() == 1 && *e.multiplicity > 0;
  });
}

Moments exact_moments(const Spectrum& s) { return s.moments; }

Spectrum spectrum(const IntersectionArray& ia) {
  const DerivedParams d = derive(ia);
  Spectrum s;
  s.v = d.v;
  s.char_poly = char_poly(matrix_L(ia));
  if (!is_squarefree(s.char_poly)) throw ConsistencyError("characteristic polynomial of L has a repeated root");
  s.factors = factor_real_rooted(s.char_poly);

  Moments m{0, 0, 0};
  for (std::size_t fi = 0; fi < s.factors.size(); ++fi) {
    const IntPoly& f = s.factors[fi];
    const RatPoly residue = multiplicity_residue(ia, d, f);
    const auto sums = power_sums(f);
    m.sum_m += trace_mod(residue, f, sums);
    m.sum_m_theta += trace_mod(residue * RatPoly::x(), f, sums);
    m.sum_m_theta2 += trace_mod(residue * RatPoly::x() * RatPoly::x(), f, sums);

    for (auto& root : isolate_real_roots(f)) {
      SpectrumEntry e;
      e.theta = root;
      e.factor_index = fi;
      if (residue.degree() <= 0) {
        e.multiplicity = residue.coeff(0);
        e.multiplicity_approx = e.multiplicity->get_d();
      } else {
        e.multiplicity_approx = static_cast<double>(residue.eval(static_cast<long double>(root.approx())));
      }
      s.entries.push_back(std::move(e));
    }
  }
  std::sort(s.entries.begin(), s.entries.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) { return compare(a.theta, b.theta) > 0; });

  if (m.sum_m != d.v || m.sum_m_theta != 0 || m.sum_m_theta2 != d.v * ia.k())
    throw ConsistencyError("multiplicities of " + format_array(ia) + " fail the moment identities");
  s.moments = m;
  return s;
}

AlgebraicValue truncation_min_eig(const Tridiag& t, int j) {
  const IntPoly p = squarefree_part(char_poly(t.leading(j)));
  return isolate_real_roots(p).front();
}

AlgebraicValue truncation_min_eig(const SymmetricTridiag& t, int j) {
  const IntPoly p = squarefree_part(char_poly(t.leading(j)));
  return isolate_real_roots(p).front();
}

int count_eigenvalues_below(const Tridiag& t, const Rational& x) {
  return SturmSequence(squarefree_part(char_poly(t))).count_roots_below(x);
}

int count_eigenvalues_at_most(const Tridiag& t, const Rational& x) {
  return SturmSequence(squarefree_part(char_poly(t))).count_roots_at_most(x);
}

Rational theta1_diag_bound(const IntersectionArray& ia) {
  Rational best = -1;
  for (int i = 1; i < ia.diameter(); ++i) best = std::max(best, Rational(ia.k() - ia.b(i) - ia.c(i + 1)));
  return best;
}

std::vector<long double> standard_sequence(const IntersectionArray& ia, long double theta) {
  const int D = ia.diameter();
  std::vector<long double> u{1.0L, theta / static_cast<long double>(ia.k())};
  for (int i = 1; i < D; ++i)
    u.push_back(((theta - ia.a(i)) * u[i] - ia.c(i) * u[i - 1]) / static_cast<long double>(ia.b(i)));
  return u;
}

}  // namespace drg
