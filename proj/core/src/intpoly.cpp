#include <algorithm>
#include <sstream>

#include "drg/exactnum.hpp"

namespace drg {

namespace {

template <typename T>
std::string format_poly(std::span<const T> coeffs, auto&& coeff_str) {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const T& c = coeffs[i];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    T mag = negative ? T(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (i == 0 || !unit) os << coeff_str(mag);
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::linear_root(const BigInt& r) { return IntPoly(std::vector<BigInt>{-r, 1}); }

IntPoly IntPoly::linear_root(const Rational& q) {
  return IntPoly(std::vector<BigInt>{-q.get_num(), q.get_den()});
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

const BigInt& IntPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational IntPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

long double IntPoly::eval(long double x) const {
  long double acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + static_cast<long double>(coeffs_[i].get_d());
  return acc;
}

int IntPoly::sign_at(const Rational& x) const {
  if (coeffs_.empty()) return 0;
  // Homogenized Horner: p(n/d) * d^deg = sum a_i n^i d^(deg-i), d > 0.
  const BigInt& num = x.get_num();
  const BigInt& den = x.get_den();
  BigInt acc = coeffs_.back();
  BigInt dpow = 1;
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    dpow *= den;
    acc *= num;
    acc += coeffs_[i] * dpow;
  }
  return sgn(acc);
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return IntPoly();
  std::vector<BigInt> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(out));
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive() const {
  if (coeffs_.empty()) return {};
  BigInt g = content();
  if (coeffs_.back() < 0) g = -g;
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(out));
}

IntPoly operator*(const BigInt& s, const IntPoly& p) {
  std::vector<BigInt> out(p.coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * p.coeffs_[i];
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
  return format_poly<BigInt>(coeffs_, [](const BigInt& c) { return c.get_str(); });
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(const IntPoly& p) {
  coeffs_.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) coeffs_.emplace_back(c);
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

RatPoly RatPoly::x() { return RatPoly(std::vector<Rational>{0, 1}); }

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& RatPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

long double RatPoly::eval(long double x) const {
  long double acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + static_cast<long double>(coeffs_[i].get_d());
  return acc;
}

RatPoly RatPoly::monic() const {
  if (coeffs_.empty()) return {};
  const Rational lc = coeffs_.back();
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeffs_[i] / lc;
  return RatPoly(std::move(out));
}

IntPoly RatPoly::to_primitive() const {
  if (coeffs_.empty()) return {};
  BigInt lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    Rational scaled = coeffs_[i] * lcm;
    out[i] = scaled.get_num();
  }
  IntPoly p(std::move(out));
  BigInt g = p.content();
  std::vector<BigInt> reduced(p.coeffs().begin(), p.coeffs().end());
  for (auto& c : reduced) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(reduced));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return RatPoly(std::move(out));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
  return RatPoly(std::move(out));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RatPoly(std::move(out));
}

RatPoly operator*(const Rational& s, const RatPoly& p) {
  std::vector<Rational> out(p.coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * p.coeffs_[i];
  return RatPoly(std::move(out));
}

std::string RatPoly::to_string() const {
  return format_poly<Rational>(coeffs_, [](const Rational& c) { return drg::to_string(c); });
}

// ------------------------------------------------------- Euclidean tools

PolyDivision divmod(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem(num.coeffs().begin(), num.coeffs().end());
  const int dd = den.degree();
  if (num.degree() < dd) return {RatPoly(), num};
  std::vector<Rational> quot(static_cast<std::size_t>(num.degree() - dd + 1));
  const Rational& lc = den.leading();
  for (int i = num.degree(); i >= dd; --i) {
    const Rational factor = rem[static_cast<std::size_t>(i)] / lc;
    quot[static_cast<std::size_t>(i - dd)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= factor * den.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a;
  RatPoly y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) { return gcd(RatPoly(a), RatPoly(b)).to_primitive(); }

std::optional<IntPoly> divide_exact(const IntPoly& num, const IntPoly& den) {
  auto [q, r] = divmod(RatPoly(num), RatPoly(den));
  if (!r.is_zero()) return std::nullopt;
  std::vector<BigInt> out;
  out.reserve(q.coeffs().size());
  for (const auto& c : q.coeffs()) {
    if (c.get_den() != 1) return std::nullopt;
    out.push_back(c.get_num());
  }
  return IntPoly(std::move(out));
}

RatPoly reduce_mod(const RatPoly& a, const RatPoly& m) { return divmod(a, m).remainder; }

RatPoly inverse_mod(const RatPoly& a, const RatPoly& m) {
  // Extended Euclid tracking only the coefficient of a.
  RatPoly r0 = m, r1 = reduce_mod(a, m);
  RatPoly s0, s1 = RatPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RatPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw std::domain_error("polynomial is not invertible modulo the given modulus");
  return reduce_mod(Rational(1) / r0.leading() * s0, m);
}

bool is_squarefree(const IntPoly& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() <= 0) return p.primitive();
  const IntPoly g = gcd(p, p.derivative());
  if (g.degree() == 0) return p.primitive();
  return divmod(RatPoly(p), RatPoly(g)).quotient.to_primitive();
}

// ----------------------------------------------------------------- Sturm

SturmSequence::SturmSequence(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("Sturm sequence of the zero polynomial");
  // Normalize by a positive factor only; signs are all that matter.
  IntPoly first = p;
  const BigInt g = p.content();
  {
    std::vector<BigInt> c(p.coeffs().begin(), p.coeffs().end());
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    first = IntPoly(std::move(c));
  }
  chain_.push_back(first);
  if (first.degree() == 0) return;
  IntPoly second = first.derivative();
  {
    const BigInt g2 = second.content();
    std::vector<BigInt> c(second.coeffs().begin(), second.coeffs().end());
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g2.get_mpz_t());
    second = IntPoly(std::move(c));
  }
  chain_.push_back(second);
  while (chain_.back().degree() > 0) {
    const auto& a = chain_[chain_.size() - 2];
    const auto& b = chain_.back();
    RatPoly r = divmod(RatPoly(a), RatPoly(b)).remainder;
    if (r.is_zero()) break;
    chain_.push_back((Rational(-1) * r).to_primitive());
  }
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

int SturmSequence::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(p.sign_at(x));
  return count_variations(signs);
}

int SturmSequence::variations_at_neg_infinity() const {
  std::vector<int> signs;
  for (const auto& p : chain_) {
    const int s = sgn(p.leading());
    signs.push_back(p.degree() % 2 == 0 ? s : -s);
  }
  return count_variations(signs);
}

int SturmSequence::variations_at_pos_infinity() const {
  std::vector<int> signs;
  for (const auto& p : chain_) signs.push_back(sgn(p.leading()));
  return count_variations(signs);
}

int SturmSequence::count_roots(const Rational& lo, const Rational& hi) const {
  if (cmp(lo, hi) >= 0) return 0;
  return variations_at(lo) - variations_at(hi);
}

int SturmSequence::count_roots_at_most(const Rational& x) const {
  return variations_at_neg_infinity() - variations_at(x);
}

int SturmSequence::count_roots_below(const Rational& x) const {
  const int at_most = count_roots_at_most(x);
  return chain_.front().sign_at(x) == 0 ? at_most - 1 : at_most;
}

int SturmSequence::count_real_roots() const { return variations_at_neg_infinity() - variations_at_pos_infinity(); }

}  // namespace drg
