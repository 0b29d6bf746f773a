#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "drg/exactnum.hpp"

namespace drg {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

Rational abs_rat(const Rational& x) { return x < 0 ? Rational(-x) : x; }

BigInt round_nearest(const Rational& q) { return floor_of(q + Rational(1, 2)); }

// Positive divisors of n by trial division; n is a leading coefficient and
// stays small for the polynomials handled here.
std::vector<BigInt> positive_divisors(BigInt n) {
  n = abs_big(n);
  std::vector<BigInt> out;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Result of bisecting an isolating interval: either a narrower interval or
// an exact rational root met at a midpoint.
struct Bisected {
  Rational lo, hi;
  std::optional<Rational> exact;
};

Bisected bisect_to(const IntPoly& f, Rational lo, Rational hi, const Rational& width) {
  const int s_lo = f.sign_at(lo);
  while (hi - lo >= width) {
    Rational mid = (lo + hi) / 2;
    const int s = f.sign_at(mid);
    if (s == 0) return {lo, hi, mid};
    if (s == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi, std::nullopt};
}

Rational approximation_width(const Rational& lo, const Rational& hi) {
  Rational scale = std::max({Rational(1), abs_rat(lo), abs_rat(hi)});
  BigInt two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 56);
  return scale / Rational(two_pow);
}

// Exact rational root inside (lo, hi) with denominator dividing lc, if any.
std::optional<Rational> rational_root_in(const IntPoly& f, const Rational& lo, const Rational& hi) {
  for (const auto& d : positive_divisors(f.leading())) {
    const BigInt first = ceil_of(lo * d);
    const BigInt last = floor_of(hi * d);
    for (BigInt n = first; n <= last; ++n) {
      Rational q = make_rational(n, d);
      if (q <= lo || q >= hi) continue;
      if (f.sign_at(q) == 0) return q;
    }
  }
  return std::nullopt;
}

// Largest square s with s^2 | n; returns (s, n / s^2).
std::pair<BigInt, BigInt> split_square(const BigInt& n) {
  BigInt rest = n;
  BigInt s = 1;
  for (BigInt p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      s *= p;
    }
  }
  return {s, rest};
}

std::string quadratic_surd(const IntPoly& f, double approx) {
  const BigInt& a = f.coeff(2);
  const BigInt b = f.coeff(1);
  const BigInt c = f.coeff(0);
  const BigInt disc = b * b - 4 * a * c;
  auto [s, r] = split_square(disc);
  const Rational center = make_rational(-b, 2 * a);
  const Rational coef = abs_rat(make_rational(s, 2 * a));
  const bool plus = approx > center.get_d();
  std::string surd = (coef == 1 ? std::string() : to_string(coef) + "*") + "sqrt(" + r.get_str() + ")";
  if (center == 0) return (plus ? "" : "-") + surd;
  return to_string(center) + (plus ? "+" : "-") + surd;
}

}  // namespace

// --------------------------------------------------------- AlgebraicValue

AlgebraicValue::AlgebraicValue(const Rational& exact)
    : kind_(exact.get_den() == 1 ? Kind::ExactInteger : Kind::ExactRational),
      exact_(exact),
      factor_(IntPoly::linear_root(exact)),
      lo_(exact),
      hi_(exact),
      approx_(exact.get_d()) {}

AlgebraicValue AlgebraicValue::isolated(IntPoly factor, Rational lo, Rational hi) {
  if (factor.degree() < 1) throw std::invalid_argument("isolating factor must have positive degree");
  if (lo >= hi) throw std::invalid_argument("empty isolating interval");
  if (factor.sign_at(lo) == 0 || factor.sign_at(hi) == 0)
    throw std::invalid_argument("isolating interval endpoint is a root");
  if (!is_squarefree(factor)) throw std::invalid_argument("isolating factor is not squarefree");
  SturmSequence sturm(factor);
  if (sturm.count_roots(lo, hi) != 1) throw std::invalid_argument("interval does not isolate a single root");

  factor = factor.primitive();
  const Bisected fine = bisect_to(factor, lo, hi, approximation_width(lo, hi));
  if (fine.exact) return AlgebraicValue(*fine.exact);

  AlgebraicValue v;
  v.kind_ = Kind::IsolatedRoot;
  v.exact_ = 0;
  v.factor_ = std::move(factor);
  v.lo_ = std::move(lo);
  v.hi_ = std::move(hi);
  v.approx_ = Rational((fine.lo + fine.hi) / 2).get_d();
  return v;
}

const Rational& AlgebraicValue::exact_value() const {
  if (!is_exact()) throw std::logic_error("algebraic value is not rational");
  return exact_;
}

AlgebraicValue AlgebraicValue::refined(const Rational& max_width) const {
  if (is_exact()) return *this;
  const Bisected b = bisect_to(factor_, lo_, hi_, max_width);
  if (b.exact) return AlgebraicValue(*b.exact);
  AlgebraicValue v = *this;
  v.lo_ = b.lo;
  v.hi_ = b.hi;
  return v;
}

std::string AlgebraicValue::to_string() const {
  if (is_exact()) return drg::to_string(exact_);
  if (factor_.degree() == 2) return quadratic_surd(factor_, approx_);
  std::ostringstream os;
  os << "root(" << factor_.to_string() << "; " << drg::to_string(lo_) << ", " << drg::to_string(hi_) << ")~"
     << std::setprecision(12) << approx_;
  return os.str();
}

std::strong_ordering compare_to_rational(const AlgebraicValue& v, const Rational& q) {
  if (v.is_exact()) return compare(v.exact_value(), q);
  if (q <= v.lower()) return std::strong_ordering::greater;
  if (q >= v.upper()) return std::strong_ordering::less;
  const IntPoly& f = v.minimal_factor();
  const int s = f.sign_at(q);
  if (s == 0) return std::strong_ordering::equal;
  return s != f.sign_at(v.lower()) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::strong_ordering compare(const AlgebraicValue& a, const AlgebraicValue& b) {
  if (a.is_exact() && b.is_exact()) return compare(a.exact_value(), b.exact_value());
  if (a.is_exact()) return 0 <=> compare_to_rational(b, a.exact_value());
  if (b.is_exact()) return compare_to_rational(a, b.exact_value());

  const IntPoly common = gcd(a.minimal_factor(), b.minimal_factor());
  std::optional<SturmSequence> common_sturm;
  if (common.degree() >= 1) common_sturm.emplace(common);

  AlgebraicValue x = a;
  AlgebraicValue y = b;
  for (;;) {
    if (!x.is_exact() && !y.is_exact()) {
      if (x.upper() <= y.lower()) return std::strong_ordering::less;
      if (y.upper() <= x.lower()) return std::strong_ordering::greater;
      if (common_sturm) {
        const Rational lo = std::max(x.lower(), y.lower());
        const Rational hi = std::min(x.upper(), y.upper());
        int n = common_sturm->count_roots(lo, hi);
        if (common.sign_at(hi) == 0) --n;
        if (n > 0) return std::strong_ordering::equal;
      }
      x = x.refined((x.upper() - x.lower()) / 2);
      y = y.refined((y.upper() - y.lower()) / 2);
      continue;
    }
    return compare(x, y);
  }
}

// ------------------------------------------------------------ isolation

std::vector<AlgebraicValue> isolate_real_roots(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("undefined roots");
  if (p.degree() == 0) return {};
  if (!is_squarefree(p)) throw std::invalid_argument("polynomial is not squarefree");

  const IntPoly f = p.primitive();
  const SturmSequence sturm(f);

  // Cauchy bound: every root satisfies |x| < 1 + max|a_i| / |a_n|.
  BigInt top = 0;
  for (std::size_t i = 0; i + 1 < f.coeffs().size(); ++i) top = std::max(top, abs_big(f.coeffs()[i]));
  const Rational bound = Rational(1) + make_rational(top, abs_big(f.leading())) + 1;

  const BigInt lc = abs_big(f.leading());
  const Rational detect_width = Rational(1) / Rational(lc * lc + 1);

  std::vector<AlgebraicValue> out;
  struct Job {
    Rational lo, hi;
  };
  std::vector<Job> stack{{-bound, bound}};
  while (!stack.empty()) {
    Job job = stack.back();
    stack.pop_back();
    const int n = sturm.count_roots(job.lo, job.hi);
    if (n == 0) continue;
    if (n == 1) {
      const Bisected b = bisect_to(f, job.lo, job.hi, detect_width);
      if (b.exact) {
        out.emplace_back(*b.exact);
      } else if (auto q = rational_root_in(f, b.lo, b.hi)) {
        out.emplace_back(*q);
      } else {
        out.push_back(AlgebraicValue::isolated(f, job.lo, job.hi));
      }
      continue;
    }
    const Rational mid = (job.lo + job.hi) / 2;
    if (f.sign_at(mid) != 0) {
      stack.push_back({job.lo, mid});
      stack.push_back({mid, job.hi});
      continue;
    }
    out.emplace_back(mid);
    Rational delta = (job.hi - job.lo) / 4;
    while (f.sign_at(mid - delta) == 0 || f.sign_at(mid + delta) == 0 ||
           sturm.count_roots(mid - delta, mid + delta) != 1) {
      delta /= 2;
    }
    stack.push_back({job.lo, mid - delta});
    stack.push_back({mid + delta, job.hi});
  }
  std::sort(out.begin(), out.end(),
            [](const AlgebraicValue& a, const AlgebraicValue& b) { return compare(a, b) < 0; });
  return out;
}

// -------------------------------------------------------- integer roots

std::vector<IntegerRoot> integer_roots(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("undefined roots");
  std::vector<IntegerRoot> out;

  std::size_t zeros = 0;
  while (p.coeffs()[zeros] == 0) ++zeros;
  IntPoly rest(std::vector<BigInt>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(zeros), p.coeffs().end()));
  if (zeros > 0) out.push_back({0, static_cast<int>(zeros)});
  if (rest.degree() < 1) return out;

  for (const auto& r : isolate_real_roots(squarefree_part(rest))) {
    if (!r.is_integer()) continue;
    const BigInt value = r.exact_value().get_num();
    const IntPoly lin = IntPoly::linear_root(value);
    int mult = 0;
    while (auto q = divide_exact(rest, lin)) {
      rest = std::move(*q);
      ++mult;
    }
    out.push_back({value, mult});
  }
  std::sort(out.begin(), out.end(), [](const IntegerRoot& a, const IntegerRoot& b) { return a.value < b.value; });
  return out;
}

IntPoly deflate(const IntPoly& p, std::span<const IntegerRoot> roots) {
  IntPoly rest = p;
  for (const auto& r : roots) {
    const IntPoly lin = IntPoly::linear_root(r.value);
    for (int i = 0; i < r.multiplicity; ++i) {
      auto q = divide_exact(rest, lin);
      if (!q) throw std::invalid_argument("deflate: " + r.value.get_str() + " is not a root of the given multiplicity");
      rest = std::move(*q);
    }
  }
  return rest;
}

// ------------------------------------------------------------ factoring

std::vector<IntPoly> factor_real_rooted(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  if (p.degree() < 1) return {};
  const auto roots = isolate_real_roots(p);
  if (static_cast<int>(roots.size()) != p.degree())
    throw std::invalid_argument("polynomial has non-real roots");

  std::vector<IntPoly> out;
  IntPoly rest = p.primitive();
  std::vector<AlgebraicValue> irrational;
  for (const auto& r : roots) {
    if (r.is_exact()) {
      const IntPoly lin = IntPoly::linear_root(r.exact_value());
      out.push_back(lin);
      rest = *divide_exact(rest, lin);
    } else {
      irrational.push_back(r);
    }
  }
  rest = rest.primitive();
  if (rest.degree() < 1) return out;
  if (rest.degree() <= 3) {
    out.push_back(rest);
    return out;
  }

  BigInt two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 256);
  const Rational eps = Rational(1) / Rational(two_pow);
  std::vector<Rational> approx;
  for (auto& r : irrational) {
    r = r.refined(eps * (abs_rat(r.lower()) + 1));
    approx.push_back(r.is_exact() ? r.exact_value() : (r.lower() + r.upper()) / 2);
  }

  std::vector<std::size_t> remaining(irrational.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;

  auto try_subset = [&](const std::vector<std::size_t>& pick) -> std::optional<IntPoly> {
    RatPoly prod = RatPoly::constant(Rational(rest.leading()));
    for (std::size_t idx : pick) prod = prod * RatPoly(std::vector<Rational>{-approx[idx], 1});
    std::vector<BigInt> rounded;
    for (const auto& c : prod.coeffs()) rounded.push_back(round_nearest(c));
    IntPoly cand = IntPoly(std::move(rounded));
    if (cand.degree() != static_cast<int>(pick.size())) return std::nullopt;
    cand = cand.primitive();
    if (!divide_exact(rest, cand)) return std::nullopt;
    for (std::size_t idx : pick) {
      const auto& r = irrational[idx];
      if (cand.sign_at(r.lower()) == cand.sign_at(r.upper())) return std::nullopt;
    }
    return cand;
  };

  bool progress = true;
  while (progress && static_cast<int>(remaining.size()) >= 4) {
    progress = false;
    const std::size_t n = remaining.size();
    for (std::size_t size = 2; size <= n / 2 && !progress; ++size) {
      std::vector<bool> mask(n, false);
      std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(size), true);
      do {
        std::vector<std::size_t> pick;
        for (std::size_t i = 0; i < n; ++i)
          if (mask[i]) pick.push_back(remaining[i]);
        if (auto g = try_subset(pick)) {
          out.push_back(*g);
          rest = divide_exact(rest, *g)->primitive();
          std::vector<std::size_t> next;
          for (std::size_t i = 0; i < n; ++i)
            if (!mask[i]) next.push_back(remaining[i]);
          remaining = std::move(next);
          progress = true;
          break;
        }
      } while (std::prev_permutation(mask.begin(), mask.end()));
    }
  }
  if (rest.degree() >= 1) out.push_back(rest);
  return out;
}

}  // namespace drg
