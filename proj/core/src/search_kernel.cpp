#include <algorithm>

#include "drg/search.hpp"

namespace drg {

namespace {

using i128 = __int128;

// Sign changes in the leading minors det(T_i - xI) of a symmetric
// tridiagonal matrix (diag d, squared couplings s), i.e. the number of
// eigenvalues below x. Returns -1 when a minor vanishes.
int eigenvalues_below(const std::vector<i128>& d, const std::vector<i128>& s, i128 x) {
  i128 prev = 1;
  i128 cur = d[0] - x;
  if (cur == 0) return -1;
  int changes = cur < 0 ? 1 : 0;
  for (std::size_t i = 1; i < d.size(); ++i) {
    const i128 next = (d[i] - x) * cur - s[i - 1] * prev;
    if (next == 0) return -1;
    if ((next < 0) != (cur < 0)) ++changes;
    prev = cur;
    cur = next;
  }
  return changes;
}

struct Criteria {
  bool on[13] = {};
  bool floor = true;
};

Criteria enabled_set(const std::set<std::string>& disabled) {
  Criteria c;
  for (int i = 1; i <= 12; ++i) c.on[i] = disabled.count(std::to_string(i)) == 0;
  c.floor = disabled.count("floor") == 0;
  return c;
}

bool has_integer_root(const std::vector<i128>& coeffs, std::int64_t bound) {
  auto eval = [&](i128 x) {
    i128 acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
  };
  for (std::int64_t r = -bound; r <= bound; ++r)
    if (eval(r) == 0) return true;
  return false;
}

}  // namespace

bool kernel_may_pass(const IntersectionArray& ia, const std::set<std::string>& disabled) {
  const Criteria on = enabled_set(disabled);
  const int D = ia.diameter();
  const std::int64_t k = ia.k();
  const std::int64_t a1 = ia.a(1);
  const std::int64_t b1 = ia.b(1);
  const std::int64_t c2 = D >= 2 ? ia.c(2) : 0;

  if (on.on[1] && (a1 < 1 || a1 >= 100)) return false;
  if (on.on[2] && (k < 2 * a1 + 3 || k > 3 * a1 - 2 * c2 + 8)) return false;
  if (on.on[3]) {
    i128 ki = 1;
    for (int i = 1; i <= D; ++i) {
      const i128 num = ki * ia.b(i - 1);
      if (num % ia.c(i) != 0) return false;
      ki = num / ia.c(i);
      if ((ki * ia.a(i)) % 2 != 0) return false;
    }
  }
  if (on.on[4]) {
    // min{(a1+6)/5, (a1+2)/4} <= c2  <=>  5c2 >= a1+6 or 4c2 >= a1+2
    if (!(5 * c2 >= a1 + 6 || 4 * c2 >= a1 + 2)) return false;
    if (2 * c2 > 3 * a1 + 8 - k) return false;
  }
  if (on.on[5]) {
    if (!formal_validity(ia).ok) return false;
    for (int i = 0; i < D; ++i)
      if (ia.b(i) > k) return false;
    for (int i = 1; i <= D; ++i)
      if (ia.c(i) > k) return false;
  }
  if (on.on[6]) {
    for (int i = 1; i <= D; ++i)
      if (ia.c(i) - ia.b(i) < ia.c(i - 1) - ia.b(i - 1) + a1 + 2) return false;
  }
  if (on.on[7] && D >= 3 && 2 * c2 - 1 > ia.c(3)) return false;
  if (on.on[8] && D >= 2 && (3 * a1 + 9 - k) * (ia.a(2) + 3) - 3 * b1 * c2 < 0) return false;

  std::vector<i128> d, s;
  for (int i = 0; i <= D; ++i) d.push_back(ia.a(i));
  for (int i = 0; i < D; ++i) s.push_back(static_cast<i128>(ia.b(i)) * ia.c(i + 1));

  if (on.floor) {
    const int below = eigenvalues_below(d, s, -3);
    if (below > 0) return false;
  }
  if (D == 3 && on.on[9]) {
    std::vector<i128> d2, s2;
    for (auto x : d) d2.push_back(2 * x);
    for (auto x : s) s2.push_back(4 * x);
    // theta1 > b1/2 - 1: at most D eigenvalues lie below 2*(b1/2 - 1).
    const int lo = eigenvalues_below(d2, s2, b1 - 2);
    if (lo >= 0 && lo > D - 1) return false;
    // theta1 < b1 - 1: at least D eigenvalues lie below b1 - 1.
    const int hi = eigenvalues_below(d, s, b1 - 1);
    if (hi >= 0 && hi < D) return false;
  }
  if (D == 3 && on.on[11]) {
    // det(xI - R), R = [[-1, b1, 0], [1, k-b1-c2, b2], [0, c2, k-b2-c3]].
    const i128 r0 = -1, r1 = k - b1 - c2, r2 = k - ia.b(2) - ia.c(3);
    const i128 s0 = b1, s1 = static_cast<i128>(ia.b(2)) * c2;
    // p1 = x - r0; p2 = (x - r1)p1 - s0; p3 = (x - r2)p2 - s1 p1
    std::vector<i128> p1{-r0, 1};
    std::vector<i128> p2{r1 * r0 - s0, -r0 - r1, 1};
    std::vector<i128> p3(4, 0);
    for (std::size_t i = 0; i < p2.size(); ++i) {
      p3[i + 1] += p2[i];
      p3[i] -= r2 * p2[i];
    }
    p3[0] -= s1 * p1[0];
    p3[1] -= s1 * p1[1];
    if (!has_integer_root(p3, k)) return false;
  }
  return true;
}

}  // namespace drg
