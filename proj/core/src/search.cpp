#include "drg/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

namespace drg {

namespace {

struct Enabled {
  bool c2 = true, c3 = true, c4 = true, c6 = true, c7 = true, c8 = true;
};

struct Shared {
  const SearchConfig& cfg;
  Enabled on;
  std::atomic<std::uint64_t> candidates{0};
  std::atomic<std::uint64_t> kernel_pass{0};
  std::mutex sink_mutex;
};

void certify(Shared& sh, const IntersectionArray& ia, std::vector<IntersectionArray>& out) {
  sh.candidates.fetch_add(1, std::memory_order_relaxed);
  if (!kernel_may_pass(ia, sh.cfg.disabled)) return;
  sh.kernel_pass.fetch_add(1, std::memory_order_relaxed);
  CriteriaOptions opts;
  opts.disabled = sh.cfg.disabled;
  if (!criteria_1_to_12(ia, opts).feasible) return;
  out.push_back(ia);
  if (sh.cfg.sink) {
    std::lock_guard lock(sh.sink_mutex);
    sh.cfg.sink(ia);
  }
}

bool even(std::int64_t x) { return x % 2 == 0; }

// All arrays for a fixed (a1, k); loops follow b1 -> c2 -> b2 -> c3 (-> b3 -> c4).
void enumerate(Shared& sh, int D, std::int64_t a1, std::int64_t k, std::vector<IntersectionArray>& out) {
  const Enabled& on = sh.on;
  const std::int64_t b1 = k - a1 - 1;
  if (b1 < 1) return;
  if (on.c3 && !even(k * a1)) return;
  for (std::int64_t c2 = 1; c2 <= b1; ++c2) {
    if ((on.c2 || on.c4) && 2 * c2 > 3 * a1 + 8 - k) break;
    if (on.c4 && !(5 * c2 >= a1 + 6 || 4 * c2 >= a1 + 2)) continue;
    if (on.c3 && (k * b1) % c2 != 0) continue;
    const std::int64_t k2 = k * b1 / c2;
    for (std::int64_t b2 = 1; b2 <= b1 && b2 <= k - c2; ++b2) {
      if (D >= 4 && b2 < c2) continue;
      const std::int64_t a2 = k - b2 - c2;
      if (on.c6 && c2 - b2 < 1 - b1 + a1 + 2) continue;
      if (on.c8 && (3 * a1 + 9 - k) * (a2 + 3) - 3 * b1 * c2 < 0) continue;
      if (on.c3 && !even(k2 * a2)) continue;
      for (std::int64_t c3 = c2; c3 <= k; ++c3) {
        if (on.c7 && c3 < 2 * c2 - 1) continue;
        if (on.c3 && (k2 * b2) % c3 != 0) continue;
        const std::int64_t k3 = k2 * b2 / c3;
        if (D == 3) {
          if (on.c6 && c3 < c2 - b2 + a1 + 2) continue;
          if (on.c3 && !even(k3 * (k - c3))) continue;
          certify(sh, IntersectionArray({k, b1, b2}, {1, c2, c3}), out);
          continue;
        }
        if (c3 > b1) break;
        for (std::int64_t b3 = 1; b3 <= b2 && b3 <= k - c3; ++b3) {
          const std::int64_t a3 = k - b3 - c3;
          if (on.c6 && c3 - b3 < c2 - b2 + a1 + 2) continue;
          if (on.c3 && !even(k3 * a3)) continue;
          for (std::int64_t c4 = c3; c4 <= k; ++c4) {
            if (on.c6 && c4 < c3 - b3 + a1 + 2) continue;
            if (on.c3 && (k3 * b3) % c4 != 0) continue;
            const std::int64_t k4 = k3 * b3 / c4;
            if (on.c3 && !even(k4 * (k - c4))) continue;
            certify(sh, IntersectionArray({k, b1, b2, b3}, {1, c2, c3, c4}), out);
          }
        }
      }
    }
  }
}

}  // namespace

SearchResult search(const SearchConfig& cfg) {
  if (cfg.diameter != 3 && cfg.diameter != 4) throw std::invalid_argument("search supports diameter 3 or 4");
  if (cfg.a1_min >= cfg.a1_max) throw std::invalid_argument("empty a1 range");
  const auto start = std::chrono::steady_clock::now();

  Shared sh{cfg, {}, {}, {}, {}};
  auto on = [&](const char* id) { return cfg.disabled.count(id) == 0; };
  sh.on = Enabled{on("2"), on("3"), on("4"), on("6"), on("7"), on("8")};

  std::vector<std::pair<std::int64_t, std::int64_t>> tasks;
  for (std::int64_t a1 = std::max<std::int64_t>(cfg.a1_min, 0); a1 < cfg.a1_max; ++a1)
    for (std::int64_t k = 2 * a1 + 3; k <= 3 * a1 + 4; ++k) tasks.emplace_back(a1, k);

  std::vector<std::vector<IntersectionArray>> found(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();)
      enumerate(sh, cfg.diameter, tasks[i].first, tasks[i].second, found[i]);
  };
  int n = cfg.workers > 0 ? cfg.workers : static_cast<int>(std::thread::hardware_concurrency());
  n = std::max(1, n);
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SearchResult res;
  for (auto& v : found) res.arrays.insert(res.arrays.end(), v.begin(), v.end());
  std::sort(res.arrays.begin(), res.arrays.end(), search_order_less);
  res.stats.candidates = sh.candidates.load();
  res.stats.kernel_pass = sh.kernel_pass.load();
  res.stats.accepted = res.arrays.size();
  res.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

SearchResult search_d3(SearchConfig cfg) {
  cfg.diameter = 3;
  return search(cfg);
}

SearchResult search_d4(SearchConfig cfg) {
  cfg.diameter = 4;
  return search(cfg);
}

C2OnePairs c2one_pairs(std::int64_t t_max) {
  C2OnePairs out;
  out.t_max = t_max;
  for (std::int64_t t = 3; t <= t_max; ++t) {
    auto& row = out.by_t[t];
    for (std::int64_t a1 = 0; a1 <= t - 2; ++a1) {
      const std::int64_t k = t * (a1 + 1);
      if (!lemma1_bound(k, a1, 1, 3)) continue;
      row.emplace_back(k, a1);
      out.pairs.emplace(k, a1);
    }
  }
  return out;
}

}  // namespace drg
