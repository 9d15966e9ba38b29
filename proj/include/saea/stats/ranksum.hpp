#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace saea::stats {

// Mid-ranks (1-based, ties averaged) of a value vector.
inline std::vector<double> mid_ranks(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + 1 + j + 1);  // average of positions i+1..j+1
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

enum class Verdict { Win, Draw, Lose };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Win: return "win";
    case Verdict::Draw: return "draw";
    case Verdict::Lose: return "lose";
  }
  return "?";
}

struct RankSumResult {
  double statistic = 0.0;  // rank sum of the first sample
  double p_value = 1.0;
  Verdict verdict = Verdict::Draw;
};

namespace detail {

inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Exact two-sided p under the permutation null: enumerate the distribution
// of the (doubled, hence integral) rank sum over all C(N, na) group
// assignments by dynamic programming on the observed mid-ranks.
inline double exact_rank_sum_p(const std::vector<int>& doubled_ranks, std::size_t na,
                               long long doubled_w) {
  const std::size_t n = doubled_ranks.size();
  const int max_sum = std::accumulate(doubled_ranks.begin(), doubled_ranks.end(), 0);
  // ways[k][s]: subsets of size k with doubled-rank sum s
  std::vector<std::vector<std::uint64_t>> ways(na + 1,
                                               std::vector<std::uint64_t>(max_sum + 1, 0));
  ways[0][0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const int r = doubled_ranks[i];
    for (std::size_t k = std::min(na, i + 1); k >= 1; --k) {
      for (int s = max_sum; s >= r; --s) {
        if (ways[k - 1][s - r]) ways[k][s] += ways[k - 1][s - r];
      }
    }
  }
  const long long center = static_cast<long long>(na) * static_cast<long long>(n + 1);
  const long long dev = std::llabs(2 * doubled_w - 2 * center) / 2;  // |2W - 2mu| in doubled units
  std::uint64_t extreme = 0, total = 0;
  for (int s = 0; s <= max_sum; ++s) {
    if (!ways[na][s]) continue;
    total += ways[na][s];
    if (std::llabs(2LL * s - 2 * center) / 2 >= dev) extreme += ways[na][s];
  }
  return static_cast<double>(extreme) / static_cast<double>(total);
}

}  // namespace detail

// Two-sided Wilcoxon rank-sum (Mann-Whitney) test with mid-rank tie
// handling. Exact permutation enumeration for combined sizes up to 20,
// normal approximation with tie correction and continuity correction beyond.
// The verdict reads `a` as the control method under minimization: "win"
// means a is significantly better (smaller).
inline RankSumResult wilcoxon_rank_sum(const std::vector<double>& a, const std::vector<double>& b,
                                       double alpha) {
  if (a.size() < 3 || b.size() < 3)
    throw std::invalid_argument("rank-sum test needs at least 3 values per sample");
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0,1)");

  const std::size_t na = a.size(), nb = b.size(), n = na + nb;
  std::vector<double> combined(a);
  combined.insert(combined.end(), b.begin(), b.end());
  const std::vector<double> ranks = mid_ranks(combined);

  RankSumResult result;
  double w = 0.0;
  for (std::size_t i = 0; i < na; ++i) w += ranks[i];
  result.statistic = w;

  if (n <= 20) {
    // Doubled mid-ranks are integers (tie group average of positions).
    std::vector<int> doubled(n);
    long long doubled_w = 0;
    for (std::size_t i = 0; i < n; ++i) {
      doubled[i] = static_cast<int>(std::llround(2.0 * ranks[i]));
      if (i < na) doubled_w += doubled[i];
    }
    result.p_value = detail::exact_rank_sum_p(doubled, na, doubled_w);
  } else {
    const double mu = static_cast<double>(na) * static_cast<double>(n + 1) / 2.0;
    double tie_term = 0.0;
    {
      std::vector<double> sorted(combined);
      std::sort(sorted.begin(), sorted.end());
      std::size_t i = 0;
      while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && sorted[j + 1] == sorted[i]) ++j;
        const double t = static_cast<double>(j - i + 1);
        tie_term += t * t * t - t;
        i = j + 1;
      }
    }
    const double var = (static_cast<double>(na) * static_cast<double>(nb) / 12.0) *
                       (static_cast<double>(n + 1) -
                        tie_term / (static_cast<double>(n) * static_cast<double>(n - 1)));
    if (var <= 0.0) {
      result.p_value = 1.0;  // everything tied
    } else {
      const double z = std::max(0.0, std::abs(w - mu) - 0.5) / std::sqrt(var);
      result.p_value = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
    }
  }

  if (result.p_value < alpha) {
    const double med_a = detail::median(a), med_b = detail::median(b);
    if (med_a < med_b) {
      result.verdict = Verdict::Win;
    } else if (med_a > med_b) {
      result.verdict = Verdict::Lose;
    }
  }
  return result;
}

}  // namespace saea::stats
