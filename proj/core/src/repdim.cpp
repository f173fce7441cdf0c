#include "grassdesign/repdim.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <utility>

namespace grassdesign {

namespace {

void check_rank_set(int d, const std::vector<int>& K) {
  if (K.empty()) throw std::domain_error("rank set K must be nonempty");
  std::set<int> seen;
  for (int k : K) {
    if (k < 1 || k > d - 1)
      throw std::domain_error("rank " + std::to_string(k) +
                              " outside {1,...,d-1} for d = " + std::to_string(d));
    if (!seen.insert(k).second)
      throw std::domain_error("duplicate rank " + std::to_string(k) + " in K");
  }
}

std::int64_t dim_irrep_uncached(int d, const Partition& pi) {
  if (d < 1) throw std::domain_error("dim_irrep: d must be >= 1");
  const Partition bar = conjugate(pi);
  if (bar.part(1) + bar.part(2) > d)
    throw std::domain_error("dim_irrep: invalid O(d) label " + pi.to_string() +
                            " for d = " + std::to_string(d));

  // Labels with more than d/2 rows are rewritten through the associated
  // label (first column replaced by d minus itself), which has the same
  // dimension and at most d/2 rows.
  Partition label = pi;
  const int half = d / 2;
  if (label.length() > half) {
    std::vector<int> cols(bar.parts());
    cols[0] = d - cols[0];
    label = conjugate(Partition(std::move(cols)));
  }

  Rational dim = 1;
  std::vector<Rational> lambda(half + 1);
  for (int i = 1; i <= half; ++i)
    lambda[i] = Rational(d, 2) + label.part(i) - i;
  for (int i = 1; i <= half; ++i)
    for (int j = i + 1; j <= half; ++j)
      dim *= (lambda[i] + lambda[j]) * (lambda[i] - lambda[j]) /
             Rational((j - i) * (d - i - j));
  if (d % 2 == 1) {
    for (int i = 1; i <= half; ++i)
      dim *= 2 * lambda[i] / Rational(d - 2 * i);
  } else if (label.part(half) > 0) {
    dim *= 2;
  }

  if (boost::multiprecision::denominator(dim) != 1)
    throw std::logic_error("dim_irrep: non-integral dimension for " +
                           pi.to_string() + ", d = " + std::to_string(d));
  return boost::multiprecision::numerator(dim).convert_to<std::int64_t>();
}

}  // namespace

std::int64_t dim_irrep(int d, const Partition& pi) {
  static std::mutex mutex;
  static std::map<std::pair<int, Partition>, std::int64_t> memo;
  const auto key = std::make_pair(d, pi);
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  const std::int64_t value = dim_irrep_uncached(d, pi);
  std::lock_guard<std::mutex> lock(mutex);
  memo.emplace(key, value);
  return value;
}

std::int64_t dim_pol_single(int d, int k, int t) {
  if (k < 1 || k > d - 1)
    throw std::domain_error("dim_pol_single: k outside {1,...,d-1}");
  if (t < 0) throw std::domain_error("dim_pol_single: t must be >= 0");
  std::int64_t sum = 0;
  for (const Partition& pi : enumerate_partitions(t, std::min(k, d - k))) {
    std::vector<int> doubled;
    for (int p : pi.parts()) doubled.push_back(2 * p);
    sum += dim_irrep(d, Partition(std::move(doubled)));
  }
  return sum;
}

std::vector<int> order_ranks_for_union(int d, std::vector<int> K) {
  check_rank_set(d, K);
  std::sort(K.begin(), K.end(), [d](int a, int b) {
    const int ma = std::min(a, d - a), mb = std::min(b, d - b);
    if (ma != mb) return ma > mb;
    return a < b;
  });
  return K;
}

std::int64_t dim_pol_union(int d, const std::vector<int>& K, int t) {
  if (t < 0) throw std::domain_error("dim_pol_union: t must be >= 0");
  const std::vector<int> ordered = order_ranks_for_union(d, K);
  const int s = std::min<int>(t + 1, static_cast<int>(ordered.size()));
  std::int64_t sum = 0;
  for (int i = 1; i <= s; ++i) sum += dim_pol_single(d, ordered[i - 1], t - i + 1);
  return sum;
}

int mu_K(int d, const std::vector<int>& K, const Partition& pi) {
  check_rank_set(d, K);
  const int l = pi.length();
  int count = 0;
  for (int k : K)
    if (l <= k && k <= d - l) ++count;
  return count;
}

int multiplicity(int d, const std::vector<int>& K, const Partition& pi, int t) {
  if (pi.size() > t) return 0;
  return std::min(t - pi.size() + 1, mu_K(d, K, pi));
}

std::int64_t min_points_lower_bound(int d, const std::vector<int>& K,
                                    int strength) {
  if (strength < 0)
    throw std::domain_error("min_points_lower_bound: strength must be >= 0");
  return dim_pol_union(d, K, strength / 2);
}

}  // namespace grassdesign
