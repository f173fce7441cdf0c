#pragma once

#include <cstdint>
#include <vector>

#include "grassdesign/partition.hpp"

namespace grassdesign {

/// Dimension of the irreducible O(d) representation labelled by the
/// partition pi.  The label must satisfy bar(pi)_1 + bar(pi)_2 <= d;
/// otherwise std::domain_error is thrown.  All arithmetic is exact and
/// the result is checked to be integral.
std::int64_t dim_irrep(int d, const Partition& pi);

/// dim Pol_t(G_{k,d}): sum of dim_irrep(d, 2*pi) over |pi| <= t and
/// l(pi) <= min(k, d-k).  Requires 1 <= k <= d-1.
std::int64_t dim_pol_single(int d, int k, int t);

/// dim Pol_t over the union of Grassmannians with rank set K.  The ranks
/// are ordered with min(k, d-k) weakly decreasing (ties by ascending k)
/// and the first min(t+1, |K|) of them contribute with degrees
/// t, t-1, ....  K must be a nonempty subset of {1, ..., d-1}.
std::int64_t dim_pol_union(int d, const std::vector<int>& K, int t);

/// mu_pi(K): number of ranks k in K with l(pi) <= k <= d - l(pi).
int mu_K(int d, const std::vector<int>& K, const Partition& pi);

/// Multiplicity of the representation labelled 2*pi in Pol_t over the
/// union: min(t - |pi| + 1, mu_K) when |pi| <= t, else 0.
int multiplicity(int d, const std::vector<int>& K, const Partition& pi, int t);

/// Minimal number of points of a nonnegative-weight cubature of the given
/// strength: dim Pol_{floor(strength/2)} over the union.
std::int64_t min_points_lower_bound(int d, const std::vector<int>& K,
                                    int strength);

/// Sorts a copy of K by the union ordering: min(k, d-k) weakly
/// decreasing, ties by ascending k.  Validates K against {1, ..., d-1}.
std::vector<int> order_ranks_for_union(int d, std::vector<int> K);

}  // namespace grassdesign
