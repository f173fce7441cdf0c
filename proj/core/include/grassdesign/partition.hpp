#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "grassdesign/rational.hpp"

namespace grassdesign {

/// Integer partition: a weakly decreasing list of positive parts.
/// Zero parts are suppressed on construction, so the empty partition
/// represents (0).  Values are immutable.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// |pi|, the sum of the parts.
  int size() const;
  /// l(pi), the number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  /// pi_i with 1-based index and implicit zero padding beyond l(pi).
  int part(int i) const;

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

  std::string to_string() const;  // "(2,1)" / "(0)"

 private:
  std::vector<int> parts_;
};

/// All partitions with |pi| <= max_size and l(pi) <= max_length, in
/// graded-lexicographic order: ascending by size, and within one size
/// lexicographically descending, so (2) precedes (1,1).
std::vector<Partition> enumerate_partitions(int max_size, int max_length);

/// Partitions with |pi| == size exactly, l(pi) <= max_length; same
/// in-grade order as enumerate_partitions.
std::vector<Partition> partitions_of(int size, int max_length);

/// Conjugate partition: bar(pi)_k = |{i : pi_i >= k}|.
Partition conjugate(const Partition& pi);

/// Componentwise order with implicit zero padding:
/// pi <= pi' iff pi_i <= pi'_i for i = 1, ..., l(pi') + 1.
bool leq(const Partition& pi, const Partition& pi_prime);

/// Generalized hypergeometric coefficient
///   (a)_pi = prod_i (a - (i-1)/2)_{pi_i}
/// with (a)_s the rising factorial.
Rational hypergeom_coeff(const Rational& a, const Partition& pi);

}  // namespace grassdesign
