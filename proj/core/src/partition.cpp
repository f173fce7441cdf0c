#include "grassdesign/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace grassdesign {

namespace {

void check_weakly_decreasing(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw std::invalid_argument("partition part < 0");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) {
  check_weakly_decreasing(parts);
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  parts_ = std::move(parts);
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  if (i < 1) throw std::out_of_range("partition parts are 1-indexed");
  return i <= length() ? parts_[i - 1] : 0;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "(0)";
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

namespace {

// Parts are chosen largest-first, which yields descending lexicographic
// order within one grade.
void emit_partitions_of(int remaining, int max_part, int slots,
                        std::vector<int>& stack,
                        std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(stack);
    return;
  }
  if (slots == 0) return;
  for (int first = std::min(remaining, max_part); first >= 1; --first) {
    stack.push_back(first);
    emit_partitions_of(remaining - first, first, slots - 1, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int size, int max_length) {
  if (size < 0 || max_length < 0)
    throw std::invalid_argument("partitions_of: negative arguments");
  std::vector<Partition> out;
  std::vector<int> stack;
  emit_partitions_of(size, size, max_length, stack, out);
  return out;
}

std::vector<Partition> enumerate_partitions(int max_size, int max_length) {
  if (max_size < 0 || max_length < 0)
    throw std::invalid_argument("enumerate_partitions: negative arguments");
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto grade = partitions_of(n, max_length);
    out.insert(out.end(), grade.begin(), grade.end());
  }
  return out;
}

Partition conjugate(const Partition& pi) {
  std::vector<int> parts;
  for (int k = 1; k <= pi.part(1); ++k) {
    int count = 0;
    for (int p : pi.parts())
      if (p >= k) ++count;
    parts.push_back(count);
  }
  return Partition(std::move(parts));
}

bool leq(const Partition& pi, const Partition& pi_prime) {
  // Index l(pi')+1 probes the zero padding: a longer pi fails there.
  for (int i = 1; i <= pi_prime.length() + 1; ++i)
    if (pi.part(i) > pi_prime.part(i)) return false;
  return true;
}

Rational hypergeom_coeff(const Rational& a, const Partition& pi) {
  Rational result = 1;
  for (int i = 1; i <= pi.length(); ++i)
    result *= rising_factorial(a - Rational(i - 1, 2), pi.part(i));
  return result;
}

}  // namespace grassdesign
