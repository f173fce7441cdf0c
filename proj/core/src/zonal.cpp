#include "grassdesign/zonal.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

namespace grassdesign {

SignedMeasure::SignedMeasure(int d) : d_(d) {
  if (d < 2) throw std::domain_error("SignedMeasure: d must be >= 2");
}

void SignedMeasure::set_mass(int k, const Rational& m) {
  if (k < 1 || k > d_ - 1)
    throw std::domain_error("SignedMeasure: rank " + std::to_string(k) +
                            " outside {1,...,d-1}");
  masses_[k] = m;
}

void SignedMeasure::set_mass(int k, double m) { set_mass(k, Rational(m)); }

void SignedMeasure::add_mass(int k, const Rational& m) {
  if (k < 1 || k > d_ - 1)
    throw std::domain_error("SignedMeasure: rank " + std::to_string(k) +
                            " outside {1,...,d-1}");
  masses_[k] += m;
}

Rational SignedMeasure::mass(int k) const {
  auto it = masses_.find(k);
  return it == masses_.end() ? Rational(0) : it->second;
}

Rational SignedMeasure::total_mass() const {
  Rational total = 0;
  for (const auto& [k, m] : masses_) total += m;
  return total;
}

std::vector<int> SignedMeasure::support() const {
  std::vector<int> ranks;
  for (const auto& [k, m] : masses_) ranks.push_back(k);
  return ranks;
}

SignedMeasure SignedMeasure::from_doubles(int d,
                                          const std::map<int, double>& masses) {
  SignedMeasure out(d);
  for (const auto& [k, m] : masses) out.set_mass(k, m);
  return out;
}

namespace {

Rational zonal_at_identity_impl(const Partition& pi, int k) {
  const int l = pi.length();
  if (l > k) return 0;
  const int t = pi.size();
  Rational value = 1;
  for (int i = 0; i < 2 * t; ++i) value *= 2;
  value *= factorial(t);
  value *= hypergeom_coeff(Rational(k, 2), pi);
  for (int i = 1; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j)
      value *= 2 * pi.part(i) - 2 * pi.part(j) - i + j;
  for (int i = 1; i <= l; ++i) value /= factorial(2 * pi.part(i) + l - i);
  return value;
}

// The prefactor above differs from a common typo (2^t instead of 2^{2t});
// the trace normalization pins it down, so it is asserted once on first use.
void run_trace_self_test() {
  for (int k = 1; k <= 8; ++k) {
    Rational power = 1;
    for (int t = 0; t <= 6; ++t) {
      Rational sum = 0;
      for (const Partition& pi : partitions_of(t, k))
        sum += zonal_at_identity_impl(pi, k);
      if (sum != power)
        throw std::logic_error("zonal trace normalization failed at k = " +
                               std::to_string(k) + ", t = " + std::to_string(t));
      power *= k;
    }
  }
}

void ensure_self_tested() {
  static std::once_flag flag;
  std::call_once(flag, run_trace_self_test);
}

void check_rank_list(int d, const std::vector<int>& K) {
  if (K.empty()) throw std::domain_error("rank set K must be nonempty");
  std::set<int> seen;
  for (int k : K) {
    if (k < 1 || k > d - 1)
      throw std::domain_error("rank " + std::to_string(k) +
                              " outside {1,...,d-1}");
    if (!seen.insert(k).second)
      throw std::domain_error("duplicate rank in K");
  }
}

}  // namespace

Rational zonal_at_identity(const Partition& pi, int k) {
  if (k < 0) throw std::domain_error("zonal_at_identity: k must be >= 0");
  ensure_self_tested();
  return zonal_at_identity_impl(pi, k);
}

Eigen::MatrixXd TMatrix::to_double() const {
  const auto n = static_cast<Eigen::Index>(ranks.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = grassdesign::to_double(entries[i][j]);
  return m;
}

TMatrix t_matrix(int d, const std::vector<int>& K, int t) {
  if (t < 1) throw std::domain_error("t_matrix: t must be >= 1");
  check_rank_list(d, K);
  ensure_self_tested();

  TMatrix out;
  out.d = d;
  out.t = t;
  out.ranks = K;
  std::sort(out.ranks.begin(), out.ranks.end());
  const std::size_t n = out.ranks.size();
  out.entries.assign(n, std::vector<Rational>(n, Rational(0)));

  // All partitions of t contribute; C_pi(I_k) kills l(pi) > k terms.
  for (const Partition& pi : partitions_of(t, d)) {
    const Rational denom = zonal_at_identity_impl(pi, d);
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < n; ++i)
      c[i] = zonal_at_identity_impl(pi, out.ranks[i]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out.entries[i][j] += c[i] * c[j] / denom;
  }
  return out;
}

Rational mean_inner_power(int d, int k, int l, int t) {
  if (k < 1 || k > d - 1 || l < 1 || l > d - 1)
    throw std::domain_error("mean_inner_power: ranks outside {1,...,d-1}");
  if (t < 1) throw std::domain_error("mean_inner_power: t must be >= 1");
  ensure_self_tested();
  Rational sum = 0;
  for (const Partition& pi : partitions_of(t, std::min(k, l)))
    sum += zonal_at_identity_impl(pi, k) * zonal_at_identity_impl(pi, l) /
           zonal_at_identity_impl(pi, d);
  return sum;
}

Rational lower_bound_exact(const SignedMeasure& measure,
                           const std::vector<int>& K, int t) {
  const TMatrix T = t_matrix(measure.dim(), K, t);
  for (int k : measure.support())
    if (std::find(T.ranks.begin(), T.ranks.end(), k) == T.ranks.end())
      throw std::domain_error("lower_bound: measure support not contained in K");
  Rational bound = 0;
  for (std::size_t i = 0; i < T.ranks.size(); ++i) {
    const Rational mi = measure.mass(T.ranks[i]);
    if (mi == 0) continue;
    for (std::size_t j = 0; j < T.ranks.size(); ++j)
      bound += mi * T.entries[i][j] * measure.mass(T.ranks[j]);
  }
  return bound;
}

Rational lower_bound_exact(const SignedMeasure& measure, int t) {
  if (measure.support().empty()) return 0;
  return lower_bound_exact(measure, measure.support(), t);
}

double lower_bound(const SignedMeasure& measure, int t) {
  return to_double(lower_bound_exact(measure, t));
}

bool in_t_matrix_kernel(int d, const std::vector<int>& K, int t,
                        const Eigen::VectorXd& v, double tol) {
  const TMatrix T = t_matrix(d, K, t);
  if (v.size() != static_cast<Eigen::Index>(T.ranks.size()))
    throw std::invalid_argument("in_t_matrix_kernel: vector/rank size mismatch");
  const Eigen::MatrixXd Td = T.to_double();
  return (Td * v).norm() <= tol * Td.norm();
}

}  // namespace grassdesign
