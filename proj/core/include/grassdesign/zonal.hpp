#pragma once

#include <map>
#include <vector>

#include <Eigen/Dense>

#include "grassdesign/partition.hpp"
#include "grassdesign/rational.hpp"

namespace grassdesign {

/// Orthogonally invariant signed measure sum_k m_k sigma_{k,d}.  Masses
/// are stored exactly; doubles convert without loss.
class SignedMeasure {
 public:
  explicit SignedMeasure(int d);

  int dim() const { return d_; }

  /// Sets the mass of rank k (1 <= k <= d-1); replaces any previous value.
  void set_mass(int k, const Rational& m);
  void set_mass(int k, double m);
  /// Adds to the mass of rank k, creating the entry if absent.
  void add_mass(int k, const Rational& m);

  /// Mass of rank k; 0 for ranks without an entry.
  Rational mass(int k) const;
  Rational total_mass() const;

  /// Ranks with stored entries, ascending (zero-mass entries included).
  std::vector<int> support() const;
  const std::map<int, Rational>& masses() const { return masses_; }

  static SignedMeasure from_doubles(int d, const std::map<int, double>& masses);

 private:
  int d_;
  std::map<int, Rational> masses_;
};

/// Moment matrix of the kernel <P,Q>^t across the rank pairs of K, with
/// exact rational entries.  Symmetric positive semidefinite.
struct TMatrix {
  int d = 0;
  int t = 0;
  std::vector<int> ranks;  // ascending
  std::vector<std::vector<Rational>> entries;

  const Rational& entry(int i, int j) const { return entries[i][j]; }
  Eigen::MatrixXd to_double() const;
};

/// Zonal polynomial at the identity, C_pi(I_k).  Vanishes when
/// l(pi) > k.  Normalized so that sum_{|pi|=t} C_pi(I_k) = k^t; this
/// trace identity is asserted once per process as a self-check.
Rational zonal_at_identity(const Partition& pi, int k);

/// T_{K,d}(t): entry (k,l) = sum over |pi| = t of
/// C_pi(I_k) C_pi(I_l) / C_pi(I_d).  Requires t >= 1 and
/// K subset of {1, ..., d-1}.
TMatrix t_matrix(int d, const std::vector<int>& K, int t);

/// Double Haar average of <P,Q>^t over G_{k,d} x G_{l,d}.
Rational mean_inner_power(int d, int k, int l, int t);

/// Potential lower bound m^T T_{K,d}(t) m for the given measure; K
/// must contain the measure's support.
Rational lower_bound_exact(const SignedMeasure& measure,
                           const std::vector<int>& K, int t);
/// Same with K = the measure's own support.
Rational lower_bound_exact(const SignedMeasure& measure, int t);
double lower_bound(const SignedMeasure& measure, int t);

/// Kernel-membership test ||T v|| <= tol ||T||_F for v indexed by K.
bool in_t_matrix_kernel(int d, const std::vector<int>& K, int t,
                        const Eigen::VectorXd& v, double tol);

}  // namespace grassdesign
