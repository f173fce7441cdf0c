#pragma once

#include <map>
#include <string>
#include <vector>

#include "grassdesign/geometry.hpp"
#include "grassdesign/zonal.hpp"

namespace grassdesign {

/// Weighted point set on a union of Grassmannians.
class Configuration {
 public:
  explicit Configuration(int d);

  int dim() const { return d_; }
  void add(Projector p, double weight);

  std::size_t size() const { return points_.size(); }
  const std::vector<Projector>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }
  const Projector& point(std::size_t i) const { return points_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }

  /// Per-rank mass m_k = sum of weights of the rank-k points.
  std::map<int, double> induced_masses() const;
  /// Per-rank point counts n_k.
  std::map<int, int> rank_counts() const;
  /// Ranks present, ascending.
  std::vector<int> ranks() const;

  /// Number of pairwise-distinct points (Frobenius distance > tol).
  int distinct_point_count(double tol = 1e-6) const;

 private:
  int d_;
  std::vector<Projector> points_;
  std::vector<double> weights_;
};

enum class Verdict { cubature, design, neither };
std::string to_string(Verdict v);

/// Outcome of comparing the fusion frame potential against its measure
/// lower bound.
struct CertificationReport {
  int t = 0;
  double ffp = 0;
  double bound = 0;
  std::string bound_exact;  // "p/q"
  double gap = 0;           // ffp - bound
  std::map<int, double> masses;
  bool equal_weights_per_rank = false;
  Verdict verdict = Verdict::neither;
  double tol = 0;

  bool certified() const { return verdict != Verdict::neither; }
};

/// t-fusion frame potential sum_{i,j} w_i w_j <P_i,P_j>^t, diagonal
/// included; compensated summation in a fixed order, so results are
/// reproducible bit for bit.
double ffp(const Configuration& config, int t);

/// Squared worst-case integration error of the configuration against the
/// measure over the unit ball of the degree-t kernel space.  Small
/// negative roundoff is clamped to zero.
double worst_case_error_sq(const Configuration& config,
                           const SignedMeasure& measure, int t);

/// Compares ffp with the lower bound of the induced measure;
/// "cubature" when |gap| <= tol, upgraded to "design" when weights are
/// constant within every rank class.
CertificationReport certify(const Configuration& config, int t, double tol = 1e-8);

/// For a configuration that is a cubature for its induced measure,
/// decides whether it is also one for the measure c: total masses must
/// agree (std::domain_error otherwise) and c - m must lie in the kernel
/// of T_{K,d}(t).
bool equivalent_measure_check(const Configuration& config, int t,
                              const SignedMeasure& c, double tol);

/// Sub-configuration of rank-k points with their weights.  Throws
/// std::invalid_argument when no rank-k point exists.
Configuration extract_marginal(const Configuration& config, int k);

}  // namespace grassdesign
