#include "grassdesign/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace grassdesign {

namespace {

// Kahan-compensated accumulator; summation order is fixed by the callers.
class CompensatedSum {
 public:
  void add(double x) {
    const double y = x - c_;
    const double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0;
  double c_ = 0;
};

double int_pow(double base, int e) {
  double r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

Configuration::Configuration(int d) : d_(d) {
  if (d < 2) throw std::domain_error("Configuration: d must be >= 2");
}

void Configuration::add(Projector p, double weight) {
  if (p.dim() != d_)
    throw std::domain_error("Configuration: projector has wrong ambient dimension");
  if (!std::isfinite(weight))
    throw std::domain_error("Configuration: weight must be finite");
  points_.push_back(std::move(p));
  weights_.push_back(weight);
}

std::map<int, double> Configuration::induced_masses() const {
  std::map<int, double> masses;
  for (std::size_t i = 0; i < points_.size(); ++i)
    masses[points_[i].rank()] += weights_[i];
  return masses;
}

std::map<int, int> Configuration::rank_counts() const {
  std::map<int, int> counts;
  for (const Projector& p : points_) ++counts[p.rank()];
  return counts;
}

std::vector<int> Configuration::ranks() const {
  std::vector<int> out;
  for (const auto& [k, n] : rank_counts()) out.push_back(k);
  return out;
}

int Configuration::distinct_point_count(double tol) const {
  std::vector<const Projector*> reps;
  for (const Projector& p : points_) {
    bool found = false;
    for (const Projector* r : reps)
      if ((p.matrix() - r->matrix()).norm() <= tol) {
        found = true;
        break;
      }
    if (!found) reps.push_back(&p);
  }
  return static_cast<int>(reps.size());
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::cubature:
      return "cubature";
    case Verdict::design:
      return "design";
    case Verdict::neither:
      return "neither";
  }
  return "neither";
}

double ffp(const Configuration& config, int t) {
  if (t < 1) throw std::domain_error("ffp: t must be >= 1");
  if (config.size() == 0) throw std::invalid_argument("ffp: empty configuration");
  const auto n = config.size();
  CompensatedSum sum;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      sum.add(config.weight(i) * config.weight(j) *
              int_pow(inner(config.point(i), config.point(j)), t));
  return sum.value();
}

double worst_case_error_sq(const Configuration& config,
                           const SignedMeasure& measure, int t) {
  if (t < 1) throw std::domain_error("worst_case_error_sq: t must be >= 1");
  if (measure.dim() != config.dim())
    throw std::domain_error("worst_case_error_sq: dimension mismatch");

  const double potential = ffp(config, t);

  // Cross term: the Haar average of <P,.>^t over G_{l,d} depends on P
  // only through its rank.
  std::map<std::pair<int, int>, double> mip;
  CompensatedSum cross;
  for (std::size_t i = 0; i < config.size(); ++i) {
    const int k = config.point(i).rank();
    for (const auto& [l, mass] : measure.masses()) {
      auto key = std::make_pair(k, l);
      auto it = mip.find(key);
      if (it == mip.end())
        it = mip.emplace(key, to_double(mean_inner_power(config.dim(), k, l, t)))
                 .first;
      cross.add(config.weight(i) * to_double(mass) * it->second);
    }
  }

  const double bound = to_double(lower_bound_exact(measure, t));
  const double value = potential - 2 * cross.value() + bound;
  if (value < 0 && value > -1e-9) return 0;
  return value;
}

CertificationReport certify(const Configuration& config, int t, double tol) {
  if (t < 1) throw std::domain_error("certify: t must be >= 1");
  if (!(tol > 0)) throw std::domain_error("certify: tol must be > 0");
  if (config.size() == 0)
    throw std::invalid_argument("certify: empty configuration");

  CertificationReport report;
  report.t = t;
  report.tol = tol;
  report.masses = config.induced_masses();
  report.ffp = ffp(config, t);

  const SignedMeasure induced =
      SignedMeasure::from_doubles(config.dim(), report.masses);
  const Rational bound_exact = lower_bound_exact(induced, t);
  report.bound = to_double(bound_exact);
  report.bound_exact = to_fraction_string(bound_exact);
  report.gap = report.ffp - report.bound;

  report.equal_weights_per_rank = true;
  for (const auto& [k, n] : config.rank_counts()) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < config.size(); ++i)
      if (config.point(i).rank() == k) {
        lo = std::min(lo, config.weight(i));
        hi = std::max(hi, config.weight(i));
      }
    if (hi - lo > 1e-12 * std::max(1.0, std::abs(hi)))
      report.equal_weights_per_rank = false;
  }

  if (std::abs(report.gap) <= tol)
    report.verdict =
        report.equal_weights_per_rank ? Verdict::design : Verdict::cubature;
  else
    report.verdict = Verdict::neither;
  return report;
}

bool equivalent_measure_check(const Configuration& config, int t,
                              const SignedMeasure& c, double tol) {
  if (c.dim() != config.dim())
    throw std::domain_error("equivalent_measure_check: dimension mismatch");
  double weight_sum = 0;
  for (double w : config.weights()) weight_sum += w;
  const double c_sum = to_double(c.total_mass());
  if (std::abs(c_sum - weight_sum) > 1e-9 * std::max(1.0, std::abs(weight_sum)))
    throw std::domain_error(
        "equivalent_measure_check: total mass of c differs from the weight sum");

  const std::map<int, double> induced = config.induced_masses();
  std::vector<int> K;
  for (const auto& [k, m] : induced) K.push_back(k);
  for (int k : c.support())
    if (std::find(K.begin(), K.end(), k) == K.end()) K.push_back(k);
  std::sort(K.begin(), K.end());

  Eigen::VectorXd v(static_cast<Eigen::Index>(K.size()));
  for (std::size_t i = 0; i < K.size(); ++i) {
    const auto it = induced.find(K[i]);
    const double m_k = it == induced.end() ? 0.0 : it->second;
    v[static_cast<Eigen::Index>(i)] = to_double(c.mass(K[i])) - m_k;
  }
  return in_t_matrix_kernel(config.dim(), K, t, v, tol);
}

Configuration extract_marginal(const Configuration& config, int k) {
  Configuration out(config.dim());
  for (std::size_t i = 0; i < config.size(); ++i)
    if (config.point(i).rank() == k) out.add(config.point(i), config.weight(i));
  if (out.size() == 0)
    throw std::invalid_argument("extract_marginal: no points of rank " +
                                std::to_string(k));
  return out;
}

}  // namespace grassdesign
