#include "grassdesign/optimizer.hpp"

#include <cmath>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace grassdesign {

void OptimizerSettings::validate() const {
  if (max_iter < 1) throw std::domain_error("optimizer: max_iter must be >= 1");
  if (!(grad_tol > 0)) throw std::domain_error("optimizer: grad_tol must be > 0");
  if (!(initial_step > 0))
    throw std::domain_error("optimizer: initial_step must be > 0");
  if (!(shrink > 0 && shrink < 1))
    throw std::domain_error("optimizer: shrink must be in (0,1)");
  if (!(sufficient_decrease > 0))
    throw std::domain_error("optimizer: sufficient_decrease must be > 0");
  if (restarts < 1) throw std::domain_error("optimizer: restarts must be >= 1");
}

Configuration random_configuration(int d, const std::map<int, int>& counts,
                                   const std::map<int, double>& weights,
                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Configuration config(d);
  for (const auto& [rank, n] : counts) {
    if (rank < 1 || rank > d - 1)
      throw std::domain_error("random_configuration: rank outside {1,...,d-1}");
    if (n < 1)
      throw std::domain_error("random_configuration: counts must be >= 1");
    const auto it = weights.find(rank);
    if (it == weights.end())
      throw std::invalid_argument("random_configuration: missing weight for rank " +
                                  std::to_string(rank));
    for (int j = 0; j < n; ++j) {
      Eigen::MatrixXd frame(d, rank);
      for (int c = 0; c < rank; ++c)
        for (int r = 0; r < d; ++r) frame(r, c) = gauss(rng);
      config.add(projector_from_frame(d, frame), it->second);
    }
  }
  return config;
}

namespace {

using Frames = std::vector<Eigen::MatrixXd>;

// Thin QR with the sign of diag(R) fixed, so the retraction is continuous.
Eigen::MatrixXd qr_retract(const Eigen::MatrixXd& v) {
  const int d = static_cast<int>(v.rows());
  const int k = static_cast<int>(v.cols());
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(v);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(d, k);
  const Eigen::MatrixXd r =
      qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
  for (int i = 0; i < k; ++i)
    if (r(i, i) < 0) q.col(i) = -q.col(i);
  return q;
}

double ffp_from_frames(const Frames& frames, const std::vector<double>& weights,
                       int t) {
  const std::size_t n = frames.size();
  double sum = 0, comp = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double ip = (frames[i].transpose() * frames[j]).squaredNorm();
      double term = weights[i] * weights[j];
      for (int e = 0; e < t; ++e) term *= ip;
      const double y = term - comp;
      const double s = sum + y;
      comp = (s - sum) - y;
      sum = s;
    }
  return sum;
}

double dot(const Frames& a, const Frames& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += (a[i].array() * b[i].array()).sum();
  return s;
}

double max_frame_norm(const Frames& frames) {
  double m = 0;
  for (const Eigen::MatrixXd& f : frames) m = std::max(m, f.norm());
  return m;
}

}  // namespace

std::vector<Eigen::MatrixXd> configuration_frames(const Configuration& config) {
  Frames frames;
  frames.reserve(config.size());
  for (const Projector& p : config.points()) {
    // Column-pivoted QR spans the range of the idempotent matrix with the
    // first rank(P) columns of Q.
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(p.matrix());
    Eigen::MatrixXd q = qr.householderQ();
    frames.push_back(q.leftCols(p.rank()));
  }
  return frames;
}

std::vector<Eigen::MatrixXd> ffp_riemannian_gradient(
    const std::vector<Eigen::MatrixXd>& frames,
    const std::vector<double>& weights, int t) {
  const std::size_t n = frames.size();
  Frames grads(n);
  for (std::size_t i = 0; i < n; ++i) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(frames[i].rows(), frames[i].cols());
    for (std::size_t j = 0; j < n; ++j) {
      const Eigen::MatrixXd w_ij = frames[j].transpose() * frames[i];
      const double ip = w_ij.squaredNorm();
      double coeff = 4.0 * weights[i] * t * weights[j];
      for (int e = 0; e < t - 1; ++e) coeff *= ip;
      g.noalias() += coeff * (frames[j] * w_ij);
    }
    g -= frames[i] * (frames[i].transpose() * g);
    grads[i] = std::move(g);
  }
  return grads;
}

MinimizeResult minimize_ffp(const Configuration& start, int t,
                            const OptimizerSettings& settings) {
  if (t < 1) throw std::domain_error("minimize_ffp: t must be >= 1");
  settings.validate();

  const std::vector<double>& weights = start.weights();
  Frames frames = configuration_frames(start);

  MinimizeResult result{Configuration(start.dim()), {}, 0, 0.0, false};
  double objective = ffp_from_frames(frames, weights, t);
  if (!std::isfinite(objective))
    throw numerical_failure("minimize_ffp: non-finite objective at start");
  result.trace.push_back(objective);

  Frames direction_prev;
  Frames grad_prev;
  Frames frames_prev;
  double step = settings.initial_step;

  for (int iter = 0; iter < settings.max_iter; ++iter) {
    Frames grad = ffp_riemannian_gradient(frames, weights, t);
    const double max_norm = max_frame_norm(grad);
    result.grad_norm = max_norm;
    if (max_norm <= settings.grad_tol) {
      result.converged = true;
      break;
    }

    // Steepest descent, optionally bent by a Polak-Ribiere memory term.
    Frames direction(grad.size());
    for (std::size_t i = 0; i < grad.size(); ++i) direction[i] = -grad[i];
    if (settings.use_cg && !direction_prev.empty()) {
      double beta = 0;
      const double denom = dot(grad_prev, grad_prev);
      if (denom > 0) {
        Frames diff(grad.size());
        for (std::size_t i = 0; i < grad.size(); ++i) diff[i] = grad[i] - grad_prev[i];
        beta = std::max(0.0, dot(grad, diff) / denom);
      }
      if (beta > 0) {
        for (std::size_t i = 0; i < grad.size(); ++i) {
          // Transport the previous direction by projecting onto the
          // current horizontal space.
          Eigen::MatrixXd transported =
              direction_prev[i] -
              frames[i] * (frames[i].transpose() * direction_prev[i]);
          direction[i] += beta * transported;
        }
        if (dot(direction, grad) >= 0)  // not a descent direction: restart
          for (std::size_t i = 0; i < grad.size(); ++i) direction[i] = -grad[i];
      }
    }

    const double slope = dot(direction, grad);  // negative

    // Barzilai-Borwein guess for the backtracking start; a plain Armijo
    // search from a fixed step crawls once the fixed step overshoots.
    double alpha = std::min(settings.initial_step, step * 4.0);
    if (!grad_prev.empty()) {
      double ss = 0, sy = 0;
      for (std::size_t i = 0; i < frames.size(); ++i) {
        const Eigen::MatrixXd s = frames[i] - frames_prev[i];
        ss += s.squaredNorm();
        sy += (s.array() * (grad[i] - grad_prev[i]).array()).sum();
      }
      if (sy > 0 && ss > 0)
        alpha = std::min(settings.initial_step, ss / sy);
    }
    alpha = std::max(alpha, 1e-12);
    bool accepted = false;
    Frames accepted_frames;
    while (alpha > 1e-18) {
      Frames trial(frames.size());
      for (std::size_t i = 0; i < frames.size(); ++i)
        trial[i] = qr_retract(frames[i] + alpha * direction[i]);
      const double trial_objective = ffp_from_frames(trial, weights, t);
      if (!std::isfinite(trial_objective)) {
        std::ostringstream os;
        os << "minimize_ffp: non-finite objective at iteration " << iter
           << ", step " << alpha << ", previous objective " << objective;
        throw numerical_failure(os.str());
      }
      if (trial_objective <= objective + settings.sufficient_decrease * alpha * slope) {
        accepted_frames = std::move(trial);
        objective = trial_objective;
        accepted = true;
        break;
      }
      alpha *= settings.shrink;
    }
    if (!accepted) break;  // step underflow: no further progress possible
    frames_prev = std::move(frames);
    frames = std::move(accepted_frames);

    if (objective > result.trace.back())
      throw numerical_failure("minimize_ffp: objective increased");
    result.trace.push_back(objective);
    result.iterations = iter + 1;
    step = alpha;
    grad_prev = std::move(grad);
    direction_prev = std::move(direction);
  }

  Configuration out(start.dim());
  for (std::size_t i = 0; i < frames.size(); ++i)
    out.add(Projector(start.dim(), static_cast<int>(frames[i].cols()),
                      frames[i] * frames[i].transpose()),
            weights[i]);
  result.config = std::move(out);
  return result;
}

SearchResult search_design(int d, const std::map<int, int>& counts,
                           const std::map<int, double>& weights, int t,
                           const OptimizerSettings& settings) {
  settings.validate();
  std::optional<MinimizeResult> best;
  int best_restart = -1;
  std::vector<double> final_values;
  for (int i = 0; i < settings.restarts; ++i) {
    const Configuration start =
        random_configuration(d, counts, weights, settings.seed + i);
    MinimizeResult run = minimize_ffp(start, t, settings);
    const double value = run.trace.back();
    final_values.push_back(value);
    if (!best || value < best->trace.back()) {
      best = std::move(run);
      best_restart = i;
    }
  }
  return SearchResult{std::move(*best), best_restart, std::move(final_values)};
}

}  // namespace grassdesign
