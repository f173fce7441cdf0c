#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "grassdesign/potential.hpp"

namespace grassdesign {

struct OptimizerSettings {
  int max_iter = 5000;
  double grad_tol = 1e-9;
  double initial_step = 1.0;       // backtracking start (adapted per iteration)
  double shrink = 0.5;             // backtracking factor, in (0,1)
  double sufficient_decrease = 1e-4;
  std::uint64_t seed = 0;
  int restarts = 10;
  bool use_cg = false;             // Polak-Ribiere direction with restarts

  void validate() const;
};

struct MinimizeResult {
  Configuration config;
  std::vector<double> trace;  // objective value per accepted iterate, trace[0] = start
  int iterations = 0;
  double grad_norm = 0;       // max_i ||riemannian grad_i||_F at exit
  bool converged = false;     // grad norm reached grad_tol
};

/// Draws n_k random rank-k projectors per rank (Gaussian frames through
/// QR) and assigns the per-rank weight.  Deterministic for a fixed seed.
Configuration random_configuration(int d, const std::map<int, int>& counts,
                                   const std::map<int, double>& weights,
                                   std::uint64_t seed);

/// Orthonormal frames V_i with P_i = V_i V_i^T, extracted by pivoted QR.
std::vector<Eigen::MatrixXd> configuration_frames(const Configuration& config);

/// Riemannian gradient of FFP_t at the given frames: ambient frame
/// gradient 4 w_i t sum_j w_j <P_i,P_j>^{t-1} P_j V_i projected onto the
/// horizontal space at V_i.
std::vector<Eigen::MatrixXd> ffp_riemannian_gradient(
    const std::vector<Eigen::MatrixXd>& frames,
    const std::vector<double>& weights, int t);

/// Minimizes the t-fusion frame potential over the product of
/// Grassmannians by projected gradient (or nonlinear CG) on Stiefel
/// frames with QR retraction and Armijo backtracking.  Weights stay
/// fixed.  The objective never increases across accepted steps; a
/// non-finite objective raises numerical_failure.
MinimizeResult minimize_ffp(const Configuration& start, int t,
                            const OptimizerSettings& settings);

struct SearchResult {
  MinimizeResult best;
  int best_restart;
  std::vector<double> final_values;  // per restart
};

/// Multi-restart driver: restart i draws random_configuration with seed
/// settings.seed + i and minimizes; best final objective wins, ties by
/// lowest restart index.
SearchResult search_design(int d, const std::map<int, int>& counts,
                           const std::map<int, double>& weights, int t,
                           const OptimizerSettings& settings);

}  // namespace grassdesign
