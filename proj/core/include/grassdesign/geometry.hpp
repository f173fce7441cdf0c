#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "grassdesign/errors.hpp"

namespace grassdesign {

/// A point of G_{k,d}: symmetric idempotent d x d matrix of rank k,
/// stored dense.  Immutable after construction; the matrix is
/// symmetrized once on the way in.
class Projector {
 public:
  Projector(int d, int k, Eigen::MatrixXd mat);

  int dim() const { return d_; }
  int rank() const { return k_; }
  const Eigen::MatrixXd& matrix() const { return mat_; }

 private:
  int d_;
  int k_;
  Eigen::MatrixXd mat_;
};

/// Orthonormalizes the given frame columns by Householder QR and returns
/// P = QQ^T of rank = number of columns.  Throws degenerate_frame_error
/// when the columns are numerically dependent (smallest |R_ii| below
/// 1e-10 times the largest).
Projector projector_from_frame(int d, const Eigen::MatrixXd& columns);
Projector projector_from_frame(int d, const std::vector<Eigen::VectorXd>& columns);

/// I - P, a point of G_{d-k,d}.
Projector complement(const Projector& p);

/// Trace inner product Tr(PQ).  Lies in [0, min(rank P, rank Q)] up to
/// roundoff for valid projectors.  Throws std::domain_error on ambient
/// dimension mismatch.
double inner(const Projector& p, const Projector& q);

/// Invariant check at tolerance tol: symmetry within tol, idempotency
/// within tol * d, trace-vs-rank within tol * d.  Returns human-readable
/// violation descriptions; empty means valid.
std::vector<std::string> validate(const Projector& p, double tol);

/// Same checks on a raw matrix before it is symmetrized into a Projector
/// (used when loading matrices from files).
std::vector<std::string> validate_matrix(int d, int k, const Eigen::MatrixXd& m,
                                         double tol);

}  // namespace grassdesign
