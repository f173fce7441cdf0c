#include "grassdesign/geometry.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace grassdesign {

Projector::Projector(int d, int k, Eigen::MatrixXd mat) : d_(d), k_(k) {
  if (d < 1) throw std::domain_error("Projector: d must be >= 1");
  if (k < 0 || k > d) throw std::domain_error("Projector: rank outside [0, d]");
  if (mat.rows() != d || mat.cols() != d)
    throw std::domain_error("Projector: matrix is not d x d");
  mat_ = ((mat + mat.transpose()) / 2.0).eval();
}

Projector projector_from_frame(int d, const Eigen::MatrixXd& columns) {
  const int k = static_cast<int>(columns.cols());
  if (columns.rows() != d)
    throw std::domain_error("projector_from_frame: column length != d");
  if (k < 1 || k > d - 1)
    throw std::domain_error("projector_from_frame: need 1 <= #columns <= d-1");

  Eigen::HouseholderQR<Eigen::MatrixXd> qr(columns);
  const Eigen::MatrixXd r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
  double rmax = 0.0, rmin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < k; ++i) {
    const double v = std::abs(r(i, i));
    rmax = std::max(rmax, v);
    rmin = std::min(rmin, v);
  }
  if (!(rmin > 1e-10 * rmax))
    throw degenerate_frame_error("projector_from_frame: rank-deficient frame");

  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(d, k);
  return Projector(d, k, q * q.transpose());
}

Projector projector_from_frame(int d, const std::vector<Eigen::VectorXd>& columns) {
  Eigen::MatrixXd m(d, static_cast<Eigen::Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != d)
      throw std::domain_error("projector_from_frame: column length != d");
    m.col(static_cast<Eigen::Index>(j)) = columns[j];
  }
  return projector_from_frame(d, m);
}

Projector complement(const Projector& p) {
  return Projector(p.dim(), p.dim() - p.rank(),
                   Eigen::MatrixXd::Identity(p.dim(), p.dim()) - p.matrix());
}

double inner(const Projector& p, const Projector& q) {
  if (p.dim() != q.dim())
    throw std::domain_error("inner: ambient dimension mismatch");
  return (p.matrix().array() * q.matrix().array()).sum();
}

std::vector<std::string> validate(const Projector& p, double tol) {
  return validate_matrix(p.dim(), p.rank(), p.matrix(), tol);
}

std::vector<std::string> validate_matrix(int d, int k, const Eigen::MatrixXd& m,
                                         double tol) {
  if (!(tol > 0)) throw std::domain_error("validate: tol must be > 0");
  if (m.rows() != d || m.cols() != d)
    return {"shape violation: matrix is not d x d"};
  std::vector<std::string> violations;

  const double asym = (m - m.transpose()).norm();
  if (asym > tol) {
    std::ostringstream os;
    os << "symmetry violation: ||M - M^T||_F = " << asym;
    violations.push_back(os.str());
  }
  const double idem = (m * m - m).norm();
  if (idem > tol * d) {
    std::ostringstream os;
    os << "idempotency violation: ||M^2 - M||_F = " << idem;
    violations.push_back(os.str());
  }
  const double trace_err = std::abs(m.trace() - k);
  if (trace_err > tol * d) {
    std::ostringstream os;
    os << "trace violation: |Tr(M) - " << k << "| = " << trace_err;
    violations.push_back(os.str());
  }
  return violations;
}

}  // namespace grassdesign
