#include "grassdesign/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace grassdesign {

namespace {

void require_symmetric(const Eigen::MatrixXd& m, const char* who) {
  if (m.rows() != m.cols())
    throw std::domain_error(std::string(who) + ": matrix is not square");
  const double scale = m.norm();
  if ((m - m.transpose()).norm() > 1e-12 * std::max(1.0, scale))
    throw std::domain_error(std::string(who) + ": matrix is not symmetric");
}

struct TraceData {
  double tx, ty, tx2, ty2, txy, txyxy, txy2, tx2y, tx2y2;
};

TraceData traces(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  const Eigen::MatrixXd xy = x * y;
  TraceData t;
  t.tx = x.trace();
  t.ty = y.trace();
  t.tx2 = (x * x).trace();
  t.ty2 = (y * y).trace();
  t.txy = xy.trace();
  t.txyxy = (xy * xy).trace();
  t.txy2 = (xy * y).trace();
  t.tx2y = (x * xy).trace();
  t.tx2y2 = (x * xy * y).trace();
  return t;
}

double k2(double d, const TraceData& t) { return t.txy - t.tx * t.ty / d; }

double k4(double d, const TraceData& t) {
  return (t.txy * t.txy + 2 * t.txyxy) / 6.0 +
         (t.tx * t.tx + 2 * t.tx2) * (t.ty * t.ty + 2 * t.ty2) /
             (6.0 * (d + 2) * (d + 4)) -
         (t.txy * t.tx * t.ty + 2 * t.txy2 * t.tx + 2 * t.tx2y * t.ty +
          4 * t.tx2y2) /
             (3.0 * (d + 4));
}

double k22(double d, const TraceData& t) {
  return (t.txy * t.txy - t.txyxy) / 3.0 +
         (t.tx * t.tx - t.tx2) * (t.ty * t.ty - t.ty2) /
             (3.0 * (d - 1) * (d - 2)) -
         2.0 *
             (t.txy * t.tx * t.ty - t.txy2 * t.tx - t.tx2y * t.ty + t.tx2y2) /
             (3.0 * (d - 2));
}

}  // namespace

double k_hom(const Partition& label, const Eigen::MatrixXd& x,
             const Eigen::MatrixXd& y) {
  require_symmetric(x, "k_hom");
  require_symmetric(y, "k_hom");
  if (x.rows() != y.rows()) throw std::domain_error("k_hom: dimension mismatch");
  const double d = static_cast<double>(x.rows());

  if (label == Partition{}) return 1.0;
  if (label == Partition{2}) {
    if (d < 2) throw std::domain_error("k_hom: K_(2) requires d >= 2");
    return k2(d, traces(x, y));
  }
  if (label == Partition{4}) return k4(d, traces(x, y));
  if (label == Partition{2, 2}) {
    if (d < 3) throw std::domain_error("k_hom: K_(2,2) requires d >= 3");
    return k22(d, traces(x, y));
  }
  throw std::domain_error("k_hom: unsupported label " + label.to_string());
}

double p_pi(const Partition& pi, const Projector& p, const Projector& q) {
  if (p.dim() != q.dim()) throw std::domain_error("p_pi: dimension mismatch");
  if (pi == Partition{}) return 1.0;
  if (pi == Partition{1}) return k_hom(Partition{2}, p.matrix(), q.matrix());
  if (pi == Partition{2}) return 2.0 * k_hom(Partition{4}, p.matrix(), q.matrix());
  if (pi == Partition{1, 1})
    return 2.0 * k_hom(Partition{2, 2}, p.matrix(), q.matrix());
  throw std::domain_error("p_pi: unsupported partition " + pi.to_string());
}

double v_pi(const Partition& pi, int k, int d) {
  if (k < pi.length() || k > d - pi.length())
    throw std::domain_error("v_pi: rank " + std::to_string(k) +
                            " outside [l(pi), d - l(pi)] for " + pi.to_string());
  const double kd = k, dd = d;
  if (pi == Partition{}) return 1.0;
  if (pi == Partition{1})
    return std::sqrt(2 * kd * (dd - kd) / ((dd - 1) * dd * (dd + 2)));
  if (pi == Partition{2})
    return std::sqrt(8 * kd * (kd + 2) * (dd - kd) * (dd - kd + 2) /
                     ((dd - 1) * dd * (dd + 1) * (dd + 2) * (dd + 4) * (dd + 6)));
  if (pi == Partition{1, 1})
    return std::sqrt(8 * (kd - 1) * kd * (dd - kd - 1) * (dd - kd) /
                     ((dd - 3) * (dd - 2) * (dd - 1) * dd * (dd + 1) * (dd + 2)));
  throw std::domain_error("v_pi: unsupported partition " + pi.to_string());
}

double intertwining(const Partition& pi, int k, int l, const Projector& p,
                    const Projector& q) {
  if (p.rank() != k || q.rank() != l)
    throw std::domain_error("intertwining: declared ranks do not match points");
  const int d = p.dim();
  return p_pi(pi, p, q) / (v_pi(pi, k, d) * v_pi(pi, l, d));
}

double reproducing_kernel_poly(int t, double c, const Projector& p,
                               const Projector& q) {
  if (t < 0) throw std::domain_error("reproducing_kernel_poly: t must be >= 0");
  if (c < 0) throw std::domain_error("reproducing_kernel_poly: C must be >= 0");
  double r = 1;
  const double ip = inner(p, q);
  for (int i = 0; i < t; ++i) r *= ip;
  return r + c;
}

double vanishing_kernel(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  require_symmetric(x, "vanishing_kernel");
  require_symmetric(y, "vanishing_kernel");
  if (x.rows() != y.rows())
    throw std::domain_error("vanishing_kernel: dimension mismatch");
  const double d = static_cast<double>(x.rows());
  if (d < 2) throw std::domain_error("vanishing_kernel: d must be >= 2");
  const TraceData t = traces(x, y);
  return (t.tx2y2 * t.txy - t.tx2y * t.txy2) / (d + 2) -
         (t.tx2y2 * t.tx * t.ty - t.tx2y * t.tx * t.ty2 - t.txy2 * t.tx2 * t.ty +
          t.txy * t.tx2 * t.ty2) /
             ((3 * d + 4) * (d + 2));
}

std::pair<double, double> convolution_check(const Partition& pi, int k, int m,
                                            int l, const Configuration& cubature,
                                            const Projector& p,
                                            const Projector& q) {
  for (const Projector& r : cubature.points())
    if (r.rank() != m)
      throw std::invalid_argument(
          "convolution_check: cubature has points of rank != m");
  double mass = 0;
  for (double w : cubature.weights()) mass += w;
  if (std::abs(mass - 1.0) > 1e-9)
    throw std::invalid_argument(
        "convolution_check: cubature must have unit mass on G_{m,d}");
  const int strength = std::max(1, 2 * pi.size());
  if (!certify(cubature, strength, 1e-8).certified())
    throw std::invalid_argument(
        "convolution_check: cubature is not certified at strength " +
        std::to_string(strength));

  double lhs = 0;
  for (std::size_t j = 0; j < cubature.size(); ++j)
    lhs += cubature.weight(j) * intertwining(pi, k, m, p, cubature.point(j)) *
           intertwining(pi, m, l, cubature.point(j), q);
  const double rhs = intertwining(pi, k, l, p, q);
  return {lhs, rhs};
}

}  // namespace grassdesign
