#pragma once

#include <utility>

#include <Eigen/Dense>

#include "grassdesign/partition.hpp"
#include "grassdesign/potential.hpp"

namespace grassdesign {

/// Zonal reproducing kernels on symmetric matrices for the degree-(0|1|2)
/// harmonic components, labelled (0), (2), (4), (2,2).  Inputs must be
/// symmetric within 1e-12 relative Frobenius error; the (2,2) kernel
/// requires d >= 3.
double k_hom(const Partition& label, const Eigen::MatrixXd& x,
             const Eigen::MatrixXd& y);

/// Restrictions of the kernels above to projector arguments:
/// p_(0) = 1, p_(1) = K_(2), p_(2) = 2 K_(4), p_(1,1) = 2 K_(2,2).
double p_pi(const Partition& pi, const Projector& p, const Projector& q);

/// Normalization constants v_pi^k with the positive sign convention.
/// Requires l(pi) <= k <= d - l(pi).
double v_pi(const Partition& pi, int k, int d);

/// Intertwining kernel p_pi^{k,l}(P,Q) = (v_pi^k v_pi^l)^{-1} p_pi(P,Q)
/// between G_{k,d} and G_{l,d}.  On the diagonal (k = l, P = Q) it equals
/// dim_irrep(d, 2 pi).
double intertwining(const Partition& pi, int k, int l, const Projector& p,
                    const Projector& q);

/// <P,Q>^t + C, the reproducing kernel of the degree-t polynomial space
/// (C = 0: homogeneous part only).
double reproducing_kernel_poly(int t, double c, const Projector& p,
                               const Projector& q);

/// Degree-3 kernel that vanishes identically when either argument is a
/// projector of any rank.
double vanishing_kernel(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y);

/// Quadrature check of the kernel convolution identity
///   (p_pi^{k,m}(P,.), p_pi^{m,l}(.,Q))_{G_{m,d}} = p_pi^{k,l}(P,Q)
/// using a certified cubature of strength >= 2|pi| and unit mass on
/// G_{m,d} as the integration rule.  Returns {lhs, rhs}.
std::pair<double, double> convolution_check(const Partition& pi, int k, int m,
                                            int l, const Configuration& cubature,
                                            const Projector& p,
                                            const Projector& q);

}  // namespace grassdesign
