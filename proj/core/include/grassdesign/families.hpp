#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "grassdesign/potential.hpp"
#include "grassdesign/rational.hpp"

namespace grassdesign {

/// Group-orbit request: seeds are closed under conjugation by the group
/// generated by the listed orthogonal matrices.
struct OrbitSpec {
  std::vector<Eigen::MatrixXd> generators;
  std::vector<Projector> seeds;
  double dedup_tol = 1e-8;
};

/// Breadth-first closure of {R P R^T} with Frobenius deduplication, in a
/// deterministic order.  Small groups (<= 1000 elements) are closed
/// first and then applied to the seeds; otherwise projectors are closed
/// directly with a cap of 10^4 elements (nonfinite_orbit_error beyond).
std::vector<Projector> orbit(const OrbitSpec& spec);

/// A constructed configuration together with the measure it integrates.
struct FamilyDesign {
  Configuration configuration;
  SignedMeasure measure;
};

/// d lines and one hyperplane in R^d, a 1-design for
/// sigma_1 + m sigma_{d-1} with m in [-1/(d-1), 1].  Coincident points
/// are merged and weights are m_k / n_k.
FamilyDesign family_lines_hyperplane(int d, double m);

/// 2 lines and 2 planes in R^4, a 1-design for m1 sigma_1 + sigma_2 with
/// m1 in [-2, 2].
FamilyDesign family_r4_1design(double m1);

/// 6 lines and 4 planes in R^3 (tetrahedral orbits), a 2-design for
/// sigma_1 + m2 sigma_2 with m2 in [-3/8, 3/2].
FamilyDesign family_r3_2design(double m2);

/// 8 lines and 8 planes in R^4, a 2-design for sigma_1 + m2 sigma_2 with
/// m2 in [3/4, 3/2].
FamilyDesign family_r4_2design(double m2);

/// 5 lines and 16 planes in R^5, a 2-design for sigma_1 + (5/3) sigma_2.
FamilyDesign family_r5_2design();

/// Strength-(t+1) configuration obtained by adjoining the complements
/// I - P_j with weights (-1)^t w_j, together with the doubled measure
/// sum_k m_k (sigma_k + (-1)^t sigma_{d-k}).  The input must certify as a
/// cubature at strength t for its induced measure (std::invalid_argument
/// otherwise).
FamilyDesign double_design(const Configuration& config, int t, double tol = 1e-8);

/// One row of the catalogue of small optimal constructions.
struct Table1Row {
  int t = 0;
  int d = 0;
  int n1 = 0;
  int n2 = 0;
  Rational m1;
  Rational m2;
  std::string constructor;
  std::function<FamilyDesign()> build;
};

/// The five catalogued (t, d, n1, n2, m1, m2) rows with their builders.
std::vector<Table1Row> table1_rows();

/// Family constructor lookup by CLI name ("lines-hyperplane",
/// "r4-1design", "r3-2design", "r4-2design", "r5-2design").  The
/// parameter is the family's mass knob; d is only consulted by
/// lines-hyperplane.
FamilyDesign build_family(const std::string& name, double param = 0.0, int d = 0);

}  // namespace grassdesign
