#include <doctest.h>

#include <random>

#include "grassdesign/families.hpp"
#include "grassdesign/optimizer.hpp"
#include "grassdesign/potential.hpp"
#include "grassdesign/repdim.hpp"

using namespace grassdesign;

namespace {

Configuration two_orthogonal_lines() {
  Configuration config(2);
  config.add(Projector(2, 1, Eigen::Vector2d(1, 0).asDiagonal().toDenseMatrix()), 0.5);
  config.add(Projector(2, 1, Eigen::Vector2d(0, 1).asDiagonal().toDenseMatrix()), 0.5);
  return config;
}

Eigen::MatrixXd random_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0, 1);
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = gauss(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  return qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
}

Configuration conjugated(const Configuration& config, const Eigen::MatrixXd& o) {
  Configuration out(config.dim());
  for (std::size_t i = 0; i < config.size(); ++i)
    out.add(Projector(config.dim(), config.point(i).rank(),
                      o * config.point(i).matrix() * o.transpose()),
            config.weight(i));
  return out;
}

}  // namespace

TEST_CASE("ffp basic values") {
  SUBCASE("single projector") {
    for (int d = 3; d <= 5; ++d)
      for (int k = 1; k < d; ++k) {
        Configuration config(d);
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
        m.topLeftCorner(k, k).setIdentity();
        config.add(Projector(d, k, m), 1.0);
        for (int t = 1; t <= 3; ++t) {
          double expected = 1;
          for (int e = 0; e < t; ++e) expected *= k;
          CHECK(ffp(config, t) == doctest::Approx(expected).epsilon(1e-14));
        }
      }
  }

  SUBCASE("two orthogonal lines") {
    CHECK(ffp(two_orthogonal_lines(), 1) == doctest::Approx(0.5).epsilon(1e-14));
  }

  SUBCASE("icosahedral lines hit the projective moment") {
    const Configuration lines =
        extract_marginal(family_r3_2design(0.0).configuration, 1);
    REQUIRE(lines.size() == 6);
    CHECK(ffp(lines, 2) == doctest::Approx(0.2).epsilon(1e-12));
  }
}

TEST_CASE("induced masses and rank counts") {
  const FamilyDesign family = family_r3_2design(1.0);
  const auto masses = family.configuration.induced_masses();
  CHECK(masses.at(1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(masses.at(2) == doctest::Approx(1.0).epsilon(1e-12));
  const auto counts = family.configuration.rank_counts();
  CHECK(counts.at(1) == 6);
  CHECK(counts.at(2) == 4);
}

TEST_CASE("worst_case_error_sq") {
  SUBCASE("identity: induced measure gives ffp - bound") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
      const int d = 3 + static_cast<int>(rng() % 3);
      const Configuration config = random_configuration(
          d, {{1, 2}, {2, 2}}, {{1, 0.3}, {2, 0.7}}, rng());
      for (int t = 1; t <= 3; ++t) {
        const SignedMeasure induced =
            SignedMeasure::from_doubles(d, config.induced_masses());
        const double direct = worst_case_error_sq(config, induced, t);
        const double via_gap = ffp(config, t) - to_double(lower_bound_exact(induced, t));
        CHECK(direct == doctest::Approx(via_gap).epsilon(1e-12));
      }
    }
  }

  SUBCASE("exact cubature has zero error") {
    for (double m : {-1.0 / 3, 0.0, 0.7, 1.0}) {
      const FamilyDesign family = family_lines_hyperplane(4, m);
      CHECK(worst_case_error_sq(family.configuration, family.measure, 1) <= 1e-10);
    }
  }

  SUBCASE("zero-weight configuration against the zero measure") {
    Configuration config(3);
    config.add(Projector(3, 1, Eigen::Vector3d(1, 0, 0).asDiagonal().toDenseMatrix()),
               0.0);
    SignedMeasure zero(3);
    zero.set_mass(1, 0.0);
    CHECK(worst_case_error_sq(config, zero, 1) == 0.0);
  }
}

TEST_CASE("certify") {
  SUBCASE("lines-hyperplane family certifies as a design") {
    const FamilyDesign family = family_lines_hyperplane(3, 0.5);
    const CertificationReport report = certify(family.configuration, 1, 1e-10);
    CHECK(report.verdict == Verdict::design);
    CHECK(std::abs(report.gap) <= 1e-10);
    CHECK(report.equal_weights_per_rank);
  }

  SUBCASE("random configurations are not cubatures") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 10; ++rep) {
      const Configuration config = random_configuration(
          3, {{1, 6}, {2, 4}}, {{1, 1.0 / 6}, {2, 3.0 / 8}}, rng());
      const CertificationReport report = certify(config, 2, 1e-8);
      CHECK(report.verdict == Verdict::neither);
      CHECK(report.gap > 1e-3);
    }
  }

  SUBCASE("uneven weights within a rank demote design to cubature") {
    // Two copies of the same 1-design with weights split unevenly across
    // coincident points still integrate exactly.
    const FamilyDesign family = family_lines_hyperplane(3, 0.5);
    Configuration uneven(3);
    for (std::size_t i = 0; i < family.configuration.size(); ++i) {
      uneven.add(family.configuration.point(i), 0.25 * family.configuration.weight(i));
      uneven.add(family.configuration.point(i), 0.75 * family.configuration.weight(i));
    }
    const CertificationReport report = certify(uneven, 1, 1e-10);
    CHECK(report.verdict == Verdict::cubature);
    CHECK_FALSE(report.equal_weights_per_rank);
  }

  SUBCASE("ffp never undercuts the bound") {
    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 1000; ++rep) {
      const int d = 2 + static_cast<int>(rng() % 4);
      std::map<int, int> counts{{1, 1 + static_cast<int>(rng() % 3)}};
      std::map<int, double> weights{{1, 0.1 + 0.2 * (rng() % 5)}};
      if (d > 2) {
        counts[2] = 1 + static_cast<int>(rng() % 3);
        weights[2] = 0.1 + 0.15 * (rng() % 5);
      }
      const Configuration config = random_configuration(d, counts, weights, rng());
      const int t = 1 + static_cast<int>(rng() % 3);
      const CertificationReport report = certify(config, t, 1e-8);
      CHECK(report.gap >= -1e-9);
    }
  }
}

TEST_CASE("certify is invariant under global conjugation") {
  std::mt19937_64 rng(41);
  const FamilyDesign family = family_r3_2design(0.75);
  const CertificationReport base = certify(family.configuration, 2);
  for (int rep = 0; rep < 5; ++rep) {
    const Configuration rotated =
        conjugated(family.configuration, random_orthogonal(3, rng));
    const CertificationReport report = certify(rotated, 2);
    CHECK(report.verdict == base.verdict);
    CHECK(report.ffp == doctest::Approx(base.ffp).epsilon(1e-10));
  }
}

TEST_CASE("degree-1 moment spot check") {
  // For any certified strength-1 family, sum_i w_i <X, P_i> must equal
  // sum_k m_k (k/d) Tr(X): the Haar mean of a rank-k projector is (k/d) I.
  std::mt19937_64 rng(43);
  std::normal_distribution<double> gauss(0, 1);
  const FamilyDesign family = family_r4_1design(0.8);
  const int d = family.configuration.dim();
  for (int rep = 0; rep < 20; ++rep) {
    Eigen::MatrixXd x(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) x(i, j) = gauss(rng);
    x = ((x + x.transpose()) / 2).eval();
    double lhs = 0;
    for (std::size_t i = 0; i < family.configuration.size(); ++i)
      lhs += family.configuration.weight(i) *
             (x.array() * family.configuration.point(i).matrix().array()).sum();
    double rhs = 0;
    for (const auto& [k, m] : family.measure.masses())
      rhs += to_double(m) * k / d * x.trace();
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("equivalent_measure_check") {
  const FamilyDesign family = family_lines_hyperplane(3, 0.5);

  SUBCASE("the induced measure itself passes") {
    const SignedMeasure induced = SignedMeasure::from_doubles(
        3, family.configuration.induced_masses());
    CHECK(equivalent_measure_check(family.configuration, 1, induced, 1e-10));
  }

  SUBCASE("mass mismatch is a domain error") {
    // The kernel direction of T_{{1,2},3}(1) is spanned by (2,-1), which
    // changes the total mass, so the precondition rejects it.
    SignedMeasure shifted(3);
    shifted.set_mass(1, Rational(3));
    shifted.set_mass(2, Rational(1, 2) - 1);
    CHECK_THROWS_AS(equivalent_measure_check(family.configuration, 1, shifted, 1e-10),
                    std::domain_error);
  }

  SUBCASE("equal-mass measure off the kernel fails at t = 2") {
    const FamilyDesign design = family_r3_2design(1.0);
    SignedMeasure other(3);
    other.set_mass(1, Rational(3, 2));
    other.set_mass(2, Rational(1, 2));
    CHECK_FALSE(equivalent_measure_check(design.configuration, 2, other, 1e-10));
  }
}

TEST_CASE("extract_marginal") {
  const FamilyDesign family = family_r3_2design(0.6);
  const Configuration lines = extract_marginal(family.configuration, 1);
  CHECK(lines.size() == 6);
  const Configuration planes = extract_marginal(family.configuration, 2);
  CHECK(planes.size() == 4);
  CHECK_THROWS_AS(extract_marginal(lines, 2), std::invalid_argument);

  // Strength degrades to t - |K| + 1 on the marginal.
  const CertificationReport line_report = certify(lines, 1, 1e-9);
  CHECK(line_report.certified());
  const CertificationReport plane_report = certify(planes, 1, 1e-9);
  CHECK(plane_report.certified());
}

TEST_CASE("distinct point counting respects the cardinality bound") {
  const FamilyDesign family = family_r3_2design(1.5);
  CHECK(family.configuration.distinct_point_count() == 7);
  CHECK(family.configuration.distinct_point_count() >=
        min_points_lower_bound(3, {1, 2}, 2));
}
