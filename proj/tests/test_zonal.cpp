#include <doctest.h>

#include <Eigen/SVD>

#include "grassdesign/zonal.hpp"

using namespace grassdesign;

TEST_CASE("zonal values at the identity") {
  for (int k = 0; k <= 8; ++k) CHECK(zonal_at_identity(Partition{}, k) == 1);
  for (int k = 1; k <= 8; ++k) CHECK(zonal_at_identity(Partition{1}, k) == k);
  CHECK(zonal_at_identity(Partition{1, 1}, 1) == 0);  // rank deficiency
  CHECK(zonal_at_identity(Partition{2}, 3) == 5);     // d(d+2)/3
  CHECK(zonal_at_identity(Partition{1, 1}, 3) == 4);  // 2d(d-1)/3
  CHECK(zonal_at_identity(Partition{2}, 3) + zonal_at_identity(Partition{1, 1}, 3) == 9);
}

TEST_CASE("zonal trace normalization is exact") {
  for (int k = 1; k <= 8; ++k) {
    Rational power = 1;
    for (int t = 0; t <= 6; ++t) {
      Rational sum = 0;
      for (const Partition& pi : partitions_of(t, k + 2))  // extra length: zero terms
        sum += zonal_at_identity(pi, k);
      CHECK(sum == power);
      power *= k;
    }
  }
}

TEST_CASE("t_matrix") {
  SUBCASE("t = 1 entries are kl/d") {
    for (int d = 3; d <= 6; ++d) {
      std::vector<int> K;
      for (int k = 1; k < d; ++k) K.push_back(k);
      const TMatrix T = t_matrix(d, K, 1);
      for (std::size_t i = 0; i < T.ranks.size(); ++i)
        for (std::size_t j = 0; j < T.ranks.size(); ++j)
          CHECK(T.entry(i, j) == Rational(T.ranks[i] * T.ranks[j], d));
    }
  }

  SUBCASE("d=3 strength-2 moment matrix") {
    const TMatrix T = t_matrix(3, {1, 2}, 2);
    CHECK(T.entry(0, 0) == Rational(1, 5));
    CHECK(T.entry(0, 1) == Rational(8, 15));
    CHECK(T.entry(1, 0) == Rational(8, 15));
    CHECK(T.entry(1, 1) == Rational(28, 15));
  }

  SUBCASE("symmetric PSD") {
    for (int d = 3; d <= 5; ++d)
      for (int t = 1; t <= 3; ++t) {
        std::vector<int> K;
        for (int k = 1; k < d; ++k) K.push_back(k);
        const TMatrix T = t_matrix(d, K, t);
        const Eigen::MatrixXd M = T.to_double();
        CHECK((M - M.transpose()).norm() == 0.0);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
        CHECK(es.eigenvalues().minCoeff() >= -1e-12 * M.norm());
      }
  }
}

TEST_CASE("t_matrix numeric rank (reported, not asserted)") {
  // Expected rank min(t, |K|) for K without complementary pairs; observed
  // values for complementary pairs are printed for the record.
  for (int d = 3; d <= 6; ++d)
    for (int t = 1; t <= 3; ++t) {
      std::vector<int> K;
      for (int k = 1; k < d; ++k)
        if (k <= d - k) K.push_back(k);  // no complementary pairs
      const Eigen::MatrixXd M = t_matrix(d, K, t).to_double();
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
      const auto sv = svd.singularValues();
      int rank = 0;
      for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv[i] > 1e-10 * sv[0]) ++rank;
      const int expected = std::min<int>(t, static_cast<int>(K.size()));
      if (rank != expected)
        MESSAGE("rank deviation: d=", d, " t=", t, " rank=", rank,
                " expected=", expected);
      CHECK(rank <= expected);
    }

  for (int d = 3; d <= 6; ++d)
    for (int t = 1; t <= 3; ++t) {
      const std::vector<int> K = {1, d - 1};  // complementary pair
      const Eigen::MatrixXd M = t_matrix(d, K, t).to_double();
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
      const auto sv = svd.singularValues();
      int rank = 0;
      for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv[i] > 1e-10 * sv[0]) ++rank;
      MESSAGE("complementary K={1,", d - 1, "}: d=", d, " t=", t,
              " numeric rank=", rank, " min(t,|K|)=", std::min<int>(t, 2));
    }
}

TEST_CASE("mean_inner_power") {
  for (int d = 3; d <= 6; ++d)
    for (int k = 1; k < d; ++k)
      for (int l = 1; l < d; ++l)
        CHECK(mean_inner_power(d, k, l, 1) == Rational(k * l, d));
  CHECK(mean_inner_power(3, 1, 1, 2) == Rational(1, 5));
  CHECK(mean_inner_power(4, 2, 2, 2) == Rational(10, 9));

  // Entries of the moment matrix agree with the standalone evaluation.
  const TMatrix T = t_matrix(5, {1, 2, 3, 4}, 2);
  for (std::size_t i = 0; i < T.ranks.size(); ++i)
    for (std::size_t j = 0; j < T.ranks.size(); ++j)
      CHECK(T.entry(i, j) == mean_inner_power(5, T.ranks[i], T.ranks[j], 2));
}

TEST_CASE("lower_bound reproduces the closed forms") {
  SUBCASE("lines + hyperplane, strength 1") {
    for (int d = 2; d <= 8; ++d) {
      for (const Rational& m :
           {Rational(-1, d - 1), Rational(0), Rational(1, 3), Rational(1)}) {
        SignedMeasure measure(d);
        measure.add_mass(1, 1);
        measure.add_mass(d - 1, m);
        const Rational expected =
            (1 + (d - 1) * m) * (1 + (d - 1) * m) / Rational(d);
        CHECK(lower_bound_exact(measure, 1) == expected);
      }
    }
  }

  SUBCASE("d=3 strength 2") {
    for (const Rational& m2 : {Rational(-3, 8), Rational(0), Rational(3, 2)}) {
      SignedMeasure measure(3);
      measure.set_mass(1, 1);
      measure.set_mass(2, m2);
      CHECK(lower_bound_exact(measure, 2) ==
            (3 + 16 * m2 + 28 * m2 * m2) / Rational(15));
    }
  }

  SUBCASE("d=5 strength 2") {
    SignedMeasure measure(5);
    measure.set_mass(1, 1);
    measure.set_mass(2, Rational(5, 3));
    CHECK(lower_bound_exact(measure, 2) == Rational(131, 45));
  }

  SUBCASE("nonnegative for signed measures") {
    for (int d = 3; d <= 5; ++d)
      for (int t = 1; t <= 3; ++t) {
        SignedMeasure measure(d);
        measure.set_mass(1, Rational(-3, 2));
        measure.set_mass(2, Rational(1, 7));
        if (d > 3) measure.set_mass(d - 1, Rational(2));
        CHECK(lower_bound_exact(measure, t) >= 0);
      }
  }
}

TEST_CASE("lower_bound rejects support outside K") {
  SignedMeasure measure(4);
  measure.set_mass(1, 1);
  measure.set_mass(3, 1);
  CHECK_THROWS_AS(lower_bound_exact(measure, {1, 2}, 1), std::domain_error);
}

TEST_CASE("t_matrix kernel membership") {
  Eigen::VectorXd v(2);
  v << 2, -1;
  CHECK(in_t_matrix_kernel(3, {1, 2}, 1, v, 1e-12));
  CHECK_FALSE(in_t_matrix_kernel(3, {1, 2}, 2, v, 1e-10));
  Eigen::VectorXd zero = Eigen::VectorXd::Zero(2);
  CHECK(in_t_matrix_kernel(3, {1, 2}, 2, zero, 1e-12));
}
