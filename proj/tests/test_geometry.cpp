#include <doctest.h>

#include <random>

#include "grassdesign/geometry.hpp"

using namespace grassdesign;

namespace {

Eigen::MatrixXd random_gaussian(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0, 1);
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = gauss(rng);
  return m;
}

Eigen::MatrixXd random_orthogonal(int n, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(random_gaussian(n, n, rng));
  return qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
}

}  // namespace

TEST_CASE("projector_from_frame on coordinate frames") {
  Eigen::VectorXd e1 = Eigen::VectorXd::Unit(3, 0);
  const Projector p = projector_from_frame(3, std::vector<Eigen::VectorXd>{e1});
  CHECK(p.rank() == 1);
  CHECK((p.matrix() - Eigen::Vector3d(1, 0, 0).asDiagonal().toDenseMatrix()).norm() ==
        0.0);

  for (int d = 3; d <= 6; ++d)
    for (int k = 1; k < d; ++k) {
      const Eigen::MatrixXd frame = Eigen::MatrixXd::Identity(d, k);
      const Projector q = projector_from_frame(d, frame);
      Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(d, d);
      expected.topLeftCorner(k, k).setIdentity();
      CHECK((q.matrix() - expected).norm() < 1e-14);
    }
}

TEST_CASE("projector_from_frame validates input") {
  std::mt19937_64 rng(7);
  Eigen::MatrixXd frame = random_gaussian(4, 2, rng);
  frame.col(1) = 2.0 * frame.col(0);  // dependent columns
  CHECK_THROWS_AS(projector_from_frame(4, frame), degenerate_frame_error);
  CHECK_THROWS_AS(projector_from_frame(4, Eigen::MatrixXd::Identity(4, 4)),
                  std::domain_error);
  CHECK_THROWS_AS(projector_from_frame(3, Eigen::MatrixXd::Identity(4, 2)),
                  std::domain_error);
}

TEST_CASE("random frames give valid projectors") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 50; ++rep) {
    const int d = 2 + static_cast<int>(rng() % 5);
    const int k = 1 + static_cast<int>(rng() % (d - 1));
    const Projector p = projector_from_frame(d, random_gaussian(d, k, rng));
    CHECK(validate(p, 1e-10).empty());
  }
}

TEST_CASE("frame rotation invariance") {
  // P depends only on the column span: right-multiplying the frame by an
  // orthogonal matrix leaves it unchanged.
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 20; ++rep) {
    const int d = 3 + static_cast<int>(rng() % 3);
    const int k = 1 + static_cast<int>(rng() % (d - 1));
    const Eigen::MatrixXd frame = random_gaussian(d, k, rng);
    const Eigen::MatrixXd rotation = random_orthogonal(k, rng);
    const Projector p = projector_from_frame(d, frame);
    const Projector q = projector_from_frame(d, frame * rotation);
    CHECK((p.matrix() - q.matrix()).norm() < 1e-12);
  }
}

TEST_CASE("complement") {
  const Projector p(3, 1, Eigen::Vector3d(1, 0, 0).asDiagonal().toDenseMatrix());
  const Projector c = complement(p);
  CHECK(c.rank() == 2);
  CHECK((c.matrix() - Eigen::Vector3d(0, 1, 1).asDiagonal().toDenseMatrix()).norm() ==
        0.0);
  CHECK((complement(c).matrix() - p.matrix()).norm() == 0.0);
  CHECK(c.matrix().trace() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(inner(p, c) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("inner") {
  const Projector e1(3, 1, Eigen::Vector3d(1, 0, 0).asDiagonal().toDenseMatrix());
  const Projector e2(3, 1, Eigen::Vector3d(0, 1, 0).asDiagonal().toDenseMatrix());
  CHECK(inner(e1, e1) == doctest::Approx(1.0));
  CHECK(inner(e1, e2) == doctest::Approx(0.0));

  const Projector other(4, 1, Eigen::MatrixXd::Identity(4, 4) / 4);
  CHECK_THROWS_AS(inner(e1, other), std::domain_error);
}

TEST_CASE("inner stays within [0, min rank] for random pairs") {
  std::mt19937_64 rng(37);
  for (int rep = 0; rep < 10000; ++rep) {
    const int d = 2 + static_cast<int>(rng() % 4);
    const int kp = 1 + static_cast<int>(rng() % (d - 1));
    const int kq = 1 + static_cast<int>(rng() % (d - 1));
    const Projector p = projector_from_frame(d, random_gaussian(d, kp, rng));
    const Projector q = projector_from_frame(d, random_gaussian(d, kq, rng));
    const double ip = inner(p, q);
    CHECK(ip >= -1e-8);
    CHECK(ip <= std::min(kp, kq) + 1e-8);
  }
}

TEST_CASE("validate flags broken matrices") {
  const Projector exact(3, 1, Eigen::Vector3d(1, 0, 0).asDiagonal().toDenseMatrix());
  CHECK(validate(exact, 1e-12).empty());

  const Projector half(3, 1, Eigen::MatrixXd(Eigen::MatrixXd::Identity(3, 3) / 2));
  const auto violations = validate(half, 1e-8);
  REQUIRE(!violations.empty());
  bool idempotency = false, trace = false;
  for (const auto& v : violations) {
    idempotency = idempotency || v.find("idempotency") != std::string::npos;
    trace = trace || v.find("trace") != std::string::npos;
  }
  CHECK(idempotency);
  CHECK(trace);

  Eigen::MatrixXd asym = Eigen::MatrixXd::Zero(3, 3);
  asym(0, 0) = 1;
  asym(0, 1) = 0.5;
  const auto raw = validate_matrix(3, 1, asym, 1e-8);
  bool symmetry = false;
  for (const auto& v : raw) symmetry = symmetry || v.find("symmetry") != std::string::npos;
  CHECK(symmetry);
}
