#include "grassdesign/families.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>
#include <utility>

namespace grassdesign {

namespace {

constexpr int kGroupCap = 1000;
constexpr int kOrbitCap = 10000;

bool contains_matrix(const std::vector<Eigen::MatrixXd>& set,
                     const Eigen::MatrixXd& m, double tol) {
  for (const Eigen::MatrixXd& s : set)
    if ((s - m).norm() <= tol) return true;
  return false;
}

// Closure of the generated group under multiplication; empty result means
// the cap was exceeded.
std::vector<Eigen::MatrixXd> close_group(
    const std::vector<Eigen::MatrixXd>& generators, int d) {
  std::vector<Eigen::MatrixXd> elements;
  elements.push_back(Eigen::MatrixXd::Identity(d, d));
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const Eigen::MatrixXd current = elements[queue.front()];
    queue.pop_front();
    for (const Eigen::MatrixXd& g : generators) {
      Eigen::MatrixXd next = g * current;
      if (!contains_matrix(elements, next, 1e-10)) {
        elements.push_back(std::move(next));
        if (static_cast<int>(elements.size()) > kGroupCap) return {};
        queue.push_back(elements.size() - 1);
      }
    }
  }
  return elements;
}

void append_if_new(std::vector<Projector>& points, const Projector& cand,
                   double tol) {
  for (const Projector& p : points)
    if ((p.matrix() - cand.matrix()).norm() <= tol) return;
  points.push_back(cand);
}

}  // namespace

std::vector<Projector> orbit(const OrbitSpec& spec) {
  if (spec.seeds.empty()) throw std::invalid_argument("orbit: no seed projectors");
  const int d = spec.seeds.front().dim();
  for (const Projector& s : spec.seeds)
    if (s.dim() != d) throw std::invalid_argument("orbit: mixed ambient dimensions");
  for (const Eigen::MatrixXd& g : spec.generators) {
    if (g.rows() != d || g.cols() != d)
      throw std::invalid_argument("orbit: generator is not d x d");
    if ((g.transpose() * g - Eigen::MatrixXd::Identity(d, d)).norm() > 1e-12)
      throw std::invalid_argument("orbit: generator is not orthogonal");
  }

  std::vector<Projector> points;
  const std::vector<Eigen::MatrixXd> group = close_group(spec.generators, d);
  if (!group.empty()) {
    for (const Projector& seed : spec.seeds)
      for (const Eigen::MatrixXd& g : group)
        append_if_new(points,
                      Projector(d, seed.rank(), g * seed.matrix() * g.transpose()),
                      spec.dedup_tol);
    return points;
  }

  // Large group: close the projector set directly.
  for (const Projector& seed : spec.seeds)
    append_if_new(points, seed, spec.dedup_tol);
  std::size_t next = 0;
  while (next < points.size()) {
    const Projector current = points[next++];
    for (const Eigen::MatrixXd& g : spec.generators) {
      append_if_new(points,
                    Projector(d, current.rank(),
                              g * current.matrix() * g.transpose()),
                    spec.dedup_tol);
      if (static_cast<int>(points.size()) > kOrbitCap)
        throw nonfinite_orbit_error("orbit: closure exceeded " +
                                    std::to_string(kOrbitCap) + " elements");
    }
  }
  return points;
}

namespace {

// Merges coincident points by adding their weights; this keeps the
// cubature exact when a family parameter makes points collapse, and the
// merged weights are again m_k / n_k whenever the collapse is uniform.
Configuration merge_coincident(
    int d, const std::vector<std::pair<Projector, double>>& weighted,
    double tol = 1e-8) {
  std::vector<Projector> points;
  std::vector<double> weights;
  for (const auto& [p, w] : weighted) {
    bool merged = false;
    for (std::size_t i = 0; i < points.size(); ++i)
      if ((points[i].matrix() - p.matrix()).norm() <= tol) {
        weights[i] += w;
        merged = true;
        break;
      }
    if (!merged) {
      points.push_back(p);
      weights.push_back(w);
    }
  }
  Configuration config(d);
  for (std::size_t i = 0; i < points.size(); ++i) config.add(points[i], weights[i]);
  return config;
}

Eigen::MatrixXd cyclic_shift(int d) {
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) r((i + 1) % d, i) = 1;
  return r;
}

Eigen::MatrixXd first_axis_reflection(int d) {
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(d, d);
  r(0, 0) = -1;
  return r;
}

}  // namespace

FamilyDesign family_lines_hyperplane(int d, double m) {
  if (d < 2) throw std::domain_error("family_lines_hyperplane: d must be >= 2");
  if (m < -1.0 / (d - 1) - 1e-12 || m > 1.0 + 1e-12)
    throw std::domain_error(
        "family_lines_hyperplane: m outside [-1/(d-1), 1]");

  const double u = std::sqrt(std::max(0.0, 1.0 - m));
  const double v = std::sqrt(std::max(0.0, 1.0 + (d - 1) * m));
  const Eigen::VectorXd e = Eigen::VectorXd::Ones(d);

  std::vector<std::pair<Projector, double>> weighted;
  for (int i = 0; i < d; ++i) {
    Eigen::VectorXd p = (v - u) / d * e;
    p[i] += u;
    weighted.emplace_back(Projector(d, 1, p * p.transpose()), 1.0 / d);
  }
  weighted.emplace_back(
      Projector(d, d - 1,
                Eigen::MatrixXd(Eigen::MatrixXd::Identity(d, d) -
                                e * e.transpose() / d)),
      m);

  SignedMeasure measure(d);
  measure.add_mass(1, 1);
  measure.add_mass(d - 1, Rational(m));
  return {merge_coincident(d, weighted), measure};
}

FamilyDesign family_r4_1design(double m1) {
  if (m1 < -2 - 1e-12 || m1 > 2 + 1e-12)
    throw std::domain_error("family_r4_1design: m1 outside [-2, 2]");
  const int d = 4;

  std::vector<std::pair<Projector, double>> weighted;
  Eigen::VectorXd e1 = Eigen::VectorXd::Unit(d, 0);
  Eigen::VectorXd e3 = Eigen::VectorXd::Unit(d, 2);
  weighted.emplace_back(Projector(d, 1, e1 * e1.transpose()), m1 / 2);
  weighted.emplace_back(Projector(d, 1, e3 * e3.transpose()), m1 / 2);

  for (double sign : {+1.0, -1.0}) {
    Eigen::Vector2d p(std::sqrt(std::max(0.0, 2 - m1)) / 2,
                      sign * std::sqrt(std::max(0.0, 2 + m1)) / 2);
    const Eigen::Matrix2d block = p * p.transpose();
    Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(d, d);
    mat.topLeftCorner(2, 2) = block;
    mat.bottomRightCorner(2, 2) = block;
    weighted.emplace_back(Projector(d, 2, mat), 0.5);
  }

  SignedMeasure measure(d);
  measure.set_mass(1, Rational(m1));
  measure.set_mass(2, 1);
  return {merge_coincident(d, weighted), measure};
}

FamilyDesign family_r3_2design(double m2) {
  if (m2 < -3.0 / 8 - 1e-12 || m2 > 1.5 + 1e-12)
    throw std::domain_error("family_r3_2design: m2 outside [-3/8, 3/2]");
  const int d = 3;
  const double a = std::sqrt(std::max(0.0, (3 + 8 * m2) / 15));

  Eigen::Vector3d p1(std::sqrt(std::max(0.0, 1 - a)),
                     std::sqrt(std::max(0.0, 1 + a)), 0.0);
  const Eigen::VectorXd e = Eigen::VectorXd::Ones(d);

  OrbitSpec lines;
  lines.generators = {cyclic_shift(d), first_axis_reflection(d)};
  lines.seeds.emplace_back(d, 1, Eigen::MatrixXd(p1 * p1.transpose() / 2));
  OrbitSpec planes;
  planes.generators = lines.generators;
  planes.seeds.emplace_back(
      d, 2,
      Eigen::MatrixXd(Eigen::MatrixXd::Identity(d, d) - e * e.transpose() / 3));

  const std::vector<Projector> line_points = orbit(lines);
  const std::vector<Projector> plane_points = orbit(planes);
  std::vector<std::pair<Projector, double>> weighted;
  for (const Projector& p : line_points)
    weighted.emplace_back(p, 1.0 / line_points.size());
  for (const Projector& p : plane_points)
    weighted.emplace_back(p, m2 / plane_points.size());

  SignedMeasure measure(d);
  measure.set_mass(1, 1);
  measure.set_mass(2, Rational(m2));
  return {merge_coincident(d, weighted), measure};
}

FamilyDesign family_r4_2design(double m2) {
  if (m2 < 0.75 - 1e-12 || m2 > 1.5 + 1e-12)
    throw std::domain_error("family_r4_2design: m2 outside [3/4, 3/2]");
  const int d = 4;
  const double a = std::sqrt(std::max(0.0, (8 * m2 - 3) / 9));
  const double b = std::sqrt(std::max(0.0, 2 - 3 / (2 * m2)));

  Eigen::Vector4d p1(std::sqrt(std::max(0.0, 1 - a)),
                     std::sqrt(std::max(0.0, 1 + a)), 0.0, 0.0);
  OrbitSpec lines;
  lines.generators = {cyclic_shift(d), first_axis_reflection(d)};
  lines.seeds.emplace_back(d, 1, Eigen::MatrixXd(p1 * p1.transpose() / 2));

  // Plane seeds; the upper/lower signs give the two G_2 orbits.
  const double s1 = std::sqrt(std::max(0.0, 1 - b * b));
  const double s2 = std::sqrt(std::max(0.0, 2 - 3 * b + b * b));
  const double s3 = std::sqrt(std::max(0.0, 4 - b * b));
  const double s4 = std::sqrt(std::max(0.0, 2 + 3 * b + b * b));
  auto plane_seed = [&](double sg) {
    Eigen::Matrix4d m;
    m << 3 - sg * s1, s2, sg * s3, -sg * s4,
         s2, 3 + sg * s1, s4, s3,
         sg * s3, s4, 3 - sg * s1, -sg * s2,
         -sg * s4, s3, -sg * s2, 3 + sg * s1;
    return Projector(d, 2, m / 6.0);
  };

  Eigen::Matrix4d r3;
  r3 << 0, 0, 1, 0,
        0, 1, 0, 0,
       -1, 0, 0, 0,
        0, 0, 0, -1;
  OrbitSpec planes;
  planes.generators = {r3};
  planes.seeds = {plane_seed(+1.0), plane_seed(-1.0)};

  const std::vector<Projector> line_points = orbit(lines);
  const std::vector<Projector> plane_points = orbit(planes);
  std::vector<std::pair<Projector, double>> weighted;
  for (const Projector& p : line_points)
    weighted.emplace_back(p, 1.0 / line_points.size());
  for (const Projector& p : plane_points)
    weighted.emplace_back(p, m2 / plane_points.size());

  SignedMeasure measure(d);
  measure.set_mass(1, 1);
  measure.set_mass(2, Rational(m2));
  return {merge_coincident(d, weighted), measure};
}

FamilyDesign family_r5_2design() {
  const int d = 5;
  std::vector<std::pair<Projector, double>> weighted;
  for (int i = 0; i < d; ++i) {
    const Eigen::VectorXd ei = Eigen::VectorXd::Unit(d, i);
    weighted.emplace_back(Projector(d, 1, ei * ei.transpose()), 1.0 / d);
  }

  Eigen::MatrixXd g1 = Eigen::MatrixXd::Identity(d, d);
  g1(3, 3) = 0;
  g1(4, 4) = 0;
  g1(3, 4) = 1;
  g1(4, 3) = -1;
  Eigen::MatrixXd g2 = Eigen::MatrixXd::Identity(d, d);
  g2(0, 0) = 0;
  g2(1, 1) = 0;
  g2(0, 1) = -1;
  g2(1, 0) = 1;
  g2(4, 4) = -1;

  const double r3 = std::sqrt(3.0);
  const double q32 = std::sqrt(1.5);
  const double q23 = std::sqrt(2.0 / 3.0);
  const double qp = std::sqrt((9 + 5 * r3) / 6);
  const double qm = std::sqrt((9 - 5 * r3) / 6);
  const double cm = (3 - 5 * r3) / 6;
  const double cp = (3 + 5 * r3) / 6;
  Eigen::MatrixXd p6(d, d);
  p6 << 2, q32, qp, cm, q23,
        q32, 2, qm, q23, cp,
        qp, qm, 2, -qp, -qm,
        cm, q23, -qp, 2, q32,
        q23, cp, -qm, q32, 2;
  p6 /= 5.0;

  OrbitSpec planes;
  planes.generators = {g1, g2};
  planes.seeds.emplace_back(d, 2, p6);
  const std::vector<Projector> plane_points = orbit(planes);
  for (const Projector& p : plane_points)
    weighted.emplace_back(p, (5.0 / 3.0) / plane_points.size());

  SignedMeasure measure(d);
  measure.set_mass(1, 1);
  measure.set_mass(2, Rational(5, 3));
  return {merge_coincident(d, weighted), measure};
}

FamilyDesign double_design(const Configuration& config, int t, double tol) {
  const CertificationReport report = certify(config, t, tol);
  if (!report.certified())
    throw std::invalid_argument(
        "double_design: input is not a certified strength-" + std::to_string(t) +
        " cubature (gap = " + std::to_string(report.gap) + ")");

  const int d = config.dim();
  const int sign = (t % 2 == 0) ? 1 : -1;

  Configuration doubled(d);
  for (std::size_t i = 0; i < config.size(); ++i)
    doubled.add(config.point(i), config.weight(i));
  for (std::size_t i = 0; i < config.size(); ++i)
    doubled.add(complement(config.point(i)), sign * config.weight(i));

  SignedMeasure measure(d);
  for (const auto& [k, m] : config.induced_masses()) {
    measure.add_mass(k, Rational(m));
    measure.add_mass(d - k, sign * Rational(m));
  }
  return {std::move(doubled), std::move(measure)};
}

std::vector<Table1Row> table1_rows() {
  std::vector<Table1Row> rows;
  rows.push_back({1, 4, 2, 1, Rational(2), Rational(1), "r4-1design(m1=2)",
                  [] { return family_r4_1design(2.0); }});
  rows.push_back({2, 3, 3, 4, Rational(1), Rational(3, 2), "r3-2design(m2=3/2)",
                  [] { return family_r3_2design(1.5); }});
  rows.push_back({2, 4, 4, 8, Rational(1), Rational(3, 2), "r4-2design(m2=3/2)",
                  [] { return family_r4_2design(1.5); }});
  rows.push_back({2, 5, 5, 16, Rational(1), Rational(5, 3), "r5-2design",
                  [] { return family_r5_2design(); }});
  rows.push_back({3, 3, 6, 6, Rational(1), Rational(1),
                  "double(r3-2design(m2=0) lines)", [] {
                    const FamilyDesign base = family_r3_2design(0.0);
                    const Configuration lines =
                        extract_marginal(base.configuration, 1);
                    return double_design(lines, 2);
                  }});
  return rows;
}

FamilyDesign build_family(const std::string& name, double param, int d) {
  if (name == "lines-hyperplane") {
    if (d < 2)
      throw std::domain_error("family lines-hyperplane requires --d >= 2");
    return family_lines_hyperplane(d, param);
  }
  if (name == "r4-1design") return family_r4_1design(param);
  if (name == "r3-2design") return family_r3_2design(param);
  if (name == "r4-2design") return family_r4_2design(param);
  if (name == "r5-2design") return family_r5_2design();
  throw std::domain_error("unknown family '" + name + "'");
}

}  // namespace grassdesign
