// Copyright 2026 The cliffbloch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include <numbers>

#include "oracles.hpp"

using namespace cliffbloch;
using namespace cliffbloch::testing;
using Catch::Matchers::WithinAbs;

namespace {

/// Smallest eigenvalue times 2^m of the encoded configuration.
double oracle_min(const StateCoords& c) {
  const CliffordBasis b = full_basis(c.m, c.mode, Verification::none);
  return hermitian_eigenvalues(encode(c, b).matrix()).front() * static_cast<double>(b.dim());
}

StateCoords with_grade(int m, const AntisymTensor& g) {
  StateCoords c = StateCoords::zero(m);
  c.grade(g.grade()) = g;
  return c;
}

/// Smallest distance of (r, T4) to a face of the (r, T4) region.
double rt4_face_distance(double r, double t4) {
  const double lower = std::max((r + 1.0) * (r + 1.0) - 2.0, 0.0);
  return std::min({std::abs(2.0 * r * r - t4), std::abs(t4 - lower), std::abs(1.0 - r)});
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("vector_domain fixtures", "[domains]") {
  const DomainVerdict zero = vector_domain(AntisymTensor(4, 1));
  CHECK(zero.admissible);
  CHECK_FALSE(zero.boundary);

  const AntisymTensor g = AntisymTensor::vector(std::vector<double>{0.6, 0.0, 0.0, 0.0});
  const DomainVerdict pure = vector_domain(g, 0.8);
  CHECK(pure.admissible);
  CHECK(pure.boundary);

  const AntisymTensor big = AntisymTensor::vector(std::vector<double>{1.1, 0.0, 0.0, 0.0});
  const DomainVerdict out = vector_domain(big);
  CHECK_FALSE(out.admissible);
  REQUIRE(out.violated);
  CHECK(*out.violated == "bloch_ball");
  CHECK(oracle_min(with_grade(2, big)) < 0.0);
}

TEST_CASE("vector verdict depends only on the norm", "[domains][property]") {
  Rng rng(91);
  for (int trial = 0; trial < 100; ++trial) {
    const AntisymTensor g = random_tensor(rng, 4, 1, 0.8);
    const OrthogonalMatrix l = orthogonal_from_generator(random_generator(rng, 2));
    const AntisymTensor h = rotate_tensor(g, l);
    const DomainVerdict a = vector_domain(g);
    const DomainVerdict b = vector_domain(h);
    CHECK(a.admissible == b.admissible);
    CHECK(a.admissible == (oracle_min(with_grade(2, g)) >= -1e-9));
  }
}

TEST_CASE("rT4_domain fixtures", "[domains]") {
  const DomainVerdict corner = rT4_domain(1.0, 2.0);
  CHECK(corner.admissible);
  CHECK(corner.boundary);
  CHECK(contains(corner.active, "T4_upper"));
  CHECK(contains(corner.active, "T4_lower"));

  const DomainVerdict inside = rT4_domain(0.5, 0.4);
  CHECK(inside.admissible);
  CHECK_FALSE(inside.boundary);
  CHECK_FALSE(inside.violated);

  const DomainVerdict above = rT4_domain(0.5, 0.6);
  CHECK_FALSE(above.admissible);
  REQUIRE(above.violated);
  CHECK(*above.violated == "T4_upper");
}

TEST_CASE("rT4 verdict equals oracle positivity at m = 2", "[domains][property]") {
  Rng rng(92);
  std::size_t checked = 0;
  std::size_t admissible = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    AntisymTensor g = random_tensor(rng, 4, 2, 1.0);
    // Every fourth tensor is pulled next to the boundary along its ray.
    if (trial % 4 == 0) {
      const auto a = canonical_values(g);
      g *= (1.0 + uniform(rng, -1e-6, 1e-6)) / (a[0] + a[1]);
    }
    const double min = oracle_min(with_grade(2, g));
    const double r = frobenius_r(g);
    const double t4 = trace_T4(g);
    const DomainVerdict v = rT4_domain(r, t4);
    // Near (1, 2) the (r, T4) slack is quadratic in the eigenvalue margin, so
    // closeness is judged in both metrics.
    if (std::abs(min) > 1e-8 && rt4_face_distance(r, t4) > 1e-8) {
      ++checked;
      CHECK(v.admissible == (min >= -1e-9));
    }
    admissible += v.admissible ? 1 : 0;
  }
  CHECK(checked > 1500);
  CHECK(admissible > 100);
}

TEST_CASE("z variables", "[domains]") {
  AntisymTensor g(4, 2);
  g.set({1, 2}, 0.6);
  g.set({3, 4}, 0.3);
  CHECK_THAT(z_from_coords(g, 2), WithinAbs(0.14, 1e-15));
  CHECK_THAT(z_variable(frobenius_r(g), trace_T4(g)), WithinAbs(0.14, 1e-15));
  CHECK(z_from_coords(AntisymTensor(4, 2), 2) == 0.5);
  CHECK(z_variable(0.0, 0.0) == 0.5);
  CHECK_THROWS_AS(z_variable(0.5, 0.6), Error);

  Rng rng(93);
  for (int m : {2, 3}) {
    for (int trial = 0; trial < 50; ++trial) {
      const AntisymTensor h = random_tensor(rng, 2 * m, 2, 0.5);
      CHECK_THAT(z_from_coords(h, m), WithinAbs(z_variable(frobenius_r(h), trace_T4(h)), 1e-10));
    }
  }
}

TEST_CASE("rz display agrees with the (r, T4) region where z >= 0", "[domains]") {
  const RzCrosscheck x = rz_crosscheck(101);
  CHECK(x.points == x.agree + x.disagree_z_nonnegative + x.disagree_z_negative);
  CHECK(x.disagree_realizable_z_nonnegative == 0);
  // The literal negative-z branch admits states the (r, T4) region rejects.
  CHECK(x.disagree_z_negative > 0);
  const DomainVerdict v = rz_domain(0.5, -0.25);
  CHECK(v.admissible);
  CHECK_FALSE(rT4_domain(0.5, 2 * 0.25 - 0.75 * 0.75).admissible);
}

TEST_CASE("tunnel_membership fixtures", "[domains]") {
  const DomainVerdict origin = tunnel_membership(0, 0, 0);
  CHECK(origin.admissible);
  CHECK_FALSE(origin.boundary);
  const DomainVerdict edge = tunnel_membership(0.5, 0.5, 0);
  CHECK(edge.admissible);
  CHECK(edge.boundary);
  CHECK(contains(edge.active, "tunnel_plus"));
  const DomainVerdict out = tunnel_membership(1, 1, 0);
  CHECK_FALSE(out.admissible);
  REQUIRE(out.violated);
  CHECK(*out.violated == "tunnel_plus");
  CHECK(tunnel_membership(-0.3, 0.2, -0.4).admissible);
  CHECK_FALSE(tunnel_membership(-0.3, 0.2, -0.4, true).admissible);
}

TEST_CASE("tunnel grid equals oracle positivity and the (r, T4) region", "[domains][property]") {
  const double tol = 1e-10;
  std::size_t disagreements = 0;
  std::size_t rt4_mismatch = 0;
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; j <= 20; ++j)
      for (int k = 0; k <= 20; ++k) {
        const double x = -1.0 + 0.1 * i;
        const double y = -1.0 + 0.1 * j;
        const double z = -1.0 + 0.1 * k;
        const AntisymTensor g = tunnel_tensor(x, y, z);
        const bool verdict = tunnel_membership(x, y, z, false, tol).admissible;
        if (verdict != (oracle_min(with_grade(2, g)) >= -tol)) ++disagreements;
        if (verdict != rT4_domain(frobenius_r(g), trace_T4(g), tol).admissible) ++rt4_mismatch;
      }
  CHECK(disagreements == 0);
  CHECK(rt4_mismatch == 0);
}

TEST_CASE("descartes_positivity fixtures", "[domains]") {
  CHECK(descartes_positivity(char_poly(ComplexMatrix::identity(4) * Complex(0.25))).admissible);
  ComplexMatrix d(4);
  d(0, 0) = 1.1;
  d(1, 1) = -0.1;
  const DomainVerdict v = descartes_positivity(char_poly(d));
  CHECK_FALSE(v.admissible);
  CHECK(v.violated);
  ComplexMatrix p(4);
  p(0, 0) = 1.0;
  const DomainVerdict pure = descartes_positivity(char_poly(p));
  CHECK(pure.admissible);
  CHECK(pure.boundary);
}

TEST_CASE("Descartes verdict equals oracle positivity at m = 3", "[domains][property]") {
  Rng rng(94);
  std::size_t admissible = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const ComplexMatrix herm = random_unit_trace_hermitian(rng, 8);
    const double t = uniform(rng, 0.0, 0.4);
    const ComplexMatrix rho = hermitian_part(ComplexMatrix::identity(8) * Complex((1.0 - t) / 8.0) + herm * Complex(t));
    const DensityMatrix state(3, rho);
    const bool oracle = hermitian_eigenvalues(rho).front() >= -1e-9;
    const DomainVerdict v = descartes_positivity(char_poly(rho));
    CHECK(v.admissible == oracle);
    admissible += oracle ? 1 : 0;
  }
  CHECK(admissible > 50);
  CHECK(admissible < 450);
}

TEST_CASE("validate_state routes", "[domains]") {
  const CliffordBasis b2 = full_basis(2);
  CHECK(validate_state(StateCoords::zero(2), b2).method == "vector_domain");

  StateCoords t = StateCoords::zero(2);
  t.grade(2).set({1, 2}, 0.6);
  t.grade(2).set({3, 4}, 0.3);
  const DomainVerdict vt = validate_state(t, b2);
  CHECK(vt.method == "rT4_domain");
  CHECK(vt.admissible);
  CHECK_THAT(vt.invariants_used.T4, WithinAbs(0.2754, 1e-15));

  const CliffordBasis b3 = full_basis(3);
  StateCoords t3 = StateCoords::zero(3);
  const double s = 1.0 / std::sqrt(3.0);
  t3.grade(2).set({1, 2}, s);
  t3.grade(2).set({3, 4}, s);
  t3.grade(2).set({5, 6}, s);
  const DomainVerdict v3 = validate_state(t3, b3);
  CHECK(v3.method == "quartet_min_eigenvalue");
  CHECK(v3.admissible == (oracle_min(t3) >= -1e-9));

  StateCoords g = StateCoords::zero(3);
  g.grade(3).set({1, 2, 3}, 0.5);
  g.grade(1).set({4}, 0.3);
  const DomainVerdict vg = validate_state(g, b3);
  CHECK(vg.method == "descartes");
  CHECK(vg.admissible == (oracle_min(g) >= -1e-9));

  StateCoords bad = StateCoords::zero(2);
  bad.scalar = 1.5;
  CHECK_THROWS_AS(validate_state(bad, b2), Error);
}

TEST_CASE("validate_state equals oracle positivity on mixed-grade states", "[domains][property]") {
  Rng rng(95);
  for (int m = 2; m <= 3; ++m) {
    const CliffordBasis b = full_basis(m);
    for (int trial = 0; trial < 100; ++trial) {
      StateCoords c = StateCoords::zero(m);
      for (auto& g : c.grades)
        for (double& v : g.values()) v = uniform(rng, -0.35, 0.35);
      const double min = oracle_min(c);
      if (std::abs(min) > 1e-8) CHECK(validate_state(c, b).admissible == (min >= 0.0));
    }
  }
}

TEST_CASE("quartet_domain at m = 4 with rank 6", "[domains]") {
  Rng rng(96);
  for (int trial = 0; trial < 20; ++trial) {
    const AntisymTensor g = random_rank6_tensor(rng, 4, 0.6);
    const StateCoords c = with_grade(4, g);
    const DomainVerdict v = validate_state(c, full_basis(4, BasisMode::standard, Verification::none));
    CHECK(v.method == "quartet_min_eigenvalue");
    const double min = oracle_min(c);
    if (std::abs(min) > 1e-8) CHECK(v.admissible == (min >= 0.0));
  }
}

TEST_CASE("sample_domain", "[domains]") {
  CHECK(sample_domain(2, 1, 0, 7).empty());
  CHECK_THROWS_AS(sample_domain(2, 3, 10, 7), Error);
  CHECK_THROWS_AS(sample_domain(6, 1, 10, 7), Error);

  const auto vec = sample_domain(2, 1, 1000, 7);
  REQUIRE(vec.size() == 1000);
  std::size_t inside = 0;
  for (const auto& s : vec) {
    inside += s.verdict.admissible ? 1 : 0;
    if (std::abs(s.oracle_min_eigenvalue) > 1e-8) CHECK(s.agree);
  }
  // Volume of the unit 4-ball over the volume of [-1.2, 1.2]^4.
  const double p = std::numbers::pi * std::numbers::pi / 2.0 / std::pow(2.4, 4);
  const double sigma = std::sqrt(p * (1.0 - p) / 1000.0);
  CHECK(std::abs(static_cast<double>(inside) / 1000.0 - p) < 3.0 * sigma);

  const auto ten = sample_domain(2, 2, 1000, 11);
  for (const auto& s : ten)
    if (std::abs(s.oracle_min_eigenvalue) > 1e-8) CHECK(s.agree);

  SampleOptions small;
  small.box = 0.4;
  const auto three = sample_domain(3, 2, 200, 5, small);
  std::size_t admitted = 0;
  for (const auto& s : three) {
    if (std::abs(s.oracle_min_eigenvalue) > 1e-8) CHECK(s.agree);
    admitted += s.verdict.admissible ? 1 : 0;
  }
  CHECK(admitted > 0);
}

TEST_CASE("sample_domain is deterministic", "[domains]") {
  const auto a = sample_domain(2, 2, 200, 42);
  const auto b = sample_domain(2, 2, 200, 42);
  const auto c = sample_domain(2, 2, 200, 43);
  REQUIRE(a.size() == b.size());
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].coefficients == b[i].coefficients);
    CHECK(a[i].verdict.admissible == b[i].verdict.admissible);
    CHECK(a[i].oracle_min_eigenvalue == b[i].oracle_min_eigenvalue);
    differs = differs || !(a[i].coefficients == c[i].coefficients);
  }
  CHECK(differs);
  // Sample i does not depend on how many were drawn.
  const auto prefix = sample_domain(2, 2, 50, 42);
  for (std::size_t i = 0; i < prefix.size(); ++i) CHECK(prefix[i].coefficients == a[i].coefficients);
}
