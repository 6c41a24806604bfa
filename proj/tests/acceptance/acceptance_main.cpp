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

/**
 * @file  acceptance_main.cpp
 * @brief Acceptance criteria 1..11, one PASS/FAIL line each.
 *
 * Exit status is the number of failed criteria (0 when all pass).
 * Reference values come from the oracles in oracles.hpp: Jacobi
 * eigenvalues of the encoded matrix, Leibniz determinants, literal
 * epsilon sums.
 */

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "oracles.hpp"

using namespace cliffbloch;
using namespace cliffbloch::testing;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b + b * a; }

/// tr(A B) without forming the product.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) s += a(i, j) * b(j, i);
  return s;
}

std::vector<double> oracle_eigenvalues(const StateCoords& c) {
  return hermitian_eigenvalues(encode(c, full_basis(c.m, c.mode, Verification::none)).matrix());
}

StateCoords with_grade(int m, const AntisymTensor& g) {
  StateCoords c = StateCoords::zero(m);
  c.grade(g.grade()) = g;
  return c;
}

double min_scaled(const StateCoords& c) {
  return oracle_eigenvalues(c).front() * static_cast<double>(std::size_t{1} << c.m);
}

// 1. Exact anticommutation and chirality for m = 1..5 in under 10 s.
Outcome criterion1() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int m = 1; m <= 5; ++m) {
    const auto g = generate_gammas(m);
    const ComplexMatrix id = ComplexMatrix::identity(g.front().dim());
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) {
        ComplexMatrix expected = i == j ? id * Complex(2.0) : ComplexMatrix(id.dim());
        worst = std::max(worst, (anticommutator(g[i], g[j]) - expected).max_abs());
      }
    const ComplexMatrix chi = chirality(m);
    for (const auto& gi : g) worst = std::max(worst, anticommutator(gi, chi).max_abs());
    worst = std::max(worst, (chi * chi - id).max_abs());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst == 0.0 && secs < 10.0, "max residual " + fmt(worst) + ", " + fmt(secs) + " s"};
}

// 2. tr(E_A E_B) = 2^m delta_AB.
Outcome criterion2() {
  double worst = 0.0;
  std::size_t pairs = 0;
  for (int m = 1; m <= 4; ++m) {
    const CliffordBasis b = full_basis(m, BasisMode::standard, Verification::none);
    std::vector<const ComplexMatrix*> all;
    for (int k = 0; k <= b.max_grade(); ++k)
      for (const auto& e : b.grade_elements(k)) all.push_back(&e);
    const double d = static_cast<double>(b.dim());
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j) {
        const Complex t = trace_product(*all[i], *all[j]);
        worst = std::max(worst, std::abs(t - Complex(i == j ? d : 0.0)));
        ++pairs;
      }
  }
  const CliffordBasis b5 = full_basis(5, BasisMode::standard, Verification::none);
  std::vector<const ComplexMatrix*> all;
  for (int k = 0; k <= b5.max_grade(); ++k)
    for (const auto& e : b5.grade_elements(k)) all.push_back(&e);
  Rng rng(2);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int s = 0; s < 200; ++s) {
    const std::size_t i = pick(rng);
    const std::size_t j = s % 4 == 0 ? i : pick(rng);
    const Complex t = trace_product(*all[i], *all[j]);
    worst = std::max(worst, std::abs(t - Complex(i == j ? 32.0 : 0.0)));
    ++pairs;
  }
  return {worst < 1e-10, std::to_string(pairs) + " pairs, max residual " + fmt(worst)};
}

// 3. encode(decode(rho)) = rho.
Outcome criterion3() {
  Rng rng(3);
  double worst = 0.0;
  for (int m = 1; m <= 3; ++m) {
    const CliffordBasis b = full_basis(m);
    for (int t = 0; t < 100; ++t) {
      const ComplexMatrix rho = random_unit_trace_hermitian(rng, b.dim());
      worst = std::max(worst, (encode(decode(DensityMatrix(m, rho), b), b).matrix() - rho).max_abs());
    }
  }
  return {worst < 1e-10, "300 matrices, max residual " + fmt(worst)};
}

// 4. Vector spectra vs oracle, two clusters of 2^{m-1}.
Outcome criterion4() {
  Rng rng(4);
  double worst = 0.0;
  bool pattern = true;
  for (int t = 0; t < 200; ++t) {
    const int m = 1 + t % 4;
    const AntisymTensor g = random_tensor(rng, 2 * m, 1, 0.5);
    const auto oracle = oracle_eigenvalues(with_grade(m, g));
    worst = std::max(worst, max_abs_diff(vector_spectrum(m, g).eigenvalues, oracle));
    const auto clusters = degeneracy_pattern(oracle);
    const int half = 1 << (m - 1);
    pattern = pattern && clusters.size() == 2 && clusters[0].multiplicity == half && clusters[1].multiplicity == half;
  }
  return {worst < 1e-9 && pattern,
          "200 configs, max |dlambda| " + fmt(worst) + (pattern ? ", 2 x 2^(m-1)" : ", wrong degeneracy")};
}

// 5. Two-tensor spectra at m = 2, 3, 4.
Outcome criterion5() {
  Rng rng(5);
  double m2 = 0.0;
  for (int t = 0; t < 200; ++t) {
    const AntisymTensor g = random_tensor(rng, 4, 2);
    m2 = std::max(m2, max_abs_diff(two_tensor_spectrum(2, g).eigenvalues, oracle_eigenvalues(with_grade(2, g))));
  }

  double m3 = 0.0;
  double min_d3 = INFINITY;
  for (int t = 0; t < 100; ++t) {
    const AntisymTensor g = random_tensor(rng, 6, 2, 0.5);
    const InvariantSet inv = two_tensor_invariants(g);
    min_d3 = std::min(min_d3, std::abs(*inv.D3));
    std::vector<double> roots;
    for (const int sign : {+1, -1})
      for (double v : quartet_roots(3, inv, sign)) roots.push_back(v);
    std::sort(roots.begin(), roots.end());
    const auto oracle = oracle_eigenvalues(with_grade(3, g));
    m3 = std::max(m3, max_abs_diff(roots, oracle));
    m3 = std::max(m3, max_abs_diff(two_tensor_spectrum(3, g).eigenvalues, oracle));
  }

  // D3 = 0: a rank-4 tensor at m = 3 against the m = 2 pattern at 1/8.
  double flat = 0.0;
  for (int t = 0; t < 50; ++t) {
    AntisymTensor h(4, 2);
    for (double& v : h.values()) v = uniform(rng);
    AntisymTensor g(6, 2);
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) g.set({i, j}, h.get({i, j}));
    g = rotate_tensor(g, OrthogonalMatrix(random_rotation_qr(rng, 6)));
    std::vector<double> expected;
    for (double v : two_tensor_spectrum(2, h).eigenvalues) {
      expected.push_back(v / 2.0);
      expected.push_back(v / 2.0);
    }
    std::sort(expected.begin(), expected.end());
    flat = std::max(flat, std::abs(epsilon_D3(g)));
    flat = std::max(flat, max_abs_diff(two_tensor_spectrum(3, g).eigenvalues, expected));
    flat = std::max(flat, max_abs_diff(oracle_eigenvalues(with_grade(3, g)), expected));
  }

  // m = 4: factorized polynomial against char_poly of the encoded matrix.
  double rel = 0.0;
  for (int t = 0; t < 50; ++t) {
    const AntisymTensor g = random_rank6_tensor(rng, 4, 0.4);
    const RealPolynomial fac = factorized_charpoly(4, ConfigKind::two_tensor, two_tensor_invariants(g));
    const RealPolynomial ref = char_poly(encode(with_grade(4, g), full_basis(4, BasisMode::standard,
                                                                              Verification::none)).matrix());
    double scale = 0.0;
    double diff = 0.0;
    for (int i = 0; i <= 16; ++i) {
      scale = std::max(scale, std::abs(ref.coeff(i)));
      diff = std::max(diff, std::abs(fac.coeff(i) - ref.coeff(i)));
    }
    rel = std::max(rel, diff / scale);
  }

  const bool pass = m2 < 1e-9 && m3 < 1e-9 && min_d3 > 0.0 && flat < 1e-9 && rel < 1e-8;
  return {pass, "m=2 " + fmt(m2) + ", m=3 " + fmt(m3) + " (min |D3| " + fmt(min_d3) + "), D3=0 " + fmt(flat) +
                    ", m=4 relative " + fmt(rel)};
}

// 6. Invariant identities.
Outcome criterion6() {
  Rng rng(6);
  double det = 0.0;
  double dual = 0.0;
  double eps = 0.0;
  for (int t = 0; t < 100; ++t) {
    const AntisymTensor g2 = random_tensor(rng, 4, 2);
    const double r = frobenius_r(g2);
    det = std::max(det, std::abs(2 * r * r - trace_T4(g2) - 4.0 * leibniz_det(g2.to_matrix())));

    const AntisymTensor g3 = random_tensor(rng, 6, 2);
    const auto [lhs, rhs] = dual_identity(g3, 3);
    const double r3 = frobenius_r(g3);
    dual = std::max(dual, std::abs(lhs - rhs));
    dual = std::max(dual, std::abs(2 * r3 * r3 - trace_T4(g3) - rhs));
    eps = std::max(eps, std::abs(epsilon_D3_bruteforce(g3) - 48.0 * pfaffian(g3.to_matrix())));
    eps = std::max(eps, std::abs(epsilon_full_contraction(g3.to_matrix()) - 48.0 * pfaffian(g3.to_matrix())));
  }
  AntisymTensor block(6, 2);
  block.set({1, 2}, 1.0);
  block.set({3, 4}, 1.0);
  block.set({5, 6}, 1.0);
  const bool exact = epsilon_D3(block) == 48.0 && epsilon_D3_bruteforce(block) == 48.0;
  return {det < 1e-10 && dual < 1e-10 && eps < 1e-10 && exact,
          "det " + fmt(det) + ", dual " + fmt(dual) + ", eps " + fmt(eps) + (exact ? ", D3(1,1,1) = 48" : ", D3(1,1,1) != 48")};
}

// 7. encode o rotate = conjugate o encode.
Outcome criterion7() {
  Rng rng(7);
  double worst = 0.0;
  for (int m = 2; m <= 3; ++m) {
    const CliffordBasis b = full_basis(m);
    for (int t = 0; t < 50; ++t) {
      const StateCoords c = decode(DensityMatrix(m, random_density(rng, b.dim(), b.dim())), b);
      const RotationGenerator gen = random_generator(rng, m);
      const DensityMatrix lhs = encode(rotate_coords(c, orthogonal_from_generator(gen)), b);
      const DensityMatrix rhs = conjugate_state(encode(c, b), spin_lift(gen, b));
      worst = std::max(worst, (lhs.matrix() - rhs.matrix()).max_abs());
    }
  }
  return {worst < 1e-9, "100 rotations, max residual " + fmt(worst)};
}

// 8. (r, T4) verdict vs oracle on 2000 m = 2 tensors.
Outcome criterion8() {
  Rng rng(8);
  std::size_t disagree = 0;
  std::size_t near = 0;
  for (int t = 0; t < 2000; ++t) {
    const AntisymTensor g = random_tensor(rng, 4, 2);
    const double min = min_scaled(with_grade(2, g));
    if (std::abs(min) <= 1e-8) {
      ++near;
      continue;
    }
    if (rT4_domain(frobenius_r(g), trace_T4(g)).admissible != (min > 0.0)) ++disagree;
  }
  const DomainVerdict corner = rT4_domain(1.0, 2.0);
  const bool corner_ok = corner.admissible && corner.boundary;
  return {disagree == 0 && corner_ok, std::to_string(disagree) + " disagreements (" + std::to_string(near) +
                                          " within 1e-8), (1,2) " + (corner_ok ? "admissible-boundary" : "misclassified")};
}

// 9. Tunnel grid and fig3 points.
Outcome criterion9() {
  std::size_t disagree = 0;
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; j <= 20; ++j)
      for (int k = 0; k <= 20; ++k) {
        const double x = -1.0 + 0.1 * i;
        const double y = -1.0 + 0.1 * j;
        const double z = -1.0 + 0.1 * k;
        const bool oracle = min_scaled(with_grade(2, tunnel_tensor(x, y, z))) >= -kDomainTol;
        if (tunnel_membership(x, y, z).admissible != oracle) ++disagree;
      }
  std::size_t bad = 0;
  const SurfaceData d = fig3_data(101);
  for (const auto& p : d.points)
    if (min_scaled(with_grade(2, tunnel_tensor(p.x, p.y, p.z))) < -kDomainTol) ++bad;
  return {disagree == 0 && bad == 0 && !d.points.empty(),
          std::to_string(disagree) + " grid disagreements, " + std::to_string(bad) + " of " +
              std::to_string(d.points.size()) + " fig3 points not positive"};
}

// 10. Descartes route vs oracle on m = 3 hermitian matrices.
Outcome criterion10() {
  Rng rng(10);
  const CliffordBasis b = full_basis(3);
  std::size_t disagree = 0;
  std::size_t admissible = 0;
  std::size_t routed = 0;
  for (int t = 0; t < 500; ++t) {
    // Blends of I/8 and a random hermitian matrix land on both sides.
    const ComplexMatrix herm = random_unit_trace_hermitian(rng, 8);
    const double s = uniform(rng, 0.0, 0.4);
    const ComplexMatrix rho = hermitian_part(ComplexMatrix::identity(8) * Complex((1.0 - s) / 8.0) + herm * Complex(s));
    const StateCoords c = decode(DensityMatrix(3, rho), b);
    const DomainVerdict v = validate_state(c, b, 1e-9);
    routed += v.method == "descartes" ? 1 : 0;
    const bool oracle = hermitian_eigenvalues(rho).front() * 8.0 >= -1e-9;
    admissible += oracle ? 1 : 0;
    if (v.admissible != oracle) ++disagree;
  }
  return {disagree == 0 && routed == 500, std::to_string(disagree) + " disagreements, " + std::to_string(admissible) +
                                              " admissible, " + std::to_string(routed) + " via descartes"};
}

// 11. fig1 rows against the inequality; curves meet at (1, 2).
Outcome criterion11() {
  const Fig1Data d = fig1_data(101);
  std::size_t bad = 0;
  for (const auto& row : d.rows) {
    const double lower = std::max((row.r + 1.0) * (row.r + 1.0) - 2.0, 0.0);
    const double upper = 2.0 * row.r * row.r;
    const bool expected = row.T4 >= lower - kDomainTol && row.T4 <= upper + kDomainTol;
    if (row.admissible != expected) ++bad;
  }
  const bool meet = std::abs(d.intersection.r - 1.0) < 1e-12 && std::abs(d.intersection.T4 - 2.0) < 1e-12 &&
                    std::abs(d.upper_curve.back().T4 - 2.0) < 1e-12 && std::abs(d.lower_curve.back().T4 - 2.0) < 1e-12;
  return {bad == 0 && d.rows.size() == 10201 && meet,
          std::to_string(d.rows.size()) + " rows, " + std::to_string(bad) + " mismatches, curves meet at (" +
              fmt(d.intersection.r) + ", " + fmt(d.intersection.T4) + ")"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"algebra generation", criterion1},     {"basis orthogonality", criterion2},
      {"codec round trip", criterion3},       {"vector spectra", criterion4},
      {"two-tensor spectra", criterion5},     {"invariant identities", criterion6},
      {"rotation compatibility", criterion7}, {"(r, T4) domain", criterion8},
      {"tunnel geometry", criterion9},        {"Descartes route", criterion10},
      {"fig1 dataset", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    std::printf("%s criterion %zu: %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed;
}
