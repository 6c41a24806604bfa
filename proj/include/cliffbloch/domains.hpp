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

#pragma once

/**
 * @file domains.hpp
 * @brief Admissibility (positivity) regions in coordinate space.
 *
 * Each verdict checks a fixed list of named constraints in order and
 * reports the first violated one. A constraint is "active" when the
 * configuration sits within tol of its face.
 */

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cliffbloch/antisym_tensor.hpp"
#include "cliffbloch/clifford_basis.hpp"
#include "cliffbloch/error.hpp"
#include "cliffbloch/invariants.hpp"
#include "cliffbloch/linalg.hpp"
#include "cliffbloch/spectra.hpp"
#include "cliffbloch/state_coords.hpp"

namespace cliffbloch {

inline constexpr double kDomainTol = 1e-9;

struct DomainVerdict {
  bool admissible = true;
  bool boundary = false;
  std::optional<std::string> violated;
  std::vector<std::string> active;  // constraints within tol of their face
  InvariantSet invariants_used;
  double tol = kDomainTol;
  std::string method;
};

namespace detail {

/// Accumulates "value <= bound" style constraints, written as slack >= 0.
class ConstraintCheck {
 public:
  ConstraintCheck(std::string method, double tol) {
    verdict_.method = std::move(method);
    verdict_.tol = tol;
  }

  void require(const std::string& name, double slack) {
    if (slack < -verdict_.tol) {
      if (!verdict_.violated) verdict_.violated = name;
      verdict_.admissible = false;
    } else if (slack <= verdict_.tol) {
      verdict_.active.push_back(name);
    }
  }

  DomainVerdict finish(InvariantSet inv) {
    verdict_.invariants_used = std::move(inv);
    verdict_.boundary = verdict_.admissible && !verdict_.active.empty();
    return std::move(verdict_);
  }

 private:
  DomainVerdict verdict_;
};

}  // namespace detail

/// Bloch ball: |G| <= 1, with the pseudoscalar counted as one more axis.
inline DomainVerdict vector_domain(const AntisymTensor& g, std::optional<double> pseudoscalar = {},
                                   double tol = kDomainTol) {
  InvariantSet inv = vector_invariants(g, pseudoscalar);
  detail::ConstraintCheck check("vector_domain", tol);
  check.require("bloch_ball", 1.0 - std::sqrt(inv.r));
  return check.finish(std::move(inv));
}

/// max((r + 1)^2 - 2, 0) <= T4 <= 2 r^2,  0 <= r <= 1.
inline DomainVerdict rT4_domain(double r, double t4, double tol = kDomainTol) {
  InvariantSet inv;
  inv.r = r;
  inv.T4 = t4;
  detail::ConstraintCheck check("rT4_domain", tol);
  check.require("r_nonnegative", r);
  check.require("r_upper", 1.0 - r);
  check.require("T4_upper", 2.0 * r * r - t4);
  check.require("T4_lower", t4 - std::max((r + 1.0) * (r + 1.0) - 2.0, 0.0));
  return check.finish(std::move(inv));
}

inline constexpr double kDiscriminantClamp = 1e-12;

/// z = 1/2 - sqrt(2 r^2 - T4).
inline double z_variable(double r, double t4) {
  const double disc = 2.0 * r * r - t4;
  if (disc < -kDiscriminantClamp) {
    throw Error(ErrorKind::NegativeDiscriminant, "2 r^2 - T4 = " + std::to_string(disc));
  }
  return 0.5 - std::sqrt(std::max(disc, 0.0));
}

/// z from the tensor components directly:
///   m = 2: 1/2 - 2 |G12 G34 + G13 G42 + G14 G23|
///   m = 3: 1/2 - 2 sqrt(sum over the 15 index quadruples of Pf^2)
inline double z_from_coords(const AntisymTensor& g, int m) {
  detail::require_grade(g, 2, "z_from_coords");
  if (m != 2 && m != 3) {
    throw Error(ErrorKind::UnsupportedM, "z_from_coords is defined for m = 2, 3; got " + std::to_string(m));
  }
  detail::require_side(g, 2 * m, "z_from_coords");
  if (m == 2) {
    const double pf = g.get({1, 2}) * g.get({3, 4}) + g.get({1, 3}) * g.get({4, 2}) +
                      g.get({1, 4}) * g.get({2, 3});
    return 0.5 - 2.0 * std::abs(pf);
  }
  return 0.5 - 2.0 * std::sqrt(pfaffian_minor_sum(g, 4));
}

/// The (r, z) region as displayed:
///   1/2 - z <= r <= 1/2 + z  for  0 <= z <= 1/2
///   1/2 + z <= r <= 1/2 - z  for -1/2 <= z <= 0
inline DomainVerdict rz_domain(double r, double z, double tol = kDomainTol) {
  InvariantSet inv;
  inv.r = r;
  inv.extras["z"] = z;
  detail::ConstraintCheck check("rz_domain", tol);
  check.require("z_range", 0.5 - std::abs(z));
  check.require("r_lower", r - (0.5 - std::abs(z)));
  check.require("r_upper", (0.5 + std::abs(z)) - r);
  return check.finish(std::move(inv));
}

/// Grid comparison of rz_domain against rT4_domain over (r, T4) in
/// [0, 1] x [0, 2], restricted to points with T4 <= 2 r^2 where z exists.
struct RzCrosscheck {
  std::size_t points = 0;
  std::size_t agree = 0;
  std::size_t disagree_z_nonnegative = 0;
  std::size_t disagree_z_negative = 0;
  std::size_t disagree_realizable = 0;  // among points with r^2 <= T4 (reachable at m = 2)
  std::size_t disagree_realizable_z_nonnegative = 0;
};

inline RzCrosscheck rz_crosscheck(int resolution, double tol = kDomainTol) {
  if (resolution < 2) throw Error(ErrorKind::BadResolution, "resolution must be >= 2");
  RzCrosscheck out;
  for (int i = 0; i < resolution; ++i) {
    const double r = static_cast<double>(i) / (resolution - 1);
    for (int j = 0; j < resolution; ++j) {
      const double t4 = 2.0 * static_cast<double>(j) / (resolution - 1);
      if (t4 > 2.0 * r * r) continue;
      const double z = z_variable(r, t4);
      const bool a = rT4_domain(r, t4, tol).admissible;
      const bool b = rz_domain(r, z, tol).admissible;
      ++out.points;
      if (a == b) {
        ++out.agree;
        continue;
      }
      if (z >= 0.0) {
        ++out.disagree_z_nonnegative;
      } else {
        ++out.disagree_z_negative;
      }
      if (t4 >= r * r) {
        ++out.disagree_realizable;
        if (z >= 0.0) ++out.disagree_realizable_z_nonnegative;
      }
    }
  }
  return out;
}

/// Intersection of the two tunnels alpha_+ <= 1, alpha_- <= 1; with
/// paper_cube additionally 0 <= x, y, z <= 1.
inline DomainVerdict tunnel_membership(double x, double y, double z, bool paper_cube = false,
                                       double tol = kDomainTol) {
  const TunnelAlphas a = tunnel_alphas(x, y, z);
  InvariantSet inv = two_tensor_invariants(tunnel_tensor(x, y, z));
  inv.extras["alpha_plus"] = a.plus;
  inv.extras["alpha_minus"] = a.minus;
  detail::ConstraintCheck check("tunnel_membership", tol);
  check.require("tunnel_plus", 1.0 - a.plus);
  check.require("tunnel_minus", 1.0 - a.minus);
  if (paper_cube) {
    for (const double v : {x, y, z}) {
      check.require("paper_cube", v);
      check.require("paper_cube", 1.0 - v);
    }
  }
  return check.finish(std::move(inv));
}

/// Sign-pattern test on p(lambda) = sum_i (-1)^i a_i lambda^i.
/// The a_i are normalized so that a_n = 1 and the roots have unit mean
/// before comparing against tol; a raw coefficient threshold would be
/// meaningless for roots of size 2^{-m}.
inline DomainVerdict descartes_positivity(const RealPolynomial& p, double tol = kDomainTol) {
  const int n = p.degree();
  std::vector<double> a(static_cast<std::size_t>(n) + 1);
  const double lead = (n % 2 == 0 ? 1.0 : -1.0) * p.leading();
  for (int i = 0; i <= n; ++i) a[static_cast<std::size_t>(i)] = (i % 2 == 0 ? 1.0 : -1.0) * p.coeff(i) / lead;

  InvariantSet inv;
  detail::ConstraintCheck check("descartes", tol);
  const double mean = n > 0 ? a[static_cast<std::size_t>(n) - 1] / n : 1.0;
  if (n > 0 && !(mean > 0.0)) {
    check.require("descartes_a" + std::to_string(n - 1), mean);
    return check.finish(std::move(inv));
  }
  for (int i = 0; i <= n; ++i) {
    const double scaled = a[static_cast<std::size_t>(i)] * std::pow(mean, -(n - i));
    inv.extras["a" + std::to_string(i)] = scaled;
    check.require("descartes_a" + std::to_string(i), scaled);
  }
  return check.finish(std::move(inv));
}

/// Oracle: smallest Jacobi eigenvalue, compared in units of 2^{-m}.
inline bool oracle_admissible(const DensityMatrix& rho, double tol = kDomainTol) {
  return hermitian_eigenvalues(rho.matrix()).front() * static_cast<double>(rho.matrix().dim()) >= -tol;
}

/// Closed-form verdict for a 2-tensor of rank <= 6 at m >= 3: the smallest
/// quartet root, compared in units of 2^{-m}.
inline DomainVerdict quartet_domain(int m, const AntisymTensor& g, double tol = kDomainTol) {
  const Spectrum s = two_tensor_spectrum(m, g);
  InvariantSet inv = two_tensor_invariants(g);
  const auto plus = quartet_roots_resolvent(g, +1);
  const auto minus = quartet_roots_resolvent(g, -1);
  detail::ConstraintCheck check("quartet_min_eigenvalue", tol);
  check.require("quartet_plus", plus.front());
  check.require("quartet_minus", minus.front());
  inv.extras["min_eigenvalue"] = s.min();
  return check.finish(std::move(inv));
}

/// Full verdict for arbitrary unit-trace coordinates: closed forms for
/// vector and 2-tensor configurations, Descartes on char_poly otherwise.
inline DomainVerdict validate_state(const StateCoords& coords, const CliffordBasis& basis,
                                    double tol = kDomainTol) {
  check_compatible(coords, basis);
  if (std::abs(coords.scalar - 1.0) > kUnitTraceTol) {
    throw Error(ErrorKind::NonUnitTrace, "scalar coordinate is " + std::to_string(coords.scalar));
  }
  switch (classify_config(coords)) {
    case ConfigShape::maximally_mixed:
    case ConfigShape::vector:
      return vector_domain(coords.grade(1), pseudoscalar_of(coords), tol);
    case ConfigShape::two_tensor: {
      const AntisymTensor& g = coords.grade(2);
      if (coords.m == 2) {
        DomainVerdict v = rT4_domain(frobenius_r(g), trace_T4(g), tol);
        v.invariants_used = two_tensor_invariants(g);
        return v;
      }
      if (coords.m == 3 || pfaffian_minor_sum(g, 8) <= kInvariantTol * std::pow(g.norm_sq(), 4)) {
        return quartet_domain(coords.m, g, tol);
      }
      break;
    }
    case ConfigShape::general:
      break;
  }
  return descartes_positivity(char_poly(encode(coords, basis).matrix()), tol);
}

struct DomainSample {
  AntisymTensor coefficients;
  DomainVerdict verdict;
  double oracle_min_eigenvalue = 0.0;  // in units of 2^{-m}
  bool oracle_admissible = false;
  bool agree = false;
};

struct SampleOptions {
  double box = 1.2;
  double tol = kDomainTol;
};

inline constexpr std::size_t kMaxSamples = 10'000'000;

/// Per-sample generator: identical (seed, index) always yields the same stream.
inline std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// n uniform draws of a grade-k tensor (k = 1, 2) from [-box, box]^N, each
/// classified by the closed-form route of validate_state and by the oracle.
inline std::vector<DomainSample> sample_domain(int m, int k, std::size_t n, std::uint64_t seed,
                                               const SampleOptions& opts = {}) {
  if (k != 1 && k != 2) {
    throw Error(ErrorKind::GradeOutOfRange, "sampling supports k = 1, 2; got " + std::to_string(k));
  }
  if (m > kMaxVerifiedQubits || n > kMaxSamples) {
    throw Error(ErrorKind::ResourceLimit, "sampling is limited to m <= 5 and n <= 10^7");
  }
  if (k == 2 && m < 2) throw Error(ErrorKind::UnsupportedM, "2-tensor sampling needs m >= 2");
  std::vector<DomainSample> out;
  if (n == 0) return out;
  const CliffordBasis basis = full_basis(m, BasisMode::standard, Verification::none);
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto rng = sample_rng(seed, i);
    StateCoords coords = StateCoords::zero(m);
    for (double& v : coords.grade(k).values()) v = opts.box * (2.0 * unit_uniform(rng) - 1.0);
    DomainSample s;
    s.coefficients = coords.grade(k);
    s.verdict = validate_state(coords, basis, opts.tol);
    s.oracle_min_eigenvalue =
        hermitian_eigenvalues(encode(coords, basis).matrix()).front() * static_cast<double>(basis.dim());
    s.oracle_admissible = s.oracle_min_eigenvalue >= -opts.tol;
    s.agree = s.oracle_admissible == s.verdict.admissible;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace cliffbloch
