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
 * @file figures.hpp
 * @brief Datasets for the (r, T4) region and the tunnel surfaces.
 *
 *   fig1: verdict grid over (r, T4) in [0, 1] x [0, 2] plus the two
 *         boundary curves T4 = 2 r^2 and T4 = max((r + 1)^2 - 2, 0).
 *   fig2: point clouds of alpha_+ = 1 and alpha_- = 1 in [-1.5, 1.5]^3.
 *   fig3: alpha_+ in {1, 0.1}, alpha_- in {1, 0.01}, kept only where the
 *         point lies in the admissible intersection.
 */

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "cliffbloch/domains.hpp"
#include "cliffbloch/error.hpp"

namespace cliffbloch {

/// Shortest round-trip decimal form ("%.17g").
inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Fig1Row {
  double r = 0.0;
  double T4 = 0.0;
  bool admissible = false;
  bool on_boundary = false;
};

struct CurvePoint {
  double r = 0.0;
  double T4 = 0.0;
};

struct Fig1Data {
  std::vector<Fig1Row> rows;  // r-major
  std::vector<CurvePoint> upper_curve;
  std::vector<CurvePoint> lower_curve;
  CurvePoint intersection;
};

struct SurfacePoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  int surface_id = 0;
};

struct Surface {
  int id = 0;
  std::string label;
};

struct SurfaceData {
  std::vector<Surface> surfaces;
  std::vector<SurfacePoint> points;
};

inline void check_resolution(int resolution) {
  if (resolution < 2) {
    throw Error(ErrorKind::BadResolution, "resolution must be >= 2, got " + std::to_string(resolution));
  }
}

inline Fig1Data fig1_data(int resolution, double tol = kDomainTol) {
  check_resolution(resolution);
  Fig1Data out;
  const double step = 1.0 / (resolution - 1);
  out.rows.reserve(static_cast<std::size_t>(resolution) * static_cast<std::size_t>(resolution));
  for (int i = 0; i < resolution; ++i) {
    const double r = i * step;
    for (int j = 0; j < resolution; ++j) {
      const double t4 = 2.0 * j * step;
      const DomainVerdict v = rT4_domain(r, t4, tol);
      out.rows.push_back({r, t4, v.admissible, v.boundary});
    }
    out.upper_curve.push_back({r, 2.0 * r * r});
    out.lower_curve.push_back({r, std::max((r + 1.0) * (r + 1.0) - 2.0, 0.0)});
  }
  // 2 r^2 = (r + 1)^2 - 2  <=>  r^2 + b r + c = 0 with b = -2, c = 1.
  const double b = -2.0;
  const double c = 1.0;
  const double r_meet = (-b + std::sqrt(std::max(b * b - 4.0 * c, 0.0))) / 2.0;
  out.intersection = {r_meet, 2.0 * r_meet * r_meet};
  return out;
}

namespace detail {

/// Points of the surface sqrt(u^2 + z^2) = alpha with u = x + y (plus) or
/// u = x - y (minus); the free coordinate v = x -+ y runs over v_range.
inline void tunnel_surface(std::vector<SurfacePoint>& out, int id, bool plus, double alpha,
                           double v_range, double box, int resolution) {
  const double two_pi = 2.0 * std::numbers::pi;
  for (int a = 0; a < resolution - 1; ++a) {
    const double theta = two_pi * a / (resolution - 1);
    const double u = alpha * std::cos(theta);
    const double z = alpha * std::sin(theta);
    for (int b = 0; b < resolution; ++b) {
      const double v = -v_range + 2.0 * v_range * b / (resolution - 1);
      const double x = (u + v) / 2.0;
      const double y = plus ? (u - v) / 2.0 : (v - u) / 2.0;
      if (std::abs(x) > box || std::abs(y) > box || std::abs(z) > box) continue;
      out.push_back({x, y, z, id});
    }
  }
}

}  // namespace detail

inline SurfaceData fig2_data(int resolution) {
  check_resolution(resolution);
  SurfaceData out;
  out.surfaces = {{0, "alpha_plus=1"}, {1, "alpha_minus=1"}};
  detail::tunnel_surface(out.points, 0, true, 1.0, 3.0, 1.5, resolution);
  detail::tunnel_surface(out.points, 1, false, 1.0, 3.0, 1.5, resolution);
  return out;
}

inline SurfaceData fig3_data(int resolution, bool paper_cube = false, double tol = kDomainTol) {
  check_resolution(resolution);
  SurfaceData out;
  out.surfaces = {{0, "alpha_plus=1"}, {1, "alpha_plus=0.1"}, {2, "alpha_minus=1"}, {3, "alpha_minus=0.01"}};
  std::vector<SurfacePoint> raw;
  detail::tunnel_surface(raw, 0, true, 1.0, 1.0, 1.0, resolution);
  detail::tunnel_surface(raw, 1, true, 0.1, 1.0, 1.0, resolution);
  detail::tunnel_surface(raw, 2, false, 1.0, 1.0, 1.0, resolution);
  detail::tunnel_surface(raw, 3, false, 0.01, 1.0, 1.0, resolution);
  for (const auto& p : raw)
    if (tunnel_membership(p.x, p.y, p.z, paper_cube, tol).admissible) out.points.push_back(p);
  return out;
}

inline void write_fig1_csv(std::ostream& os, const Fig1Data& data) {
  os << "r,T4,admissible,on_boundary\n";
  for (const auto& row : data.rows) {
    os << format_double(row.r) << ',' << format_double(row.T4) << ',' << (row.admissible ? 1 : 0) << ','
       << (row.on_boundary ? 1 : 0) << '\n';
  }
}

inline void write_surface_csv(std::ostream& os, const SurfaceData& data) {
  os << "x,y,z,surface_id\n";
  for (const auto& p : data.points) {
    os << format_double(p.x) << ',' << format_double(p.y) << ',' << format_double(p.z) << ','
       << p.surface_id << '\n';
  }
}

namespace detail {

inline constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e"};

struct SvgPanel {
  double x0, y0, size;
  double lo_u, hi_u, lo_v, hi_v;

  double px(double u) const { return x0 + size * (u - lo_u) / (hi_u - lo_u); }
  double py(double v) const { return y0 + size - size * (v - lo_v) / (hi_v - lo_v); }
};

inline void svg_frame(std::ostream& os, const SvgPanel& p, const std::string& title) {
  os << "<rect x=\"" << p.x0 << "\" y=\"" << p.y0 << "\" width=\"" << p.size << "\" height=\"" << p.size
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  os << "<text x=\"" << p.x0 << "\" y=\"" << p.y0 - 6 << "\" font-size=\"12\">" << title << "</text>\n";
}

}  // namespace detail

inline void write_fig1_svg(std::ostream& os, const Fig1Data& data) {
  const detail::SvgPanel p{40, 30, 400, 0.0, 1.0, 0.0, 2.0};
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"470\">\n";
  detail::svg_frame(os, p, "admissible (r, T4)");
  for (const auto& row : data.rows) {
    if (!row.admissible) continue;
    os << "<circle cx=\"" << p.px(row.r) << "\" cy=\"" << p.py(row.T4) << "\" r=\"1.2\" fill=\""
       << (row.on_boundary ? "#d62728" : "#1f77b4") << "\"/>\n";
  }
  for (const auto* curve : {&data.upper_curve, &data.lower_curve}) {
    os << "<polyline fill=\"none\" stroke=\"black\" points=\"";
    for (const auto& c : *curve) os << p.px(c.r) << ',' << p.py(c.T4) << ' ';
    os << "\"/>\n";
  }
  os << "</svg>\n";
}

/// Three orthogonal projections (xy, xz, yz) of the point clouds.
inline void write_surface_svg(std::ostream& os, const SurfaceData& data, double extent) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"380\">\n";
  const char* titles[] = {"x-y", "x-z", "y-z"};
  for (int panel = 0; panel < 3; ++panel) {
    const detail::SvgPanel p{20.0 + 330.0 * panel, 30, 300, -extent, extent, -extent, extent};
    detail::svg_frame(os, p, titles[panel]);
    for (const auto& q : data.points) {
      const double u = panel == 2 ? q.y : q.x;
      const double v = panel == 0 ? q.y : q.z;
      os << "<circle cx=\"" << p.px(u) << "\" cy=\"" << p.py(v) << "\" r=\"0.8\" fill=\""
         << detail::kPalette[q.surface_id % 4] << "\"/>\n";
    }
  }
  os << "</svg>\n";
}

}  // namespace cliffbloch
