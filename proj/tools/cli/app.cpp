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

#include "app.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "json_io.hpp"

namespace cliffbloch::cli {
namespace {

struct Options {
  std::string input;
  std::string output;
  int m = 0;
  std::string mode = "standard";
  double tol = kDomainTol;
  // basis
  std::string verify = "default";
  bool dump = false;
  // spectrum
  bool closed_form = false;
  bool oracle = false;
  bool both = false;
  // sample / domain
  int k = 2;
  std::size_t n = 1000;
  std::uint64_t seed = 0;
  double box = 1.2;
  std::string format = "json";
  // figure / domain
  std::string which;
  int resolution = 101;
  bool paper_cube = false;
  bool grid = false;
  std::optional<std::size_t> samples;
  // rotate
  std::string generator;
};

json read_json(const std::string& path) {
  if (path.empty()) throw Error(ErrorKind::ParseError, "--input is required");
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& ex) {
    throw Error(ErrorKind::ParseError, path + ": " + ex.what());
  }
}

class Sink {
 public:
  Sink(std::ostream& out, const std::string& path) : out_(&out) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorKind::ParseError, "cannot write " + path);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }
  void emit(const json& j) { *out_ << j.dump(2) << '\n'; }

 private:
  std::ostream* out_;
  std::ofstream file_;
};

int qubits_for_dim(std::size_t dim) {
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw Error(ErrorKind::DimensionMismatch, "matrix dimension " + std::to_string(dim) + " is not 2^m");
  }
  return std::countr_zero(dim);
}

void check_m_flag(const Options& o, int m) {
  if (o.m != 0 && o.m != m) {
    throw Error(ErrorKind::DimensionMismatch, "--m " + std::to_string(o.m) + " but input has m = " + std::to_string(m));
  }
}

// A state given either as coordinates or as a matrix.
struct LoadedState {
  StateCoords coords;
  std::optional<ComplexMatrix> matrix;
};

LoadedState load_state(const Options& o) {
  const json j = read_json(o.input);
  if (j.contains("entries")) {
    ComplexMatrix a = matrix_from_json(j);
    const int m = qubits_for_dim(a.dim());
    check_m_flag(o, m);
    const CliffordBasis basis = full_basis(m, parse_basis_mode(o.mode), Verification::none);
    const DensityMatrix rho(m, a);
    StateCoords coords = basis.mode() == BasisMode::standard ? decode(rho, basis) : alt_project(rho, basis).coords;
    return {std::move(coords), std::move(a)};
  }
  StateCoords coords = coords_from_json(j);
  check_m_flag(o, coords.m);
  return {std::move(coords), std::nullopt};
}

CliffordBasis basis_for(const StateCoords& c) { return full_basis(c.m, c.mode, Verification::none); }

int cmd_basis(const Options& o, Sink& sink, bool strict) {
  if (o.m < 1) throw Error(ErrorKind::UnsupportedM, "--m must be >= 1");
  std::optional<Verification> level;
  if (o.verify == "none") level = Verification::none;
  if (o.verify == "sampled") level = Verification::sampled;
  if (o.verify == "exhaustive") level = Verification::exhaustive;
  if (strict && !level && o.m > kMaxVerifiedQubits) level = Verification::none;
  const CliffordBasis basis = full_basis(o.m, parse_basis_mode(o.mode), level);
  json out = {{"m", basis.m()}, {"mode", std::string(to_string(basis.mode()))}, {"dim", basis.dim()},
              {"elements", basis.element_count()}};
  const bool ok = !basis.certificate() || basis.certificate()->max_residual() <= 1e-10;
  out["certificate"] = basis.certificate() ? report_to_json(*basis.certificate()) : json(nullptr);
  out["ok"] = ok;
  if (o.dump) {
    json elems = json::array();
    for (int k = 0; k <= basis.max_grade(); ++k) {
      const auto combos = combinations(basis.side(), k);
      const auto mats = basis.grade_elements(k);
      for (std::size_t i = 0; i < combos.size(); ++i) {
        const auto labels = combos[i].labels();
        elems.push_back({{"idx", std::vector<int>(labels.begin(), labels.end())}, {"matrix", matrix_to_json(mats[i])}});
      }
    }
    out["basis"] = std::move(elems);
  }
  sink.emit(out);
  return strict && !ok ? kExitError : kExitOk;
}

int cmd_encode(const Options& o, Sink& sink) {
  const StateCoords c = coords_from_json(read_json(o.input));
  check_m_flag(o, c.m);
  sink.emit(matrix_to_json(encode(c, basis_for(c)).matrix()));
  return kExitOk;
}

int cmd_decode(const Options& o, Sink& sink) {
  const ComplexMatrix a = matrix_from_json(read_json(o.input));
  const int m = qubits_for_dim(a.dim());
  check_m_flag(o, m);
  const CliffordBasis basis = full_basis(m, parse_basis_mode(o.mode), Verification::none);
  const DensityMatrix rho(m, a);
  if (basis.mode() == BasisMode::extended) {
    detail::require_unit_trace(rho);
    const AltProjection p = alt_project(rho, basis);
    json out = coords_to_json(p.coords);
    out["residual_norm"] = p.residual_norm;
    sink.emit(out);
  } else {
    sink.emit(coords_to_json(decode(rho, basis)));
  }
  return kExitOk;
}

int cmd_invariants(const Options& o, Sink& sink) {
  const StateCoords c = load_state(o).coords;
  json out;
  if (c.mode == BasisMode::extended) {
    const auto active = c.active_grades();
    if (c.m != 3 || active != std::vector<int>{2}) {
      throw Error(ErrorKind::KindMismatch, "extended-mode invariants cover m = 3 pure 2-tensors");
    }
    const AntisymTensor& g = c.grade(2);
    out = invariants_to_json(two_tensor_invariants(g));
    const auto v = pseudo_vector_V(g);
    double norm_sq = 0.0;
    for (double x : v) norm_sq += x * x;
    out["V"] = v;
    out["V_norm_sq"] = norm_sq;
    sink.emit(out);
    return kExitOk;
  }
  switch (classify_config(c)) {
    case ConfigShape::maximally_mixed:
    case ConfigShape::vector:
      out = invariants_to_json(vector_invariants(c.grade(1), pseudoscalar_of(c)));
      break;
    case ConfigShape::two_tensor: {
      const AntisymTensor& g = c.grade(2);
      out = invariants_to_json(two_tensor_invariants(g));
      if (c.m == 2 || c.m == 3) {
        const auto [lhs, rhs] = dual_identity(g, c.m);
        out["dual_identity"] = {lhs, rhs};
        out["z"] = z_variable(frobenius_r(g), trace_T4(g));
        out["z_from_coords"] = z_from_coords(g, c.m);
      }
      if (c.m == 2) {
        const auto [lhs, rhs] = det_identity_check(g);
        out["det_identity"] = {lhs, rhs};
      }
      if (c.m == 3) out["D3_bruteforce"] = epsilon_D3_bruteforce(g);
      break;
    }
    case ConfigShape::general:
      throw Error(ErrorKind::KindMismatch, "invariants need a vector or 2-tensor configuration");
  }
  out["shape"] = std::string(to_string(classify_config(c)));
  sink.emit(out);
  return kExitOk;
}

int cmd_spectrum(const Options& o, Sink& sink) {
  const LoadedState s = load_state(o);
  const bool explicit_mode = o.closed_form || o.oracle || o.both;
  const ConfigShape shape = classify_config(s.coords);
  const bool want_closed = o.closed_form || o.both || (!explicit_mode && shape != ConfigShape::general);
  const bool want_oracle = o.oracle || o.both || !explicit_mode;

  json out = {{"shape", std::string(to_string(shape))}};
  std::optional<Spectrum> closed;
  std::optional<Spectrum> oracle;
  if (want_closed) closed = closed_form_spectrum(s.coords);
  if (want_oracle) {
    if (s.matrix) {
      oracle = numeric_spectrum(DensityMatrix(s.coords.m, *s.matrix));
    } else {
      oracle = numeric_spectrum(encode(s.coords, basis_for(s.coords)));
    }
  }
  out["closed_form"] = closed ? spectrum_to_json(*closed) : json(nullptr);
  out["oracle"] = oracle ? spectrum_to_json(*oracle) : json(nullptr);
  if (closed && oracle) {
    double diff = 0.0;
    for (std::size_t i = 0; i < closed->eigenvalues.size(); ++i)
      diff = std::max(diff, std::abs(closed->eigenvalues[i] - oracle->eigenvalues[i]));
    out["max_diff"] = diff;
  } else {
    out["max_diff"] = nullptr;
  }
  sink.emit(out);
  return kExitOk;
}

int cmd_validate(const Options& o, Sink& sink) {
  const LoadedState s = load_state(o);
  const DomainVerdict v = validate_state(s.coords, basis_for(s.coords), o.tol);
  json out = verdict_to_json(v);
  out["shape"] = std::string(to_string(classify_config(s.coords)));
  sink.emit(out);
  return v.admissible ? kExitOk : kExitInadmissible;
}

int cmd_sample(const Options& o, Sink& sink, std::size_t n) {
  const int m = o.m == 0 ? 2 : o.m;
  SampleOptions opts;
  opts.box = o.box;
  opts.tol = o.tol;
  const auto samples = sample_domain(m, o.k, n, o.seed, opts);
  std::size_t admissible = 0;
  std::size_t disagreements = 0;
  for (const auto& s : samples) {
    admissible += s.verdict.admissible ? 1 : 0;
    disagreements += s.agree ? 0 : 1;
  }
  if (o.format == "csv") {
    auto& os = sink.stream();
    os << "index,admissible,on_boundary,oracle_admissible,oracle_min_eigenvalue,agree";
    if (!samples.empty())
      for (std::size_t c = 0; c < samples.front().coefficients.size(); ++c) os << ",c" << c;
    os << '\n';
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const auto& s = samples[i];
      os << i << ',' << s.verdict.admissible << ',' << s.verdict.boundary << ',' << s.oracle_admissible << ','
         << format_double(s.oracle_min_eigenvalue) << ',' << s.agree;
      for (double c : s.coefficients.values()) os << ',' << format_double(c);
      os << '\n';
    }
    return kExitOk;
  }
  if (o.format != "json") throw Error(ErrorKind::ParseError, "sample supports --format csv|json");
  json rows = json::array();
  for (const auto& s : samples) {
    rows.push_back({{"coefficients", std::vector<double>(s.coefficients.values().begin(), s.coefficients.values().end())},
                    {"admissible", s.verdict.admissible},
                    {"boundary", s.verdict.boundary},
                    {"method", s.verdict.method},
                    {"oracle_admissible", s.oracle_admissible},
                    {"oracle_min_eigenvalue", s.oracle_min_eigenvalue},
                    {"agree", s.agree}});
  }
  sink.emit({{"m", m},
             {"k", o.k},
             {"n", samples.size()},
             {"seed", o.seed},
             {"box", o.box},
             {"admissible_fraction", samples.empty() ? 0.0 : static_cast<double>(admissible) / samples.size()},
             {"disagreements", disagreements},
             {"samples", std::move(rows)}});
  return kExitOk;
}

json surfaces_to_json(const SurfaceData& d) {
  json surfaces = json::array();
  for (const auto& s : d.surfaces) surfaces.push_back({{"id", s.id}, {"label", s.label}});
  json points = json::array();
  for (const auto& p : d.points) points.push_back({p.x, p.y, p.z, p.surface_id});
  return {{"columns", {"x", "y", "z", "surface_id"}}, {"surfaces", std::move(surfaces)}, {"points", std::move(points)}};
}

int cmd_figure(const Options& o, Sink& sink, const std::string& which) {
  auto& os = sink.stream();
  if (which == "fig1") {
    const Fig1Data d = fig1_data(o.resolution, o.tol);
    if (o.format == "csv") {
      write_fig1_csv(os, d);
    } else if (o.format == "svg") {
      write_fig1_svg(os, d);
    } else {
      json rows = json::array();
      for (const auto& r : d.rows) rows.push_back({r.r, r.T4, r.admissible, r.on_boundary});
      json upper = json::array();
      json lower = json::array();
      for (const auto& c : d.upper_curve) upper.push_back({c.r, c.T4});
      for (const auto& c : d.lower_curve) lower.push_back({c.r, c.T4});
      sink.emit({{"columns", {"r", "T4", "admissible", "on_boundary"}},
                 {"rows", std::move(rows)},
                 {"upper_curve", std::move(upper)},
                 {"lower_curve", std::move(lower)},
                 {"intersection", {d.intersection.r, d.intersection.T4}}});
    }
    return kExitOk;
  }
  if (which != "fig2" && which != "fig3") {
    throw Error(ErrorKind::UnknownName, "figure must be fig1, fig2 or fig3; got '" + which + "'");
  }
  const SurfaceData d = which == "fig2" ? fig2_data(o.resolution) : fig3_data(o.resolution, o.paper_cube, o.tol);
  if (o.format == "csv") {
    write_surface_csv(os, d);
  } else if (o.format == "svg") {
    write_surface_svg(os, d, which == "fig2" ? 1.5 : 1.0);
  } else {
    sink.emit(surfaces_to_json(d));
  }
  return kExitOk;
}

int cmd_rotate(const Options& o, Sink& sink) {
  const StateCoords c = coords_from_json(read_json(o.input));
  check_m_flag(o, c.m);
  if (o.generator.empty()) throw Error(ErrorKind::ParseError, "--generator is required");
  const RotationGenerator gen = generator_from_json(read_json(o.generator));
  const OrthogonalMatrix l = orthogonal_from_generator(gen);
  const StateCoords rotated = rotate_coords(c, l);
  json lmat = json::array();
  for (std::size_t i = 0; i < l.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < l.dim(); ++j) row.push_back(l(i, j));
    lmat.push_back(std::move(row));
  }
  json out = {{"coords", coords_to_json(rotated)}, {"L", std::move(lmat)}};
  if (c.mode == BasisMode::standard) {
    const CliffordBasis basis = basis_for(c);
    const ComplexMatrix u = spin_lift(gen, basis);
    const DensityMatrix lhs = encode(rotated, basis);
    const DensityMatrix rhs = conjugate_state(encode(c, basis), u);
    out["compatibility_residual"] = (lhs.matrix() - rhs.matrix()).max_abs();
  }
  sink.emit(out);
  return kExitOk;
}

int cmd_domain(const Options& o, Sink& sink) {
  const int routes = (o.input.empty() ? 0 : 1) + (o.grid ? 1 : 0) + (o.samples ? 1 : 0);
  if (routes != 1) throw Error(ErrorKind::ParseError, "domain needs exactly one of --input, --grid, --samples");
  if (!o.input.empty()) return cmd_validate(o, sink);
  if (o.samples) return cmd_sample(o, sink, *o.samples);
  if (o.paper_cube) return cmd_figure(o, sink, "fig3");
  if (o.k != 2 || (o.m != 0 && o.m != 2)) {
    throw Error(ErrorKind::UnsupportedM, "--grid covers the m = 2, k = 2 (r, T4) plane");
  }
  return cmd_figure(o, sink, "fig1");
}

void add_io(CLI::App* sub, Options& o, bool input = true) {
  if (input) sub->add_option("--input,-i", o.input, "input JSON file");
  sub->add_option("--output,-o", o.output, "write result here instead of stdout");
  sub->add_option("--m", o.m, "number of qubits (checked against the input)")->check(CLI::Range(1, kMaxQubits));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Clifford-algebra coordinates, spectra and positivity domains of m-qubit states", "cliffbloch"};
  app.require_subcommand(1, 1);
  const auto formats = CLI::IsMember({"csv", "json", "svg"});
  const auto modes = CLI::IsMember({"standard", "extended"});

  auto* basis = app.add_subcommand("basis", "build a Clifford basis and report its algebra certificate");
  add_io(basis, o, false);
  basis->add_option("--mode", o.mode)->check(modes);
  basis->add_option("--verify", o.verify)->check(CLI::IsMember({"default", "none", "sampled", "exhaustive"}));
  basis->add_flag("--dump", o.dump, "include every basis matrix");

  auto* verify = app.add_subcommand("verify", "verify the algebra; exit 1 if any residual exceeds 1e-10");
  add_io(verify, o, false);
  verify->add_option("--mode", o.mode)->check(modes);
  verify->add_option("--verify", o.verify)->check(CLI::IsMember({"default", "none", "sampled", "exhaustive"}));

  auto* enc = app.add_subcommand("encode", "coordinates JSON -> matrix JSON");
  add_io(enc, o);
  auto* dec = app.add_subcommand("decode", "matrix JSON -> coordinates JSON");
  add_io(dec, o);
  dec->add_option("--mode", o.mode)->check(modes);

  auto* inv = app.add_subcommand("invariants", "invariants of a vector or 2-tensor configuration");
  add_io(inv, o);

  auto* spec = app.add_subcommand("spectrum", "closed-form and/or numerical spectrum");
  add_io(spec, o);
  auto* cf = spec->add_flag("--closed-form", o.closed_form);
  auto* orc = spec->add_flag("--oracle", o.oracle);
  auto* bth = spec->add_flag("--both", o.both);
  cf->excludes(orc)->excludes(bth);
  orc->excludes(bth);

  auto* val = app.add_subcommand("validate", "positivity verdict; exit 2 if not admissible");
  add_io(val, o);
  val->add_option("--tol", o.tol);

  auto* smp = app.add_subcommand("sample", "Monte-Carlo verdicts for random grade-k tensors");
  add_io(smp, o, false);
  smp->add_option("--k", o.k)->check(CLI::Range(1, 2));
  smp->add_option("--n", o.n);
  smp->add_option("--seed", o.seed);
  smp->add_option("--box", o.box);
  smp->add_option("--tol", o.tol);
  smp->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));

  auto* fig = app.add_subcommand("figure", "datasets for fig1 | fig2 | fig3");
  fig->add_option("which", o.which, "fig1, fig2 or fig3")->required()->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
  fig->add_option("--output,-o", o.output);
  fig->add_option("--resolution", o.resolution);
  fig->add_option("--format", o.format)->check(formats);
  fig->add_flag("--paper-cube", o.paper_cube, "clip fig3 to the unit cube");
  fig->add_option("--tol", o.tol);

  auto* rot = app.add_subcommand("rotate", "apply exp of a rotation generator to coordinates");
  add_io(rot, o);
  rot->add_option("--generator,-g", o.generator, "generator JSON {\"m\":..,\"alpha\":[{\"idx\":[i,j],\"val\":..}]}");

  auto* dom = app.add_subcommand("domain", "validate (--input), grid (--grid) or sample (--samples)");
  add_io(dom, o);
  dom->add_option("--k", o.k)->check(CLI::Range(1, 2));
  dom->add_flag("--grid", o.grid);
  dom->add_option("--samples", o.samples);
  dom->add_option("--seed", o.seed);
  dom->add_option("--box", o.box);
  dom->add_option("--resolution", o.resolution);
  dom->add_flag("--paper-cube", o.paper_cube);
  dom->add_option("--format", o.format)->check(formats);
  dom->add_option("--tol", o.tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    Sink sink(out, o.output);
    if (basis->parsed()) return cmd_basis(o, sink, false);
    if (verify->parsed()) return cmd_basis(o, sink, true);
    if (enc->parsed()) return cmd_encode(o, sink);
    if (dec->parsed()) return cmd_decode(o, sink);
    if (inv->parsed()) return cmd_invariants(o, sink);
    if (spec->parsed()) return cmd_spectrum(o, sink);
    if (val->parsed()) return cmd_validate(o, sink);
    if (smp->parsed()) return cmd_sample(o, sink, o.n);
    if (fig->parsed()) return cmd_figure(o, sink, o.which);
    if (rot->parsed()) return cmd_rotate(o, sink);
    if (dom->parsed()) return cmd_domain(o, sink);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace cliffbloch::cli
