// Copyright 2026 The projcauchy Authors.
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
//
// projcauchy command-line interface.
//
// Exit status: 0 success, 1 usage error, 2 domain/geometry error,
// 3 verification failure.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "projcauchy/cauchy.hpp"
#include "projcauchy/errors.hpp"
#include "projcauchy/oracles.hpp"
#include "projcauchy/plane.hpp"
#include "projcauchy/rng.hpp"
#include "projcauchy/student.hpp"
#include "projcauchy/version.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace projcauchy;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitVerifyFailed = 3;

// Usage problems detected after flag parsing (bad value formats, invalid
// flag combinations).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

std::vector<double> parse_csv_doubles(const std::string& text,
                                      std::size_t expected,
                                      const std::string& what) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string token =
        text.substr(start, comma == std::string::npos ? std::string::npos
                                                      : comma - start);
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || token.empty()) {
      throw UsageError("could not parse " + what + ": '" + text + "'");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() != expected) {
    throw UsageError(what + " needs " + std::to_string(expected) +
                     " comma-separated values");
  }
  return out;
}

PlanePoint parse_point(const std::string& text) {
  const std::vector<double> v = parse_csv_doubles(text, 2, "point");
  return PlanePoint(v[0], v[1]);
}

LSCParams parse_lsc(const std::string& text) {
  const std::vector<double> v =
      parse_csv_doubles(text, 5, "location-scale-correlation parameters");
  return LSCParams(v[0], v[1], v[2], v[3], v[4]);
}

struct PolygonFile {
  PlanePolygon polygon;
  std::optional<LSCParams> lsc;
};

PolygonFile read_polygon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open polygon file '" + path + "'");
  }
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("polygon file '" + path +
                                "' is not valid JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") ||
      !doc["vertices"].is_array()) {
    throw std::invalid_argument(
        "polygon file must be an object with a 'vertices' array");
  }
  std::vector<PlanePoint> vertices;
  for (const json& v : doc["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
        !v[1].is_number()) {
      throw std::invalid_argument(
          "each vertex must be a [x1, x2] pair of numbers");
    }
    vertices.emplace_back(v[0].get<double>(), v[1].get<double>());
  }
  std::optional<LSCParams> lsc;
  if (doc.contains("lsc")) {
    const json& p = doc["lsc"];
    for (const char* key : {"a1", "a2", "b1", "b2", "rho"}) {
      if (!p.contains(key) || !p[key].is_number()) {
        throw std::invalid_argument(
            "'lsc' must carry numeric a1, a2, b1, b2, rho");
      }
    }
    lsc.emplace(p["a1"].get<double>(), p["a2"].get<double>(),
                p["b1"].get<double>(), p["b2"].get<double>(),
                p["rho"].get<double>());
  }
  return PolygonFile{PlanePolygon(std::move(vertices)), lsc};
}

// First reflex vertex of a counter-clockwise polygon, for error messages.
std::string reflex_vertex_message(const PlanePolygon& poly) {
  const auto& v = poly.vertices();
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const PlanePoint& a = v[i];
    const PlanePoint& b = v[(i + 1) % n];
    const PlanePoint& c = v[(i + 2) % n];
    const double turn = (b.x1() - a.x1()) * (c.x2() - a.x2()) -
                        (b.x2() - a.x2()) * (c.x1() - a.x1());
    if (turn < 0.0) {
      const std::size_t idx = (i + 1) % n;
      return "polygon is not convex: reflex vertex " + std::to_string(idx) +
             " at (" + format_double(b.x1()) + ", " + format_double(b.x2()) +
             ")";
    }
  }
  return "polygon is not convex";
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(v));
  return std::string(buf);
}

struct Options {
  std::string poly_path;
  std::string point_text;
  std::string lsc_text;
  int nu = 0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  bool json_output = false;
  std::string manifest_path;
  std::string samples_file;
  bool tamper_masses = false;
  bool samples_given = false;
  bool seed_given = false;
};

std::optional<LSCParams> effective_lsc(const Options& opt,
                                       const PolygonFile& file) {
  if (!opt.lsc_text.empty()) return parse_lsc(opt.lsc_text);
  return file.lsc;
}

int cmd_pdf(const Options& opt) {
  const PlanePoint x = parse_point(opt.point_text);
  double value = 0.0;
  if (opt.nu > 0) {
    value = student_pdf(x, StudentDof(opt.nu));
  } else if (!opt.lsc_text.empty()) {
    value = cauchy_elliptic_pdf(x, parse_lsc(opt.lsc_text));
  } else {
    value = cauchy_std_pdf(x);
  }
  if (opt.json_output) {
    json doc;
    doc["value"] = value;
    std::cout << doc.dump() << "\n";
  } else {
    std::printf("%.17g\n", value);
  }
  return kExitOk;
}

int cmd_integrate(const Options& opt) {
  const PolygonFile file = read_polygon_file(opt.poly_path);
  const std::optional<LSCParams> lsc = effective_lsc(opt, file);

  double value = 0.0;
  double standard_error = 0.0;
  bool monte_carlo = false;
  if (opt.nu > 0) {
    if (!opt.samples_given || !opt.seed_given) {
      throw UsageError("--nu integration requires --samples and --seed");
    }
    const StudentMcResult r = integrate_student_mc(
        file.polygon, StudentDof(opt.nu), opt.samples, opt.seed, opt.workers);
    value = r.value;
    standard_error = r.standard_error;
    monte_carlo = true;
  } else if (lsc) {
    value = integrate_cauchy_elliptic(file.polygon, *lsc);
  } else {
    value = integrate_cauchy_std(file.polygon);
  }

  if (opt.json_output) {
    json doc;
    doc["value"] = value;
    doc["method"] = monte_carlo ? "mc" : "solid-angle";
    if (monte_carlo) {
      doc["standard_error"] = standard_error;
      doc["samples"] = opt.samples;
    }
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "value " << format_double(value) << "\n";
    std::cout << "method " << (monte_carlo ? "mc" : "solid-angle") << "\n";
    if (monte_carlo) {
      std::cout << "standard_error " << format_double(standard_error) << "\n";
    }
  }
  return kExitOk;
}

int cmd_sample(const Options& opt, const std::vector<std::string>& argv_tail) {
  const PolygonFile file = read_polygon_file(opt.poly_path);
  const std::optional<LSCParams> lsc = effective_lsc(opt, file);

  const PlanePolygon domain =
      lsc ? lsc_backward(file.polygon, *lsc) : file.polygon;
  if (!domain.is_convex()) {
    throw UnsupportedGeometryError(reflex_vertex_message(domain));
  }

  SplitMix64 rng(opt.seed);
  std::string out;
  out.reserve(static_cast<std::size_t>(opt.samples) * 24);
  json samples_json = json::array();
  for (std::int64_t i = 0; i < opt.samples; ++i) {
    const UniformPair u = rng.next_pair();
    const PlanePoint x = lsc ? simulate_cauchy_elliptic(file.polygon, *lsc, u)
                             : simulate_cauchy_std(file.polygon, u);
    if (opt.json_output) {
      samples_json.push_back({x.x1(), x.x2()});
    } else {
      out += format_double(x.x1());
      out += ',';
      out += format_double(x.x2());
      out += '\n';
    }
  }

  if (opt.json_output) {
    json doc;
    doc["seed"] = opt.seed;
    doc["count"] = opt.samples;
    doc["samples"] = std::move(samples_json);
    out = doc.dump() + "\n";
  }
  std::cout << out;

  if (!opt.manifest_path.empty()) {
    json manifest;
    manifest["command"] = "sample";
    manifest["arguments"] = argv_tail;
    manifest["seed"] = opt.seed;
    manifest["samples"] = opt.samples;
    manifest["library_version"] = kVersion;
    manifest["outputs_digest"] = "fnv1a64:" + hex64(fnv1a64(out));
    std::ofstream mf(opt.manifest_path);
    if (!mf) {
      throw std::invalid_argument("cannot write manifest '" +
                                  opt.manifest_path + "'");
    }
    mf << manifest.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_solid_angle(const Options& opt) {
  const PolygonFile file = read_polygon_file(opt.poly_path);
  const double omega =
      solid_angle_polygon(SphericalPolygon::from_plane_polygon(file.polygon));
  const double integral = omega / (2.0 * std::numbers::pi);
  if (opt.json_output) {
    json doc;
    doc["solid_angle"] = omega;
    doc["integral"] = integral;
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "solid_angle " << format_double(omega) << "\n";
    std::cout << "integral " << format_double(integral) << "\n";
  }
  return kExitOk;
}

struct CheckResult {
  std::string name;
  bool pass;
  json detail;
};

std::vector<PlanePoint> read_samples_stream(std::istream& in) {
  std::vector<PlanePoint> samples;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<double> v = parse_csv_doubles(line, 2, "sample row");
    samples.emplace_back(v[0], v[1]);
  }
  if (samples.empty()) {
    throw std::invalid_argument("sample stream is empty");
  }
  return samples;
}

int cmd_verify(const Options& opt) {
  const PolygonFile file = read_polygon_file(opt.poly_path);
  const std::optional<LSCParams> lsc = effective_lsc(opt, file);
  const PlanePolygon& poly = file.polygon;

  const auto integrate = [&](const PlanePolygon& p) {
    return lsc ? integrate_cauchy_elliptic(p, *lsc) : integrate_cauchy_std(p);
  };
  const DensityFn density = [&](const PlanePoint& x) {
    return lsc ? cauchy_elliptic_pdf(x, *lsc) : cauchy_std_pdf(x);
  };

  std::vector<CheckResult> checks;

  // (a) Solid-angle integral against adaptive quadrature.
  {
    const double geometric = integrate(poly);
    const double quad = quadrature_integrate(density, poly, 1e-9).value;
    const double diff = std::abs(geometric - quad);
    checks.push_back({"integral_dual_route", diff <= 1e-8,
                      json{{"solid_angle_value", geometric},
                           {"quadrature_value", quad},
                           {"abs_diff", diff},
                           {"threshold", 1e-8}}});
  }

  // (b) Sampler goodness of fit against analytic bin masses, plus domain
  // membership of every draw.
  {
    std::vector<PlanePoint> samples;
    if (!opt.samples_file.empty()) {
      if (opt.samples_file == "-") {
        samples = read_samples_stream(std::cin);
      } else {
        std::ifstream in(opt.samples_file);
        if (!in) {
          throw std::invalid_argument("cannot open samples file '" +
                                      opt.samples_file + "'");
        }
        samples = read_samples_stream(in);
      }
    } else {
      const PlanePolygon domain = lsc ? lsc_backward(poly, *lsc) : poly;
      if (!domain.is_convex()) {
        throw UnsupportedGeometryError(reflex_vertex_message(domain));
      }
      SplitMix64 rng(opt.seed);
      samples.reserve(static_cast<std::size_t>(opt.samples));
      for (std::int64_t i = 0; i < opt.samples; ++i) {
        const UniformPair u = rng.next_pair();
        samples.push_back(lsc ? simulate_cauchy_elliptic(poly, *lsc, u)
                              : simulate_cauchy_std(poly, u));
      }
    }

    std::int64_t outside = 0;
    for (const PlanePoint& x : samples) {
      if (!poly.contains(x)) ++outside;
    }
    checks.push_back({"membership", outside == 0,
                      json{{"samples", samples.size()},
                           {"outside_domain", outside}}});

    // Bins: fan triangles, subdivided twice for triangles and once for
    // larger polygons.
    std::vector<PlanePolygon> bins;
    std::vector<double> masses;
    for (const PlaneTriangle& fan : triangulate(poly)) {
      for (const PlaneTriangle& quarter : subdivide_triangle(fan)) {
        if (poly.size() == 3) {
          for (const PlaneTriangle& bin : subdivide_triangle(quarter)) {
            bins.emplace_back(std::vector<PlanePoint>{bin[0], bin[1], bin[2]});
          }
        } else {
          bins.emplace_back(
              std::vector<PlanePoint>{quarter[0], quarter[1], quarter[2]});
        }
      }
    }
    for (const PlanePolygon& bin : bins) masses.push_back(integrate(bin));
    if (opt.tamper_masses) {
      const auto [lo, hi] = std::minmax_element(masses.begin(), masses.end());
      std::iter_swap(lo, hi);
    }
    const GofReport report = chi_square_gof(samples, bins, masses);
    checks.push_back({"sampler_goodness_of_fit", report.p_value > 0.001,
                      json{{"bins", bins.size()},
                           {"statistic", report.statistic},
                           {"dof", report.dof},
                           {"p_value", report.p_value},
                           {"threshold", 0.001}}});
  }

  // (c) Student Monte Carlo against quadrature.
  if (opt.nu > 0) {
    const StudentDof nu(opt.nu);
    const StudentMcResult mc =
        integrate_student_mc(poly, nu, opt.samples, opt.seed, opt.workers);
    const double quad =
        quadrature_integrate(
            [nu](const PlanePoint& x) { return student_pdf(x, nu); }, poly,
            1e-8)
            .value;
    const double diff = std::abs(mc.value - quad);
    const double threshold = 4.0 * mc.standard_error + 1e-6;
    checks.push_back({"student_mc_vs_quadrature", diff <= threshold,
                      json{{"nu", opt.nu},
                           {"mc_value", mc.value},
                           {"standard_error", mc.standard_error},
                           {"quadrature_value", quad},
                           {"abs_diff", diff},
                           {"threshold", threshold}}});
  }

  bool all_pass = true;
  for (const CheckResult& c : checks) all_pass = all_pass && c.pass;

  if (opt.json_output) {
    json doc;
    doc["pass"] = all_pass;
    doc["checks"] = json::array();
    for (const CheckResult& c : checks) {
      json entry;
      entry["name"] = c.name;
      entry["pass"] = c.pass;
      entry["detail"] = c.detail;
      doc["checks"].push_back(entry);
    }
    std::cout << doc.dump() << "\n";
  } else {
    for (const CheckResult& c : checks) {
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " "
                << c.detail.dump() << "\n";
    }
  }
  return all_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analytic integration and exact simulation of bivariate "
               "projective-Cauchy densities over polygons"};
  app.require_subcommand(1);

  Options opt;
  std::vector<std::string> argv_tail;
  for (int i = 1; i < argc; ++i) argv_tail.emplace_back(argv[i]);

  CLI::App* pdf = app.add_subcommand("pdf", "evaluate a density at a point");
  pdf->add_option("--point", opt.point_text, "evaluation point x1,x2")
      ->required();
  auto* pdf_lsc =
      pdf->add_option("--lsc", opt.lsc_text, "parameters a1,a2,b1,b2,rho");
  pdf->add_option("--nu", opt.nu, "Student degrees of freedom (integer >= 1)")
      ->check(CLI::PositiveNumber)
      ->excludes(pdf_lsc);
  pdf->add_flag("--json", opt.json_output, "structured JSON output");

  CLI::App* integrate =
      app.add_subcommand("integrate", "mass of a density over a polygon");
  integrate->add_option("--poly", opt.poly_path, "polygon JSON file")
      ->required();
  auto* int_lsc =
      integrate->add_option("--lsc", opt.lsc_text, "parameters a1,a2,b1,b2,rho");
  integrate
      ->add_option("--nu", opt.nu, "Student degrees of freedom (Monte Carlo)")
      ->check(CLI::PositiveNumber)
      ->excludes(int_lsc);
  integrate->add_option("--samples", opt.samples, "Monte Carlo sample count")
      ->check(CLI::PositiveNumber);
  integrate->add_option("--seed", opt.seed, "generator seed");
  integrate->add_option("--workers", opt.workers, "Monte Carlo worker count")
      ->check(CLI::PositiveNumber);
  integrate->add_flag("--json", opt.json_output, "structured JSON output");

  CLI::App* sample =
      app.add_subcommand("sample", "draw truncated variates from a polygon");
  sample->add_option("--poly", opt.poly_path, "polygon JSON file")->required();
  sample->add_option("--lsc", opt.lsc_text, "parameters a1,a2,b1,b2,rho");
  sample->add_option("-n,--samples", opt.samples, "number of draws")
      ->required()
      ->check(CLI::PositiveNumber);
  sample->add_option("--seed", opt.seed, "generator seed")->required();
  sample->add_option("--manifest", opt.manifest_path,
                     "write a reproducibility manifest to this path");
  sample->add_flag("--json", opt.json_output, "structured JSON output");

  CLI::App* solid =
      app.add_subcommand("solid-angle", "solid angle subtended by a polygon");
  solid->add_option("--poly", opt.poly_path, "polygon JSON file")->required();
  solid->add_flag("--json", opt.json_output, "structured JSON output");

  CLI::App* verify = app.add_subcommand(
      "verify", "cross-check geometric results against brute-force oracles");
  verify->add_option("--poly", opt.poly_path, "polygon JSON file")->required();
  auto* ver_lsc =
      verify->add_option("--lsc", opt.lsc_text, "parameters a1,a2,b1,b2,rho");
  verify
      ->add_option("--nu", opt.nu,
                   "also check the Student Monte Carlo estimator")
      ->check(CLI::PositiveNumber)
      ->excludes(ver_lsc);
  auto* ver_samples =
      verify->add_option("-n,--samples", opt.samples, "number of draws")
          ->check(CLI::PositiveNumber);
  auto* ver_seed = verify->add_option("--seed", opt.seed, "generator seed");
  verify->add_option("--samples-file", opt.samples_file,
                     "read sample rows from a file ('-' for stdin) instead of "
                     "drawing internally");
  verify
      ->add_flag("--tamper-masses", opt.tamper_masses,
                 "swap two bin masses to demonstrate test power")
      ->group("");
  verify->add_option("--workers", opt.workers, "Monte Carlo worker count")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--json", opt.json_output, "structured JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  opt.samples_given = integrate->count("--samples") > 0 ||
                      sample->count("--samples") > 0 ||
                      verify->count("--samples") > 0;
  opt.seed_given = integrate->count("--seed") > 0 ||
                   sample->count("--seed") > 0 || verify->count("--seed") > 0;

  try {
    if (pdf->parsed()) return cmd_pdf(opt);
    if (integrate->parsed()) return cmd_integrate(opt);
    if (sample->parsed()) return cmd_sample(opt, argv_tail);
    if (solid->parsed()) return cmd_solid_angle(opt);
    if (verify->parsed()) {
      if (opt.samples_file.empty() &&
          (ver_samples->count() == 0 || ver_seed->count() == 0)) {
        throw UsageError(
            "verify requires --samples and --seed unless --samples-file is "
            "given");
      }
      return cmd_verify(opt);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
