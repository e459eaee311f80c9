#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "k3stab/boundary.hpp"
#include "k3stab/chart.hpp"
#include "k3stab/hn.hpp"
#include "k3stab/mass.hpp"
#include "k3stab/mass_io.hpp"
#include "k3stab/mukai.hpp"
#include "k3stab/tiling.hpp"
#include "k3stab/verify.hpp"

namespace {

using nlohmann::json;
using namespace k3stab;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitDomain = 2;
constexpr int kExitMath = 3;

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw DomainError("complex value must be 're,im', got '" + text + "'");
  }
  std::size_t used = 0;
  const std::string re = text.substr(0, comma);
  const std::string im = text.substr(comma + 1);
  const double x = std::stod(re, &used);
  if (used != re.size()) throw DomainError("bad real part '" + re + "'");
  const double y = std::stod(im, &used);
  if (used != im.size()) throw DomainError("bad imaginary part '" + im + "'");
  return {x, y};
}

Window parse_window(const std::string& text) {
  const auto colon = text.find(':', 1);  // first char may be a minus sign
  if (colon == std::string::npos) {
    throw DomainError("window must be 'lo:hi', got '" + text + "'");
  }
  Window w;
  w.lo = std::stoll(text.substr(0, colon));
  w.hi = std::stoll(text.substr(colon + 1));
  if (w.lo > w.hi) throw DomainError("window is empty");
  return w;
}

Ray parse_ray(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw DomainError("ray must be 'v:w', got '" + text + "'");
  }
  Ray r;
  r.v = std::stod(text.substr(0, colon));
  r.w = std::stod(text.substr(colon + 1));
  return r;
}

double parse_extended_real(const std::string& text) {
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') {
    throw DomainError("bad coordinate '" + text + "'");
  }
  return value;
}

const char* region_name(Region r) {
  switch (r) {
    case Region::WMinus:
      return "WMinus";
    case Region::WZero:
      return "WZero";
    case Region::WPlus:
      return "WPlus";
  }
  return "WMinus";
}

const char* triangle_name(TriangleStatus s) {
  switch (s) {
    case TriangleStatus::StrictInterior:
      return "strict";
    case TriangleStatus::OnWall:
      return "wall";
    case TriangleStatus::Violated:
      return "violated";
  }
  return "violated";
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open output file '" + path + "'");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw DomainError("failed writing '" + path + "'");
}

std::uint64_t default_seed() {
  const char* env = std::getenv("K3STAB_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') {
    throw DomainError("K3STAB_SEED is not an unsigned integer");
  }
  return value;
}

int run_chart(const std::string& z_text, std::int64_t twist) {
  const ChartPoint p{parse_complex(z_text)};
  const Region reg = region(p);
  const StabilityPoint sp{twist, p};
  const StabilityPoint canon =
      (reg == Region::WPlus) ? canonicalize(sp) : sp;
  const MassABC abc = mass_abc(p);
  const TriangleStatus status =
      (reg == Region::WPlus) ? triangle_check(abc.b, abc.a, abc.c)
                             : triangle_check(abc.a, abc.b, abc.c);

  json atoms = json::array();
  for (const RegionTableEntry& e : region_table(p)) {
    atoms.push_back({{"atom", to_string(e.atom)},
                     {"charge", {e.charge.real(), e.charge.imag()}},
                     {"phase", e.phase}});
  }
  const json j{
      {"region", region_name(reg)},
      {"canonical",
       {{"twist", canon.twist},
        {"z", {canon.chart.z.real(), canon.chart.z.imag()}}}},
      {"atoms", atoms},
      {"abc", {{"a", abc.a}, {"b", abc.b}, {"c", abc.c}}},
      {"triangle", triangle_name(status)}};
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int run_mass(const std::string& z_text, double q, std::int64_t twist,
             const std::string& window_text) {
  const StabilityPoint p{twist, {parse_complex(z_text)}};
  const MassFunction f = mass_vector(p, q, parse_window(window_text));
  std::cout << mass_to_json(f) << "\n";
  return kExitOk;
}

int run_invert(double a, double b, double c, const std::string& cell_name,
               double q) {
  Cell cell;
  if (cell_name == "delta0") {
    cell = Cell::Delta0;
  } else if (cell_name == "delta-1") {
    cell = Cell::DeltaMinus1;
  } else if (cell_name == "i0") {
    cell = Cell::I0;
  } else {
    throw DomainError("unknown cell '" + cell_name +
                      "' (expected delta0, delta-1 or i0)");
  }
  const InversionResult r = invert_cell(a, b, c, cell, q);
  const json j{{"z", {r.chart.z.real(), r.chart.z.imag()}},
               {"residual", r.residual},
               {"iterations", r.iterations},
               {"region", region_name(region(r.chart))}};
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int run_tiling(const std::string& mode_name, double q, int depth, int size,
               bool chords, const std::string& out_path) {
  RenderSpec spec;
  if (mode_name == "halfplane") {
    spec.mode = TilingMode::Halfplane;
  } else if (mode_name == "disk") {
    spec.mode = TilingMode::Disk;
  } else {
    throw DomainError("unknown mode '" + mode_name +
                      "' (expected halfplane or disk)");
  }
  spec.q = q;
  spec.depth = depth;
  spec.size = size;
  spec.chords = chords;
  write_file(out_path, render_svg(spec));
  return kExitOk;
}

int run_boundary(const std::string& u_text, const std::string& ray_text,
                 double q, const std::string& window_text) {
  SquareCoord s;
  s.u = parse_extended_real(u_text);
  s.ray = parse_ray(ray_text);
  s.q = q;
  const MassFunction f = pi_param(s, parse_window(window_text));
  std::cout << mass_to_json(f) << "\n";
  return kExitOk;
}

int run_phases(const std::string& z_text, std::int64_t rmax,
               std::int64_t nmax, bool shifts, const std::string& out_path) {
  const ChartPoint p{parse_complex(z_text)};
  const std::string csv = phase_cloud_csv(phase_cloud(p, rmax, nmax, shifts));
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    write_file(out_path, csv);
  }
  return kExitOk;
}

int run_verify(const std::string& suite, std::int64_t samples,
               std::uint64_t seed) {
  const SuiteResult r = run_suite(suite, samples, seed);
  std::cout << suite_report_json(r) << "\n";
  return r.passed() ? kExitOk : kExitVerifyFailure;
}

// Joins flags that take possibly-negative values with their argument so
// the parser does not read "-1,0" as an option name.
std::vector<std::string> preprocess(int argc, char** argv) {
  const std::vector<std::string> joinable = {"--z", "--window", "--u",
                                             "--ray"};
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (std::find(joinable.begin(), joinable.end(), arg) != joinable.end() &&
        i + 1 < argc) {
      arg += "=";
      arg += argv[++i];
    }
    args.push_back(std::move(arg));
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mass embeddings of the stability manifold of a generic "
               "analytic K3 surface"};
  app.require_subcommand(1);

  std::string z_text;
  std::string window_text = "-16:16";
  std::string ray_text = "1:0";
  std::string u_text = "0";
  std::string cell_name = "delta0";
  std::string mode_name = "halfplane";
  std::string suite = "all";
  std::string out_path;
  double q = 1.0;
  double a = 0.0, b = 0.0, c = 0.0;
  std::int64_t twist = 0;
  std::int64_t rmax = 1, nmax = 1;
  std::int64_t samples = 100;
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool chords = false;
  bool shifts = false;
  int depth = 3;
  int size = 800;

  CLI::App* chart = app.add_subcommand(
      "chart", "Report region, canonical form, charges and masses");
  chart->add_option("--z", z_text, "chart point re,im")->required();
  chart->add_option("--twist", twist, "twist index");

  CLI::App* mass = app.add_subcommand("mass", "Mass window as JSON");
  mass->add_option("--z", z_text, "chart point re,im")->required();
  mass->add_option("--q", q, "mass weight");
  mass->add_option("--twist", twist, "twist index");
  mass->add_option("--window", window_text, "index window lo:hi");

  CLI::App* invert = app.add_subcommand("invert", "Recover a chart point");
  invert->add_option("--a", a, "skyscraper mass")->required();
  invert->add_option("--b", b, "twisted skyscraper mass")->required();
  invert->add_option("--c", c, "structure-sheaf mass")->required();
  invert->add_option("--cell", cell_name, "delta0, delta-1 or i0");
  invert->add_option("--q", q, "mass weight");

  CLI::App* tiling = app.add_subcommand("tiling", "Emit the tiling figure");
  tiling->add_option("--mode", mode_name, "halfplane or disk");
  tiling->add_option("--q", q, "tiling weight");
  tiling->add_option("--depth", depth, "translates each way")->required();
  tiling->add_option("--size", size, "figure width in pixels");
  tiling->add_flag("--chords", chords, "straight chords in disk mode");
  tiling->add_option("--out", out_path, "output SVG path")->required();

  CLI::App* boundary =
      app.add_subcommand("boundary", "Boundary parametrization as JSON");
  boundary->add_option("--u", u_text, "square coordinate, may be +-inf")
      ->required();
  boundary->add_option("--ray", ray_text, "projective ray v:w");
  boundary->add_option("--q", q, "mass weight");
  boundary->add_option("--window", window_text, "index window lo:hi");

  CLI::App* phases =
      app.add_subcommand("phases", "Semistable phase cloud as CSV");
  phases->add_option("--z", z_text, "chart point re,im")->required();
  phases->add_option("--rmax", rmax, "rank bound");
  phases->add_option("--nmax", nmax, "twist bound");
  phases->add_flag("--shifts", shifts, "include shifted classes");
  phases->add_option("--out", out_path, "output CSV path (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "Run property suites");
  verify->add_option("--suite", suite, "all, hn, mass, roundtrip, boundary "
                                       "or lax");
  verify->add_option("--samples", samples, "fuzz samples per property");
  verify->add_option("--seed", seed, "RNG seed")
      ->each([&seed_given](const std::string&) { seed_given = true; });

  std::vector<std::string> args = preprocess(argc, argv);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitDomain;
  }

  try {
    if (chart->parsed()) return run_chart(z_text, twist);
    if (mass->parsed()) return run_mass(z_text, q, twist, window_text);
    if (invert->parsed()) return run_invert(a, b, c, cell_name, q);
    if (tiling->parsed()) {
      return run_tiling(mode_name, q, depth, size, chords, out_path);
    }
    if (boundary->parsed()) {
      return run_boundary(u_text, ray_text, q, window_text);
    }
    if (phases->parsed()) return run_phases(z_text, rmax, nmax, shifts,
                                            out_path);
    if (verify->parsed()) {
      return run_verify(suite, samples, seed_given ? seed : default_seed());
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitDomain;
}
