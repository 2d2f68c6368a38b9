// Command-line front end: thin subcommands over the library.
//
//   hcmc profile --a A --r R
//   hcmc gen --kind {horosphere|cylinder|vplane|tilted} [shape flags] --res NU NV --out mesh.obj
//   hcmc check {iso|claim|cusp-lap|cusp-area|gb|flow} [flags]
//   hcmc systole --ux UX --uy UY --vx VX --vy VY --t T
//   hcmc report --out DIR
//
// Exit status: 0 when every check passes, 1 when one fails, 2 on bad input.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hcmc/comparison.hpp"
#include "hcmc/cusp.hpp"
#include "hcmc/harness.hpp"
#include "hcmc/mesh_io.hpp"
#include "hcmc/report.hpp"
#include "hcmc/suite.hpp"
#include "hcmc/surfaces.hpp"

using namespace hcmc;
using json = nlohmann::ordered_json;

namespace {

struct GeodesicFlags {
  std::vector<double> axis = {0, 0};
  std::vector<double> semicircle;

  void add(CLI::App* app) {
    app->add_option("--axis", axis, "vertical geodesic through (x0, y0)")->expected(2);
    app->add_option("--semicircle", semicircle, "geodesic with ideal endpoints (ax, ay) (bx, by)")
        ->expected(4)
        ->excludes("--axis");
  }
  Geodesicd get() const {
    if (!semicircle.empty())
      return Semicircle<double>({semicircle[0], semicircle[1]}, {semicircle[2], semicircle[3]});
    return VerticalLine<double>{axis[0], axis[1]};
  }
};

struct LatticeFlags {
  double ux = 1, uy = 0, vx = 0, vy = 1;
  void add(CLI::App* app) {
    app->add_option("--ux", ux, "lattice vector u, x")->capture_default_str();
    app->add_option("--uy", uy, "lattice vector u, y")->capture_default_str();
    app->add_option("--vx", vx, "lattice vector v, x")->capture_default_str();
    app->add_option("--vy", vy, "lattice vector v, y")->capture_default_str();
  }
  Latticed get() const { return Latticed({ux, uy}, {vx, vy}); }
};

Side parse_side(const std::string& s) { return s == "-" || s == "minus" ? Side::Minus : Side::Plus; }

int finish(const std::vector<CheckReport>& reports) {
  std::cout << report_json(reports);
  return all_pass(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constant-mean-curvature surfaces in hyperbolic space: checks and meshes"};
  app.require_subcommand(1);
  int status = 0;

  // profile ----------------------------------------------------------------
  auto* profile = app.add_subcommand("profile", "print the comparison constants as JSON");
  double pa = 1, pr = 1;
  profile->add_option("--a", pa, "curvature scale a >= 0")->required();
  profile->add_option("--r", pr, "distance bound r > 0")->required();
  profile->callback([&] {
    const ComparisonProfile p = build_profile(pa, pr);
    json out = {{"a", p.a}, {"r", p.r}};
    out["k"] = p.k ? json(*p.k) : json(nullptr);
    out["C1"] = p.C1;
    out["C2"] = p.C2;
    out["C"] = p.C;
    std::cout << out.dump(2) << "\n";
  });

  // gen --------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "write a model-surface mesh as OBJ");
  std::string kind, out_path;
  std::vector<int> res = {16, 16};
  double gt = 1, grho = 0.5, gA = 1, gB = 0, gc = 0, gH = 0;
  std::string gside = "+";
  std::optional<double> u0, u1, v0, v1;
  bool quotient = false;
  long k1 = 1, k2 = 0;
  LatticeFlags glat;
  gen->add_option("--kind", kind, "horosphere | cylinder | vplane | tilted")
      ->required()
      ->check(CLI::IsMember({"horosphere", "cylinder", "vplane", "tilted"}));
  gen->add_option("--res", res, "cells NU NV")->expected(2)->capture_default_str();
  gen->add_option("--out", out_path, "output OBJ path")->required();
  gen->add_option("--t", gt, "horosphere height")->capture_default_str();
  gen->add_option("--rho", grho, "cylinder radius")->capture_default_str();
  gen->add_option("--A", gA, "plane coefficient A")->capture_default_str();
  gen->add_option("--B", gB, "plane coefficient B")->capture_default_str();
  gen->add_option("--c", gc, "plane offset c")->capture_default_str();
  gen->add_option("--H", gH, "tilted-plane mean curvature in [0, 1)")->capture_default_str();
  gen->add_option("--side", gside, "tilted-plane side + or -")->capture_default_str();
  gen->add_option("--u0", u0, "parameter range start (u)");
  gen->add_option("--u1", u1, "parameter range end (u)");
  gen->add_option("--v0", v0, "parameter range start (v; height for planes)");
  gen->add_option("--v1", v1, "parameter range end (v; height for planes)");
  gen->add_flag("--quotient", quotient,
                "vplane/tilted only: quotient annulus in the cusp, heights [v0, v1]");
  gen->add_option("--k1", k1, "annulus class k1")->capture_default_str();
  gen->add_option("--k2", k2, "annulus class k2")->capture_default_str();
  glat.add(gen);
  gen->callback([&] {
    const int nu = res[0], nv = res[1];
    std::optional<TriMesh> mesh;
    if (kind == "horosphere") {
      mesh = mesh_patch(Horosphere{gt}, {u0.value_or(0), u1.value_or(1), v0.value_or(0), v1.value_or(1)},
                        nu, nv);
    } else if (kind == "cylinder") {
      mesh = mesh_cylinder(GeodesicCylinder{VerticalLine<double>{}, grho}, u0.value_or(0),
                           u1.value_or(1), nu, nv);
    } else {
      const double H = kind == "vplane" ? 0.0 : gH;
      if (quotient) {
        AnnulusMeshOptions opt;
        opt.c = gc;
        opt.side = parse_side(gside);
        opt.t_lo = v0.value_or(1);
        opt.t_hi = v1.value_or(4);
        opt.n_along = nu;
        opt.n_height = nv;
        mesh = mesh_quotient_annulus(glat.get(), k1, k2, H, opt);
      } else {
        mesh = mesh_patch(TiltedPlane(gA, gB, gc, parse_side(gside), H),
                          {u0.value_or(-0.5), u1.value_or(0.5), v0.value_or(1), v1.value_or(2)}, nu, nv);
      }
    }
    save_obj(out_path, *mesh);
    std::cout << json{{"vertices", mesh->num_vertices()}, {"faces", mesh->num_faces()},
                      {"out", out_path}}
                     .dump()
              << "\n";
  });

  // check ------------------------------------------------------------------
  auto* check = app.add_subcommand("check", "run one check and print its report");
  check->require_subcommand(1);
  std::string mesh_path;
  double ca = 1, cr = 1, cH = 0, ctol = 0.01, kappa = kDefaultKappa;
  std::optional<double> declared_H;
  GeodesicFlags geo;
  LatticeFlags clat;

  auto* iso = check->add_subcommand("iso", "Area <= C(a, r) Length(boundary)");
  iso->add_option("--mesh", mesh_path, "OBJ mesh")->required();
  iso->add_option("--a", ca, "curvature scale a")->capture_default_str();
  iso->add_option("--r", cr, "distance bound r")->capture_default_str();
  iso->add_option("--H", declared_H, "mean curvature of the surface, compared with a");
  iso->add_option("--tol", ctol, "relative tolerance")->capture_default_str();
  geo.add(iso);
  iso->callback([&] {
    IsoOptions opt;
    opt.tolerance = ctol;
    opt.mean_curvature = declared_H;
    status = finish({check_isoperimetric(load_obj(mesh_path), ca, geo.get(), cr, opt)});
  });

  auto* claim = check->add_subcommand("claim", "min Laplacian(f o R) >= C2 - kappa h");
  claim->add_option("--mesh", mesh_path, "OBJ mesh")->required();
  claim->add_option("--a", ca, "curvature scale a")->capture_default_str();
  claim->add_option("--r", cr, "distance bound r")->capture_default_str();
  claim->add_option("--kappa", kappa, "discretization constant")->capture_default_str();
  geo.add(claim);
  claim->callback([&] {
    status = finish({check_claim_superharmonic(load_obj(mesh_path), ca, geo.get(), cr, kappa)});
  });

  auto* lap = check->add_subcommand("cusp-lap", "max Laplacian(log z) <= H^2 - 1 + kappa h");
  lap->add_option("--mesh", mesh_path, "OBJ mesh")->required();
  lap->add_option("--H", cH, "mean curvature, |H| < 1")->capture_default_str();
  lap->add_option("--kappa", kappa, "discretization constant")->capture_default_str();
  lap->callback([&] { status = finish({check_cusp_superharmonic(load_obj(mesh_path), cH, kappa)}); });

  auto* area = check->add_subcommand("cusp-area", "Area <= Length(Gamma_1) / (1 - H^2)");
  area->add_option("--mesh", mesh_path, "OBJ mesh in cusp coordinates")->required();
  area->add_option("--H", cH, "mean curvature in [0, 1)")->capture_default_str();
  area->add_option("--tol", ctol, "relative tolerance")->capture_default_str();
  clat.add(area);
  area->callback([&] { status = finish({check_cusp_area(load_obj(mesh_path), clat.get(), cH, ctol)}); });

  auto* gb = check->add_subcommand("gb", "polyhedral Gauss-Bonnet and curvature density");
  gb->add_option("--mesh", mesh_path, "OBJ mesh")->required();
  gb->add_option("--H", declared_H, "umbilic mean curvature; compares total/area with H^2 - 1");
  gb->add_option("--kappa", kappa, "discretization constant")->capture_default_str();
  gb->callback([&] { status = finish({check_total_curvature(load_obj(mesh_path), declared_H, kappa)}); });

  auto* flow = check->add_subcommand("flow", "decay rate of sigma_t(P_{H,c}) toward P_{H,0}");
  double fc = 1;
  std::string fside = "+";
  FlowOptions fopt;
  flow->add_option("--H", cH, "mean curvature in [0, 1)")->capture_default_str();
  flow->add_option("--c", fc, "plane offset, nonzero")->capture_default_str();
  flow->add_option("--side", fside, "+ or -")->capture_default_str();
  flow->add_option("--t-grid", fopt.t_grid, "flow times")->capture_default_str();
  flow->add_option("--samples", fopt.samples, "band samples per direction")->capture_default_str();
  flow->add_option("--slope", fopt.expected_slope, "expected slope")->capture_default_str();
  flow->add_option("--tol", fopt.slope_tolerance, "relative slope tolerance")->capture_default_str();
  flow->callback([&] {
    fopt.side = parse_side(fside);
    status = finish({check_scaling_flow(cH, fc, fopt)});
  });

  // systole ----------------------------------------------------------------
  auto* sys = app.add_subcommand("systole", "flat-torus systole of H(t) / G(u, v)");
  LatticeFlags slat;
  double st = 1;
  slat.add(sys);
  sys->add_option("--t", st, "height t > 0")->capture_default_str();
  sys->callback([&] {
    const Latticed L = slat.get();
    const ShortestVector sv = shortest_vector(L);
    json out = {{"systole", systole_torus(L, st)},
                {"injectivity_radius", injectivity_radius_torus(L, st)},
                {"m", sv.m},
                {"n", sv.n}};
    std::cout << out.dump(2) << "\n";
  });

  // report -----------------------------------------------------------------
  auto* rep = app.add_subcommand("report", "run the standard suite and write JSON/CSV");
  std::string out_dir;
  double rkappa = kDefaultKappa;
  rep->add_option("--out", out_dir, "output directory")->required();
  rep->add_option("--kappa", rkappa, "discretization constant")->capture_default_str();
  rep->callback([&] {
    const std::vector<CheckReport> reports = standard_suite(rkappa);
    emit_report(reports, out_dir);
    long passed = 0;
    for (const CheckReport& r : reports) {
      if (r.pass) {
        ++passed;
      } else {
        std::cerr << "FAIL " << r.name << "\n";
      }
    }
    std::cout << passed << "/" << reports.size() << " checks pass; written to " << out_dir << "\n";
    status = all_pass(reports) ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
