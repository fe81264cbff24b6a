#include "mzq/cli.hpp"

#include "mzq/error.hpp"
#include "mzq/integrands.hpp"
#include "mzq/io.hpp"
#include "mzq/mz.hpp"
#include "mzq/oracle.hpp"
#include "mzq/poly_rule.hpp"
#include "mzq/sample_data.hpp"
#include "mzq/tri_rule.hpp"
#include "mzq/version.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

namespace mzq::cli {

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitOracleBudget = 4;

int exit_code_for(const Error& e) {
  static const std::set<std::string> numerical = {
      "IllConditionedCollocation", "NonFiniteSample", "DegeneratePolynomial"};
  return numerical.count(e.code()) ? kExitNumerical : kExitInput;
}

std::string now_iso8601() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string fmt5(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4e", v);
  return buf;
}

void write_manifest(const fs::path& where, const std::string& command,
                    const io::json& params, std::optional<std::uint64_t> seed,
                    const std::vector<std::string>& outputs) {
  io::RunManifest m;
  m.command = command;
  m.parameters = params;
  if (seed) {
    m.seed = *seed;
    m.has_seed = true;
  }
  m.version = kVersion;
  m.timestamp = now_iso8601();
  m.outputs = outputs;
  io::write_json_file(where, io::manifest_to_json(m));
}

Triangle triangle_from_flat(const std::vector<double>& v) {
  if (v.size() != 6)
    throw Error("DegenerateInput", "--vertices needs 6 numbers: x1 y1 x2 y2 x3 y3");
  return Triangle({v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]});
}

ScatteredSet scattered_from_file(const std::string& path) {
  if (path == "sample") return sample_survey_with_interior();
  if (path == "sample-boundary") return sample_survey_boundary_only();
  return io::scattered_from_json(io::load_json_file(path));
}

double parse_p(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF") return kInfinity;
  try {
    return std::stod(text);
  } catch (const std::exception&) {
    throw Error("DegenerateInput", "--p must be a number >= 1 or 'inf'");
  }
}

// ---------------------------------------------------------------- tri-rule

struct TriRuleOpts {
  std::vector<double> vertices;
  int degree = 1;
  std::string out;
};

int cmd_tri_rule(const TriRuleOpts& opt) {
  const Triangle t = triangle_from_flat(opt.vertices);
  const TriangleRule rule = triangle_weights(t, opt.degree);
  double wsum = 0.0;
  for (double w : rule.weights) wsum += w;
  std::cout << "degree: " << rule.degree << "\n"
            << "points: " << rule.points.size() << "\n"
            << "weight sum: " << wsum << " (triangle area " << t.area() << ")\n"
            << "condition estimate: " << fmt5(rule.condition) << "\n";
  if (rule.all_positive)
    std::cout << "all weights positive\n";
  else
    std::cout << "warning: nonpositive weights present\n";
  if (!opt.out.empty()) {
    io::write_json_file(opt.out, io::triangle_rule_to_json(rule));
    io::json params{{"vertices", opt.vertices}, {"degree", opt.degree}, {"out", opt.out}};
    write_manifest(opt.out + ".manifest.json", "tri-rule", params, std::nullopt, {opt.out});
  }
  return kExitOk;
}

// --------------------------------------------------------------- integrate

struct IntegrateOpts {
  std::string domain = "tri";
  std::vector<double> vertices;
  std::string points_file;
  int degree = 1;
  int refine = 0;
  std::string fn = "f3";
  double oracle_tol = 1e-12;
};

int cmd_integrate(const IntegrateOpts& opt) {
  const Integrand f = make_integrand(opt.fn);
  OracleConfig cfg;
  cfg.tolerance = opt.oracle_tol;

  double quad = 0.0;
  IntegrationResult oracle;
  if (opt.domain == "tri") {
    const Triangle t = triangle_from_flat(opt.vertices);
    quad = apply_rule(triangle_weights(t, opt.degree), f);
    oracle = integrate_triangle(t, f, cfg);
  } else if (opt.domain == "poly") {
    const ScatteredSet s = scattered_from_file(opt.points_file);
    Mesh mesh = triangulate(s);
    if (opt.refine > 0) mesh = refine_uniform(mesh, opt.refine);
    quad = apply_polygon_rule(polygon_weights(mesh), f);
    oracle = integrate_polygon(mesh, f, cfg);
  } else {
    throw Error("DegenerateInput", "--domain must be tri or poly");
  }

  const double rel = std::fabs(oracle.value - quad) / std::fabs(oracle.value);
  std::printf("quadrature value: %.17g\n", quad);
  std::printf("oracle value:     %.17g +/- %s%s\n", oracle.value,
              fmt5(oracle.error_estimate).c_str(),
              oracle.converged ? "" : "  (budget exhausted)");
  std::printf("relative error:   %s\n", fmt5(rel).c_str());
  return oracle.converged ? kExitOk : kExitOracleBudget;
}

// ---------------------------------------------------------------------- mz

struct MzOpts {
  std::string domain = "tri";
  std::vector<double> vertices;
  std::string points_file;
  int degree = 1;
  std::string p_text = "2";
  int N = 1;
  int trials = 100;
  std::uint64_t seed = 1;
  int refine = 0;
  double oracle_tol = 1e-10;
  std::string out;
};

int cmd_mz(const MzOpts& opt) {
  const double p = parse_p(opt.p_text);
  OracleConfig cfg;
  cfg.tolerance = opt.oracle_tol;

  std::vector<MZReport> reports;
  if (opt.domain == "tri") {
    if (opt.refine > 0)
      throw Error("DegenerateInput", "--refine applies to --domain poly only");
    const Triangle t = triangle_from_flat(opt.vertices);
    reports.push_back(
        mz_ensemble_triangle(t, opt.degree, p, opt.N, opt.trials, opt.seed, cfg));
  } else if (opt.domain == "poly") {
    const ScatteredSet s = scattered_from_file(opt.points_file);
    Mesh mesh = triangulate(s);
    for (int level = 0; level <= opt.refine; ++level) {
      if (level > 0) mesh = refine_uniform(mesh, 1);
      reports.push_back(
          mz_ensemble_polygon(polygon_weights(mesh), p, opt.N, opt.trials, opt.seed, cfg));
    }
  } else {
    throw Error("DegenerateInput", "--domain must be tri or poly");
  }

  std::ostringstream csv;
  csv << mz_csv_header() << "\n";
  for (const MZReport& r : reports) csv << mz_csv_row(r) << "\n";
  std::cout << csv.str();
  if (!opt.out.empty()) {
    io::write_text_file(opt.out, csv.str());
    io::json params{{"domain", opt.domain}, {"p", opt.p_text},   {"N", opt.N},
                    {"trials", opt.trials}, {"refine", opt.refine}, {"out", opt.out},
                    {"oracle_tol", opt.oracle_tol}};
    if (opt.domain == "tri") {
      params["vertices"] = opt.vertices;
      params["degree"] = opt.degree;
    } else {
      params["points"] = opt.points_file;
    }
    write_manifest(opt.out + ".manifest.json", "mz", params, opt.seed, {opt.out});
  }
  return kExitOk;
}

// ------------------------------------------------------------------- repro

struct ReproOpts {
  int table = 1;
  std::string out = "repro";
};

int cmd_repro_table1(const fs::path& dir) {
  const Triangle t({0.0, 0.0}, {0.0, 1.0}, {1.0, 0.0});
  const std::vector<int> degrees = {1, 3, 5, 7, 9, 11};
  const std::vector<std::string> fns = {"f1", "f2", "f3"};
  const std::vector<double> tols = {1e-12, 1e-8, 1e-13};

  io::json full;
  std::vector<IntegrationResult> oracles(fns.size());
  for (std::size_t fi = 0; fi < fns.size(); ++fi) {
    OracleConfig cfg;
    cfg.tolerance = tols[fi];
    oracles[fi] = integrate_triangle(t, make_integrand(fns[fi]), cfg);
    full["oracle"][fns[fi]] = {{"value", oracles[fi].value},
                               {"error_estimate", oracles[fi].error_estimate},
                               {"converged", oracles[fi].converged}};
  }

  std::ostringstream csv;
  csv << "d,f1,f2,f3\n";
  for (int d : degrees) {
    const TriangleRule rule = triangle_weights(t, d);
    csv << d;
    for (std::size_t fi = 0; fi < fns.size(); ++fi) {
      const double quad = apply_rule(rule, make_integrand(fns[fi]));
      const double rel = std::fabs(oracles[fi].value - quad) / std::fabs(oracles[fi].value);
      csv << "," << fmt5(rel);
      full["rows"][std::to_string(d)][fns[fi]] = {{"quadrature", quad},
                                                  {"relative_error", rel}};
    }
    csv << "\n";
  }
  io::write_text_file(dir / "table1.csv", csv.str());
  io::write_json_file(dir / "table1.json", full);
  std::cout << csv.str();
  return kExitOk;
}

int cmd_repro_table2(const fs::path& dir) {
  const std::vector<std::string> fns = {"f1", "f2", "f3"};
  OracleConfig cfg;
  cfg.tolerance = 1e-10;

  const Mesh boundary_mesh = triangulate(sample_survey_boundary_only());
  const Mesh full_mesh = triangulate(sample_survey_with_interior());

  io::json full;
  std::ostringstream csv;
  csv << "config,f1,f2,f3\n";
  struct Config {
    const char* name;
    const Mesh* mesh;
  };
  const Config configs[2] = {{"boundary", &boundary_mesh},
                             {"boundary_interior", &full_mesh}};
  for (const Config& c : configs) {
    const PolygonRule rule = polygon_weights(*c.mesh);
    csv << c.name;
    for (const std::string& fn : fns) {
      const Integrand f = make_integrand(fn);
      const IntegrationResult oracle = integrate_polygon(*c.mesh, f, cfg);
      const double quad = apply_polygon_rule(rule, f);
      const double rel = std::fabs(oracle.value - quad) / std::fabs(oracle.value);
      csv << "," << fmt5(rel);
      full[c.name][fn] = {{"quadrature", quad},
                          {"oracle", oracle.value},
                          {"relative_error", rel}};
    }
    csv << "\n";
  }
  io::write_text_file(dir / "table2.csv", csv.str());
  io::write_json_file(dir / "table2.json", full);
  std::cout << csv.str();
  return kExitOk;
}

int cmd_repro(const ReproOpts& opt) {
  const fs::path dir(opt.out);
  fs::create_directories(dir);
  int rc = kExitOk;
  std::vector<std::string> outputs;
  if (opt.table == 1) {
    rc = cmd_repro_table1(dir);
    outputs = {(dir / "table1.csv").string(), (dir / "table1.json").string()};
  } else if (opt.table == 2) {
    rc = cmd_repro_table2(dir);
    outputs = {(dir / "table2.csv").string(), (dir / "table2.json").string()};
  } else {
    throw Error("DegenerateInput", "--table must be 1 or 2");
  }
  io::json params{{"table", opt.table}, {"out", opt.out}};
  write_manifest(dir / "manifest.json", "repro", params, std::nullopt, outputs);
  return rc;
}

} // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"Quadrature rules with Marcinkiewicz-Zygmund properties on "
               "triangles and polygons"};
  app.require_subcommand(1);

  TriRuleOpts tr;
  CLI::App* tri_rule_cmd =
      app.add_subcommand("tri-rule", "Build a triangle quadrature rule");
  tri_rule_cmd->add_option("--vertices", tr.vertices, "x1 y1 x2 y2 x3 y3")
      ->expected(6)
      ->required();
  tri_rule_cmd->add_option("--degree", tr.degree, "rule degree (1..12)")->required();
  tri_rule_cmd->add_option("--out", tr.out, "rule JSON output path");

  IntegrateOpts in;
  CLI::App* integrate_cmd =
      app.add_subcommand("integrate", "Integrate a function and compare to the oracle");
  integrate_cmd->add_option("--domain", in.domain, "tri or poly")->required();
  integrate_cmd->add_option("--vertices", in.vertices, "triangle vertices")->expected(6);
  integrate_cmd->add_option("--points", in.points_file,
                            "scattered-points JSON ('sample' for the shipped region)");
  integrate_cmd->add_option("--degree", in.degree, "triangle rule degree");
  integrate_cmd->add_option("--refine", in.refine, "uniform refinements (poly)");
  integrate_cmd->add_option("--fn", in.fn, "f1|f2|f3 or an expression in x,y")->required();
  integrate_cmd->add_option("--oracle-tol", in.oracle_tol, "oracle relative tolerance");

  MzOpts mz;
  CLI::App* mz_cmd = app.add_subcommand("mz", "Run a Marcinkiewicz-Zygmund ensemble");
  mz_cmd->add_option("--domain", mz.domain, "tri or poly")->required();
  mz_cmd->add_option("--vertices", mz.vertices, "triangle vertices")->expected(6);
  mz_cmd->add_option("--points", mz.points_file, "scattered-points JSON");
  mz_cmd->add_option("--degree", mz.degree, "triangle rule degree (1, 3, 5)");
  mz_cmd->add_option("--p", mz.p_text, "1, 2, inf, or any p >= 1")->required();
  mz_cmd->add_option("--N", mz.N, "polynomial degree of the samples")->required();
  mz_cmd->add_option("--trials", mz.trials, "ensemble size");
  mz_cmd->add_option("--seed", mz.seed, "ensemble seed");
  mz_cmd->add_option("--refine", mz.refine, "uniform refinement levels (poly)");
  mz_cmd->add_option("--oracle-tol", mz.oracle_tol, "oracle tolerance for norms");
  mz_cmd->add_option("--out", mz.out, "CSV output path");

  ReproOpts rp;
  CLI::App* repro_cmd = app.add_subcommand("repro", "Reproduce the benchmark tables");
  repro_cmd->add_option("--table", rp.table, "1 or 2")->required();
  repro_cmd->add_option("--out", rp.out, "output directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back(); // drop program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (tri_rule_cmd->parsed()) return cmd_tri_rule(tr);
    if (integrate_cmd->parsed()) return cmd_integrate(in);
    if (mz_cmd->parsed()) return cmd_mz(mz);
    if (repro_cmd->parsed()) return cmd_repro(rp);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitInput;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  args.reserve(static_cast<std::size_t>(argc));
  for (int i = 0; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

} // namespace mzq::cli
