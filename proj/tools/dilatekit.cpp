// dilatekit: unitary-dilation laboratory CLI.
//
// Subcommands: dilate, cv-project, schrod, blockenc, resources, heat,
// selftest. Exit codes: 0 success, 1 contract/tolerance failure, 2 input
// error. Every run echoes its fully resolved configuration into the
// output header, and all numeric output is full-precision decimal.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dilatekit/block_encoding.hpp"
#include "dilatekit/complexity.hpp"
#include "dilatekit/heat.hpp"
#include "dilatekit/matrix_io.hpp"
#include "dilatekit/nagy.hpp"
#include "dilatekit/schrod_cv.hpp"
#include "dilatekit/schrod_dv.hpp"
#include "dilatekit/selftest.hpp"

namespace dk = dilatekit;

namespace {

struct ToleranceFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };

struct GlobalOpts {
  std::uint64_t seed = 12345;
  Format format = Format::Csv;
};

std::string fmt(double x) { return dk::format_double(x); }

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;  // extra comment lines for CSV output
};

std::string render_table(const Table& t, const std::string& config, Format format) {
  std::ostringstream os;
  if (format == Format::Csv) {
    os << "# config: " << config << "\n";
    for (const auto& note : t.notes) os << "# " << note << "\n";
    for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << t.columns[c];
    os << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
      os << "\n";
    }
  } else {
    os << "{\"config\": \"" << config << "\", \"rows\": [";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      os << (r ? ", " : "") << "{";
      for (std::size_t c = 0; c < t.columns.size(); ++c) {
        os << (c ? ", " : "") << "\"" << t.columns[c] << "\": " << t.rows[r][c];
      }
      os << "}";
    }
    os << "]}\n";
  }
  return os.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw dk::MatrixIoError("cannot open output file: " + path);
  out << text;
}

// ---------------------------------------------------------------- dilate

struct DilateOpts {
  std::string input, out;
  std::string mode = "single";
  int steps = 1;
  int checkK = -1;
};

int run_dilate(const DilateOpts& o, const GlobalOpts& g) {
  const dk::ComplexMatrix v = dk::load_matrix(o.input);
  const dk::DilationMatrix dil =
      (o.mode == "single") ? dk::dilate_single(v) : dk::dilate_chain(v, o.steps);

  std::ostringstream config;
  config << "command=dilate input=" << o.input << " mode=" << o.mode << " steps=" << o.steps
         << " check-k=" << o.checkK << " seed=" << g.seed;
  std::cout << "# config: " << config.str() << "\n";
  std::cout << "dimension=" << dil.u.rows() << " copies=" << dil.copies
            << " unitarity_defect=" << fmt(dk::unitarity_defect(dil.u)) << "\n";

  bool failed = false;
  if (o.checkK >= 0) {
    const int guarantee = dil.copies - 1;
    const int kMax = std::min(o.checkK, guarantee);
    if (kMax < o.checkK) {
      std::cout << "check-k clamped to k <= " << kMax << " (compression is guaranteed only up to "
                << guarantee << " steps for this dilation)\n";
    }
    double worst = 0.0;
    dk::ComplexMatrix power = dk::ComplexMatrix::Identity(v.rows(), v.rows());
    for (int k = 0; k <= kMax; ++k) {
      worst = std::max(worst, dk::two_norm(dk::compress(dil, k) - power));
      power = power * v;
    }
    std::cout << "max_compression_defect=" << fmt(worst) << " over k=0.." << kMax << "\n";
    failed = worst > 1e-10;
  }

  if (!o.out.empty()) dk::save_matrix(dil.u, o.out);
  if (failed) throw ToleranceFailure("compression defect above 1e-10");
  return 0;
}

// ------------------------------------------------------------ cv-project

struct CvOpts {
  std::string system, h0, out;
  double time = 1.0;
  double tol = 1e-8;
  double R = 200.0;
};

int run_cv_project(const CvOpts& o, const GlobalOpts& g) {
  const dk::ComplexMatrix a = dk::load_matrix(o.system);
  const dk::ComplexMatrix h0m = dk::load_matrix(o.h0);
  if (h0m.cols() != 1) throw std::invalid_argument("cv-project: h0 must be a column vector");
  const dk::ComplexVector h0 = h0m.col(0);

  const dk::HermitianSplit split = dk::hermitian_split(a, std::abs(o.time));
  const dk::CvProjectionResult res = dk::cv_project(split, o.time, h0, o.tol, o.R);
  const double selfCheck = (res.value - dk::residue_oracle(split, o.time, h0)).norm();

  std::ostringstream config;
  config << "command=cv-project system=" << o.system << " h0=" << o.h0 << " time=" << fmt(o.time)
         << " tol=" << fmt(o.tol) << " R=" << fmt(o.R) << " seed=" << g.seed;
  std::cout << "# config: " << config.str() << "\n";
  std::cout << "quad_error=" << fmt(res.quadError) << " tail_bound=" << fmt(res.tailBound)
            << " evaluations=" << res.evaluations << "\n";
  std::cout << "self_check_vs_residue_oracle=" << fmt(selfCheck) << "\n";

  if (!o.out.empty()) {
    std::ostringstream js;
    js << "{\"config\": \"" << config.str() << "\", \"value\": "
       << dk::matrix_to_json(res.value) << ", \"quad_error\": " << fmt(res.quadError)
       << ", \"tail_bound\": " << fmt(res.tailBound) << ", \"evaluations\": " << res.evaluations
       << ", \"self_check\": " << fmt(selfCheck) << "}\n";
    write_text(o.out, js.str());
  }
  if (selfCheck > 1e-6 + res.tailBound) {
    throw ToleranceFailure("cv-project self-check exceeded 1e-6 + tail bound");
  }
  return 0;
}

// ---------------------------------------------------------------- schrod

struct SchrodOpts {
  std::string system, u0, out, csv;
  double time = 1.0;
  double delta = 0.1;
  double L = 0.0;
  int N = 0;
  int K = 0;
  std::string recovery = "sum";
};

int run_schrod(const SchrodOpts& o, const GlobalOpts& g) {
  const dk::ComplexMatrix a = dk::load_matrix(o.system);
  const dk::ComplexMatrix u0m = dk::load_matrix(o.u0);
  if (u0m.cols() != 1) throw std::invalid_argument("schrod: u0 must be a column vector");
  const dk::ComplexVector u0 = u0m.col(0);

  dk::SchrodConfig cfg;
  cfg.delta = o.delta;
  cfg.L = o.L;
  cfg.N = o.N;
  cfg.K = o.K;
  double pStar = 1.0;
  if (o.recovery == "sum") {
    cfg.recovery = dk::SchrodConfig::Recovery::WeightedSum;
  } else if (o.recovery.rfind("p:", 0) == 0) {
    cfg.recovery = dk::SchrodConfig::Recovery::PPoint;
    pStar = std::stod(o.recovery.substr(2));
  } else {
    throw std::invalid_argument("schrod: --recovery must be 'sum' or 'p:<pstar>'");
  }

  const auto start = std::chrono::steady_clock::now();
  const dk::HermitianSplit split = dk::hermitian_split(a, o.time);
  const dk::EtaGrid grid = cfg.make_grid();

  const dk::ComplexVector recovered =
      (cfg.recovery == dk::SchrodConfig::Recovery::WeightedSum)
          ? dk::solve_weighted_sum(split, u0, o.time, grid, cfg.K)
          : dk::solve_p_recovery(split, u0, o.time, grid, pStar, cfg.K);

  const dk::ComplexVector reference = dk::matrix_exp(-o.time * a) * u0;
  const double recoveryError = (recovered - reference).norm() / reference.norm();
  const double defect = dk::dilation_defect(split, o.time, grid);
  const double wallMs =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::ostringstream config;
  config << "command=schrod system=" << o.system << " u0=" << o.u0 << " time=" << fmt(o.time)
         << " delta=" << fmt(cfg.delta) << " L=" << fmt(grid.L) << " N=" << grid.N
         << " K=" << cfg.K << " recovery=" << o.recovery << " seed=" << g.seed;

  Table t;
  t.columns = {"delta", "L", "N", "K", "defect", "recovery_error", "wall_ms"};
  t.rows.push_back({fmt(cfg.delta), fmt(grid.L), std::to_string(grid.N), std::to_string(cfg.K),
                    fmt(defect), fmt(recoveryError), fmt(wallMs)});
  const std::string text = render_table(t, config.str(), g.format);
  std::cout << text;
  if (!o.csv.empty()) write_text(o.csv, text);

  if (!o.out.empty()) {
    std::ostringstream js;
    js << "{\"config\": \"" << config.str() << "\", \"value\": " << dk::matrix_to_json(recovered)
       << ", \"defect\": " << fmt(defect) << ", \"recovery_error\": " << fmt(recoveryError)
       << "}\n";
    write_text(o.out, js.str());
  }
  return 0;
}

// -------------------------------------------------------------- blockenc

struct BlockVerifyOpts {
  std::string be, target;
  double alpha = 1.0;
  int ancillas = 0;
  double declared = 0.0;
};

int run_blockenc_verify(const BlockVerifyOpts& o, const GlobalOpts& g) {
  const dk::ComplexMatrix u = dk::load_matrix(o.be);
  const dk::ComplexMatrix target = dk::load_matrix(o.target);
  const dk::BlockEncoding be =
      dk::make_block_encoding(u, o.alpha, o.ancillas, o.declared, target.rows());
  const double err = dk::verify(be, target);

  std::cout << "# config: command=blockenc-verify be=" << o.be << " target=" << o.target
            << " alpha=" << fmt(o.alpha) << " ancillas=" << o.ancillas
            << " declared=" << fmt(o.declared) << " seed=" << g.seed << "\n";
  std::cout << "verify_norm=" << fmt(err) << " declared_error=" << fmt(o.declared) << "\n";
  if (err > o.declared + 1e-10) throw ToleranceFailure("verify norm above declared error + 1e-10");
  return 0;
}

struct BlockTrotterOpts {
  std::string system, report;
  double time = 1.0;
  std::vector<int> segments = {8, 16, 32, 64, 128};
};

int run_blockenc_trotter(const BlockTrotterOpts& o, const GlobalOpts& g) {
  const dk::ComplexMatrix a = dk::load_matrix(o.system);
  const dk::HermitianSplit split = dk::hermitian_split(a, o.time);
  const dk::ComplexMatrix target = dk::matrix_exp(-o.time * a);

  std::ostringstream config;
  config << "command=blockenc-trotter system=" << o.system << " time=" << fmt(o.time)
         << " segments=";
  for (std::size_t i = 0; i < o.segments.size(); ++i) config << (i ? "," : "") << o.segments[i];
  config << " seed=" << g.seed;

  Table t;
  t.columns = {"K", "true_error"};
  std::vector<double> ks, errs;
  for (int k : o.segments) {
    const double err = dk::verify(dk::trotter_pipeline(split, o.time, k), target);
    t.rows.push_back({std::to_string(k), fmt(err)});
    ks.push_back(k);
    errs.push_back(err);
  }
  if (ks.size() >= 3 && *std::min_element(errs.begin(), errs.end()) > 0) {
    t.notes.push_back("loglog_slope=" + fmt(dk::scaling_fit(ks, errs)));
  }
  const std::string text = render_table(t, config.str(), g.format);
  std::cout << text;
  if (!o.report.empty()) write_text(o.report, text);
  return 0;
}

// ------------------------------------------------------------- resources

struct ResourcesOpts {
  std::string method = "schrod";
  std::string out;
  double ratio = 1.0, tau = 1.0, s = 1.0, normmax = 1.0, lambda0 = 1.0, m = 1.0;
  std::vector<double> deltas = {0.1};
};

int run_resources(const ResourcesOpts& o, const GlobalOpts& g) {
  std::ostringstream config;
  config << "command=resources method=" << o.method << " ratio=" << fmt(o.ratio)
         << " tau=" << fmt(o.tau) << " s=" << fmt(o.s) << " normmax=" << fmt(o.normmax)
         << " lambda0=" << fmt(o.lambda0) << " m=" << fmt(o.m) << " seed=" << g.seed;

  Table t;
  t.columns = {"method", "delta", "K", "L", "N", "queries", "gates", "ancillas"};
  for (double delta : o.deltas) {
    dk::ResourceInputs in;
    in.normRatio = o.ratio;
    in.tau = o.tau;
    in.delta = delta;
    in.sparsity = o.s;
    in.normMax = o.normmax;
    in.lambda0 = o.lambda0;
    in.m = o.m;
    const dk::ResourceEstimate est =
        (o.method == "block") ? dk::estimate_block(in) : dk::estimate_schrod(in);
    t.rows.push_back({(g.format == Format::Json) ? ("\"" + o.method + "\"") : o.method,
                      fmt(delta), std::to_string(est.K), fmt(est.L), std::to_string(est.N),
                      fmt(est.queries), fmt(est.gates), fmt(est.ancillaQubits)});
  }
  const std::string text = render_table(t, config.str(), g.format);
  std::cout << text;
  if (!o.out.empty()) write_text(o.out, text);
  return 0;
}

// ------------------------------------------------------------------ heat

struct HeatOpts {
  int n = 64;
  double T = 0.1;
  std::vector<double> deltas = {0.2, 0.1, 0.05, 0.025};
  std::string out;
};

int run_heat(const HeatOpts& o, const GlobalOpts& g) {
  const auto rows = dk::run_heat_benchmark(o.n, o.T, o.deltas);

  std::ostringstream config;
  config << "command=heat n=" << o.n << " T=" << fmt(o.T) << " deltas=";
  for (std::size_t i = 0; i < o.deltas.size(); ++i) config << (i ? "," : "") << fmt(o.deltas[i]);
  config << " seed=" << g.seed;

  Table t;
  t.columns = {"n", "T", "delta", "L", "N", "recovery_err", "defect", "block_queries",
               "schrod_queries", "wall_ms"};
  for (const auto& r : rows) {
    t.rows.push_back({std::to_string(r.n), fmt(r.T), fmt(r.delta), fmt(r.L), std::to_string(r.N),
                      fmt(r.recoveryErr), fmt(r.defect), fmt(r.blockQueries),
                      fmt(r.schrodQueries), fmt(r.wallMs)});
  }
  if (!rows.empty()) {
    t.notes.push_back("measured normMax=" + fmt(rows.front().normMax) +
                      " (diagonal 2/h^2 dominates; grows as 1/h^2)");
    t.notes.push_back("measured normRatio=" + fmt(rows.front().normRatio));
  }
  const std::string text = render_table(t, config.str(), g.format);
  std::cout << text;
  if (!o.out.empty()) write_text(o.out, text);
  return 0;
}

// -------------------------------------------------------------- selftest

struct SelftestOpts {
  std::string out;
};

int run_selftest_cmd(const SelftestOpts& o, const GlobalOpts& g) {
  const dk::SelftestReport report = dk::run_selftest(g.seed);
  if (o.out.empty()) {
    std::cout << report.csv;
  } else {
    write_text(o.out, report.csv);
    std::cout << "selftest " << (report.passed ? "passed" : "FAILED") << ", report written to "
              << o.out << "\n";
  }
  if (!report.passed) throw ToleranceFailure("selftest checks failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dilatekit: numerical laboratory for unitary dilations of exp(-At)"};
  app.require_subcommand(1);
  app.set_config("--config")->description("TOML-style key=value config file; flags override");
  app.allow_config_extras(false);

  GlobalOpts global;
  app.add_option("--seed", global.seed, "seed for random-instance suites");
  app.add_option("--format", global.format, "output format for tables")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"csv", Format::Csv}, {"json", Format::Json}}));

  DilateOpts dilate;
  auto* cmdDilate = app.add_subcommand("dilate", "unitary dilation of a contraction");
  cmdDilate->add_option("--input", dilate.input, "contraction matrix V (JSON)")->required();
  cmdDilate->add_option("--mode", dilate.mode)->check(CLI::IsMember({"single", "chain"}));
  cmdDilate->add_option("--steps", dilate.steps, "chain length N");
  cmdDilate->add_option("--check-k", dilate.checkK, "verify compression up to this power");
  cmdDilate->add_option("--out", dilate.out, "write the dilated unitary here");

  CvOpts cv;
  auto* cmdCv = app.add_subcommand("cv-project", "continuous-variable projection integral");
  cmdCv->add_option("--system", cv.system)->required();
  cmdCv->add_option("--h0", cv.h0)->required();
  cmdCv->add_option("--time", cv.time);
  cmdCv->add_option("--tol", cv.tol);
  cmdCv->add_option("--R", cv.R);
  cmdCv->add_option("--out", cv.out);

  SchrodOpts schrod;
  auto* cmdSchrod = app.add_subcommand("schrod", "discretized Schrodingerisation solve");
  cmdSchrod->add_option("--system", schrod.system)->required();
  cmdSchrod->add_option("--u0", schrod.u0)->required();
  cmdSchrod->add_option("--time", schrod.time);
  cmdSchrod->add_option("--delta", schrod.delta);
  cmdSchrod->add_option("--L", schrod.L);
  cmdSchrod->add_option("--N", schrod.N);
  cmdSchrod->add_option("--K", schrod.K);
  cmdSchrod->add_option("--recovery", schrod.recovery, "sum or p:<pstar>");
  cmdSchrod->add_option("--out", schrod.out);
  cmdSchrod->add_option("--csv", schrod.csv);

  auto* cmdBlockenc = app.add_subcommand("blockenc", "block-encoding tools");
  cmdBlockenc->require_subcommand(1);
  BlockVerifyOpts bv;
  auto* cmdBv = cmdBlockenc->add_subcommand("verify", "check an encoding against a target");
  cmdBv->add_option("--be", bv.be)->required();
  cmdBv->add_option("--target", bv.target)->required();
  cmdBv->add_option("--alpha", bv.alpha);
  cmdBv->add_option("--ancillas", bv.ancillas);
  cmdBv->add_option("--delta", bv.declared, "declared error");
  BlockTrotterOpts bt;
  auto* cmdBt = cmdBlockenc->add_subcommand("trotter", "Trotter pipeline error report");
  cmdBt->add_option("--system", bt.system)->required();
  cmdBt->add_option("--time", bt.time);
  cmdBt->add_option("--segments", bt.segments)->delimiter(',');
  cmdBt->add_option("--report", bt.report);

  ResourcesOpts res;
  auto* cmdRes = app.add_subcommand("resources", "query/gate/ancilla estimators");
  cmdRes->add_option("--method", res.method)->check(CLI::IsMember({"block", "schrod"}));
  cmdRes->add_option("--ratio", res.ratio);
  cmdRes->add_option("--tau", res.tau);
  cmdRes->add_option("--delta", res.deltas)->delimiter(',');
  cmdRes->add_option("--s", res.s);
  cmdRes->add_option("--normmax", res.normmax);
  cmdRes->add_option("--lambda0", res.lambda0);
  cmdRes->add_option("--m", res.m);
  cmdRes->add_option("--out", res.out);

  HeatOpts heat;
  auto* cmdHeat = app.add_subcommand("heat", "heat-equation benchmark");
  cmdHeat->add_option("--n", heat.n);
  cmdHeat->add_option("--T", heat.T);
  cmdHeat->add_option("--deltas", heat.deltas)->delimiter(',');
  cmdHeat->add_option("--out", heat.out);

  SelftestOpts selftest;
  auto* cmdSelftest = app.add_subcommand("selftest", "seeded verification suites");
  cmdSelftest->add_option("--out", selftest.out, "CSV report path (stdout if omitted)");

  // Let --seed/--format appear after the subcommand name as well.
  for (CLI::App* sub : app.get_subcommands(nullptr)) {
    sub->fallthrough();
    for (CLI::App* nested : sub->get_subcommands(nullptr)) nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmdDilate->parsed()) return run_dilate(dilate, global);
    if (cmdCv->parsed()) return run_cv_project(cv, global);
    if (cmdSchrod->parsed()) return run_schrod(schrod, global);
    if (cmdBlockenc->parsed()) {
      if (cmdBv->parsed()) return run_blockenc_verify(bv, global);
      return run_blockenc_trotter(bt, global);
    }
    if (cmdRes->parsed()) return run_resources(res, global);
    if (cmdHeat->parsed()) return run_heat(heat, global);
    if (cmdSelftest->parsed()) return run_selftest_cmd(selftest, global);
  } catch (const ToleranceFailure& e) {
    std::cerr << "tolerance failure: " << e.what() << "\n";
    return 1;
  } catch (const dk::QuadratureError& e) {
    std::cerr << "quadrature failure: " << e.what() << "\n";
    return 1;
  } catch (const dk::MatrixIoError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
