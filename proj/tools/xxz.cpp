// Command-line front end: kernel profiles, integral-equation solves, Fermi point
// location, asymptotic formulas, the omega bound profile, verification and h-scans.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xxz/asympt.hpp"
#include "xxz/bank.hpp"
#include "xxz/fermi.hpp"
#include "xxz/thermo.hpp"
#include "xxz/verify.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

struct OutputOptions {
  std::string format = "csv";
  std::string out;
  bool verbose = false;
};

void emit(const OutputOptions& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream f(opts.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + opts.out);
  f << text;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string profile_csv(const std::vector<double>& xs, const std::vector<double>& ys) {
  std::string s = "lambda,value\n";
  for (size_t i = 0; i < xs.size(); ++i) s += fmt(xs[i]) + "," + fmt(ys[i]) + "\n";
  return s;
}

std::string profile_json(const std::vector<double>& xs, const std::vector<double>& ys) {
  nlohmann::json j;
  j["lambda"] = xs;
  j["value"] = ys;
  return j.dump(2) + "\n";
}

std::string profile(const OutputOptions& o, const std::vector<double>& xs,
                    const std::vector<double>& ys) {
  return o.format == "json" ? profile_json(xs, ys) : profile_csv(xs, ys);
}

std::vector<double> linspace(double lo, double hi, int points) {
  if (points < 2 || !(hi > lo)) throw std::domain_error("grid needs points >= 2 and max > min");
  std::vector<double> xs(points);
  for (int i = 0; i < points; ++i) xs[i] = lo + (hi - lo) * i / (points - 1);
  return xs;
}

int default_n() {
  if (const char* env = std::getenv("XXZ_THERMO_N")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 128;
}

// --gamma in radians or --delta mapped through arccos; exactly one required
struct AnisotropyFlags {
  std::optional<double> gamma_flag;
  std::optional<double> delta_flag;

  void attach(CLI::App* cmd) {
    auto* g = cmd->add_option("--gamma", gamma_flag, "anisotropy gamma in radians");
    auto* d = cmd->add_option("--delta", delta_flag, "anisotropy Delta = cos(gamma)");
    g->excludes(d);
  }

  double gamma() const {
    if (gamma_flag) return *gamma_flag;
    if (delta_flag) {
      if (!(*delta_flag > -1.0 && *delta_flag < 1.0))
        throw std::domain_error("--delta must lie in (-1, 1)");
      return std::acos(*delta_flag);
    }
    throw CLI::RequiredError("--gamma or --delta");
  }
};

struct ScanRow {
  double h, q_f, z_f, p_f, v_f;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"XXZ chain thermodynamic-limit integral equations"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");  // leave -h free: --h is the field flag

  OutputOptions out;
  app.add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out.out, "write output to FILE instead of stdout");
  app.add_flag("--verbose", out.verbose, "metadata to stderr");

  int n = default_n();
  app.add_option("--n", n, "quadrature node count")->check(CLI::PositiveNumber);

  // kernel
  auto* kernel_cmd = app.add_subcommand("kernel", "bare kernel / momentum / phase profile");
  AnisotropyFlags kernel_aniso;
  kernel_aniso.attach(kernel_cmd);
  std::string kernel_quantity = "kernel";
  double kmin = -15.0, kmax = 15.0;
  int kpoints = 201;
  kernel_cmd->add_option("--quantity", kernel_quantity, "kernel|fourier|momentum|phase")
      ->check(CLI::IsMember({"kernel", "fourier", "momentum", "phase"}));
  kernel_cmd->add_option("--min", kmin, "grid start");
  kernel_cmd->add_option("--max", kmax, "grid end");
  kernel_cmd->add_option("--points", kpoints, "grid size");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "dressed quantity on the Fermi interval");
  AnisotropyFlags solve_aniso;
  solve_aniso.attach(solve_cmd);
  std::string solve_quantity = "charge";
  double solve_q = 1.0, solve_j = 1.0, solve_h = 0.0;
  solve_cmd->add_option("--quantity", solve_quantity, "charge|density|energy|momentum")
      ->check(CLI::IsMember({"charge", "density", "energy", "momentum"}));
  solve_cmd->add_option("--q", solve_q, "integration endpoint Q")->required();
  solve_cmd->add_option("--j", solve_j, "coupling J");
  solve_cmd->add_option("--h", solve_h, "magnetic field h");

  // fermi
  auto* fermi_cmd = app.add_subcommand("fermi", "Fermi rapidity and dressed constants");
  AnisotropyFlags fermi_aniso;
  fermi_aniso.attach(fermi_cmd);
  double fermi_j = 1.0, fermi_h = 0.0;
  fermi_cmd->add_option("--j", fermi_j, "coupling J");
  fermi_cmd->add_option("--h", fermi_h, "magnetic field h")->required();

  // magnetic
  auto* magnetic_cmd = app.add_subcommand("magnetic", "rapidity for a target filling");
  AnisotropyFlags magnetic_aniso;
  magnetic_aniso.attach(magnetic_cmd);
  double magnetic_m = 0.0;
  magnetic_cmd->add_option("--m", magnetic_m, "target filling in [0, 1/2)")->required();

  // asympt
  auto* asympt_cmd = app.add_subcommand("asympt", "closed-form asymptotic values");
  AnisotropyFlags asympt_aniso;
  asympt_aniso.attach(asympt_cmd);
  double asympt_j = 1.0, asympt_h = 0.0, asympt_q = 0.0;
  asympt_cmd->add_option("--j", asympt_j, "coupling J");
  asympt_cmd->add_option("--h", asympt_h, "field for the small-h rapidity");
  asympt_cmd->add_option("--q", asympt_q, "endpoint for the large-Q density value");

  // bank
  auto* bank_cmd = app.add_subcommand("bank", "omega profile on the other bank");
  AnisotropyFlags bank_aniso;
  bank_aniso.attach(bank_cmd);
  double bank_j = 1.0, bank_h = 0.0, bmin = -15.0, bmax = 15.0;
  int bpoints = 201;
  bool bank_check = false;
  bank_cmd->add_option("--j", bank_j, "coupling J");
  bank_cmd->add_option("--h", bank_h, "magnetic field h")->required();
  bank_cmd->add_option("--min", bmin, "grid start");
  bank_cmd->add_option("--max", bmax, "grid end");
  bank_cmd->add_option("--points", bpoints, "grid size");
  bank_cmd->add_flag("--check", bank_check, "fail (exit 3) if omega <= h/4 anywhere");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite");
  std::string verify_suite = "all";
  int verify_grid = 5;
  verify_cmd->add_option("--suite", verify_suite, "suite name or 'all'");
  verify_cmd->add_option("--gamma-grid", verify_grid, "anisotropy samples per regime check")
      ->check(CLI::PositiveNumber);

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "Fermi constants over a field range");
  AnisotropyFlags scan_aniso;
  scan_aniso.attach(scan_cmd);
  double scan_j = 1.0, hmin = 0.0, hmax = 0.0;
  int scan_points = 21, scan_jobs = 4;
  scan_cmd->add_option("--j", scan_j, "coupling J");
  scan_cmd->add_option("--h-min", hmin, "field range start")->required();
  scan_cmd->add_option("--h-max", hmax, "field range end")->required();
  scan_cmd->add_option("--points", scan_points, "field samples");
  scan_cmd->add_option("--jobs", scan_jobs, "worker count")->check(CLI::PositiveNumber);

  for (CLI::App* sc : {kernel_cmd, solve_cmd, fermi_cmd, magnetic_cmd, asympt_cmd, bank_cmd,
                       verify_cmd, scan_cmd})
    sc->set_help_flag("--help", "print help");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  }

  try {
    if (*kernel_cmd) {
      const double g = kernel_aniso.gamma();
      const auto xs = linspace(kmin, kmax, kpoints);
      std::vector<double> ys(xs.size());
      for (size_t i = 0; i < xs.size(); ++i) {
        if (kernel_quantity == "kernel") ys[i] = xxz::kernel_K(xs[i], g);
        else if (kernel_quantity == "fourier") ys[i] = xxz::fourier_K(xs[i], g);
        else if (kernel_quantity == "momentum") ys[i] = xxz::bare_momentum(xs[i], g);
        else ys[i] = xxz::bare_phase(xs[i], g);
      }
      emit(out, profile(out, xs, ys));
    } else if (*solve_cmd) {
      const double g = solve_aniso.gamma();
      const xxz::ModelParams params{g, solve_j, solve_h};
      xxz::DiscreteSolution sol =
          solve_quantity == "charge"  ? xxz::dressed_charge(g, solve_q, n)
          : solve_quantity == "energy" ? xxz::dressed_energy(params, solve_q, n)
                                       : xxz::root_density(g, solve_q, n);
      std::vector<double> xs(sol.grid.size()), ys(sol.grid.size());
      for (int i = 0; i < sol.grid.size(); ++i) {
        xs[i] = sol.grid.nodes[i];
        ys[i] = solve_quantity == "momentum" ? xxz::dressed_momentum(sol, xs[i])
                                             : sol.values[i];
      }
      if (out.verbose)
        std::cerr << "solve: quantity=" << solve_quantity << " gamma=" << g
                  << " Q=" << solve_q << " n=" << n << "\n";
      emit(out, profile(out, xs, ys));
    } else if (*fermi_cmd) {
      const xxz::ModelParams params{fermi_aniso.gamma(), fermi_j, fermi_h};
      const xxz::FermiPoint fp = xxz::solve_fermi_rapidity(params, n);
      nlohmann::json j{{"q_f", fp.QF},       {"z_f", fp.ZF},
                       {"p_f", fp.pF},       {"v_f", fp.vF},
                       {"residual", fp.residual}, {"polarized", fp.polarized}};
      emit(out, j.dump(2) + "\n");
    } else if (*magnetic_cmd) {
      const double g = magnetic_aniso.gamma();
      const double Q = xxz::solve_magnetic_rapidity(g, magnetic_m, n);
      const xxz::DiscreteSolution rho = xxz::root_density(g, Q, n);
      nlohmann::json j{{"q_m", Q},
                       {"residual", rho.grid.weights.dot(rho.values) - magnetic_m}};
      emit(out, j.dump(2) + "\n");
    } else if (*asympt_cmd) {
      const double g = asympt_aniso.gamma();
      nlohmann::json j{{"epsilon_gamma", xxz::epsilon_gamma(g)},
                       {"z_endpoint", xxz::asympt_Z_at_Q(g)}};
      if (g > kPi / 5.0) {
        j["rho_amplitude"] = xxz::asympt_rho_amplitude(g);
        if (asympt_q > 0.0) j["rho_endpoint"] = xxz::asympt_rho_at_Q(g, asympt_q);
        if (asympt_h > 0.0) {
          const xxz::ModelParams params{g, asympt_j, asympt_h};
          j["q_f_small_h"] = xxz::asympt_fermi_rapidity(params);
        }
      }
      emit(out, j.dump(2) + "\n");
    } else if (*bank_cmd) {
      const xxz::ModelParams params{bank_aniso.gamma(), bank_j, bank_h};
      const xxz::FermiPoint fp = xxz::solve_fermi_rapidity(params, n);
      const auto xs = linspace(bmin, bmax, bpoints);
      Eigen::VectorXd grid(xs.size());
      for (size_t i = 0; i < xs.size(); ++i) grid[static_cast<int>(i)] = xs[i];
      const xxz::BankProfile prof = xxz::bank_profile(fp, grid);
      std::vector<double> ys(prof.omega.data(), prof.omega.data() + prof.omega.size());
      emit(out, profile(out, xs, ys));
      if (bank_check) {
        for (double w : ys)
          if (!(w > prof.floor)) {
            std::cerr << "bank: omega bound violated\n";
            return 3;
          }
        if (out.verbose) std::cerr << "bank: omega > h/4 on the whole grid\n";
      }
    } else if (*verify_cmd) {
      const auto results = xxz::run_verification(verify_suite, verify_grid);
      std::string table;
      bool ok = true;
      for (const auto& r : results) {
        table += (r.pass ? "PASS " : "FAIL ") + r.suite + "/" + r.name +
                 "  metric=" + fmt(r.metric) + "  tol=" + fmt(r.tolerance) + "\n";
        ok = ok && r.pass;
      }
      emit(out, table);
      if (!ok) return 3;
    } else if (*scan_cmd) {
      const double g = scan_aniso.gamma();
      const auto hs = linspace(hmin, hmax, scan_points);
      std::vector<std::future<ScanRow>> jobs;
      // simple window-limited fan-out; rows land in input order regardless of timing
      std::vector<ScanRow> rows(hs.size());
      for (size_t start = 0; start < hs.size(); start += scan_jobs) {
        const size_t stop = std::min(hs.size(), start + scan_jobs);
        jobs.clear();
        for (size_t i = start; i < stop; ++i)
          jobs.push_back(std::async(std::launch::async, [&, i] {
            const xxz::FermiPoint fp =
                xxz::solve_fermi_rapidity(xxz::ModelParams{g, scan_j, hs[i]}, n);
            return ScanRow{hs[i], fp.QF, fp.ZF, fp.pF, fp.vF};
          }));
        for (size_t i = start; i < stop; ++i) rows[i] = jobs[i - start].get();
      }
      std::string csv = "h,q_f,z_f,p_f,v_f\n";
      for (const auto& r : rows)
        csv += fmt(r.h) + "," + fmt(r.q_f) + "," + fmt(r.z_f) + "," + fmt(r.p_f) + "," +
               fmt(r.v_f) + "\n";
      emit(out, csv);
      for (size_t i = 1; i < rows.size(); ++i)
        if (rows[i].q_f > rows[i - 1].q_f + 1e-9) {
          std::cerr << "scan: Q_F not monotone in h\n";
          return 3;
        }
    }
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const xxz::accuracy_error& e) {
    std::cerr << "accuracy error: " << e.what() << "\n";
    return 2;
  } catch (const xxz::singular_system_error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
