#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "stare/analytics.hpp"
#include "stare/eigenframe.hpp"
#include "stare/integrator.hpp"
#include "stare/microscopic.hpp"
#include "stare/scan.hpp"
#include "stare/version.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace stare;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

std::string resolve_out(const std::string& path) {
  const char* dir = std::getenv("STARESIM_OUT_DIR");
  if (dir && *dir && !path.empty() && path.front() != '/') return std::string(dir) + "/" + path;
  return path;
}

ScheduleKind schedule_from_name(const std::string& name) {
  if (name == "linear" || name == "lz") return ScheduleKind::Linear;
  if (name == "rc") return ScheduleKind::RolandCerf;
  if (name == "os") return ScheduleKind::OptimalStare;
  throw ParameterError("unknown schedule name: " + name);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw NumericError("cannot open output file: " + path);
  return out;
}

void dump_state_columns(std::ostream& out, const MatX& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out << "," << format_double(m(i, j).real()) << "," << format_double(m(i, j).imag());
}

struct EvolveOptions {
  std::string kind;
  double a = 0, b = 0, d_i = 0, d_f = 0;
  std::string schedule = "linear";
  double g0 = 1, omega_a = 1, kappa = 1, nbar = 0, x0 = 0, t_i = 0, t_f = 0, s_i = 0, s_f = 0;
  bool si_set = false, sf_set = false;
  int points = 201;
  double rtol = 1e-10, atol = 1e-12;
  bool dump_states = false;
  std::string out_path;
};

int cmd_evolve(const EvolveOptions& opt) {
  std::ostringstream body;
  json meta{{"tool", kToolName}, {"version", kVersion}, {"command", "evolve"}, {"kind", opt.kind}};

  if (opt.kind == "unitary" || opt.kind == "stare") {
    SweepSpec sweep{opt.a, opt.kind == "unitary" ? 0.0 : opt.b, opt.d_i, opt.d_f,
                    schedule_from_name(opt.schedule)};
    sweep.validate();
    const Schedule schedule = make_schedule(sweep);
    const EigenFrame f0 = eigenframe(0.0, sweep.a, sweep.d_i);
    const DensityMatrix rho0 = DensityMatrix::checked(f0.p_minus);
    IntegrationConfig cfg;
    cfg.rtol = opt.rtol;
    cfg.atol = opt.atol;
    cfg.output_points = opt.points;
    const LiouvillianSpec liou = opt.kind == "unitary" ? LiouvillianSpec::unitary(sweep)
                                                       : LiouvillianSpec::stare(sweep);
    const Trajectory traj = evolve(liou, rho0, {0.0, 1.0}, cfg);

    meta["a"] = sweep.a;
    meta["b"] = sweep.b;
    meta["di"] = sweep.d_i;
    meta["df"] = sweep.d_f;
    meta["schedule"] = opt.schedule;
    meta["points"] = opt.points;
    meta["rtol"] = opt.rtol;
    meta["atol"] = opt.atol;
    meta["dump-states"] = opt.dump_states;
    meta["final_infidelity"] = infidelity_final(traj, sweep);

    body << "tau,infidelity";
    if (opt.dump_states) body << ",re00,im00,re01,im01,re10,im10,re11,im11";
    body << "\n";
    for (std::size_t k = 0; k < traj.states.size(); ++k) {
      const double tau = traj.times[k];
      const double d = d_of_tau(schedule.q(tau), sweep.d_i, sweep.d_f);
      const EigenFrame f = eigenframe(tau, sweep.a, d);
      const double infid = 1.0 - (f.p_minus * Mat2(traj.states[k])).trace().real();
      body << format_double(tau) << "," << format_double(infid);
      if (opt.dump_states) dump_state_columns(body, traj.states[k]);
      body << "\n";
    }
  } else if (opt.kind == "composite") {
    CompositeParams params;
    params.g0 = opt.g0;
    params.omega_a = opt.omega_a;
    params.kappa = opt.kappa;
    params.nbar = opt.nbar;
    params.x0 = opt.x0;
    params.t_i = opt.t_i;
    params.t_f = opt.t_f;
    params.schedule = schedule_from_name(opt.schedule);
    params.s_i = opt.si_set ? opt.s_i : opt.g0 * opt.g0 * opt.t_i;
    params.s_f = opt.sf_set ? opt.s_f : opt.g0 * opt.g0 * opt.t_f;
    params.validate();
    IntegrationConfig cfg;
    cfg.rtol = opt.rtol;
    cfg.atol = opt.atol;
    cfg.output_points = opt.points;
    const CompositeRun run = run_composite(params, cfg);

    meta["g0"] = params.g0;
    meta["omega-a"] = params.omega_a;
    meta["kappa"] = params.kappa;
    meta["nbar"] = params.nbar;
    meta["x0"] = params.x0;
    meta["ti"] = params.t_i;
    meta["tf"] = params.t_f;
    meta["si"] = params.s_i;
    meta["sf"] = params.s_f;
    meta["schedule"] = opt.schedule;
    meta["points"] = opt.points;
    meta["rtol"] = opt.rtol;
    meta["atol"] = opt.atol;
    meta["dump-states"] = opt.dump_states;
    meta["final_infidelity"] = run.infidelity.back();

    body << "t,infidelity";
    if (opt.dump_states) body << ",re00,im00,re01,im01,re10,im10,re11,im11";
    body << "\n";
    for (std::size_t k = 0; k < run.full.times.size(); ++k) {
      body << format_double(run.full.times[k]) << "," << format_double(run.infidelity[k]);
      if (opt.dump_states) dump_state_columns(body, run.reduced.states[k]);
      body << "\n";
    }
  } else {
    throw ParameterError("evolve kind must be one of: unitary, stare, composite");
  }

  if (!opt.out_path.empty()) {
    auto out = open_out(resolve_out(opt.out_path));
    out << "# " << meta.dump() << "\n" << body.str();
  } else {
    std::cout << "# " << meta.dump() << "\n" << body.str();
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adiabatic qubit state transfer in engineered reservoirs: simulator and analytics"};
  app.set_version_flag("--version", std::string(kVersion));
  app.set_config("--config", "", "read options from a TOML file ([subcommand] section)");
  app.require_subcommand(1);

  EvolveOptions ev;
  auto* evolve_cmd = app.add_subcommand("evolve", "Integrate a master equation, write a time series");
  evolve_cmd->add_option("--kind", ev.kind, "unitary | stare | composite")->required();
  auto* ev_a = evolve_cmd->add_option("--a", ev.a, "adiabaticity parameter g0*T");
  auto* ev_b = evolve_cmd->add_option("--b", ev.b, "dephasing strength gamma*T");
  auto* ev_di = evolve_cmd->add_option("--di", ev.d_i, "initial detuning d_i");
  auto* ev_df = evolve_cmd->add_option("--df", ev.d_f, "final detuning d_f");
  evolve_cmd->add_option("--schedule", ev.schedule, "linear | rc | os");
  auto* ev_g0 = evolve_cmd->add_option("--g0", ev.g0, "minimum gap (rate units)");
  auto* ev_wa = evolve_cmd->add_option("--omega-a", ev.omega_a, "auxiliary splitting");
  auto* ev_ka = evolve_cmd->add_option("--kappa", ev.kappa, "thermalization rate");
  auto* ev_nb = evolve_cmd->add_option("--nbar", ev.nbar, "thermal occupation");
  auto* ev_x0 = evolve_cmd->add_option("--x0", ev.x0, "coupling scale");
  auto* ev_ti = evolve_cmd->add_option("--ti", ev.t_i, "start time");
  auto* ev_tf = evolve_cmd->add_option("--tf", ev.t_f, "end time");
  auto* ev_si = evolve_cmd->add_option("--si", ev.s_i, "sweep endpoint s(t_i); default g0^2*ti");
  auto* ev_sf = evolve_cmd->add_option("--sf", ev.s_f, "sweep endpoint s(t_f); default g0^2*tf");
  evolve_cmd->add_option("--points", ev.points, "output grid size");
  evolve_cmd->add_option("--rtol", ev.rtol, "relative tolerance");
  evolve_cmd->add_option("--atol", ev.atol, "absolute tolerance");
  evolve_cmd->add_flag("--dump-states", ev.dump_states, "append density-matrix entries per row");
  evolve_cmd->add_option("--out", ev.out_path, "output CSV path (stdout when omitted)");

  std::vector<std::string> scan_axes;
  std::vector<std::string> scan_protocols{"os", "analytic"};
  ScanSpec scan_spec;
  std::string scan_out;
  auto* scan_cmd = app.add_subcommand("scan", "Grid scan over (a, b, di, df)");
  scan_cmd->add_option("--axis", scan_axes, "axis spec name:min:max:count[:log], repeatable")
      ->required();
  scan_cmd->add_option("--a", scan_spec.base.a, "fixed a when not an axis");
  scan_cmd->add_option("--b", scan_spec.base.b, "fixed b when not an axis");
  scan_cmd->add_option("--di", scan_spec.base.d_i, "fixed d_i when not an axis");
  scan_cmd->add_option("--df", scan_spec.base.d_f, "fixed d_f when not an axis");
  scan_cmd->add_option("--protocols", scan_protocols, "subset of linear,rc,os,analytic")
      ->delimiter(',');
  scan_cmd->add_option("--parallel", scan_spec.parallelism, "worker count (1 = serial)");
  scan_cmd->add_option("--rtol", scan_spec.integration.rtol, "relative tolerance");
  scan_cmd->add_option("--atol", scan_spec.integration.atol, "absolute tolerance");
  scan_cmd->add_option("--out", scan_out, "output CSV path")->required();

  SweepSpec sched_spec;
  std::string sched_kind = "linear", sched_out;
  int sched_points = 11;
  auto* sched_cmd = app.add_subcommand("schedule", "Tabulate q(tau) and dq/dtau");
  sched_cmd->add_option("--kind", sched_kind, "linear | rc | os")->required();
  sched_cmd->add_option("--a", sched_spec.a, "adiabaticity parameter (os)");
  sched_cmd->add_option("--b", sched_spec.b, "dephasing strength (os)");
  sched_cmd->add_option("--di", sched_spec.d_i, "initial detuning")->required();
  sched_cmd->add_option("--df", sched_spec.d_f, "final detuning")->required();
  sched_cmd->add_option("--points", sched_points, "grid size");
  sched_cmd->add_option("--out", sched_out, "output CSV path (stdout when omitted)");

  SweepSpec ana_spec;
  double ana_q = 0.5, ana_gamma = 0, ana_g0 = 0, ana_target = 0, ana_lz_a2 = 0, ana_lz_b = 0;
  auto* ana_cmd = app.add_subcommand("analytic", "Evaluate closed-form results");
  auto* an_a = ana_cmd->add_option("--a", ana_spec.a, "adiabaticity parameter");
  auto* an_b = ana_cmd->add_option("--b", ana_spec.b, "dephasing strength");
  auto* an_di = ana_cmd->add_option("--di", ana_spec.d_i, "initial detuning");
  auto* an_df = ana_cmd->add_option("--df", ana_spec.d_f, "final detuning");
  ana_cmd->add_option("--q", ana_q, "schedule point for the mass function");
  auto* an_ga = ana_cmd->add_option("--gamma", ana_gamma, "dephasing rate (transfer-time mode)");
  auto* an_g0 = ana_cmd->add_option("--g0", ana_g0, "minimum gap (transfer-time mode)");
  auto* an_ti = ana_cmd->add_option("--target-i", ana_target, "target infidelity (transfer-time mode)");
  auto* an_a2 = ana_cmd->add_option("--lz-a2", ana_lz_a2, "A^2 = g0^2/eps for sweep asymptotics");
  auto* an_lb = ana_cmd->add_option("--lz-b", ana_lz_b, "B = gamma/g0 for sweep asymptotics");

  CompositeParams val_params;
  double val_T = 0;
  std::string val_schedule = "linear";
  double val_si = 0, val_sf = 0;
  auto* val_cmd = app.add_subcommand("validity", "Report reduction-validity ratios");
  val_cmd->add_option("--x0", val_params.x0, "coupling scale")->required();
  val_cmd->add_option("--g0", val_params.g0, "minimum gap")->required();
  val_cmd->add_option("--kappa", val_params.kappa, "thermalization rate")->required();
  val_cmd->add_option("--omega-a", val_params.omega_a, "auxiliary splitting")->required();
  val_cmd->add_option("--nbar", val_params.nbar, "thermal occupation");
  auto* val_T_opt = val_cmd->add_option("--T", val_T, "total time (symmetric window)");
  auto* val_ti = val_cmd->add_option("--ti", val_params.t_i, "start time");
  auto* val_tf = val_cmd->add_option("--tf", val_params.t_f, "end time");
  val_cmd->add_option("--schedule", val_schedule, "linear | rc | os");
  auto* val_si_opt = val_cmd->add_option("--si", val_si, "sweep endpoint s(t_i)");
  auto* val_sf_opt = val_cmd->add_option("--sf", val_sf, "sweep endpoint s(t_f)");

  X0SweepSpec x0_spec;
  std::vector<double> x0_values;
  std::vector<std::string> x0_schedules{"linear", "rc", "os"};
  std::string x0_out;
  double x0_si = 0, x0_sf = 0;
  auto* x0_cmd = app.add_subcommand("x0sweep", "Final infidelity vs coupling x0 per schedule");
  x0_cmd->add_option("--g0", x0_spec.base.g0, "minimum gap")->required();
  x0_cmd->add_option("--omega-a", x0_spec.base.omega_a, "auxiliary splitting")->required();
  x0_cmd->add_option("--kappa", x0_spec.base.kappa, "thermalization rate")->required();
  x0_cmd->add_option("--nbar", x0_spec.base.nbar, "thermal occupation");
  x0_cmd->add_option("--ti", x0_spec.base.t_i, "start time")->required();
  x0_cmd->add_option("--tf", x0_spec.base.t_f, "end time")->required();
  auto* x0_si_opt = x0_cmd->add_option("--si", x0_si, "sweep endpoint s(t_i); default g0^2*ti");
  auto* x0_sf_opt = x0_cmd->add_option("--sf", x0_sf, "sweep endpoint s(t_f); default g0^2*tf");
  x0_cmd->add_option("--x0", x0_values, "coupling values")->delimiter(',')->required();
  x0_cmd->add_option("--schedules", x0_schedules, "subset of linear,rc,os")->delimiter(',');
  x0_cmd->add_option("--parallel", x0_spec.parallelism, "worker count (1 = serial)");
  x0_cmd->add_option("--rtol", x0_spec.integration.rtol, "relative tolerance");
  x0_cmd->add_option("--atol", x0_spec.integration.atol, "absolute tolerance");
  x0_cmd->add_option("--out", x0_out, "output CSV path")->required();

  // CLI11 resolves config files at the level that owns the flag; hoisting
  // "--config" ahead of the subcommand lets it appear anywhere on the line.
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  for (std::size_t i = 0; i < args.size(); ++i) {
    const bool plain = args[i] == "--config" && i + 1 < args.size();
    const bool inlined = args[i].rfind("--config=", 0) == 0;
    if ((plain || inlined) && i > 0) {
      std::vector<std::string> hoisted;
      hoisted.push_back(args[i]);
      if (plain) hoisted.push_back(args[i + 1]);
      args.erase(args.begin() + i, args.begin() + i + (plain ? 2 : 1));
      args.insert(args.begin(), hoisted.begin(), hoisted.end());
      break;
    }
  }
  std::reverse(args.begin(), args.end());  // CLI11 vector parse expects reversed args

  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    std::cerr << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (evolve_cmd->parsed()) {
      const bool dimensionless = ev.kind == "unitary" || ev.kind == "stare";
      const bool has_core = ev_a->count() || ev_b->count() || ev_di->count() || ev_df->count();
      const bool has_physical = ev_g0->count() || ev_wa->count() || ev_ka->count() ||
                                ev_nb->count() || ev_x0->count() || ev_ti->count() ||
                                ev_tf->count() || ev_si->count() || ev_sf->count();
      if (dimensionless && has_physical)
        throw ParameterError("dimensionless runs take a/b/di/df only; physical flags rejected");
      if (ev.kind == "composite" && has_core)
        throw ParameterError("composite runs take physical flags only; a/b/di/df rejected");
      if (dimensionless && !(ev_a->count() && ev_di->count() && ev_df->count()))
        throw ParameterError("dimensionless runs require --a, --di, --df");
      if (ev.kind == "composite" && !(ev_ti->count() && ev_tf->count()))
        throw ParameterError("composite runs require --ti and --tf");
      ev.si_set = ev_si->count() > 0;
      ev.sf_set = ev_sf->count() > 0;
      return cmd_evolve(ev);
    }

    if (scan_cmd->parsed()) {
      for (const auto& axis_str : scan_axes) {
        ScanAxis axis;
        std::stringstream ss(axis_str);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ':')) fields.push_back(field);
        if (fields.size() < 4) throw ParameterError("axis spec needs name:min:max:count[:log]");
        axis.name = fields[0];
        axis.min = std::stod(fields[1]);
        axis.max = std::stod(fields[2]);
        axis.count = std::stoi(fields[3]);
        axis.log_spacing = fields.size() > 4 && fields[4] == "log";
        scan_spec.axes.push_back(axis);
      }
      for (const auto& name : scan_protocols)
        scan_spec.protocols.push_back(protocol_from_name(name));
      scan_spec.output_path = resolve_out(scan_out);
      run_scan(scan_spec);
      return kExitOk;
    }

    if (sched_cmd->parsed()) {
      sched_spec.kind = schedule_from_name(sched_kind);
      if (sched_spec.kind == ScheduleKind::OptimalStare) sched_spec.validate();
      const Schedule schedule = sched_spec.kind == ScheduleKind::OptimalStare
                                    ? Schedule::optimal_stare(sched_spec)
                                    : (sched_spec.kind == ScheduleKind::RolandCerf
                                           ? Schedule::roland_cerf(sched_spec.d_i, sched_spec.d_f)
                                           : Schedule::linear());
      json meta{{"tool", kToolName}, {"version", kVersion}, {"command", "schedule"},
                {"kind", sched_kind}, {"a", sched_spec.a},  {"b", sched_spec.b},
                {"di", sched_spec.d_i}, {"df", sched_spec.d_f}, {"points", sched_points},
                {"fallback", schedule.used_fallback()}};
      std::ostringstream body;
      body << "tau,q,qdot\n";
      const int n = std::max(2, sched_points);
      for (int k = 0; k < n; ++k) {
        const double tau = static_cast<double>(k) / (n - 1);
        body << format_double(tau) << "," << format_double(schedule.q(tau)) << ","
             << format_double(schedule.qdot(tau)) << "\n";
      }
      if (!sched_out.empty()) {
        auto out = open_out(resolve_out(sched_out));
        out << "# " << meta.dump() << "\n" << body.str();
      } else {
        std::cout << "# " << meta.dump() << "\n" << body.str();
      }
      return kExitOk;
    }

    if (ana_cmd->parsed()) {
      const bool core_mode = an_a->count() || an_b->count();
      const bool time_mode = an_ga->count() || an_g0->count() || an_ti->count();
      const bool lz_mode = an_a2->count();
      if (core_mode && time_mode)
        throw ParameterError("dimensionless (a, b) and physical (gamma, g0) modes cannot be mixed");
      if (!core_mode && !time_mode && !lz_mode)
        throw ParameterError("nothing to evaluate: pass --a/--b, --gamma/--g0/--target-i, or --lz-a2");
      std::cout << "key,value\n";
      if (core_mode) {
        if (!(an_a->count() && an_b->count() && an_di->count() && an_df->count()))
          throw ParameterError("dimensionless mode requires --a --b --di --df");
        ana_spec.kind = ScheduleKind::OptimalStare;
        ana_spec.validate();
        std::cout << "mass_function_at_q," << format_double(mass_function(ana_q, ana_spec)) << "\n";
        if (ana_spec.b > 0) {
          std::cout << "i_min," << format_double(i_min(ana_spec)) << "\n";
          std::cout << "xi," << format_double(xi_constant(ana_spec)) << "\n";
          std::cout << "correction_c," << format_double(correction_c_optimal_closed(ana_spec))
                    << "\n";
          std::cout << "infidelity_leading_os,"
                    << format_double(infidelity_leading(Schedule::optimal_stare(ana_spec), ana_spec))
                    << "\n";
        }
      }
      if (time_mode) {
        if (!(an_ga->count() && an_g0->count() && an_ti->count() && an_di->count() &&
              an_df->count()))
          throw ParameterError("transfer-time mode requires --gamma --g0 --target-i --di --df");
        std::cout << "t_min,"
                  << format_double(t_min(ana_gamma, ana_target, ana_g0, ana_spec.d_i, ana_spec.d_f))
                  << "\n";
      }
      if (lz_mode) {
        std::cout << "lz_formula,"
                  << format_double(lz_asymptotics(LzAsymptotic::LzFormula, ana_lz_a2, 0)) << "\n";
        if (an_lb->count()) {
          std::cout << "weak_dephasing,"
                    << format_double(lz_asymptotics(LzAsymptotic::WeakDephasing, ana_lz_a2, ana_lz_b))
                    << "\n";
          std::cout << "strong_dephasing,"
                    << format_double(
                           lz_asymptotics(LzAsymptotic::StrongDephasing, ana_lz_a2, ana_lz_b))
                    << "\n";
        }
      }
      return kExitOk;
    }

    if (val_cmd->parsed()) {
      if (val_T_opt->count()) {
        val_params.t_i = -val_T / 2.0;
        val_params.t_f = val_T / 2.0;
      } else if (!(val_ti->count() && val_tf->count())) {
        throw ParameterError("validity needs either --T or both --ti and --tf");
      }
      val_params.schedule = schedule_from_name(val_schedule);
      val_params.s_i = val_si_opt->count() ? val_si : val_params.g0 * val_params.g0 * val_params.t_i;
      val_params.s_f = val_sf_opt->count() ? val_sf : val_params.g0 * val_params.g0 * val_params.t_f;
      const ValidityReport r = validity_report(val_params, val_params.total_time());
      std::cout << "condition,ratio,pass\n";
      std::cout << "markov," << format_double(r.markov_ratio) << "," << (r.markov_ok ? 1 : 0)
                << "\n";
      std::cout << "adiabatic," << format_double(r.adiabatic_ratio) << ","
                << (r.adiabatic_ok ? 1 : 0) << "\n";
      std::cout << "regime1," << format_double(r.regime1_ratio) << "," << (r.regime1_ok ? 1 : 0)
                << "\n";
      std::cout << "regime2," << format_double(r.regime2_ratio) << "," << (r.regime2_ok ? 1 : 0)
                << "\n";
      return kExitOk;
    }

    if (x0_cmd->parsed()) {
      x0_spec.base.s_i =
          x0_si_opt->count() ? x0_si : x0_spec.base.g0 * x0_spec.base.g0 * x0_spec.base.t_i;
      x0_spec.base.s_f =
          x0_sf_opt->count() ? x0_sf : x0_spec.base.g0 * x0_spec.base.g0 * x0_spec.base.t_f;
      x0_spec.x0_values = x0_values;
      for (const auto& name : x0_schedules) x0_spec.schedules.push_back(schedule_from_name(name));
      x0_spec.output_path = resolve_out(x0_out);
      run_x0_sweep(x0_spec);
      return kExitOk;
    }
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const StiffnessError& e) {
    std::cerr << "integration failed: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}
