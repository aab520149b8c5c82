#include "stare/scan.hpp"

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

#include <nlohmann/json.hpp>

#include "stare/analytics.hpp"
#include "stare/eigenframe.hpp"
#include "stare/version.hpp"

namespace stare {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

using json = nlohmann::ordered_json;

double wall_now() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

// FNV-1a; stable across runs and platforms.
std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hash_hex(const std::string& data) {
  char buf[2 + 16 + 1];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, fnv1a(data));
  return buf;
}

std::vector<double> axis_values(const ScanAxis& axis) {
  std::vector<double> values(axis.count);
  if (axis.count == 1) {
    values[0] = axis.min;
    return values;
  }
  for (int i = 0; i < axis.count; ++i) {
    const double frac = static_cast<double>(i) / (axis.count - 1);
    values[i] = axis.log_spacing
                    ? std::exp(std::log(axis.min) + frac * (std::log(axis.max) - std::log(axis.min)))
                    : axis.min + frac * (axis.max - axis.min);
  }
  return values;
}

SweepSpec apply_point(const SweepSpec& base, const std::vector<ScanAxis>& axes,
                      const std::vector<double>& values) {
  SweepSpec spec = base;
  for (std::size_t k = 0; k < axes.size(); ++k) {
    const std::string& name = axes[k].name;
    if (name == "a")
      spec.a = values[k];
    else if (name == "b")
      spec.b = values[k];
    else if (name == "di")
      spec.d_i = values[k];
    else if (name == "df")
      spec.d_f = values[k];
    else
      throw ParameterError("unknown scan axis: " + name);
  }
  return spec;
}

double final_infidelity(const SweepSpec& sweep, DynamicsKind kind,
                        const IntegrationConfig& config) {
  const EigenFrame f0 = eigenframe(0.0, sweep.a, sweep.d_i);
  const DensityMatrix rho0 = DensityMatrix::checked(f0.p_minus);
  const LiouvillianSpec liou = kind == DynamicsKind::Unitary ? LiouvillianSpec::unitary(sweep)
                                                             : LiouvillianSpec::stare(sweep);
  IntegrationConfig cfg = config;
  cfg.output_points = 2;  // only the endpoint matters here
  const Trajectory traj = evolve(liou, rho0, {0.0, 1.0}, cfg);
  return infidelity_final(traj, sweep);
}

void evaluate_point(const ScanSpec& spec, const std::vector<double>& values,
                    std::vector<ScanRow>& rows_out) {
  // Unitary reference with the Roland-Cerf schedule, shared by delta rows.
  double unitary_reference = kNaN;
  const bool need_reference =
      std::find(spec.protocols.begin(), spec.protocols.end(), Protocol::OptimalStare) !=
      spec.protocols.end();
  SweepSpec point = apply_point(spec.base, spec.axes, values);

  if (need_reference) {
    try {
      SweepSpec uni = point;
      uni.b = 0.0;
      uni.kind = ScheduleKind::RolandCerf;
      unitary_reference = final_infidelity(uni, DynamicsKind::Unitary, spec.integration);
    } catch (const std::exception&) {
      unitary_reference = kNaN;
    }
  }

  for (const Protocol protocol : spec.protocols) {
    ScanRow row;
    row.params = values;
    row.protocol = protocol;
    row.analytic_imin = kNaN;
    row.delta_i = kNaN;
    row.infidelity = kNaN;
    const double t_start = wall_now();
    try {
      SweepSpec sweep = point;
      switch (protocol) {
        case Protocol::Linear:
          sweep.kind = ScheduleKind::Linear;
          row.infidelity = final_infidelity(sweep, DynamicsKind::Stare, spec.integration);
          break;
        case Protocol::RolandCerf:
          sweep.kind = ScheduleKind::RolandCerf;
          row.infidelity = final_infidelity(sweep, DynamicsKind::Stare, spec.integration);
          break;
        case Protocol::OptimalStare:
          sweep.kind = ScheduleKind::OptimalStare;
          row.infidelity = final_infidelity(sweep, DynamicsKind::Stare, spec.integration);
          if (sweep.b > 0) row.analytic_imin = i_min(sweep);
          row.delta_i = row.infidelity - unitary_reference;
          break;
        case Protocol::Analytic:
          row.infidelity = i_min(sweep);
          row.analytic_imin = row.infidelity;
          break;
      }
      row.status = "ok";
    } catch (const ParameterError&) {
      row.status = "error:parameter";
    } catch (const StiffnessError&) {
      row.status = "error:stiffness";
    } catch (const NumericError&) {
      row.status = "error:numeric";
    } catch (const std::exception&) {
      row.status = "error:unknown";
    }
    row.wall_seconds = wall_now() - t_start;
    rows_out.push_back(std::move(row));
  }
}

json integration_meta(const IntegrationConfig& cfg) {
  return json{{"rtol", cfg.rtol}, {"atol", cfg.atol}, {"output_points", cfg.output_points}};
}

}  // namespace

std::string protocol_name(Protocol p) {
  switch (p) {
    case Protocol::Linear:
      return "linear";
    case Protocol::RolandCerf:
      return "rc";
    case Protocol::OptimalStare:
      return "os";
    case Protocol::Analytic:
      return "analytic";
  }
  throw ParameterError("unknown protocol");
}

Protocol protocol_from_name(const std::string& name) {
  if (name == "linear" || name == "lz") return Protocol::Linear;
  if (name == "rc") return Protocol::RolandCerf;
  if (name == "os") return Protocol::OptimalStare;
  if (name == "analytic") return Protocol::Analytic;
  throw ParameterError("unknown protocol name: " + name);
}

void ScanSpec::validate() const {
  if (axes.empty()) throw ParameterError("scan needs at least one axis");
  for (const auto& axis : axes) {
    if (axis.count < 1) throw ParameterError("axis count must be >= 1");
    if (axis.count > 1 && !(axis.max > axis.min))
      throw ParameterError("axis range requires max > min");
    if (axis.log_spacing && !(axis.min > 0))
      throw ParameterError("log-spaced axis requires positive bounds");
    if (axis.name != "a" && axis.name != "b" && axis.name != "di" && axis.name != "df")
      throw ParameterError("unknown scan axis: " + axis.name);
  }
  if (protocols.empty()) throw ParameterError("scan needs a non-empty protocol list");
  if (parallelism < 1) throw ParameterError("parallelism degree must be >= 1");
}

std::string format_double(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ScanResult run_scan(const ScanSpec& spec) {
  spec.validate();

  std::vector<std::vector<double>> axis_grid;
  axis_grid.reserve(spec.axes.size());
  std::size_t total = 1;
  for (const auto& axis : spec.axes) {
    axis_grid.push_back(axis_values(axis));
    total *= axis_grid.back().size();
  }

  // Row-major enumeration of the parameter tuples keeps the output sorted.
  std::vector<std::vector<double>> points(total);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::vector<double> values(spec.axes.size());
    std::size_t rest = flat;
    for (std::size_t k = spec.axes.size(); k-- > 0;) {
      values[k] = axis_grid[k][rest % axis_grid[k].size()];
      rest /= axis_grid[k].size();
    }
    points[flat] = std::move(values);
  }

  std::vector<std::vector<ScanRow>> per_point(total);
#ifdef _OPENMP
  if (spec.parallelism > 1) {
#pragma omp parallel for schedule(static) num_threads(spec.parallelism)
    for (std::ptrdiff_t flat = 0; flat < static_cast<std::ptrdiff_t>(total); ++flat)
      evaluate_point(spec, points[flat], per_point[flat]);
  } else {
    for (std::size_t flat = 0; flat < total; ++flat)
      evaluate_point(spec, points[flat], per_point[flat]);
  }
#else
  for (std::size_t flat = 0; flat < total; ++flat)
    evaluate_point(spec, points[flat], per_point[flat]);
#endif

  ScanResult result;
  for (const auto& axis : spec.axes) result.axis_names.push_back(axis.name);
  result.rows.reserve(total * spec.protocols.size());
  for (auto& rows : per_point)
    for (auto& row : rows) result.rows.push_back(std::move(row));

  json axes = json::array();
  for (const auto& axis : spec.axes)
    axes.push_back(json{{"name", axis.name},
                        {"min", axis.min},
                        {"max", axis.max},
                        {"count", axis.count},
                        {"log", axis.log_spacing}});
  json protocols = json::array();
  for (const auto p : spec.protocols) protocols.push_back(protocol_name(p));
  json meta{{"tool", kToolName},
            {"version", kVersion},
            {"command", "scan"},
            {"axes", axes},
            {"base",
             {{"a", spec.base.a}, {"b", spec.base.b}, {"di", spec.base.d_i}, {"df", spec.base.d_f}}},
            {"protocols", protocols},
            {"parallelism", spec.parallelism},
            {"integration", integration_meta(spec.integration)}};
  meta["spec_hash"] = hash_hex(meta.dump());
  result.metadata_json = meta.dump();

  if (!spec.output_path.empty()) write_scan_csv_file(result, spec.output_path);
  return result;
}

void X0SweepSpec::validate() const {
  base.validate();
  if (x0_values.empty()) throw ParameterError("x0 sweep needs at least one x0 value");
  if (schedules.empty()) throw ParameterError("x0 sweep needs a non-empty schedule list");
  for (const double v : x0_values)
    if (!(v >= 0)) throw ParameterError("x0 values must be non-negative");
  if (parallelism < 1) throw ParameterError("parallelism degree must be >= 1");
}

ScanResult run_x0_sweep(const X0SweepSpec& spec) {
  spec.validate();
  const std::size_t total = spec.x0_values.size() * spec.schedules.size();
  std::vector<ScanRow> rows(total);

  auto evaluate = [&](std::size_t flat) {
    const std::size_t ix = flat / spec.schedules.size();
    const std::size_t is = flat % spec.schedules.size();
    const double x0 = spec.x0_values[ix];
    const ScheduleKind kind = spec.schedules[is];

    ScanRow row;
    row.params = {x0, static_cast<double>(is)};
    row.protocol = kind == ScheduleKind::Linear      ? Protocol::Linear
                   : kind == ScheduleKind::RolandCerf ? Protocol::RolandCerf
                                                      : Protocol::OptimalStare;
    row.analytic_imin = kNaN;
    row.delta_i = kNaN;
    row.infidelity = kNaN;
    const double t_start = wall_now();
    CompositeParams params = spec.base;
    params.x0 = x0;
    params.schedule = kind;
    // The open-system-optimal schedule needs the derived dephasing rate to
    // dominate the inverse transfer time; below x0 = 0.8 the row is skipped.
    if (kind == ScheduleKind::OptimalStare && x0 < 0.8) {
      row.status = "skipped:os-requires-x0>=0.8";
    } else {
      try {
        const CompositeRun run = run_composite(params, spec.integration);
        row.infidelity = run.infidelity.back();
        row.status = "ok";
      } catch (const ParameterError&) {
        row.status = "error:parameter";
      } catch (const StiffnessError&) {
        row.status = "error:stiffness";
      } catch (const NumericError&) {
        row.status = "error:numeric";
      } catch (const std::exception&) {
        row.status = "error:unknown";
      }
    }
    row.wall_seconds = wall_now() - t_start;
    rows[flat] = std::move(row);
  };

#ifdef _OPENMP
  if (spec.parallelism > 1) {
#pragma omp parallel for schedule(static) num_threads(spec.parallelism)
    for (std::ptrdiff_t flat = 0; flat < static_cast<std::ptrdiff_t>(total); ++flat)
      evaluate(flat);
  } else {
    for (std::size_t flat = 0; flat < total; ++flat) evaluate(flat);
  }
#else
  for (std::size_t flat = 0; flat < total; ++flat) evaluate(flat);
#endif

  ScanResult result;
  result.axis_names = {"x0", "schedule_index"};
  result.rows = std::move(rows);

  json x0s = json::array();
  for (const double v : spec.x0_values) x0s.push_back(v);
  json schedules = json::array();
  for (const auto k : spec.schedules)
    schedules.push_back(k == ScheduleKind::Linear      ? "linear"
                        : k == ScheduleKind::RolandCerf ? "rc"
                                                        : "os");
  json meta{{"tool", kToolName},
            {"version", kVersion},
            {"command", "x0sweep"},
            {"g0", spec.base.g0},
            {"omega_a", spec.base.omega_a},
            {"kappa", spec.base.kappa},
            {"nbar", spec.base.nbar},
            {"ti", spec.base.t_i},
            {"tf", spec.base.t_f},
            {"si", spec.base.s_i},
            {"sf", spec.base.s_f},
            {"x0", x0s},
            {"schedules", schedules},
            {"parallelism", spec.parallelism},
            {"integration", integration_meta(spec.integration)}};
  meta["spec_hash"] = hash_hex(meta.dump());
  result.metadata_json = meta.dump();

  if (!spec.output_path.empty()) write_scan_csv_file(result, spec.output_path);
  return result;
}

void write_scan_csv(const ScanResult& result, std::ostream& out) {
  out << "# " << result.metadata_json << "\n";
  for (const auto& name : result.axis_names) out << name << ",";
  out << "protocol,status,infidelity,analytic_imin,delta_i\n";
  for (const auto& row : result.rows) {
    for (const double v : row.params) out << format_double(v) << ",";
    out << protocol_name(row.protocol) << "," << row.status << ","
        << format_double(row.infidelity) << "," << format_double(row.analytic_imin) << ","
        << format_double(row.delta_i) << "\n";
  }
}

void write_scan_csv_file(const ScanResult& result, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw NumericError("cannot open output file: " + path);
  write_scan_csv(result, out);
}

}  // namespace stare
