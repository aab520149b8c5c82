#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stare/integrator.hpp"
#include "stare/microscopic.hpp"
#include "stare/schedule.hpp"

namespace stare {

enum class Protocol { Linear, RolandCerf, OptimalStare, Analytic };

std::string protocol_name(Protocol p);
Protocol protocol_from_name(const std::string& name);

struct ScanAxis {
  std::string name;  // one of: a, b, di, df
  double min = 0;
  double max = 0;
  int count = 1;
  bool log_spacing = false;
};

struct ScanSpec {
  std::vector<ScanAxis> axes;
  SweepSpec base;  // fixed parameters for non-swept fields
  std::vector<Protocol> protocols;
  std::string output_path;  // empty -> caller writes (or discards) the result
  int parallelism = 1;
  IntegrationConfig integration;

  void validate() const;
};

struct ScanRow {
  std::vector<double> params;  // one value per axis, axis order
  Protocol protocol = Protocol::Linear;
  std::string status = "ok";  // "ok" or "error:<class>"
  double infidelity = 0;
  double analytic_imin = 0;  // NaN when not applicable
  double delta_i = 0;        // engineered-minus-unitary difference; NaN when n/a
  double wall_seconds = 0;   // in-memory only, never serialized
};

struct ScanResult {
  std::vector<std::string> axis_names;
  std::vector<ScanRow> rows;
  std::string metadata_json;  // single-line metadata echo
};

// Exhaustive deterministic grid evaluation; rows sorted by parameter tuple
// then protocol. Grid points are distributed across OpenMP workers in static
// blocks; parallelism = 1 runs the serial reference path. Results are
// independent of the worker count.
ScanResult run_scan(const ScanSpec& spec);

struct X0SweepSpec {
  CompositeParams base;
  std::vector<double> x0_values;
  std::vector<ScheduleKind> schedules;
  std::string output_path;
  int parallelism = 1;
  IntegrationConfig integration;

  void validate() const;
};

ScanResult run_x0_sweep(const X0SweepSpec& spec);

// Deterministic CSV with a '#'-prefixed JSON metadata header line.
void write_scan_csv(const ScanResult& result, std::ostream& out);
void write_scan_csv_file(const ScanResult& result, const std::string& path);

// Stable formatting used for all floating-point file output.
std::string format_double(double v);

}  // namespace stare
