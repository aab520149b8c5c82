// Compares the serial reference path of the scan harness against its
// OpenMP-parallel path on an identical grid and verifies that both produce
// byte-identical CSV output.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stare/scan.hpp"

using namespace stare;

namespace {

ScanSpec bench_spec(int parallelism) {
  ScanSpec spec;
  spec.axes = {{"a", 2.0, 20.0, 8, false}, {"b", 10.0, 300.0, 8, true}};
  spec.base.d_i = -50.0;
  spec.base.d_f = 50.0;
  spec.protocols = {Protocol::RolandCerf, Protocol::OptimalStare, Protocol::Analytic};
  spec.parallelism = parallelism;
  spec.integration.rtol = 1e-10;
  spec.integration.atol = 1e-12;
  return spec;
}

std::string run_once(int parallelism, double* seconds) {
  const auto t0 = std::chrono::steady_clock::now();
  const ScanResult result = run_scan(bench_spec(parallelism));
  *seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream csv;
  write_scan_csv(result, csv);
  // drop the metadata line: it echoes the requested parallelism degree
  const std::string text = csv.str();
  return text.substr(text.find('\n') + 1);
}

}  // namespace

int main() {
  int max_threads = 1;
#ifdef _OPENMP
  max_threads = omp_get_max_threads();
#endif
  std::printf("scan benchmark: 8x8 (a, b) grid, 3 protocols per point\n");

  double serial_s = 0;
  const std::string serial_csv = run_once(1, &serial_s);
  std::printf("serial reference: %8.2f s\n", serial_s);

  for (int threads = 2; threads <= max_threads; threads *= 2) {
    double par_s = 0;
    const std::string par_csv = run_once(threads, &par_s);
    const bool identical = par_csv == serial_csv;
    std::printf("openmp x%-2d      : %8.2f s  speedup %.2fx  output %s\n", threads, par_s,
                serial_s / par_s, identical ? "identical" : "MISMATCH");
    if (!identical) return 1;
  }
  if (max_threads < 2) std::printf("(single hardware thread; parallel lanes not exercised)\n");
  return 0;
}
