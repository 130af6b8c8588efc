// Wall-clock comparison of the OpenMP kernels against their serial
// references. Not part of the test suite; build and run by hand.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include <omp.h>

#include "fraccolloc/assembly.hpp"
#include "fraccolloc/symbol.hpp"

using namespace fraccolloc;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

void bench_assembly(int p, int n) {
  const BSplineSpace space(p, n);
  const FractionalOrder order = FractionalOrder::for_solver(1.5);
  auto t0 = std::chrono::steady_clock::now();
  const CollocationSystem serial = assemble_matrix_serial(space, order);
  auto t1 = std::chrono::steady_clock::now();
  const CollocationSystem parallel = assemble_matrix(space, order);
  auto t2 = std::chrono::steady_clock::now();
  const double diff = (serial.matrix - parallel.matrix).cwiseAbs().maxCoeff();
  const double ts = seconds(t0, t1), tp = seconds(t1, t2);
  std::printf("assemble   p=%d n=%4d  serial %8.3f ms  parallel %8.3f ms  "
              "speedup %4.2fx  max|diff| %.1e\n",
              p, n, 1e3 * ts, 1e3 * tp, ts / tp, diff);
}

void bench_symbol(int p, double alpha, int points) {
  const SymbolEvaluator ev(p, alpha);
  std::vector<double> grid(static_cast<size_t>(points));
  for (int i = 0; i < points; ++i)
    grid[static_cast<size_t>(i)] = 3.141592653589793 * (i + 1.0) / (points + 1.0);
  auto t0 = std::chrono::steady_clock::now();
  const std::vector<double> a = sample_symbol_serial(ev, grid);
  auto t1 = std::chrono::steady_clock::now();
  const std::vector<double> b = sample_symbol(ev, grid);
  auto t2 = std::chrono::steady_clock::now();
  double diff = 0.0;
  for (size_t i = 0; i < a.size(); ++i)
    diff = std::max(diff, std::abs(a[i] - b[i]));
  const double ts = seconds(t0, t1), tp = seconds(t1, t2);
  std::printf("symbol     p=%d a=%.2f %6d pts  serial %8.3f ms  parallel %8.3f ms  "
              "speedup %4.2fx  max|diff| %.1e\n",
              p, alpha, points, 1e3 * ts, 1e3 * tp, ts / tp, diff);
}

} // namespace

int main() {
  if (const char* env = std::getenv("COLLOC_THREADS")) {
    const int nt = std::atoi(env);
    if (nt > 0) omp_set_num_threads(nt);
  }
  std::printf("threads: %d\n", omp_get_max_threads());
  bench_assembly(3, 256);
  bench_assembly(4, 512);
  bench_assembly(3, 1024);
  bench_symbol(3, 1.5, 200000);
  bench_symbol(8, 1.2, 200000);
  return 0;
}
