// Serial reference vs OpenMP kernel timings.
//
//   motzkin_bench [series-order] [path-length]
//
// OMP_NUM_THREADS controls the parallel side.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <span>
#include <string>

#include <omp.h>

#include "motzkin/bijection.hpp"
#include "motzkin/parallel.hpp"
#include "motzkin/series.hpp"

namespace {

template <typename F>
double time_ms(F&& f, int repeats) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < repeats; ++i) f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / repeats;
}

void report(const std::string& name, double serial, double parallel, bool agree) {
  std::cout << name << "\n  serial   " << serial << " ms\n  parallel " << parallel << " ms\n  speedup  "
            << serial / parallel << (agree ? "" : "   RESULTS DIFFER") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const int order = argc > 1 ? std::atoi(argv[1]) : 1500;
  const int length = argc > 2 ? std::atoi(argv[2]) : 14;
  std::cout << "threads " << omp_get_max_threads() << "\n";

  const auto m = motzkin::motzkin_series(order);
  const auto g = motzkin::grand_series(order);
  motzkin::IntSeries serial_product, parallel_product;
  const double ts = time_ms([&] { serial_product = motzkin::mul_serial(m, g); }, 3);
  const double tp = time_ms([&] { parallel_product = motzkin::mul(m, g); }, 3);
  report("Cauchy product M*G, order " + std::to_string(order), ts, tp, serial_product == parallel_product);

  const auto paths = motzkin::enumerate_motzkin(length);
  auto round_trip = [](const motzkin::MotzkinPath& p) {
    return motzkin::tree_to_path(motzkin::path_to_tree(p)) == p;
  };
  const std::span<const motzkin::MotzkinPath> all(paths);
  std::size_t serial_hit = 0, parallel_hit = 0;
  const double ss = time_ms([&] { serial_hit = motzkin::first_failure_serial(all, round_trip); }, 3);
  const double sp = time_ms([&] { parallel_hit = motzkin::first_failure(all, round_trip); }, 3);
  report("Round-trip sweep over " + std::to_string(paths.size()) + " Motzkin paths of length " +
             std::to_string(length),
         ss, sp, serial_hit == parallel_hit && serial_hit == motzkin::kNoFailure);
  return 0;
}
