// Times the serial reference scan against the OpenMP scan and checks that
// both produce the same records.
//
//   bench_scan [max_p] [repeats]

#include "cosmetic/scan.hpp"
#include "cosmetic/serialize.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <class F> double seconds(F &&f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

} // namespace

int main(int argc, char **argv) {
  cosmetic::ScanOptions opts;
  opts.max_p = argc > 1 ? std::atoll(argv[1]) : 201;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif

  std::vector<cosmetic::ScanRecord> serial, parallel;
  double best_serial = 1e300, best_parallel = 1e300;
  for (int r = 0; r < repeats; ++r) {
    best_serial = std::min(best_serial, seconds([&] { serial = cosmetic::scan_serial(opts); }));
    best_parallel = std::min(best_parallel, seconds([&] { parallel = cosmetic::scan_parallel(opts); }));
  }

  const bool same = nlohmann::json(serial) == nlohmann::json(parallel);
  std::printf("max_p=%lld knots=%zu threads=%d\n",
              static_cast<long long>(opts.max_p), serial.size(), threads);
  std::printf("serial   %8.3f s\n", best_serial);
  std::printf("parallel %8.3f s  (speedup %.2fx)\n", best_parallel,
              best_serial / best_parallel);
  std::printf("outputs %s\n", same ? "identical" : "DIFFER");
  return same ? 0 : 1;
}
