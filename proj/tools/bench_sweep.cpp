// Compares the OpenMP sweep against the serial reference on identical
// parameters and checks that the outputs agree.

#include <chrono>
#include <iostream>

#include "toric/explorer.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename F>
double timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  long rmax = argc > 1 ? std::atol(argv[1]) : 120;
  int dim = argc > 2 ? std::atoi(argv[2]) : 2;

  toric::SweepParams params;
  params.dim = dim;
  params.rmax = rmax;

  std::vector<toric::MldRecord> serial, parallel;
  double t_serial = timed([&] { serial = toric::enumerate_cyclic_serial(params); });
  double t_parallel = timed([&] { parallel = toric::enumerate_cyclic(params); });

  bool same = serial.size() == parallel.size();
  for (size_t i = 0; same && i < serial.size(); ++i)
    same = serial[i].spec == parallel[i].spec && serial[i].mld == parallel[i].mld &&
           serial[i].witness == parallel[i].witness && serial[i].cartier_index == parallel[i].cartier_index;

#ifdef _OPENMP
  int threads = omp_get_max_threads();
#else
  int threads = 1;
#endif
  std::cout << "sweep dim=" << dim << " rmax=" << rmax << " records=" << serial.size() << "\n";
  std::cout << "serial    " << t_serial << " s\n";
  std::cout << "parallel  " << t_parallel << " s  (" << threads << " threads, speedup "
            << (t_parallel > 0 ? t_serial / t_parallel : 0) << "x)\n";
  std::cout << "outputs " << (same ? "identical" : "DIFFER") << "\n";
  return same ? 0 : 1;
}
