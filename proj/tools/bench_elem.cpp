// Benchmark for the elementary-cluster series: the naive per-partition
// reference against the dense hook-multiset kernels, serial and parallel.
// Usage: bench-elem [genus] [qdeg]   (defaults: genus 3, qdeg 12)

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <thread>
#include <vector>

#include "gvkit/kernels.hpp"

namespace {

double seconds(void (*body)(int, int, int), int g, int d, int threads) {
  auto t0 = std::chrono::steady_clock::now();
  body(g, d, threads);
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

std::vector<gvkit::QLaurent> result;

void run_reference(int g, int d, int) {
  result.clear();
  result.push_back(gvkit::QLaurent::one());
  for (int k = 1; k <= d; ++k)
    result.push_back(gvkit::reference::z_degree_q(k, g));
}

void run_kernels(int g, int d, int threads) {
  result = gvkit::kernels::z_coeffs_q(d, g, gvkit::ThreadPolicy{threads});
}

}  // namespace

int main(int argc, char** argv) {
  const int g = argc > 1 ? std::atoi(argv[1]) : 3;
  const int d = argc > 2 ? std::atoi(argv[2]) : 12;
  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  std::cout << "Z^elem genus " << g << " through q^" << d << " ("
            << hw << " hardware threads)\n";

  const double t_ref = seconds(run_reference, g, d, 0);
  std::vector<gvkit::QLaurent> ref = result;
  std::cout << "reference (per-partition):  " << t_ref << " s\n";

  const double t_serial = seconds(run_kernels, g, d, 0);
  std::vector<gvkit::QLaurent> serial = result;
  std::cout << "kernels, serial:            " << t_serial << " s\n";

  const double t_par = seconds(run_kernels, g, d, hw);
  std::cout << "kernels, " << hw << " thread(s):       " << t_par << " s\n";

  if (ref != serial || serial != result) {
    std::cout << "MISMATCH between implementations\n";
    return 1;
  }
  std::cout << "all three agree; kernel speedup " << t_ref / t_serial
            << "x, parallel speedup " << t_serial / t_par << "x\n";
  return 0;
}
