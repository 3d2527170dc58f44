// Compares the OpenMP kernels against their serial references: brute-force
// fixed-point enumeration over S_n and restriction-matrix assembly. Exits
// nonzero if any kernel pair disagrees.

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "springer/basis.hpp"
#include "springer/filling.hpp"
#include "springer/hessenberg.hpp"
#include "springer/nilmatrix.hpp"
#include "springer/partition.hpp"

using namespace springer;
using Clock = std::chrono::steady_clock;

static double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int main() {
#ifdef _OPENMP
  std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "openmp: disabled\n";
#endif

  {
    const Partition shape({6, 2});
    const Permutation sigma = rotated_english_sigma(shape);
    const NilMatrix N = conjugate(jordan_matrix(shape), sigma);
    const HessenbergFunction h = identity_h(shape.n());
    auto t0 = Clock::now();
    const auto par = fixed_points_bruteforce(N, h);
    const double t_par = ms_since(t0);
    t0 = Clock::now();
    const auto ser = fixed_points_bruteforce_serial(N, h);
    const double t_ser = ms_since(t0);
    if (par != ser) {
      std::cerr << "fixed-point kernels disagree\n";
      return 1;
    }
    std::cout << "fixed points (6,2), S_8 enumeration: parallel " << t_par
              << " ms, serial " << t_ser << " ms, " << par.size()
              << " points\n";
  }

  {
    const Partition shape({5, 2});
    auto t0 = Clock::now();
    const RestrictionMatrix par = build_matrix(shape);
    const double t_par = ms_since(t0);
    t0 = Clock::now();
    const RestrictionMatrix ser = build_matrix_serial(shape);
    const double t_ser = ms_since(t0);
    if (par.order != ser.order || par.entries != ser.entries) {
      std::cerr << "matrix assembly kernels disagree\n";
      return 1;
    }
    std::cout << "restriction matrix (5,2), " << par.size() << "x"
              << par.size() << ": parallel " << t_par << " ms, serial "
              << t_ser << " ms\n";
  }

  std::cout << "kernels agree\n";
  return 0;
}
