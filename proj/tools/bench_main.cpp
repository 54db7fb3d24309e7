// Times one identity suite with the parallel sweep on and off and reports the
// speedup. The two runs must agree on every verdict.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "ecl/glpoly.hpp"
#include "ecl/threads.hpp"

int main(int argc, char** argv) {
  std::string suite = argc > 1 ? argv[1] : "prop41";
  int k = argc > 2 ? std::atoi(argv[2]) : 2;
  int n = argc > 3 ? std::atoi(argv[3]) : 4;
  int degree = argc > 4 ? std::atoi(argv[4]) : 3;

  auto run = [&](bool parallel) {
    auto t0 = std::chrono::steady_clock::now();
    ecl::SuiteReport rep = ecl::run_suite(suite, k, n, degree, parallel);
    auto t1 = std::chrono::steady_clock::now();
    double sec = std::chrono::duration<double>(t1 - t0).count();
    std::cout << (parallel ? "parallel" : "serial  ") << "  " << sec
              << " s  all_asserted_pass=" << rep.all_asserted_pass << "\n";
    return std::pair<double, bool>(sec, rep.all_asserted_pass);
  };

  std::cout << "suite " << suite << "  k=" << k << " n=" << n
            << " degree=" << degree << "  threads=" << ecl::effective_threads()
            << "\n";
  auto [t_serial, ok_serial] = run(false);
  auto [t_parallel, ok_parallel] = run(true);
  if (ok_serial != ok_parallel) {
    std::cout << "verdict mismatch between the sweeps\n";
    return 1;
  }
  std::cout << "speedup x" << t_serial / t_parallel << "\n";
  return 0;
}
