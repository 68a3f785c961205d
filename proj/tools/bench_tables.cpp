// Compares the serial reference table builder against the OpenMP kernel
// on the pure enumeration methods, checking value equality as it goes.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kl/tables.hpp"

using namespace kl;

namespace {

double time_ms(PolyTable (*build)(int, int, Conv, Method), int n, int k, Conv conv,
               Method m, PolyTable& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = build(n, k, conv, m);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 9;
    int k = argc > 2 ? std::atoi(argv[2]) : n / 2;
    if (n < 1 || k < 0 || k > n) {
        std::cerr << "usage: bench_tables [N] [K]\n";
        return 2;
    }
#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "OpenMP unavailable; parallel kernel falls back to serial\n";
#endif
    std::cout << "N=" << n << " K=" << k << "\n";
    std::cout << std::left << std::setw(10) << "method" << std::right << std::setw(12)
              << "serial ms" << std::setw(14) << "parallel ms" << std::setw(10)
              << "speedup" << "\n";
    bool ok = true;
    for (auto [m, conv] : {std::pair{Method::rule1, Conv::plus},
                           {Method::lstree, Conv::plus},
                           {Method::rule2, Conv::minus}}) {
        PolyTable s, p;
        double ts = time_ms(build_table_serial, n, k, conv, m, s);
        double tp = time_ms(build_table_parallel, n, k, conv, m, p);
        bool eq = s.paths == p.paths && s.p == p.p;
        ok = ok && eq;
        std::cout << std::left << std::setw(10) << method_name(m) << std::right
                  << std::setw(12) << std::fixed << std::setprecision(1) << ts
                  << std::setw(14) << tp << std::setw(9) << std::setprecision(2)
                  << (tp > 0 ? ts / tp : 0.0) << "x" << (eq ? "" : "  VALUES DIFFER")
                  << "\n";
    }
    return ok ? 0 : 1;
}
