#include "ahg/counting.hpp"
#include "ahg/jobspec.hpp"

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ahg;

int main(int argc, char** argv) {
    std::string space = argc > 1 ? argv[1] : "torus:2:3";
    std::string gauge = argc > 2 ? argv[2] : "z2-at-1";
    HomComplex h(parse_space(space), parse_gauge(gauge));
    FlatMap d0 = FlatMap::from(h, 0);
    std::cout << "space " << space << ", gauge " << gauge
              << ", |hom^0| = " << d0.domain_size().str() << "\n";
#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif
    auto ms = [](auto a, auto b) {
        return std::chrono::duration<double, std::milli>(b - a).count();
    };
    auto t0 = std::chrono::steady_clock::now();
    long long serial = count_kernel_reference(d0);
    auto t1 = std::chrono::steady_clock::now();
    long long parallel = count_kernel_parallel(d0);
    auto t2 = std::chrono::steady_clock::now();
    std::cout << "serial:   " << serial << " flat configurations in " << ms(t0, t1) << " ms\n";
    std::cout << "parallel: " << parallel << " flat configurations in " << ms(t1, t2) << " ms\n";
    std::cout << (serial == parallel ? "agree" : "DISAGREE") << "\n";
    return serial == parallel ? 0 : 1;
}
