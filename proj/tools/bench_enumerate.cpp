// Compares the serial reference enumerator and census fold against the
// OpenMP paths on a few desk-scale instances.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "msf/census.hpp"
#include "msf/enumerate.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
    return d.count();
}

void bench_instance(int n, int k, int jobs) {
    msf::Params params(n, k);

    auto t0 = std::chrono::steady_clock::now();
    msf::FamilySet serial = msf::enumerate_oracle_serial(params);
    double t_serial = seconds_since(t0);

    msf::OracleOptions opts;
    opts.jobs = jobs;
    t0 = std::chrono::steady_clock::now();
    msf::OracleResult parallel = msf::enumerate_oracle(params, opts);
    double t_parallel = seconds_since(t0);

    if (!(serial.families == parallel.families.families) &&
        serial.families != parallel.families.families) {
        std::fprintf(stderr, "(%d,%d): serial/parallel mismatch\n", n, k);
        std::exit(1);
    }

    t0 = std::chrono::steady_clock::now();
    msf::CensusRecord cs = msf::run_census_serial(params, serial);
    double t_fold_serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    msf::CensusRecord cp = msf::run_census(params, parallel.families, jobs);
    double t_fold_parallel = seconds_since(t0);

    std::printf("(%d,%d) total=%llu  enumerate: serial %.3fs, %d jobs %.3fs  "
                "fold: serial %.3fs, %d jobs %.3fs\n",
                n, k, static_cast<unsigned long long>(cs.total), t_serial, jobs,
                t_parallel, t_fold_serial, jobs, t_fold_parallel);
    if (cs.r_histogram != cp.r_histogram) {
        std::fprintf(stderr, "(%d,%d): census mismatch\n", n, k);
        std::exit(1);
    }
}

}  // namespace

int main(int argc, char** argv) {
    int jobs = argc > 1 ? std::atoi(argv[1]) : 4;
    bench_instance(6, 1, jobs);
    bench_instance(7, 1, jobs);
    bench_instance(8, 1, jobs);
    bench_instance(6, 2, jobs);
    return 0;
}
