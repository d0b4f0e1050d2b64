// Compares the serial reference path with the OpenMP kernel on the two
// expensive sweeps: the pebble-game/oracle agreement sweep and the cylinder
// theorem sweep.

#include <chrono>
#include <cstdio>

#include "rigidity/batch.hpp"
#include "rigidity/enumerate.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename Fn>
double timed(const char* label, Fn&& fn) {
    const auto start = Clock::now();
    fn();
    const double elapsed = seconds_since(start);
    std::printf("  %-24s %8.3f s\n", label, elapsed);
    return elapsed;
}

} // namespace

int main(int argc, char** argv) {
    const int max_n_oracle = argc > 1 ? std::atoi(argv[1]) : 7;
    const int max_n_cylinder = argc > 2 ? std::atoi(argv[2]) : 6;

    std::printf("threads: %d\n", rigidity::effective_threads());

    std::printf("oracle agreement sweep, n <= %d\n", max_n_oracle);
    const auto all = rigidity::connected_graphs_up_to(max_n_oracle);
    std::printf("  graphs: %zu\n", all.size());
    const double o_serial = timed("serial", [&] { rigidity::oracle_agreement_sweep(all, false); });
    const double o_parallel = timed("openmp", [&] { rigidity::oracle_agreement_sweep(all, true); });
    std::printf("  speedup %.2fx\n", o_serial / o_parallel);

    std::printf("cylinder theorem sweep, n <= %d\n", max_n_cylinder);
    const auto graphs =
        rigidity::theorem_candidates(rigidity::TheoremCheck::Cylinder, max_n_cylinder);
    std::printf("  candidates: %zu\n", graphs.size());
    const double c_serial = timed("serial", [&] {
        rigidity::run_theorem_check(rigidity::TheoremCheck::Cylinder, graphs, 7, false);
    });
    const double c_parallel = timed("openmp", [&] {
        rigidity::run_theorem_check(rigidity::TheoremCheck::Cylinder, graphs, 7, true);
    });
    std::printf("  speedup %.2fx\n", c_serial / c_parallel);
    return 0;
}
