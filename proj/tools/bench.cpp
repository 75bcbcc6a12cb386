// Times the enumeration kernels against each other on the standard parameter
// sets: the per-point serial reference, the table-driven kernel on one
// thread, and the same kernel on all available workers. All three must
// produce identical distributions; any mismatch aborts the run.

#include <chrono>
#include <cstdio>
#include <vector>

#include "tracecodes/analytic.hpp"
#include "tracecodes/code_spec.hpp"
#include "tracecodes/defining_set.hpp"
#include "tracecodes/enumeration.hpp"
#include "tracecodes/field.hpp"

using namespace tracecodes;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void bench_one(int p, int e, int l) {
    const CodeSpec spec = CodeSpec::make(p, e, l, 0);
    const Field field = Field::make(p, e);
    const DefiningSet dset = build_defining_set(field, spec);
    const EnumerationBudget budget;
    const int workers = resolve_threads(0);

    auto t0 = std::chrono::steady_clock::now();
    const WeightDistribution ref = reference_distribution(field, spec, dset);
    const double t_ref = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const WeightDistribution serial = brute_distribution(field, spec, dset, EnumMode::Full, budget, 1);
    const double t_serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const WeightDistribution parallel =
        brute_distribution(field, spec, dset, EnumMode::Full, budget, workers);
    const double t_parallel = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const WeightDistribution orbit =
        brute_distribution(field, spec, dset, EnumMode::OrbitReduced, budget, workers);
    const double t_orbit = seconds_since(t0);

    if (!(ref == serial && serial == parallel && parallel == orbit)) {
        std::fprintf(stderr, "kernel mismatch for (p,e,l) = (%d,%d,%d)\n", p, e, l);
        std::exit(1);
    }

    std::printf("(%2d,%d,%d)  n=%5zu  reference %8.3fs  kernel(1) %8.3fs  kernel(%d) %8.3fs  orbit(%d) %8.3fs  speedup %.2fx\n",
                p, e, l, dset.size(), t_ref, t_serial, workers, t_parallel, workers, t_orbit,
                t_serial / (t_parallel > 0 ? t_parallel : 1e-9));
}

} // namespace

int main() {
    std::printf("enumeration kernels, full F_q^2 sweep per parameter set\n");
    bench_one(3, 2, 1);
    bench_one(7, 2, 1);
    bench_one(3, 4, 1);
    bench_one(3, 4, 2);
    bench_one(11, 2, 1);
    return 0;
}
