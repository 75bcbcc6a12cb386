#pragma once

#include <cstdint>

#include "tracecodes/code_spec.hpp"
#include "tracecodes/defining_set.hpp"
#include "tracecodes/field.hpp"
#include "tracecodes/weight_distribution.hpp"

namespace tracecodes {

enum class EnumMode {
    Full,         // every (a, b) pair
    OrbitReduced, // one representative per F_p^*-scaling orbit, counts x (p-1)
};

struct EnumerationBudget {
    // Upper bound on codeword-symbol products per run. Full mode costs
    // q^2 * n, orbit-reduced mode (q^2 - 1)/(p - 1) * n + n.
    std::uint64_t max_products = 500'000'000;
};

// Thread count resolution: explicit request > TRACE_CODES_THREADS > OpenMP
// default. Returns at least 1.
int resolve_threads(int requested);

// Exhaustive weight distribution over all p^(2e) codewords. Data-parallel
// over blocks of a-values with per-worker histograms merged by addition, so
// the result is independent of the worker count. Throws BudgetError when the
// product count exceeds the budget.
WeightDistribution brute_distribution(const Field& f, const CodeSpec& spec, const DefiningSet& d,
                                      EnumMode mode, const EnumerationBudget& budget, int threads);

// Straight-line serial enumeration with per-point field arithmetic; the
// reference the parallel kernel is tested and benchmarked against.
WeightDistribution reference_distribution(const Field& f, const CodeSpec& spec, const DefiningSet& d);

} // namespace tracecodes
