#include "tracecodes/enumeration.hpp"

#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tracecodes/errors.hpp"

namespace tracecodes {

namespace {

// True for the unique representative of each F_p^*-scaling orbit: the first
// nonzero coefficient of the concatenated vector (a || b) equals 1. Since the
// a-digits come first, a nonzero `a` decides on its own.
bool leading_digit_is_one(const Field& f, Elem x) {
    for (int k = 0; k < f.e(); ++k) {
        int c = static_cast<int>(x % f.p());
        if (c != 0) return c == 1;
        x /= f.p();
    }
    return false; // zero element: no leading digit
}

// Tr(u * x_j) for every point coordinate, as a flat byte row.
void fill_trace_row(const Field& f, Elem u, const std::vector<Elem>& xs, std::uint8_t* row) {
    for (std::size_t j = 0; j < xs.size(); ++j)
        row[j] = static_cast<std::uint8_t>(f.trace(f.mul(u, xs[j])));
}

// Symbols are Tr(a x1_j) + Tr(b x2_j); both summands live in [0, p), so the
// symbol vanishes mod p exactly when the raw sum is 0 or p.
std::uint64_t count_zero_symbols(const std::uint8_t* ra, const std::uint8_t* rb, std::size_t n, int p) {
    std::uint64_t z = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const int s = ra[j] + rb[j];
        z += (s == 0) | (s == p);
    }
    return z;
}

} // namespace

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("TRACE_CODES_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<int>(v);
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

WeightDistribution brute_distribution(const Field& f, const CodeSpec& spec, const DefiningSet& d,
                                      EnumMode mode, const EnumerationBudget& budget, int threads) {
    if (f.p() != spec.p || f.e() != spec.e)
        throw ParamError("field does not match code parameters");
    const std::uint64_t q = f.q();
    const std::size_t n = d.size();
    const int p = f.p();

    const std::uint64_t pairs = mode == EnumMode::Full
                                    ? q * q
                                    : (q * q - 1) / static_cast<std::uint64_t>(p - 1) + 1;
    if (pairs > budget.max_products / (n == 0 ? 1 : n)) {
        std::string hint = mode == EnumMode::Full
                               ? "; retry with orbit-reduced mode, raise the budget, or use the analytic method"
                               : "; raise the budget or use the analytic method";
        throw BudgetError("enumeration needs " + std::to_string(pairs) + " x " + std::to_string(n) +
                          " codeword-symbol products, over the budget of " +
                          std::to_string(budget.max_products) + hint);
    }

    const int nthreads = resolve_threads(threads);
    const std::uint64_t orbit_weight = mode == EnumMode::Full ? 1 : static_cast<std::uint64_t>(p - 1);

    // Tr(b * x2_j) rows for every b, reused across the whole a-loop.
    std::vector<std::uint8_t> col_rows(q * n);
    for (Elem b = 0; b < q; ++b) fill_trace_row(f, b, d.x2, col_rows.data() + b * n);

    std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(nthreads),
                                                    std::vector<std::uint64_t>(n + 1, 0));

#ifdef _OPENMP
#pragma omp parallel num_threads(nthreads)
#endif
    {
#ifdef _OPENMP
        const int tid = omp_get_thread_num();
#else
        const int tid = 0;
#endif
        std::vector<std::uint8_t> row(n);
        auto& hist = partial[static_cast<std::size_t>(tid)];
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (std::int64_t ai = 0; ai < static_cast<std::int64_t>(q); ++ai) {
            const Elem a = static_cast<Elem>(ai);
            const bool a_canonical = leading_digit_is_one(f, a);
            if (mode == EnumMode::OrbitReduced && a != 0 && !a_canonical) continue;
            fill_trace_row(f, a, d.x1, row.data());
            for (Elem b = 0; b < q; ++b) {
                if (a == 0) {
                    if (b == 0) continue; // zero codeword handled below
                    if (mode == EnumMode::OrbitReduced && !leading_digit_is_one(f, b)) continue;
                }
                const std::uint64_t zeros = count_zero_symbols(row.data(), col_rows.data() + b * n, n, p);
                hist[n - zeros] += orbit_weight;
            }
        }
    }

    std::vector<std::uint64_t> hist(n + 1, 0);
    hist[0] = 1; // the zero codeword
    for (const auto& part : partial)
        for (std::size_t w = 0; w <= n; ++w) hist[w] += part[w];

    WeightDistribution dist = WeightDistribution::from_histogram(hist);
    if (dist.total() != spec.codeword_count())
        throw InternalError("enumerated multiplicities do not sum to p^(2e)");
    return dist;
}

WeightDistribution reference_distribution(const Field& f, const CodeSpec& spec, const DefiningSet& d) {
    const std::uint64_t q = f.q();
    std::vector<std::uint64_t> hist(d.size() + 1, 0);
    for (Elem a = 0; a < q; ++a)
        for (Elem b = 0; b < q; ++b)
            ++hist[static_cast<std::size_t>(codeword_weight(f, d, a, b))];
    WeightDistribution dist = WeightDistribution::from_histogram(hist);
    if (dist.total() != spec.codeword_count())
        throw InternalError("enumerated multiplicities do not sum to p^(2e)");
    return dist;
}

} // namespace tracecodes
