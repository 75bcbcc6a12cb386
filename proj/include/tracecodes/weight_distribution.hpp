#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "tracecodes/code_spec.hpp"

namespace tracecodes {

/// Sorted (weight, multiplicity) pairs, including the zero codeword as the
/// weight-0 entry. Multiplicities are exact integers; the grand total must be
/// p^(2e) for a distribution of the full code.
struct WeightDistribution {
    std::vector<std::pair<mpz_class, mpz_class>> entries; // ascending weight

    static WeightDistribution from_histogram(std::span<const std::uint64_t> hist);
    static WeightDistribution from_counts(const std::map<long long, std::uint64_t>& counts);

    mpz_class total() const;
    mpz_class multiplicity(const mpz_class& weight) const; // 0 if absent
    mpz_class min_positive_weight() const;                  // ParamError if none

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

// First few differing rows, for diagnostics when two methods disagree.
std::string distribution_diff(const WeightDistribution& a, const WeightDistribution& b);

// F_p-dimension of the code from the distribution: 2e when the codeword map
// is injective, otherwise 2e - log_p(#zero-weight words).
int dimension_from_distribution(const WeightDistribution& d, const CodeSpec& spec);

} // namespace tracecodes
