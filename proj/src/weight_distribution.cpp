#include "tracecodes/weight_distribution.hpp"

#include <sstream>

#include "tracecodes/errors.hpp"

namespace tracecodes {

WeightDistribution WeightDistribution::from_histogram(std::span<const std::uint64_t> hist) {
    WeightDistribution d;
    for (std::size_t w = 0; w < hist.size(); ++w)
        if (hist[w] != 0)
            d.entries.emplace_back(mpz_class(static_cast<unsigned long>(w)),
                                   mpz_class(static_cast<unsigned long>(hist[w])));
    return d;
}

WeightDistribution WeightDistribution::from_counts(const std::map<long long, std::uint64_t>& counts) {
    WeightDistribution d;
    for (const auto& [w, c] : counts)
        if (c != 0)
            d.entries.emplace_back(mpz_class(static_cast<long>(w)), mpz_class(static_cast<unsigned long>(c)));
    return d;
}

mpz_class WeightDistribution::total() const {
    mpz_class t = 0;
    for (const auto& [w, c] : entries) t += c;
    return t;
}

mpz_class WeightDistribution::multiplicity(const mpz_class& weight) const {
    for (const auto& [w, c] : entries)
        if (w == weight) return c;
    return 0;
}

mpz_class WeightDistribution::min_positive_weight() const {
    for (const auto& [w, c] : entries)
        if (w > 0) return w;
    throw ParamError("distribution has no positive-weight entry");
}

std::string distribution_diff(const WeightDistribution& a, const WeightDistribution& b) {
    std::ostringstream os;
    int shown = 0;
    std::size_t ia = 0, ib = 0;
    auto emit = [&](const mpz_class& w, const mpz_class& ca, const mpz_class& cb) {
        if (shown++) os << "; ";
        os << "w=" << w.get_str() << ": " << ca.get_str() << " vs " << cb.get_str();
    };
    while ((ia < a.entries.size() || ib < b.entries.size()) && shown < 8) {
        if (ib >= b.entries.size() || (ia < a.entries.size() && a.entries[ia].first < b.entries[ib].first)) {
            emit(a.entries[ia].first, a.entries[ia].second, 0);
            ++ia;
        } else if (ia >= a.entries.size() || b.entries[ib].first < a.entries[ia].first) {
            emit(b.entries[ib].first, 0, b.entries[ib].second);
            ++ib;
        } else {
            if (a.entries[ia].second != b.entries[ib].second)
                emit(a.entries[ia].first, a.entries[ia].second, b.entries[ib].second);
            ++ia;
            ++ib;
        }
    }
    return os.str();
}

int dimension_from_distribution(const WeightDistribution& d, const CodeSpec& spec) {
    mpz_class zero_count = d.multiplicity(0);
    if (zero_count == 0) throw ParamError("distribution is missing its weight-0 entry");
    if (zero_count == 1) return 2 * spec.e;
    // zero-weight words form an F_p-subspace of the (a, b) domain
    int drop = 0;
    while (zero_count > 1 && mpz_divisible_ui_p(zero_count.get_mpz_t(), static_cast<unsigned long>(spec.p))) {
        zero_count /= spec.p;
        ++drop;
    }
    if (zero_count != 1)
        throw InternalError("zero-weight codeword count is not a power of p");
    return 2 * spec.e - drop;
}

} // namespace tracecodes
