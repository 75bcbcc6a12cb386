#include "tracecodes/defining_set.hpp"

#include <string>

#include "tracecodes/analytic.hpp"
#include "tracecodes/errors.hpp"

namespace tracecodes {

DefiningSet build_defining_set(const Field& f, const CodeSpec& spec) {
    if (f.p() != spec.p || f.e() != spec.e)
        throw ParamError("field does not match code parameters");

    const std::uint64_t q = f.q();

    // Both conditions are per-coordinate, so precompute membership and emit
    // pairs in lexicographic order directly.
    std::vector<Elem> first, second;
    for (std::uint64_t r = 0; r < q; ++r) {
        Elem x = f.element_at_lex_rank(r);
        if (f.trace(f.power_pl_plus_one(x, spec.l)) == 1) first.push_back(x);
    }
    for (std::uint64_t r = 0; r < q; ++r) {
        Elem x = f.element_at_lex_rank(r);
        int t = f.trace(x);
        if (t != 0 && cyclotomic_class_of(t, f.p()) == spec.i) second.push_back(x);
    }

    DefiningSet d;
    d.x1.reserve(first.size() * second.size());
    d.x2.reserve(first.size() * second.size());
    for (Elem a : first) {
        for (Elem b : second) {
            d.x1.push_back(a);
            d.x2.push_back(b);
        }
    }

    if (spec.hypotheses_ok) {
        const mpz_class expected = code_length(spec);
        if (mpz_class(static_cast<unsigned long>(d.size())) != expected)
            throw InternalError("defining-set size " + std::to_string(d.size()) +
                                " does not match the closed-form length " + expected.get_str());
    }
    return d;
}

std::vector<int> codeword_symbols(const Field& f, const DefiningSet& d, Elem a, Elem b) {
    std::vector<int> symbols(d.size());
    for (std::size_t j = 0; j < d.size(); ++j)
        symbols[j] = f.trace(f.add(f.mul(a, d.x1[j]), f.mul(b, d.x2[j])));
    return symbols;
}

int codeword_weight(const Field& f, const DefiningSet& d, Elem a, Elem b) {
    int w = 0;
    for (std::size_t j = 0; j < d.size(); ++j)
        if (f.trace(f.add(f.mul(a, d.x1[j]), f.mul(b, d.x2[j]))) != 0) ++w;
    return w;
}

} // namespace tracecodes
