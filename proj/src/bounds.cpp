#include "tracecodes/bounds.hpp"

#include "tracecodes/code_spec.hpp"
#include "tracecodes/errors.hpp"

namespace tracecodes {

mpz_class griesmer_lower_bound(int k, const mpz_class& d, const mpz_class& q) {
    if (k < 1) throw ParamError("dimension k must be at least 1");
    if (d < 1) throw ParamError("minimum distance d must be at least 1");
    if (q < 2) throw ParamError("alphabet size q must be at least 2");
    mpz_class sum = 0;
    mpz_class qi = 1;
    for (int i = 0; i < k; ++i) {
        mpz_class term;
        mpz_cdiv_q(term.get_mpz_t(), d.get_mpz_t(), qi.get_mpz_t());
        sum += term;
        qi *= q;
    }
    return sum;
}

GriesmerClass classify_optimality(const mpz_class& n, int k, const mpz_class& d, const mpz_class& q) {
    if (n < 1) throw ParamError("length n must be at least 1");
    if (griesmer_lower_bound(k, d + 1, q) > n) return GriesmerClass::Optimal;
    if (griesmer_lower_bound(k, d + 2, q) > n) return GriesmerClass::AlmostOptimal;
    return GriesmerClass::Neither;
}

std::string to_string(GriesmerClass c) {
    switch (c) {
        case GriesmerClass::Optimal: return "griesmer-optimal";
        case GriesmerClass::AlmostOptimal: return "almost-optimal";
        case GriesmerClass::Neither: return "neither";
    }
    return "unknown";
}

} // namespace tracecodes
