#include "tracecodes/analytic.hpp"

#include <map>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tracecodes/enumeration.hpp"
#include "tracecodes/errors.hpp"

namespace tracecodes {

namespace {

void require_hypotheses(const CodeSpec& spec) {
    if (!spec.hypotheses_ok)
        throw ParamError("closed forms refused: construction hypotheses do not hold "
                         "(need p = 3 mod 4, e = 2m, e/gcd(l,e) even)");
}

// Exponent of the non-principal power appearing in the tables:
// e+m-2 for m/s odd, e+m+s-2 for m/s even.
int defect_exponent(const CodeSpec& spec) {
    return spec.ms_odd() ? spec.e + spec.m - 2 : spec.e + spec.m + spec.s - 2;
}

mpz_class half(const mpz_class& v) {
    if (mpz_odd_p(v.get_mpz_t())) throw InternalError("table value is not an even integer");
    return v / 2;
}

} // namespace

mpz_class code_length(const CodeSpec& spec) {
    require_hypotheses(spec);
    const mpz_class p = spec.p;
    return (p - 1) / 2 * (mpz_pow_int(p, 2 * spec.e - 2) + mpz_pow_int(p, defect_exponent(spec)));
}

WeightCase classify_codeword(const Field& f, const CodeSpec& spec, Elem a, Elem b) {
    require_hypotheses(spec);
    if (f.p() != spec.p || f.e() != spec.e)
        throw ParamError("field does not match code parameters");

    WeightCase c;
    c.ms_odd = spec.ms_odd();
    c.a_class = a == 0 ? AClass::Zero : AClass::NonZero;
    c.b_class = b == 0 ? BClass::Zero : (f.in_prime_field(b) ? BClass::PrimeUnit : BClass::ExtensionUnit);
    if (a == 0) return c;

    const LinearizedSolution sol = linearized_solve(f, f.one(), spec.l, a);
    if (sol.status == SolveStatus::NoSolution) {
        if (c.ms_odd)
            throw InternalError("unsolvable equation in the permutation-polynomial regime");
        c.equation = EquationStatus::Unsolvable;
        return c;
    }
    c.equation = sol.status == SolveStatus::Unique ? EquationStatus::UniqueSolution
                                                   : EquationStatus::SolvableWithKernel;
    const int t = f.trace(f.power_pl_plus_one(sol.representative, spec.l));
    c.gamma_trace = t == 0                ? TraceClass::Zero
                    : eta_p(t, f.p()) == 1 ? TraceClass::Square
                                           : TraceClass::NonSquare;
    return c;
}

mpz_class zero_symbol_count(const WeightCase& c, const CodeSpec& spec) {
    require_hypotheses(spec);
    if (c.ms_odd != spec.ms_odd())
        throw ParamError("weight case was classified under the other parity regime");

    const mpz_class p = spec.p;
    const mpz_class half_units = (p - 1) / 2;
    const mpz_class principal = half_units * mpz_pow_int(p, 2 * spec.e - 3);
    const mpz_class defect = mpz_pow_int(p, defect_exponent(spec));
    const mpz_class defect_minor = defect / spec.p;

    if (c.a_class == AClass::Zero) {
        if (c.b_class == BClass::Zero) return code_length(spec);
        if (c.b_class == BClass::PrimeUnit) return 0;
        return principal + half_units * defect_minor;
    }
    if (c.b_class == BClass::ExtensionUnit) return principal + half_units * defect_minor;
    if (c.equation == EquationStatus::Unsolvable) return principal + half_units * defect_minor;

    const bool trace_nonsquare = c.gamma_trace == TraceClass::NonSquare;
    if (c.b_class == BClass::Zero)
        return trace_nonsquare ? mpz_class(principal - half_units * defect)
                               : mpz_class(principal + half_units * defect);
    return trace_nonsquare ? mpz_class(principal + defect) : principal; // b in F_p^*
}

long long analytic_weight(const Field& f, const CodeSpec& spec, Elem a, Elem b) {
    const mpz_class w = code_length(spec) - zero_symbol_count(classify_codeword(f, spec, a, b), spec);
    if (!w.fits_slong_p()) throw ParamError("weight exceeds the machine-integer range");
    return w.get_si();
}

WeightDistribution analytic_distribution(const Field& f, const CodeSpec& spec, int threads) {
    require_hypotheses(spec);
    if (f.p() != spec.p || f.e() != spec.e)
        throw ParamError("field does not match code parameters");
    const std::uint64_t q = f.q();
    const mpz_class n = code_length(spec);
    if (!n.fits_slong_p()) throw ParamError("code length exceeds the machine-integer range");

    // b enters only through its class; precompute it per element.
    std::vector<std::uint8_t> bclass(q);
    for (Elem b = 0; b < q; ++b)
        bclass[b] = b == 0 ? 0 : (f.in_prime_field(b) ? 1 : 2);

    const int nthreads = resolve_threads(threads);
    std::vector<std::map<long long, std::uint64_t>> partial(static_cast<std::size_t>(nthreads));

#ifdef _OPENMP
#pragma omp parallel num_threads(nthreads)
#endif
    {
#ifdef _OPENMP
        const int tid = omp_get_thread_num();
#else
        const int tid = 0;
#endif
        auto& counts = partial[static_cast<std::size_t>(tid)];
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (std::int64_t ai = 0; ai < static_cast<std::int64_t>(q); ++ai) {
            const Elem a = static_cast<Elem>(ai);
            // the equation side of the case split depends on a alone
            WeightCase base = classify_codeword(f, spec, a, 0);
            long long wt_by_class[3];
            for (int bc = 0; bc < 3; ++bc) {
                WeightCase c = base;
                c.b_class = bc == 0 ? BClass::Zero : (bc == 1 ? BClass::PrimeUnit : BClass::ExtensionUnit);
                const mpz_class w = n - zero_symbol_count(c, spec); // in [0, n], fits by the guard above
                wt_by_class[bc] = w.get_si();
            }
            for (Elem b = 0; b < q; ++b) ++counts[wt_by_class[bclass[b]]];
        }
    }

    std::map<long long, std::uint64_t> counts;
    for (const auto& part : partial)
        for (const auto& [w, c] : part) counts[w] += c;

    WeightDistribution dist = WeightDistribution::from_counts(counts);
    if (dist.total() != spec.codeword_count())
        throw InternalError("analytic multiplicities do not sum to p^(2e)");
    return dist;
}

WeightDistribution theory_distribution(const CodeSpec& spec) {
    require_hypotheses(spec);
    const mpz_class p = spec.p;
    const int e = spec.e;
    const mpz_class half_units = (p - 1) / 2;
    const int u = defect_exponent(spec);

    // Powers feeding the multiplicity columns; the even regime scales down
    // by p^(2s) resp. p^s. All multiplicities are pre-arranged into sums of
    // integer powers so no rational intermediate ever appears.
    const bool odd = spec.ms_odd();
    const int ec = odd ? e : e - 2 * spec.s;
    const int mc = odd ? spec.m : spec.m - spec.s;

    const mpz_class w_base = half_units * (p - 1) * mpz_pow_int(p, 2 * e - 3);
    const mpz_class defect = mpz_pow_int(p, u);

    std::vector<std::pair<mpz_class, mpz_class>> rows;
    rows.emplace_back(0, 1);
    rows.emplace_back(half_units * (mpz_pow_int(p, 2 * e - 2) + defect), p - 1);
    rows.emplace_back(half_units * (p - 1) * (mpz_pow_int(p, 2 * e - 3) + defect / spec.p),
                      odd ? mpz_pow_int(p, 2 * e) - mpz_pow_int(p, e + 1)
                          : mpz_pow_int(p, 2 * e) - mpz_pow_int(p, e + 1 - 2 * spec.s));
    const mpz_class x = half(mpz_pow_int(p, ec) + mpz_pow_int(p, ec - 1) - mpz_pow_int(p, mc) +
                             mpz_pow_int(p, mc - 1) - 2);
    const mpz_class y = half(mpz_pow_int(p, ec) - mpz_pow_int(p, ec - 1) + mpz_pow_int(p, mc) -
                             mpz_pow_int(p, mc - 1));
    rows.emplace_back(w_base, x);
    rows.emplace_back(w_base + (p - 1) * defect, y);
    rows.emplace_back(w_base + half_units * defect, (p - 1) * x);
    rows.emplace_back(w_base + (p - 3) / 2 * defect, (p - 1) * y);

    std::map<mpz_class, mpz_class> merged;
    for (auto& [w, a] : rows) {
        if (a < 0) throw InternalError("negative multiplicity in closed-form table");
        if (a > 0) merged[w] += a;
    }

    WeightDistribution dist;
    for (auto& [w, a] : merged) dist.entries.emplace_back(w, a);
    if (dist.total() != spec.codeword_count())
        throw InternalError("closed-form multiplicities do not sum to p^(2e)");
    return dist;
}

int code_dimension(const Field& f, const CodeSpec& spec) {
    return dimension_from_distribution(analytic_distribution(f, spec), spec);
}

PlessReport check_pless_moments(const WeightDistribution& d, const mpz_class& length,
                                const CodeSpec& spec) {
    mpz_class s0 = 0, s1 = 0, s2 = 0;
    for (const auto& [w, a] : d.entries) {
        if (w == 0) continue;
        s0 += a;
        s1 += w * a;
        s2 += w * w * a;
    }
    const mpz_class p = spec.p;
    const mpz_class units = (p - 1) * length;

    PlessReport r;
    r.count = {false, s0, spec.codeword_count() - 1};
    r.first = {false, s1, mpz_pow_int(p, 2 * spec.e - 1) * (p - 1) * length};
    r.second = {false, s2, mpz_pow_int(p, 2 * spec.e - 2) * (p - 1) * length * (units + 1)};
    r.count.pass = r.count.actual == r.count.expected;
    r.first.pass = r.first.actual == r.first.expected;
    r.second.pass = r.second.actual == r.second.expected;
    return r;
}

} // namespace tracecodes
