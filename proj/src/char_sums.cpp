#include "tracecodes/char_sums.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "tracecodes/errors.hpp"

namespace tracecodes {

namespace {

long long ipow_ll(int b, int k) {
    long long r = 1;
    for (int i = 0; i < k; ++i) r *= b;
    return r;
}

std::uint64_t ipow_u64(int b, int k) {
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r *= static_cast<std::uint64_t>(b);
    return r;
}

void require_field_matches(const Field& f, const CodeSpec& spec) {
    if (f.p() != spec.p || f.e() != spec.e)
        throw ParamError("field does not match code parameters");
}

} // namespace

CycInt quadratic_sum(const Field& f, Elem a2, Elem a1, Elem a0) {
    if (a2 == 0) throw ParamError("quadratic_sum requires a2 != 0");
    const int p = f.p();
    std::vector<long long> counts(static_cast<std::size_t>(p), 0);
    for (Elem x = 0; x < f.q(); ++x) {
        Elem v = f.add(f.mul(a2, f.mul(x, x)), f.add(f.mul(a1, x), a0));
        ++counts[static_cast<std::size_t>(f.trace(v))];
    }
    return CycInt::from_exponent_counts(p, counts);
}

long long quadratic_char_sum(const Field& f, Elem a2, Elem a1, Elem a0) {
    if (a2 == 0) throw ParamError("quadratic_char_sum requires a2 != 0");
    const Elem disc = f.sub(f.mul(a1, a1), f.mul(f.embed(4), f.mul(a0, a2)));
    if (disc == 0) return static_cast<long long>(f.q() - 1) * f.eta(a2);
    return -f.eta(a2);
}

CycInt weil_sum_direct(const Field& f, Elem alpha, Elem beta, int l) {
    if (l < 1) throw ParamError("l must be positive");
    const int p = f.p();
    std::vector<long long> counts(static_cast<std::size_t>(p), 0);
    for (Elem x = 0; x < f.q(); ++x) {
        int t = f.trace(f.mul(alpha, f.power_pl_plus_one(x, l))) + f.trace(f.mul(beta, x));
        ++counts[static_cast<std::size_t>(t % p)];
    }
    return CycInt::from_exponent_counts(p, counts);
}

CycInt weil_sum_closed(const Field& f, const CodeSpec& spec, Elem alpha, Elem beta, int l) {
    require_field_matches(f, spec);
    if (alpha == 0) throw ParamError("weil_sum_closed requires alpha != 0");
    if (l < 1) throw ParamError("l must be positive");
    if (!spec.hypotheses_ok)
        throw ParamError("closed-form Weil sum refused: construction hypotheses do not hold");
    const int e = f.e();
    const int s = std::gcd(l, e);
    if ((e / s) % 2 != 0)
        throw ParamError("closed-form Weil sum refused: e/gcd(l,e) must be even");
    const int p = f.p();
    const int m = e / 2;
    const int ms = m / s;
    const int sign = ms % 2 == 0 ? 1 : -1; // (-1)^(m/s)

    // which side of the case split alpha falls on
    const std::uint64_t expnt = (f.q() - 1) / (ipow_u64(p, s) + 1);
    const Elem crit = f.pow(alpha, expnt);
    const Elem target = ms % 2 == 0 ? f.one() : f.embed(p - 1); // (-1)^(m/s) in F_q
    const bool degenerate = crit == target;

    const long long magnitude = degenerate ? -static_cast<long long>(sign) * ipow_ll(p, m + s)
                                           : static_cast<long long>(sign) * ipow_ll(p, m);

    if (beta == 0) return CycInt::integer(p, magnitude);

    const LinearizedSolution sol = linearized_solve(f, alpha, l, beta);
    if (sol.status == SolveStatus::NoSolution) {
        if (!degenerate)
            throw InternalError("permutation case produced an unsolvable equation");
        return CycInt(p);
    }
    if (!degenerate && sol.status != SolveStatus::Unique)
        throw InternalError("non-degenerate case produced a non-unique solution");

    const int t = f.trace(f.neg(f.mul(alpha, f.power_pl_plus_one(sol.representative, l))));
    return CycInt::zeta_pow(p, t) * magnitude;
}

long long cyclotomic_eta_sum(int y, int i, int p) {
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)) || p % 4 != 3)
        throw ParamError("requires a prime p = 3 (mod 4)");
    if (y % p == 0) throw ParamError("y must be a unit of F_p");
    if (i != 0 && i != 1) throw ParamError("class index must be 0 or 1");
    y %= p;
    if (y < 0) y += p;

    long long sum = 0;
    for (int x : cyclotomic_class(i, p)) sum += eta_p((x * x - y) % p, p);

    const long long closed = cyclotomic_class_of(y, p) == 0 ? 0 : -1;
    if (sum != closed) throw InternalError("cyclotomic class sum disagrees with its closed form");
    return sum;
}

std::uint64_t solvable_set_count(const Field& f, const CodeSpec& spec, int l) {
    require_field_matches(f, spec);
    if (l < 1) throw ParamError("l must be positive");
    const int e = f.e();
    const int s = std::gcd(l, e);
    if ((e / s) % 2 != 0 || ((e / 2) / s) % 2 != 0)
        throw ParamError("solvable_set_count refused: m/gcd(l,e) must be even "
                         "(otherwise the map is a permutation and every beta is solvable)");

    const LinearizedMap map(f, f.one(), l);
    std::uint64_t count = 0;
    for (Elem beta = 0; beta < f.q(); ++beta)
        if (map.solve(beta).status != SolveStatus::NoSolution) ++count;

    std::uint64_t expected = 1;
    for (int k = 0; k < e - 2 * s; ++k) expected *= static_cast<std::uint64_t>(f.p());
    if (count != expected)
        throw InternalError("solvable right-hand-side count disagrees with p^(e-2s)");
    return count;
}

} // namespace tracecodes
