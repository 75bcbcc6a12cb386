#pragma once

#include <cstdint>

#include "tracecodes/code_spec.hpp"
#include "tracecodes/cyclotomic.hpp"
#include "tracecodes/field.hpp"

namespace tracecodes {

// Sum over x in F_q of zeta^Tr(a2 x^2 + a1 x + a0), by direct summation.
// ParamError if a2 == 0 (the sum degenerates to character orthogonality).
CycInt quadratic_sum(const Field& f, Elem a2, Elem a1, Elem a0);

// Sum over x in F_q of eta(a2 x^2 + a1 x + a0):
//   -eta(a2)        when a1^2 - 4 a0 a2 != 0,
//   (q-1) eta(a2)   when the discriminant vanishes.
long long quadratic_char_sum(const Field& f, Elem a2, Elem a1, Elem a0);

// S(alpha, beta) = sum over x in F_q of zeta^Tr(alpha x^(p^l + 1) + beta x),
// summed term by term. Valid for any alpha, beta.
CycInt weil_sum_direct(const Field& f, Elem alpha, Elem beta, int l);

// S(alpha, beta) for alpha != 0 by the closed-form case analysis. Requires
// e/gcd(l,e) even with e = 2m and the full construction hypotheses; refuses
// otherwise, since applying the closed forms out of hypothesis is the main
// correctness hazard. Callers wanting unconditional values use
// weil_sum_direct.
CycInt weil_sum_closed(const Field& f, const CodeSpec& spec, Elem alpha, Elem beta, int l);

// Sum over x in the order-2 cyclotomic class C_i of eta(x^2 - y), for
// y in F_p^* and p = 3 (mod 4). Evaluates the sum directly and checks it
// against its closed form (0 when y is a square, -1 otherwise).
long long cyclotomic_eta_sum(int y, int i, int p);

// Number of beta in F_q for which X^(p^2l) + X = -beta^(p^l) is solvable.
// Requires m/s even (otherwise the map is a permutation and the count is
// trivially q); the result is checked against p^(e-2s).
std::uint64_t solvable_set_count(const Field& f, const CodeSpec& spec, int l);

} // namespace tracecodes
