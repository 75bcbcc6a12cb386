#pragma once

#include <gmpxx.h>

#include "tracecodes/code_spec.hpp"
#include "tracecodes/field.hpp"
#include "tracecodes/weight_distribution.hpp"

namespace tracecodes {

// Code length n_i: (p-1)/2 * (p^(2e-2) + p^(e+m-2)) when m/s is odd,
// (p-1)/2 * (p^(2e-2) + p^(e+m+s-2)) when m/s is even. Identical for i = 0, 1.
mpz_class code_length(const CodeSpec& spec);

enum class AClass { Zero, NonZero };
enum class BClass { Zero, PrimeUnit, ExtensionUnit }; // F_p^* vs F_q^* \ F_p^*
enum class EquationStatus { NotApplicable, UniqueSolution, SolvableWithKernel, Unsolvable };
enum class TraceClass { NotApplicable, Zero, Square, NonSquare };

/// Which row of the zero-symbol-count table the codeword (a, b) falls in.
/// For a != 0 the split is driven by the linearized equation
/// X^(p^2l) + X = -a^(p^l) and, when solvable, by the quadratic class of
/// Tr(gamma^(p^l + 1)) for a solution gamma.
struct WeightCase {
    AClass a_class = AClass::Zero;
    BClass b_class = BClass::Zero;
    EquationStatus equation = EquationStatus::NotApplicable;
    TraceClass gamma_trace = TraceClass::NotApplicable;
    bool ms_odd = true; // parity regime the case was classified under
};

WeightCase classify_codeword(const Field& f, const CodeSpec& spec, Elem a, Elem b);

// T_i: the number of defining-set positions where the codeword symbol
// vanishes, per the case tables. ParamError if the case was classified under
// the other parity regime.
mpz_class zero_symbol_count(const WeightCase& c, const CodeSpec& spec);

// wt(c(a, b)) = n_i - T_i. Agrees with codeword_weight on every input.
long long analytic_weight(const Field& f, const CodeSpec& spec, Elem a, Elem b);

// Aggregates analytic_weight over all (a, b), parallel over a-blocks.
WeightDistribution analytic_distribution(const Field& f, const CodeSpec& spec, int threads = 1);

// The closed-form table rows, evaluated exactly and merged on equal weights
// (for small p several rows collapse, e.g. (p-3)/2 = 0 at p = 3).
WeightDistribution theory_distribution(const CodeSpec& spec);

// Dimension of the code: 2e when (a, b) -> c(a, b) is injective, which the
// analytic distribution certifies through its single zero-weight word.
int code_dimension(const Field& f, const CodeSpec& spec);

struct MomentCheck {
    bool pass = false;
    mpz_class actual;
    mpz_class expected;
};

/// The first three Pless power-moment identities, checked exactly against the
/// code parameters. Weight-0 entries are ignored, so distributions may be
/// passed with or without them.
struct PlessReport {
    MomentCheck count;        // sum A_w = p^(2e) - 1
    MomentCheck first;        // sum w A_w = p^(2e-1) (p-1) n
    MomentCheck second;       // sum w^2 A_w = p^(2e-2) (p-1) n ((p-1) n + 1)
    bool pass() const { return count.pass && first.pass && second.pass; }
};

PlessReport check_pless_moments(const WeightDistribution& d, const mpz_class& length,
                                const CodeSpec& spec);

} // namespace tracecodes
