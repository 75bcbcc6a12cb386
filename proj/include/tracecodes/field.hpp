#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tracecodes {

// An element of F_{p^e}, packed as base-p digits of its coefficient vector:
// digit k (least significant first) is the coefficient of x^k.
// The zero element is index 0; constants c of F_p are the indices 0..p-1.
using Elem = std::uint64_t;

/// Exact arithmetic in F_q = F_{p^e} as F_p[x]/(modulus).
///
/// Construction is deterministic: make() picks the lexicographically smallest
/// monic irreducible modulus and the lexicographically smallest primitive
/// element (coefficient vectors compared low-degree-first), so every
/// downstream result is bit-reproducible. Instances are immutable after
/// construction and safe to share across threads.
class Field {
public:
    static Field make(int p, int e);

    int p() const { return p_; }
    int e() const { return e_; }
    std::uint64_t q() const { return q_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem generator() const { return generator_; }

    // Embedding of F_p into F_q as constant polynomials.
    Elem embed(int c) const;
    bool in_prime_field(Elem x) const { return x < static_cast<Elem>(p_); }

    std::vector<int> coeffs(Elem x) const;
    Elem from_coeffs(std::span<const int> c) const;

    // Elements ordered lexicographically by coefficient vector (low-degree
    // coefficient compared first). Rank r runs over 0..q-1.
    Elem element_at_lex_rank(std::uint64_t r) const;
    std::uint64_t lex_rank(Elem x) const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;                    // ParamError on zero
    Elem pow(Elem x, std::uint64_t k) const;   // square-and-multiply
    Elem frobenius(Elem x, int k = 1) const;   // x^(p^k)
    Elem power_pl_plus_one(Elem x, int l) const; // x^(p^l + 1)

    // Absolute trace F_q -> F_p, Tr(x) = sum of x^(p^k) over k = 0..e-1.
    int trace(Elem x) const;

    // Quadratic character of F_q: 0 on zero, +1 on nonzero squares, -1 else.
    int eta(Elem x) const;

    // Monic modulus polynomial, e+1 coefficients, low degree first.
    const std::vector<int>& modulus() const { return modulus_; }

    bool has_tables() const { return !log_.empty(); }

private:
    Field() = default;

    Elem mul_poly(Elem a, Elem b) const;
    void build_trace_basis();
    void build_tables();
    void find_generator();

    int p_ = 0;
    int e_ = 0;
    std::uint64_t q_ = 0;
    std::vector<int> modulus_;
    Elem generator_ = 0;
    std::vector<int> trace_basis_;      // Tr(x^k) for k = 0..e-1
    std::vector<std::uint32_t> log_;    // discrete log base generator_, q entries
    std::vector<Elem> exp_;             // generator_^k for k = 0..2(q-1)-1
};

// Legendre-style quadratic character of F_p: 0 on zero, +1 on squares, -1 else.
int eta_p(int a, int p);

// Cyclotomic classes of order 2 in F_p^*: class 0 holds the nonzero squares,
// class 1 the non-squares. Returned sorted ascending.
std::vector<int> cyclotomic_class(int i, int p);

// 0 -> -1 (no class), squares -> 0, non-squares -> 1.
int cyclotomic_class_of(int a, int p);

bool is_prime(std::uint64_t n);

// Solution set of alpha^(p^l) X^(p^2l) + alpha X = -beta^(p^l) over F_q.
enum class SolveStatus { NoSolution, Unique, Affine };

struct LinearizedSolution {
    SolveStatus status = SolveStatus::NoSolution;
    Elem representative = 0;        // a particular solution when solvable
    int kernel_dim = 0;             // F_p-dimension of the solution kernel
    std::vector<Elem> kernel_basis; // kernel_dim elements spanning the kernel
};

/// The F_p-linear map X -> alpha^(p^l) X^(p^2l) + alpha X on F_q, realized as
/// an e-by-e matrix over F_p in the monomial basis.
class LinearizedMap {
public:
    LinearizedMap(const Field& f, Elem alpha, int l); // ParamError if alpha == 0

    // Solves map(X) = -beta^(p^l) by dense Gaussian elimination over F_p.
    LinearizedSolution solve(Elem beta) const;

    Elem apply(Elem x) const;

private:
    const Field* field_;
    int l_;
    std::vector<int> matrix_; // e*e, row-major
};

LinearizedSolution linearized_solve(const Field& f, Elem alpha, int l, Elem beta);

} // namespace tracecodes
