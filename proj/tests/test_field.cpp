#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "tracecodes/errors.hpp"
#include "tracecodes/field.hpp"

using namespace tracecodes;

namespace {

// Independent irreducibility oracle for quadratics: no root in F_p.
bool quadratic_has_root(int c0, int c1, int p) {
    for (int x = 0; x < p; ++x)
        if ((x * x + c1 * x + c0) % p == 0) return true;
    return false;
}

// Multiplicative order by brute-force scan.
std::uint64_t element_order(const Field& f, Elem x) {
    Elem v = x;
    std::uint64_t k = 1;
    while (v != f.one()) {
        v = f.mul(v, x);
        ++k;
        REQUIRE(k <= f.q());
    }
    return k;
}

} // namespace

TEST_SUITE("finite-field") {

TEST_CASE("prime field construction") {
    const Field f = Field::make(3, 1);
    CHECK(f.q() == 3);
    CHECK(f.modulus() == std::vector<int>{0, 1}); // smallest valid constant term is 0
    CHECK(f.generator() == 2);
    CHECK(element_order(f, f.generator()) == 2);
}

TEST_CASE("quadratic extension picks the lex-smallest irreducible modulus") {
    const Field f = Field::make(3, 2);
    // oracle: scan all 9 monic quadratics in low-degree-first lex order
    std::vector<int> expected;
    for (int c0 = 0; c0 < 3 && expected.empty(); ++c0)
        for (int c1 = 0; c1 < 3; ++c1)
            if (!quadratic_has_root(c0, c1, 3)) {
                expected = {c0, c1, 1};
                break;
            }
    CHECK(f.modulus() == expected);
    CHECK(element_order(f, f.generator()) == 8);
}

TEST_CASE("generator of F_49 has order 48") {
    const Field f = Field::make(7, 2);
    CHECK(f.q() == 49);
    CHECK(element_order(f, f.generator()) == 48);
}

TEST_CASE("construction is deterministic") {
    const Field a = Field::make(7, 2);
    const Field b = Field::make(7, 2);
    CHECK(a.modulus() == b.modulus());
    CHECK(a.generator() == b.generator());
}

TEST_CASE("invalid characteristics are rejected") {
    CHECK_THROWS_AS(Field::make(6, 2), ParamError);
    CHECK_THROWS_AS(Field::make(2, 3), ParamError);
    CHECK_THROWS_AS(Field::make(9, 1), ParamError);
    CHECK_THROWS_AS(Field::make(3, 0), ParamError);
}

TEST_CASE("field axioms on small fields") {
    for (auto [p, e] : std::vector<std::pair<int, int>>{{3, 2}, {7, 2}, {3, 4}}) {
        const Field f = Field::make(p, e);
        // spot inverses and distributivity over the whole field when small
        for (Elem a = 1; a < f.q(); ++a) CHECK(f.mul(a, f.inv(a)) == f.one());
        for (Elem a = 0; a < std::min<std::uint64_t>(f.q(), 32); ++a)
            for (Elem b = 0; b < std::min<std::uint64_t>(f.q(), 32); ++b) {
                CHECK(f.mul(a, b) == f.mul(b, a));
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, f.add(b, f.one())) == f.add(f.mul(a, b), a));
            }
    }
}

TEST_CASE("lex ordering of elements is a bijection ordered by coefficient vectors") {
    const Field f = Field::make(3, 2);
    std::vector<std::vector<int>> seen;
    for (std::uint64_t r = 0; r < f.q(); ++r) {
        Elem x = f.element_at_lex_rank(r);
        CHECK(f.lex_rank(x) == r);
        seen.push_back(f.coeffs(x));
    }
    CHECK(std::is_sorted(seen.begin(), seen.end()));
    CHECK(std::set<std::vector<int>>(seen.begin(), seen.end()).size() == f.q());
}

TEST_CASE("trace examples") {
    const Field f = Field::make(3, 2);
    CHECK(f.trace(0) == 0);
    CHECK(f.trace(f.embed(1)) == 2); // trace of an F_p constant is e*c

    // direct Frobenius-sum evaluation: Tr(g) = g + g^3
    const Elem g = f.generator();
    Elem conj_sum = f.add(g, f.pow(g, 3));
    CHECK(f.in_prime_field(conj_sum));
    CHECK(f.trace(g) == static_cast<int>(conj_sum));
}

TEST_CASE("trace is linear, Frobenius-invariant and balanced") {
    for (auto [p, e] : std::vector<std::pair<int, int>>{{3, 2}, {3, 4}, {7, 2}, {11, 2}}) {
        const Field f = Field::make(p, e);
        std::map<int, std::uint64_t> hits;
        for (Elem x = 0; x < f.q(); ++x) {
            ++hits[f.trace(x)];
            CHECK(f.trace(f.pow(x, static_cast<std::uint64_t>(p))) == f.trace(x));
        }
        for (int v = 0; v < p; ++v) CHECK(hits[v] == f.q() / p); // surjective, balanced
        for (Elem x = 0; x < f.q(); ++x)
            for (Elem y = 0; y < f.q(); ++y)
                for (int c = 0; c < p; ++c)
                    CHECK(f.trace(f.add(x, f.mul(f.embed(c), y))) ==
                          (f.trace(x) + c * f.trace(y)) % p);
    }
}

TEST_CASE("quadratic character of F_p") {
    CHECK(eta_p(0, 7) == 0);
    CHECK(eta_p(2, 7) == 1); // 2 = 3^2 mod 7
    for (int p : {3, 7, 11, 19, 23}) {
        CHECK(eta_p(p - 1, p) == -1); // eta(-1) = -1 iff p = 3 mod 4
        // multiplicativity on all of F_p^*
        for (int a = 1; a < p; ++a)
            for (int b = 1; b < p; ++b)
                CHECK(eta_p(a * b % p, p) == eta_p(a, p) * eta_p(b, p));
        // oracle: the squares enumerated directly
        std::set<int> squares;
        for (int a = 1; a < p; ++a) squares.insert(a * a % p);
        for (int a = 1; a < p; ++a) CHECK(eta_p(a, p) == (squares.count(a) ? 1 : -1));
    }
    CHECK(eta_p(-1, 13) == 1); // 13 = 1 mod 4
}

TEST_CASE("quadratic character of F_q") {
    for (auto [p, e] : std::vector<std::pair<int, int>>{{3, 2}, {7, 2}}) {
        const Field f = Field::make(p, e);
        const Elem g = f.generator();
        CHECK(f.eta(0) == 0);
        CHECK(f.eta(g) == -1);
        CHECK(f.eta(f.mul(g, g)) == 1);
        for (Elem a = 1; a < f.q(); ++a)
            for (Elem b = 1; b < f.q(); ++b)
                CHECK(f.eta(f.mul(a, b)) == f.eta(a) * f.eta(b));
        // oracle: x^((q-1)/2) evaluated independently
        for (Elem x = 1; x < f.q(); ++x) {
            Elem v = f.one();
            for (std::uint64_t k = 0; k < (f.q() - 1) / 2; ++k) v = f.mul(v, x);
            CHECK(f.eta(x) == (v == f.one() ? 1 : -1));
        }
    }
}

TEST_CASE("cyclotomic classes of order 2") {
    CHECK(cyclotomic_class(0, 3) == std::vector<int>{1});
    CHECK(cyclotomic_class(1, 3) == std::vector<int>{2});
    CHECK(cyclotomic_class(0, 7) == std::vector<int>{1, 2, 4});
    CHECK(cyclotomic_class(1, 7) == std::vector<int>{3, 5, 6});
    for (int p : {3, 7, 11, 19, 23}) {
        const auto c0 = cyclotomic_class(0, p);
        const auto c1 = cyclotomic_class(1, p);
        CHECK(c0.size() == static_cast<std::size_t>((p - 1) / 2));
        CHECK(c1.size() == static_cast<std::size_t>((p - 1) / 2));
        std::set<int> all(c0.begin(), c0.end());
        all.insert(c1.begin(), c1.end());
        CHECK(all.size() == static_cast<std::size_t>(p - 1)); // disjoint union of F_p^*
    }
}

TEST_CASE("linearized solver: homogeneous equation in the permutation case") {
    const Field f = Field::make(3, 2);
    const auto sol = linearized_solve(f, f.one(), 1, 0);
    CHECK(sol.status == SolveStatus::Unique);
    CHECK(sol.representative == 0);
}

TEST_CASE("linearized solver rejects alpha = 0") {
    const Field f = Field::make(3, 2);
    CHECK_THROWS_AS(linearized_solve(f, 0, 1, f.one()), ParamError);
}

TEST_CASE("linearized solver matches exhaustive search") {
    // membership oracle: evaluate alpha^(p^l) X^(p^2l) + alpha X pointwise
    for (auto [p, e, l] : std::vector<std::array<int, 3>>{{3, 2, 1}, {3, 4, 1}, {3, 4, 2}}) {
        const Field f = Field::make(p, e);
        for (Elem alpha = 1; alpha < f.q(); ++alpha) {
            const LinearizedMap map(f, alpha, l);
            for (Elem beta = 0; beta < f.q(); ++beta) {
                const Elem rhs = f.neg(f.frobenius(beta, l));
                std::set<Elem> expected;
                for (Elem x = 0; x < f.q(); ++x)
                    if (map.apply(x) == rhs) expected.insert(x);

                const auto sol = map.solve(beta);
                if (sol.status == SolveStatus::NoSolution) {
                    CHECK(expected.empty());
                    continue;
                }
                // span the reported affine set and compare membership exactly
                std::set<Elem> reported;
                const int kd = sol.kernel_dim;
                REQUIRE(kd == static_cast<int>(sol.kernel_basis.size()));
                std::uint64_t combos = 1;
                for (int k = 0; k < kd; ++k) combos *= static_cast<std::uint64_t>(p);
                for (std::uint64_t c = 0; c < combos; ++c) {
                    Elem v = sol.representative;
                    std::uint64_t t = c;
                    for (int k = 0; k < kd; ++k) {
                        v = f.add(v, f.mul(f.embed(static_cast<int>(t % p)), sol.kernel_basis[k]));
                        t /= p;
                    }
                    reported.insert(v);
                }
                CHECK(reported == expected);
            }
        }
    }
}

TEST_CASE("linearized solver matches sampled exhaustive search over F_6561") {
    const Field f = Field::make(3, 8);
    std::mt19937 rng(2718);
    std::uniform_int_distribution<std::uint64_t> pick(0, f.q() - 1);
    for (int round = 0; round < 12; ++round) {
        const Elem alpha = 1 + pick(rng) % (f.q() - 1);
        const Elem beta = pick(rng);
        const LinearizedMap map(f, alpha, 2);
        const Elem rhs = f.neg(f.frobenius(beta, 2));
        std::set<Elem> expected;
        for (Elem x = 0; x < f.q(); ++x)
            if (map.apply(x) == rhs) expected.insert(x);
        const auto sol = map.solve(beta);
        if (sol.status == SolveStatus::NoSolution) {
            CHECK(expected.empty());
            continue;
        }
        CHECK(expected.count(sol.representative) == 1);
        std::uint64_t kernel_size = 1;
        for (int k = 0; k < sol.kernel_dim; ++k) kernel_size *= 3;
        CHECK(expected.size() == kernel_size);
        for (const Elem v : sol.kernel_basis) CHECK(expected.count(f.add(sol.representative, v)) == 1);
    }
}

TEST_CASE("kernel dimension follows the degenerate-alpha law") {
    // kernel is p^(2s) exactly when e/s is even and alpha^((q-1)/(p^s+1)) = (-1)^(m/s)
    for (auto [p, e, l] : std::vector<std::array<int, 3>>{{3, 2, 1}, {3, 4, 1}, {3, 4, 2}}) {
        const Field f = Field::make(p, e);
        const int s = std::gcd(l, e);
        const int m = e / 2;
        std::uint64_t ps = 1;
        for (int k = 0; k < s; ++k) ps *= static_cast<std::uint64_t>(p);
        const Elem target = (m / s) % 2 == 0 ? f.one() : f.embed(p - 1);
        for (Elem alpha = 1; alpha < f.q(); ++alpha) {
            const auto sol = linearized_solve(f, alpha, l, 0);
            const bool degenerate = f.pow(alpha, (f.q() - 1) / (ps + 1)) == target;
            CHECK(sol.kernel_dim == (degenerate ? 2 * s : 0));
        }
    }
}

TEST_CASE("solvable right-hand sides in the degenerate case number p^(e-2s)") {
    const Field f = Field::make(3, 4);
    const LinearizedMap map(f, f.one(), 1); // m/s = 2: every alpha in F_p^* is degenerate
    std::uint64_t solvable = 0;
    for (Elem beta = 0; beta < f.q(); ++beta) {
        const auto sol = map.solve(beta);
        if (sol.status == SolveStatus::NoSolution) continue;
        ++solvable;
        CHECK(sol.kernel_dim == 2);
    }
    CHECK(solvable == 9);
}

} // TEST_SUITE
