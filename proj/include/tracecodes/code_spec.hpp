#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace tracecodes {

/// Parameters (p, e, l, i) of one code construction, plus the derived
/// quantities m = e/2 and s = gcd(l, e).
///
/// The closed-form machinery requires p = 3 (mod 4), e = 2m and e/s even;
/// make() enforces all of that. make_relaxed() only checks basic sanity so
/// that brute-force enumeration can still run outside those hypotheses
/// (closed forms then refuse).
struct CodeSpec {
    int p = 0;
    int e = 0;
    int l = 0;
    int i = 0;
    int m = 0; // e/2 when e is even, 0 otherwise
    int s = 0; // gcd(l, e)
    bool hypotheses_ok = false;

    static CodeSpec make(int p, int e, int l, int i);         // throws ParamError
    static CodeSpec make_relaxed(int p, int e, int l, int i); // basic validity only

    // Parity split of the closed forms. Only meaningful when hypotheses_ok.
    bool ms_odd() const { return (m / s) % 2 == 1; }

    std::uint64_t q() const;       // p^e
    mpz_class codeword_count() const; // p^(2e)
};

mpz_class mpz_pow_int(const mpz_class& base, int exp);

} // namespace tracecodes
