#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tracecodes {

/// An element of Z[zeta_p] in the basis {1, zeta, ..., zeta^(p-2)}.
///
/// Canonical form eliminates zeta^(p-1) through
///   zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)),
/// so equality is plain coefficient comparison. Every character sum in this
/// project lives in this ring; no floating-point roots of unity anywhere.
class CycInt {
public:
    explicit CycInt(int p); // zero element

    static CycInt integer(int p, long long n);
    static CycInt zeta_pow(int p, long long k);
    // Sum of counts[r] * zeta^r over residues r = 0..p-1.
    static CycInt from_exponent_counts(int p, std::span<const long long> counts);

    int p() const { return p_; }
    const std::vector<long long>& coefficients() const { return c_; }

    bool is_zero() const;
    bool is_integer() const; // all coefficients of zeta^1..zeta^(p-2) vanish
    long long as_integer() const;

    CycInt operator-() const;
    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(const CycInt& a, const CycInt& b);
    friend CycInt operator*(CycInt a, long long k);
    friend CycInt operator*(long long k, CycInt a) { return std::move(a) * k; }
    friend bool operator==(const CycInt& a, const CycInt& b) = default;

private:
    void require_same_ring(const CycInt& o) const;

    int p_;
    std::vector<long long> c_; // p-1 coefficients
};

// Quadratic Gauss sum over F_p: sum over v in F_p of eta(v) * zeta^v.
// Squares to eta(-1) * p as an exact ring identity.
CycInt gauss_sum(int p);

// Sum of zeta^(f(x)) for the listed residues f(x).
CycInt additive_char_sum(int p, std::span<const int> residues);

} // namespace tracecodes
