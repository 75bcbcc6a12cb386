#include "tracecodes/cyclotomic.hpp"

#include <string>

#include "tracecodes/errors.hpp"
#include "tracecodes/field.hpp"

namespace tracecodes {

CycInt::CycInt(int p) : p_(p), c_(static_cast<std::size_t>(p - 1), 0) {
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
        throw ParamError("CycInt requires an odd prime p, got " + std::to_string(p));
}

CycInt CycInt::integer(int p, long long n) {
    CycInt r(p);
    r.c_[0] = n;
    return r;
}

CycInt CycInt::zeta_pow(int p, long long k) {
    CycInt r(p);
    k %= p;
    if (k < 0) k += p;
    if (k <= p - 2) {
        r.c_[static_cast<std::size_t>(k)] = 1;
    } else { // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
        for (auto& v : r.c_) v = -1;
    }
    return r;
}

CycInt CycInt::from_exponent_counts(int p, std::span<const long long> counts) {
    if (counts.size() != static_cast<std::size_t>(p))
        throw ParamError("expected one count per residue class");
    CycInt r(p);
    for (int k = 0; k <= p - 2; ++k) r.c_[static_cast<std::size_t>(k)] = counts[static_cast<std::size_t>(k)];
    const long long top = counts[static_cast<std::size_t>(p - 1)];
    for (auto& v : r.c_) v -= top;
    return r;
}

bool CycInt::is_zero() const {
    for (long long v : c_)
        if (v != 0) return false;
    return true;
}

bool CycInt::is_integer() const {
    for (std::size_t k = 1; k < c_.size(); ++k)
        if (c_[k] != 0) return false;
    return true;
}

long long CycInt::as_integer() const {
    if (!is_integer()) throw ParamError("cyclotomic integer has non-integral part");
    return c_[0];
}

void CycInt::require_same_ring(const CycInt& o) const {
    if (p_ != o.p_) throw ParamError("mixing cyclotomic integers over different primes");
}

CycInt CycInt::operator-() const {
    CycInt r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
    require_same_ring(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
    require_same_ring(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
    a.require_same_ring(b);
    const int p = a.p_;
    // convolve, fold zeta^k for k >= p via zeta^p = 1, then eliminate the
    // zeta^(p-1) slot via the minimal-polynomial relation
    std::vector<long long> buf(static_cast<std::size_t>(2 * p - 3), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) buf[i + j] += a.c_[i] * b.c_[j];
    }
    for (std::size_t k = static_cast<std::size_t>(p); k < buf.size(); ++k) buf[k - static_cast<std::size_t>(p)] += buf[k];
    CycInt r(p);
    const long long top = buf[static_cast<std::size_t>(p - 1)];
    for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(p); ++k) r.c_[k] = buf[k] - top;
    return r;
}

CycInt operator*(CycInt a, long long k) {
    for (auto& v : a.c_) v *= k;
    return a;
}

CycInt gauss_sum(int p) {
    CycInt g(p);
    std::vector<long long> counts(static_cast<std::size_t>(p), 0);
    for (int v = 1; v < p; ++v) counts[static_cast<std::size_t>(v)] = eta_p(v, p);
    return CycInt::from_exponent_counts(p, counts);
}

CycInt additive_char_sum(int p, std::span<const int> residues) {
    std::vector<long long> counts(static_cast<std::size_t>(p), 0);
    for (int r : residues) {
        int v = r % p;
        if (v < 0) v += p;
        ++counts[static_cast<std::size_t>(v)];
    }
    return CycInt::from_exponent_counts(p, counts);
}

} // namespace tracecodes
