#include "tracecodes/field.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

#include "tracecodes/errors.hpp"

namespace tracecodes {

namespace {

// Fields are table-backed up to this size; beyond it all arithmetic falls
// back to polynomial operations.
constexpr std::uint64_t kTableLimit = 1u << 21;

using Poly = std::vector<int>; // dense coefficients mod p, low degree first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<int>((r[i + j] + static_cast<long long>(a[i]) * b[j]) % p);
    }
    // reduce modulo the monic polynomial `mod`
    const std::size_t deg = mod.size() - 1;
    for (std::size_t i = r.size(); i-- > deg;) {
        int c = r[i];
        if (c == 0) continue;
        r[i] = 0;
        for (std::size_t j = 0; j < deg; ++j)
            r[i - deg + j] = static_cast<int>(((r[i - deg + j] - static_cast<long long>(c) * mod[j]) % p + p) % p);
    }
    r.resize(deg);
    trim(r);
    return r;
}

Poly poly_pow_mod(Poly base, std::uint64_t k, const Poly& mod, int p) {
    Poly r{1};
    while (k) {
        if (k & 1) r = poly_mul_mod(r, base, mod, p);
        base = poly_mul_mod(base, base, mod, p);
        k >>= 1;
    }
    return r;
}

Poly poly_mod(Poly a, const Poly& mod, int p) {
    const std::size_t deg = mod.size() - 1;
    for (std::size_t i = a.size(); i-- > deg;) {
        int c = a[i];
        if (c == 0) continue;
        a[i] = 0;
        for (std::size_t j = 0; j < deg; ++j)
            a[i - deg + j] = static_cast<int>(((a[i - deg + j] - static_cast<long long>(c) * mod[j]) % p + p) % p);
    }
    if (a.size() > deg) a.resize(deg);
    trim(a);
    return a;
}

Poly poly_gcd(Poly a, Poly b, int p) {
    auto mod_inverse = [p](int x) {
        // Fermat: x^(p-2) mod p
        long long r = 1, base = x % p;
        for (int k = p - 2; k; k >>= 1) {
            if (k & 1) r = r * base % p;
            base = base * base % p;
        }
        return static_cast<int>(r);
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b with b made monic on the fly
        int lead_inv = mod_inverse(b.back());
        Poly bm = b;
        for (int& c : bm) c = static_cast<int>(static_cast<long long>(c) * lead_inv % p);
        Poly r = a;
        while (r.size() >= bm.size() && !r.empty()) {
            int c = r.back();
            if (c != 0) {
                std::size_t shift = r.size() - bm.size();
                for (std::size_t j = 0; j < bm.size(); ++j)
                    r[shift + j] = static_cast<int>(((r[shift + j] - static_cast<long long>(c) * bm[j]) % p + p) % p);
            }
            r.pop_back();
            trim(r);
            if (r.size() < bm.size()) break;
        }
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^k) mod f, via k successive p-th powers.
Poly frobenius_of_x(int k, const Poly& mod, int p) {
    Poly h{0, 1}; // x
    h = poly_mod(h, mod, p);
    for (int i = 0; i < k; ++i) h = poly_pow_mod(h, static_cast<std::uint64_t>(p), mod, p);
    return h;
}

// Rabin irreducibility test for a monic polynomial of degree e over F_p.
bool is_irreducible(const Poly& f, int p) {
    const int e = static_cast<int>(f.size()) - 1;
    if (e == 1) return true;
    // x^(p^e) == x (mod f)
    Poly xpe = frobenius_of_x(e, f, p);
    Poly x{0, 1};
    if (poly_mod(x, f, p) != xpe) return false;
    // gcd(x^(p^(e/r)) - x, f) == 1 for each prime r | e
    int n = e;
    for (int r = 2; r * r <= n; ++r) {
        if (n % r) continue;
        while (n % r == 0) n /= r;
        Poly g = frobenius_of_x(e / r, f, p);
        // g - x
        if (g.size() < 2) g.resize(2, 0);
        g[1] = ((g[1] - 1) % p + p) % p;
        trim(g);
        Poly d = poly_gcd(f, g, p);
        if (d.size() != 1) return false;
    }
    if (n > 1) {
        Poly g = frobenius_of_x(e / n, f, p);
        if (g.size() < 2) g.resize(2, 0);
        g[1] = ((g[1] - 1) % p + p) % p;
        trim(g);
        Poly d = poly_gcd(f, g, p);
        if (d.size() != 1) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

std::uint64_t ipow_u64(std::uint64_t b, int k) {
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r *= b;
    return r;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int eta_p(int a, int p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    // Euler's criterion: a^((p-1)/2) mod p
    long long r = 1, base = a;
    for (int k = (p - 1) / 2; k; k >>= 1) {
        if (k & 1) r = r * base % p;
        base = base * base % p;
    }
    return r == 1 ? 1 : -1;
}

std::vector<int> cyclotomic_class(int i, int p) {
    if (i != 0 && i != 1) throw ParamError("cyclotomic class index must be 0 or 1");
    if (!is_prime(static_cast<std::uint64_t>(p)) || p == 2) throw ParamError("p must be an odd prime");
    std::vector<int> out;
    for (int a = 1; a < p; ++a)
        if ((eta_p(a, p) == 1) == (i == 0)) out.push_back(a);
    return out;
}

int cyclotomic_class_of(int a, int p) {
    int v = eta_p(a, p);
    if (v == 0) return -1;
    return v == 1 ? 0 : 1;
}

Field Field::make(int p, int e) {
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
        throw ParamError("p must be an odd prime, got " + std::to_string(p));
    if (e < 1) throw ParamError("extension degree e must be positive");

    Field f;
    f.p_ = p;
    f.e_ = e;
    f.q_ = ipow_u64(static_cast<std::uint64_t>(p), e);

    // Lexicographically smallest monic irreducible modulus, where candidate
    // coefficient vectors (c_0, ..., c_{e-1}) are compared low-degree-first.
    const std::uint64_t count = f.q_;
    for (std::uint64_t r = 0; r < count; ++r) {
        Poly cand(e + 1, 0);
        std::uint64_t t = r;
        for (int k = e - 1; k >= 0; --k) { // c_0 is the most significant digit of r
            cand[k] = static_cast<int>(t % p);
            t /= p;
        }
        cand[e] = 1;
        if (e > 1 && cand[0] == 0) continue; // divisible by x
        if (is_irreducible(cand, p)) {
            f.modulus_ = std::move(cand);
            break;
        }
    }
    if (f.modulus_.empty()) throw InternalError("no irreducible modulus found");

    f.build_trace_basis();
    f.find_generator();
    if (f.q_ <= kTableLimit) f.build_tables();
    return f;
}

Elem Field::embed(int c) const {
    c %= p_;
    if (c < 0) c += p_;
    return static_cast<Elem>(c);
}

std::vector<int> Field::coeffs(Elem x) const {
    std::vector<int> c(e_);
    for (int k = 0; k < e_; ++k) {
        c[k] = static_cast<int>(x % p_);
        x /= p_;
    }
    return c;
}

Elem Field::from_coeffs(std::span<const int> c) const {
    if (c.size() != static_cast<std::size_t>(e_))
        throw ParamError("coefficient vector must have length e");
    Elem x = 0;
    for (int k = e_ - 1; k >= 0; --k) {
        if (c[k] < 0 || c[k] >= p_) throw ParamError("coefficient out of range [0, p)");
        x = x * p_ + static_cast<Elem>(c[k]);
    }
    return x;
}

Elem Field::element_at_lex_rank(std::uint64_t r) const {
    // Digit-reverse: the low-degree coefficient is the most significant digit
    // of the rank, so ranks ascend in coefficient-lex order.
    Elem x = 0;
    for (int k = 0; k < e_; ++k) {
        x = x * p_ + r % p_;
        r /= p_;
    }
    return x;
}

std::uint64_t Field::lex_rank(Elem x) const {
    std::uint64_t r = 0;
    std::uint64_t scale = q_ / p_;
    for (int k = 0; k < e_; ++k) {
        r += (x % p_) * scale;
        x /= p_;
        scale /= p_;
    }
    return r;
}

Elem Field::add(Elem a, Elem b) const {
    Elem r = 0, scale = 1;
    for (int k = 0; k < e_; ++k) {
        r += (a % p_ + b % p_) % p_ * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::neg(Elem a) const {
    Elem r = 0, scale = 1;
    for (int k = 0; k < e_; ++k) {
        r += (p_ - a % p_) % p_ * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

Elem Field::mul_poly(Elem a, Elem b) const {
    Poly pa = coeffs(a), pb = coeffs(b);
    trim(pa);
    trim(pb);
    Poly pr = poly_mul_mod(pa, pb, modulus_, p_);
    pr.resize(e_, 0);
    Elem r = 0;
    for (int k = e_ - 1; k >= 0; --k) r = r * p_ + static_cast<Elem>(pr[k]);
    return r;
}

Elem Field::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) return exp_[log_[a] + log_[b]];
    return mul_poly(a, b);
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw ParamError("zero has no multiplicative inverse");
    if (!log_.empty()) return exp_[q_ - 1 - log_[a]];
    return pow(a, q_ - 2);
}

Elem Field::pow(Elem x, std::uint64_t k) const {
    if (x == 0) return k == 0 ? one() : zero();
    if (!log_.empty()) {
        const std::uint64_t ord = q_ - 1;
        unsigned __int128 idx = static_cast<unsigned __int128>(log_[x]) * (k % ord);
        return exp_[static_cast<std::uint64_t>(idx % ord)];
    }
    Elem r = one();
    while (k) {
        if (k & 1) r = mul_poly(r, x);
        x = mul_poly(x, x);
        k >>= 1;
    }
    return r;
}

Elem Field::frobenius(Elem x, int k) const {
    k %= e_;
    for (int i = 0; i < k; ++i) x = pow(x, static_cast<std::uint64_t>(p_));
    return x;
}

Elem Field::power_pl_plus_one(Elem x, int l) const { return mul(frobenius(x, l), x); }

int Field::trace(Elem x) const {
    // Tr is F_p-linear, so a dot product with Tr on the basis monomials.
    long long t = 0;
    for (int k = 0; k < e_; ++k) {
        t += static_cast<long long>(x % p_) * trace_basis_[k];
        x /= p_;
    }
    return static_cast<int>(t % p_);
}

int Field::eta(Elem x) const {
    if (x == 0) return 0;
    if (!log_.empty()) return log_[x] % 2 == 0 ? 1 : -1;
    Elem v = pow(x, (q_ - 1) / 2);
    return v == one() ? 1 : -1;
}

void Field::build_trace_basis() {
    trace_basis_.assign(e_, 0);
    for (int k = 0; k < e_; ++k) {
        Elem xk = ipow_u64(static_cast<std::uint64_t>(p_), k); // the monomial x^k
        Elem acc = 0, y = xk;
        for (int j = 0; j < e_; ++j) {
            acc = add(acc, y);
            y = pow(y, static_cast<std::uint64_t>(p_));
        }
        if (!in_prime_field(acc)) throw InternalError("trace of basis monomial not in F_p");
        trace_basis_[k] = static_cast<int>(acc);
    }
}

void Field::find_generator() {
    const std::uint64_t ord = q_ - 1;
    const auto factors = prime_factors(ord);
    for (std::uint64_t r = 0; r < q_; ++r) {
        Elem g = element_at_lex_rank(r);
        if (g == 0) continue;
        bool primitive = true;
        for (std::uint64_t f : factors) {
            if (pow(g, ord / f) == one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            generator_ = g;
            return;
        }
    }
    throw InternalError("no primitive element found");
}

void Field::build_tables() {
    const std::uint64_t ord = q_ - 1;
    exp_.assign(2 * ord, 0);
    log_.assign(q_, 0);
    Elem v = one();
    for (std::uint64_t k = 0; k < ord; ++k) {
        exp_[k] = v;
        log_[v] = static_cast<std::uint32_t>(k);
        v = mul_poly(v, generator_);
    }
    if (v != one()) throw InternalError("generator order mismatch while building tables");
    for (std::uint64_t k = 0; k < ord; ++k) exp_[ord + k] = exp_[k];
}

LinearizedMap::LinearizedMap(const Field& f, Elem alpha, int l) : field_(&f), l_(l) {
    if (alpha == 0) throw ParamError("linearized map requires alpha != 0");
    if (l < 1) throw ParamError("l must be positive");
    const int e = f.e();
    matrix_.assign(static_cast<std::size_t>(e) * e, 0);
    const Elem alpha_pl = f.frobenius(alpha, l);
    for (int j = 0; j < e; ++j) {
        Elem xj = 1;
        for (int k = 0; k < j; ++k) xj *= f.p(); // monomial x^j
        Elem img = f.add(f.mul(alpha_pl, f.frobenius(xj, 2 * l)), f.mul(alpha, xj));
        auto c = f.coeffs(img);
        for (int i = 0; i < e; ++i) matrix_[static_cast<std::size_t>(i) * e + j] = c[i];
    }
}

Elem LinearizedMap::apply(Elem x) const {
    const Field& f = *field_;
    const int e = f.e();
    auto cx = f.coeffs(x);
    std::vector<int> out(e, 0);
    for (int i = 0; i < e; ++i) {
        long long acc = 0;
        for (int j = 0; j < e; ++j) acc += static_cast<long long>(matrix_[static_cast<std::size_t>(i) * e + j]) * cx[j];
        out[i] = static_cast<int>(acc % f.p());
    }
    return f.from_coeffs(out);
}

LinearizedSolution LinearizedMap::solve(Elem beta) const {
    const Field& f = *field_;
    const int e = f.e();
    const int p = f.p();

    // augmented system M | rhs with rhs = -beta^(p^l)
    std::vector<int> m = matrix_;
    auto rhs = f.coeffs(f.neg(f.frobenius(beta, l_)));

    auto mod_inverse = [p](int x) {
        long long r = 1, base = x % p;
        for (int k = p - 2; k; k >>= 1) {
            if (k & 1) r = r * base % p;
            base = base * base % p;
        }
        return static_cast<int>(r);
    };

    std::vector<int> pivot_col_of_row(e, -1);
    int rank = 0;
    for (int col = 0; col < e && rank < e; ++col) {
        int sel = -1;
        for (int row = rank; row < e; ++row) {
            if (m[static_cast<std::size_t>(row) * e + col] != 0) {
                sel = row;
                break;
            }
        }
        if (sel < 0) continue;
        for (int j = 0; j < e; ++j) std::swap(m[static_cast<std::size_t>(sel) * e + j], m[static_cast<std::size_t>(rank) * e + j]);
        std::swap(rhs[sel], rhs[rank]);
        const int pivinv = mod_inverse(m[static_cast<std::size_t>(rank) * e + col]);
        for (int j = 0; j < e; ++j)
            m[static_cast<std::size_t>(rank) * e + j] = static_cast<int>(static_cast<long long>(m[static_cast<std::size_t>(rank) * e + j]) * pivinv % p);
        rhs[rank] = static_cast<int>(static_cast<long long>(rhs[rank]) * pivinv % p);
        for (int row = 0; row < e; ++row) {
            if (row == rank) continue;
            const int c = m[static_cast<std::size_t>(row) * e + col];
            if (c == 0) continue;
            for (int j = 0; j < e; ++j)
                m[static_cast<std::size_t>(row) * e + j] =
                    static_cast<int>(((m[static_cast<std::size_t>(row) * e + j] - static_cast<long long>(c) * m[static_cast<std::size_t>(rank) * e + j]) % p + p) % p);
            rhs[row] = static_cast<int>(((rhs[row] - static_cast<long long>(c) * rhs[rank]) % p + p) % p);
        }
        pivot_col_of_row[rank] = col;
        ++rank;
    }

    LinearizedSolution out;
    for (int row = rank; row < e; ++row) {
        if (rhs[row] != 0) {
            out.status = SolveStatus::NoSolution;
            return out;
        }
    }

    std::vector<int> particular(e, 0);
    std::vector<bool> is_pivot_col(e, false);
    for (int row = 0; row < rank; ++row) {
        particular[pivot_col_of_row[row]] = rhs[row];
        is_pivot_col[pivot_col_of_row[row]] = true;
    }
    out.representative = f.from_coeffs(particular);
    out.kernel_dim = e - rank;
    out.status = out.kernel_dim == 0 ? SolveStatus::Unique : SolveStatus::Affine;
    for (int col = 0; col < e; ++col) {
        if (is_pivot_col[col]) continue;
        std::vector<int> v(e, 0);
        v[col] = 1;
        for (int row = 0; row < rank; ++row) {
            const int c = m[static_cast<std::size_t>(row) * e + col];
            v[pivot_col_of_row[row]] = (p - c) % p;
        }
        out.kernel_basis.push_back(f.from_coeffs(v));
    }
    return out;
}

LinearizedSolution linearized_solve(const Field& f, Elem alpha, int l, Elem beta) {
    return LinearizedMap(f, alpha, l).solve(beta);
}

} // namespace tracecodes
