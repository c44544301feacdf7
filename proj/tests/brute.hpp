#ifndef MODCONG_TESTS_BRUTE_HPP
#define MODCONG_TESTS_BRUTE_HPP

// Deliberately naive reference implementations used to cross-check the
// library.  Everything is quadratic (or worse) and written from the
// definitions, independent of the code under test.

#include <gmpxx.h>

#include <cstddef>
#include <random>
#include <vector>

namespace brute {

using Int = mpz_class;
using Vec = std::vector<Int>;

// Schoolbook convolution truncated to n coefficients.
inline Vec mul(const Vec& a, const Vec& b, std::size_t n) {
    Vec c(n);
    for (std::size_t i = 0; i < a.size() && i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < n; ++j)
            c[i + j] += a[i] * b[j];
    }
    return c;
}

inline Vec pow(const Vec& a, unsigned e, std::size_t n) {
    Vec r(n);
    r[0] = 1;
    for (unsigned i = 0; i < e; ++i) r = mul(r, a, n);
    return r;
}

// Inverse by the convolution recurrence, for constant term +-1.
inline Vec inverse(const Vec& f, std::size_t n) {
    Vec g(n);
    g[0] = f[0]; // (+-1)^-1 = +-1
    for (std::size_t k = 1; k < n; ++k) {
        Int s = 0;
        for (std::size_t j = 1; j <= k && j < f.size(); ++j) s += f[j] * g[k - j];
        g[k] = -f[0] * s;
    }
    return g;
}

// Square root with constant term 1, for f that is an exact square.
inline Vec sqrt1(const Vec& f, std::size_t n) {
    Vec s(n);
    s[0] = 1;
    for (std::size_t k = 1; k < n; ++k) {
        Int acc = k < f.size() ? f[k] : Int(0);
        for (std::size_t j = 1; j < k; ++j) acc -= s[j] * s[k - j];
        s[k] = acc / 2;
    }
    return s;
}

// f(g) for g with zero constant term, as the direct sum of f_k g^k.
inline Vec compose(const Vec& f, const Vec& g, std::size_t n) {
    Vec out(n);
    Vec gk(n);
    gk[0] = 1;
    for (std::size_t k = 0; k < f.size() && k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) out[i] += f[k] * gk[i];
        gk = mul(gk, g, n);
    }
    return out;
}

// Compositional inverse solved coefficient by coefficient: r_k is chosen so
// that [q^k] t(r) vanishes (it enters linearly with factor t_1 = +-1).
inline Vec revert(const Vec& t, std::size_t n) {
    Vec r(n);
    if (n > 1) r[1] = t[1]; // 1/t_1 = t_1 for t_1 = +-1
    for (std::size_t k = 2; k < n; ++k) {
        Int have = compose(t, r, k + 1)[k];
        r[k] = -t[1] * have;
    }
    return r;
}

// prod_{j>=1} (1 - q^(scale j))^e, factor by factor; negative e goes through
// the convolution-recurrence inverse of the positive product.
inline Vec eta_factor_pow(unsigned scale, int e, std::size_t n) {
    Vec base(n);
    base[0] = 1;
    for (std::size_t j = 1; scale * j < n; ++j) {
        Vec f(n);
        f[0] = 1;
        f[scale * j] = -1;
        base = mul(base, f, n);
    }
    if (e >= 0) return pow(base, static_cast<unsigned>(e), n);
    return pow(inverse(base, n), static_cast<unsigned>(-e), n);
}

// r2(k) = #{(x,y) in Z^2 : x^2 + y^2 = k} by direct enumeration.
inline Vec sum_two_squares_counts(std::size_t n) {
    Vec th(n);
    long bound = 1;
    while (static_cast<std::size_t>(bound * bound) < n) ++bound;
    for (long x = -bound; x <= bound; ++x)
        for (long y = -bound; y <= bound; ++y) {
            long s = x * x + y * y;
            if (s >= 0 && static_cast<std::size_t>(s) < n) th[s] += 1;
        }
    return th;
}

// Exhaustive two-squares search, x <= y.
inline bool two_squares(unsigned long p, unsigned long& x, unsigned long& y) {
    for (unsigned long a = 0; a * a * 2 <= p; ++a) {
        unsigned long rest = p - a * a;
        unsigned long b = 0;
        while (b * b < rest) ++b;
        if (b * b == rest) {
            x = a;
            y = b;
            return true;
        }
    }
    return false;
}

inline Int sigma3(unsigned long k) {
    Int s = 0;
    for (unsigned long d = 1; d <= k; ++d)
        if (k % d == 0) s += Int(d) * Int(d) * Int(d);
    return s;
}

// Random coefficient vector; bits controls the coefficient magnitude.
inline Vec random_vec(std::mt19937_64& rng, std::size_t n, unsigned bits,
                      bool unit_lead = false) {
    Vec v(n);
    std::uniform_int_distribution<unsigned long> limb;
    std::uniform_int_distribution<int> sign(0, 1);
    for (std::size_t i = 0; i < n; ++i) {
        Int x = 0;
        for (unsigned b = 0; b < bits; b += 64) {
            x <<= 64;
            x += Int(limb(rng));
        }
        x >>= (64 - bits % 64) % 64;
        if (sign(rng)) x = -x;
        v[i] = x;
    }
    if (unit_lead) v[0] = sign(rng) ? 1 : -1;
    return v;
}

} // namespace brute

#endif
