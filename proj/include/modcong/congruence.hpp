#ifndef MODCONG_CONGRUENCE_HPP
#define MODCONG_CONGRUENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "modcong/powerseries.hpp"
#include "modcong/report.hpp"
#include "modcong/sequences.hpp"

namespace modcong {

// Deterministic trial division; fine at desk scale.
bool is_prime(unsigned long n);
std::vector<unsigned long> primes_in(unsigned long lo, unsigned long hi);

struct TwoSquares {
    unsigned long p;
    unsigned long x, y; // x <= y, x^2 + y^2 = p
};

// Square-root-of-(-1) descent for p = 1 (mod 4).
TwoSquares cornacchia(unsigned long p);

// 2x^4 - 12 x^2 y^2 + 2 y^4 for p = 1 (mod 4), else 0; the CM coefficient
// formula for the prime coefficients of f1.
Int cm_b1(unsigned long p);

// (-1/p): +1 for p = 1 (mod 4), -1 for p = 3 (mod 4).
int legendre_minus_one(unsigned long p);

// Affine index rule i(x) = (x + add) / div applied to the raw three-term
// indices x = m p^k.  Non-integral or negative results mean "no such term".
struct IndexMap {
    long long add = 0;
    long long div = 1;
};

struct ThreeTermInstance {
    unsigned long p = 0;
    unsigned long m = 0;
    unsigned r = 0;
    Int alpha;
    Int beta;
    unsigned mod_exponent = 0;
    Int lhs;              // seq(i0) - alpha seq(i1) + beta seq(i2)
    bool pass = false;    // p^mod_exponent divides lhs
    bool truncated = false; // some index was non-integral/negative and read as 0
    std::string describe() const;
};

// Evaluates the three-term combination over indices m p^r, m p^(r-1),
// m p^(r-2) mapped through `map`, and tests divisibility by p^mod_exponent.
ThreeTermInstance three_term_check(const SequenceTable& seq, const Int& alpha,
                                   const Int& beta, unsigned long p,
                                   unsigned long m, unsigned r,
                                   unsigned mod_exponent, const IndexMap& map);

// Beukers' coefficient transfer: with b_n read from table position n-1 and
// s = t / t_1 (the inner series normalized to unit linear coefficient,
// divisions checked exact), returns c_1..c_count where
//   sum c_n q^(n-1) = (sum_{n>=1} b_n s(q)^(n-1)) * t'(q).
// Needs t.precision() >= count + 1.
SequenceTable transfer_coefficients(const SequenceTable& b, const PowerSeries& t,
                                    std::size_t count);

// a(p n) = a(p) a(n) - chi_p p^(weight-1) a(n/p) for n = 1..range, with
// a(n/p) = 0 when p does not divide n.  p = 2 is accepted only with
// chi_p = 0 (the two-term rule).
VerificationReport hecke_check(const SequenceTable& coeffs, unsigned long p,
                               unsigned weight, const Int& chi_p,
                               unsigned long range);

// --- one verifier per stated result ----------------------------------------

// Coefficients of h_n vanish at primes p = (-1)^(n+1) (mod 4).
VerificationReport verify_theorem1(unsigned n, unsigned long prime_bound);

enum class Theorem2Part { a, b, c };
// a: f1's prime coefficients match cm_b1;  b: n^3 | b1(n) - 108 c1(n) for
// 2 < n <= bound;  c: coefficients of f_n (n >= 2) vanish at primes
// p = (-1)^n (mod 4).
VerificationReport verify_theorem2(Theorem2Part part, unsigned long bound,
                                   std::optional<unsigned> n = std::nullopt);

enum class Cor1Relation { eq1, eq2, eq3, eq4 };
// eq3/eq4: three-term congruences for A3/D3 with alpha = b1(p) (closed form,
// cross-checked against the f1 expansion) and beta = (-1/p) p^4; eq4 uses
// modulus exponent r - ((-1/p)+1)/2.  eq1/eq2: A3(p-1) and D3(p-1) mod p
// against 16x^4 and 4/27 x^4 (or 0 for p = 3 mod 4).  All require p > 3.
VerificationReport verify_cor1(Cor1Relation rel, unsigned long prime_bound,
                               unsigned long m_max, unsigned r_max);

// B_n(p-1) = 0 (mod p) when p = (-1)^(n+1) (mod 4); C_n(p-1) = 0 (mod p)
// when p = (-1)^n (mod 4).
VerificationReport verify_cor2(unsigned n, unsigned long prime_bound);

// A2(p-1) = 1 (mod p), the single-binomial form C(p-1,(p-1)/2)^4 = 1
// (mod p), and the p-th Eisenstein coefficient = 1 (mod p).
VerificationReport verify_example(unsigned long prime_bound);

// Apery-number three-term congruence with indices (m p^k - 1)/2, alpha =
// a(p) from the eta(4tau)^6 expansion (a(n) = coefficient of q^(2n)) and
// beta = (-1)^((p-1)/2) p^2, for odd m.
VerificationReport verify_intro_apery(unsigned long prime_bound,
                                      unsigned long m_max, unsigned r_max);

} // namespace modcong

#endif
