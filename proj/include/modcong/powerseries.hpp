#ifndef MODCONG_POWERSERIES_HPP
#define MODCONG_POWERSERIES_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "modcong/errors.hpp"

namespace modcong {

using Int = mpz_class;

// Truncated power series a_0 + a_1 q + ... + a_{N-1} q^{N-1} + O(q^N) with
// exact integer coefficients, optionally reduced modulo a fixed M >= 2.
// Precision N (the number of known coefficients) is always >= 1.  When a
// modulus is present every stored coefficient is the canonical residue in
// [0, M).
class PowerSeries {
public:
    PowerSeries() : coeffs_(1) {}
    PowerSeries(std::vector<Int> coeffs, std::optional<Int> modulus = std::nullopt);

    std::size_t precision() const { return coeffs_.size(); }
    const std::optional<Int>& modulus() const { return modulus_; }
    const std::vector<Int>& coefficients() const { return coeffs_; }

    // Coefficient of q^n; throws PrecisionExceeded for n >= precision().
    const Int& operator[](std::size_t n) const;

    bool is_zero() const;

private:
    std::vector<Int> coeffs_;
    std::optional<Int> modulus_;
};

// --- construction ---------------------------------------------------------

// Pads (or truncates) `coeffs` to exactly `precision` entries.
PowerSeries make_series(std::vector<Int> coeffs, std::size_t precision,
                        std::optional<Int> modulus = std::nullopt);

PowerSeries zero_series(std::size_t precision, std::optional<Int> modulus = std::nullopt);
PowerSeries one_series(std::size_t precision, std::optional<Int> modulus = std::nullopt);
PowerSeries q_series(std::size_t precision, std::optional<Int> modulus = std::nullopt);

// --- arithmetic -----------------------------------------------------------

// a*f + b*g at the minimum of the two precisions.
PowerSeries linear_combine(const Int& a, const PowerSeries& f,
                           const Int& b, const PowerSeries& g);

// Product truncated to min(prec f, prec g).  Dispatches between the
// quadratic algorithm and Kronecker substitution by size; the two are
// validated against each other in the test suite.
PowerSeries mul(const PowerSeries& f, const PowerSeries& g);
PowerSeries mul_schoolbook(const PowerSeries& f, const PowerSeries& g);
PowerSeries mul_kronecker(const PowerSeries& f, const PowerSeries& g);

// f^k (binary exponentiation); negative k inverts first.
PowerSeries pow_int(const PowerSeries& f, long k);

// Multiplicative inverse via order-doubling Newton iteration.  The constant
// term must be a unit (+-1 exactly, or invertible mod M).  The result is
// checked against f * g = 1 before returning.
PowerSeries inverse(const PowerSeries& f);

// Integral square root with constant term 1 via coupled Newton iteration.
// Requires an exact series (no modulus); throws NotIntegralSqrt when f is
// not the square of an integral series.
PowerSeries sqrt_unit(const PowerSeries& f);

// Theta operator q d/dq; keeps precision.
PowerSeries d_operator(const PowerSeries& f);

// Plain d/dq; loses one coefficient (requires precision >= 2).
PowerSeries derivative(const PowerSeries& f);

// f(t) for val(t) >= 1, truncated to min(prec f, prec t).
PowerSeries compose(const PowerSeries& f, const PowerSeries& t);

// Compositional inverse of t = t1 q + ... with unit t1, via Newton steps;
// the roundtrip compose(t, r) = q is checked before returning.
PowerSeries revert(const PowerSeries& t);

PowerSeries reduce_mod(const PowerSeries& f, const Int& modulus);

// Coefficient of q^n; throws PrecisionExceeded for n >= precision.
const Int& coeff(const PowerSeries& f, std::size_t n);

// --- helpers --------------------------------------------------------------

// Multiply by q^k (gains k known coefficients).
PowerSeries shift_up(const PowerSeries& f, std::size_t k);
// Divide by q^k; the first k coefficients must vanish.
PowerSeries shift_down(const PowerSeries& f, std::size_t k);
// f(-q).
PowerSeries alternate_signs(const PowerSeries& f);
// First n coefficients (1 <= n <= precision).
PowerSeries truncate(const PowerSeries& f, std::size_t n);

// Smallest index with nonzero coefficient, or precision if none.
std::size_t valuation(const PowerSeries& f);

// Compare the first n coefficients (both series need precision >= n and
// identical moduli).
bool agrees_to(const PowerSeries& f, const PowerSeries& g, std::size_t n);

inline PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
    return linear_combine(1, f, 1, g);
}
inline PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) {
    return linear_combine(1, f, -1, g);
}
inline PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) {
    return mul(f, g);
}
inline PowerSeries operator*(const Int& a, const PowerSeries& f) {
    return linear_combine(a, f, 0, f);
}

} // namespace modcong

#endif
