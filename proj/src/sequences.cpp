#include "modcong/sequences.hpp"

#include <algorithm>

namespace modcong {

const Int& SequenceTable::at(long long index) const {
    static const Int kZero = 0;
    if (index < offset) return kZero;
    if (index >= end_index())
        throw PrecisionExceeded(name + " table ends at index " +
                                std::to_string(end_index() - 1) + ", asked for " +
                                std::to_string(index));
    return values[static_cast<std::size_t>(index - offset)];
}

Int central_binomial_sq(unsigned long n) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), 2 * n, n);
    return b * b;
}

PowerSeries hypergeom_series(std::size_t terms) {
    if (terms == 0) throw InvalidPrecision();
    std::vector<Int> c(terms);
    c[0] = 1;
    // c_{n+1}/c_n = (2(2n+1)/(n+1))^2, always an exact division
    for (std::size_t n = 0; n + 1 < terms; ++n) {
        Int num = Int(2 * (2 * n + 1));
        Int den = Int(n + 1);
        c[n + 1] = c[n] * num * num;
        Int den2 = den * den;
        mpz_divexact(c[n + 1].get_mpz_t(), c[n + 1].get_mpz_t(), den2.get_mpz_t());
    }
    return PowerSeries(std::move(c));
}

SequenceTable A_k_table(unsigned k, std::size_t length) {
    if (k == 0) throw BadParameter("A_k needs k >= 1");
    PowerSeries f = hypergeom_series(length);
    PowerSeries p = pow_int(f, static_cast<long>(k));
    return {"A_" + std::to_string(k), 0, p.coefficients()};
}

std::pair<SequenceTable, SequenceTable> B_C_tables(unsigned n, std::size_t length) {
    if (n == 0) throw BadParameter("B_n/C_n need n >= 1");
    PowerSeries F = hypergeom_series(length);
    PowerSeries pref = pow_int(make_series({Int(1), Int(-16)}, length),
                               static_cast<long>((n - 1) / 2));
    PowerSeries C = mul(pref, pow_int(F, 6L * n - 3));
    if (n >= 2) C = truncate(shift_up(C, 2 * n - 2), length);
    PowerSeries B = truncate(shift_up(mul(C, mul(F, F)), 1), length);
    SequenceTable tb{"B_" + std::to_string(n), 0, B.coefficients()};
    SequenceTable tc{"C_" + std::to_string(n), 0, C.coefficients()};
    return {std::move(tb), std::move(tc)};
}

SequenceTable D3_table(std::size_t length) {
    SequenceTable a3 = A_k_table(3, length);
    std::vector<Int> d(length);
    for (std::size_t i = 1; i < length; ++i) {
        d[i] = a3.values[i - 1];
        if (i >= 2) d[i] -= 16 * a3.values[i - 2];
    }
    return {"D_3", 0, std::move(d)};
}

Int apery_value(unsigned long n) {
    Int total = 0;
    Int b1, b2;
    for (unsigned long k = 0; k <= n; ++k) {
        mpz_bin_uiui(b1.get_mpz_t(), n + k, k);
        mpz_bin_uiui(b2.get_mpz_t(), n, k);
        total += b1 * b2 * b2;
    }
    return total;
}

SequenceTable apery_B_table(std::size_t length) {
    std::vector<Int> v(length);
    if (length > 0) v[0] = 1;
    if (length > 1) v[1] = 3;
    for (std::size_t n = 2; n < length; ++n) {
        Int nn = Int(static_cast<unsigned long>(n));
        Int num = (11 * nn * nn - 11 * nn + 3) * v[n - 1] + (nn - 1) * (nn - 1) * v[n - 2];
        Int nn2 = nn * nn;
        if (!mpz_divisible_p(num.get_mpz_t(), nn2.get_mpz_t()))
            throw Error("apery recurrence: non-exact division at n=" + std::to_string(n));
        mpz_divexact(v[n].get_mpz_t(), num.get_mpz_t(), nn2.get_mpz_t());
    }
    // guard the recurrence against the definitional sum
    std::size_t prefix = std::min<std::size_t>(length, 24);
    for (std::size_t n = 0; n < prefix; ++n)
        if (v[n] != apery_value(n))
            throw Error("apery recurrence disagrees with definition at n=" + std::to_string(n));
    if (length > 1024) {
        std::size_t spot = std::min<std::size_t>(length - 1, 2500);
        if (v[1000] != apery_value(1000) || v[spot] != apery_value(spot))
            throw Error("apery recurrence disagrees with definition at a spot index");
    }
    return {"aperyB", 0, std::move(v)};
}

Int sigma3(unsigned long k) {
    if (k == 0) throw BadParameter("sigma3 needs k >= 1");
    Int total = 0;
    for (unsigned long d = 1; d * d <= k; ++d) {
        if (k % d != 0) continue;
        Int a = Int(d);
        total += a * a * a;
        unsigned long e = k / d;
        if (e != d) {
            Int b = Int(e);
            total += b * b * b;
        }
    }
    return total;
}

Int sigma3_half(unsigned long k) {
    if (k % 2 != 0) return 0;
    return sigma3(k / 2);
}

SequenceTable series_to_table(const PowerSeries& f, std::string name) {
    return {std::move(name), 0, f.coefficients()};
}

} // namespace modcong
