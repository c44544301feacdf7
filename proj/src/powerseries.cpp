#include "modcong/powerseries.hpp"

#include <algorithm>
#include <cstring>

namespace modcong {

namespace {

void canonicalize(std::vector<Int>& coeffs, const std::optional<Int>& mod) {
    if (!mod) return;
    for (Int& c : coeffs) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), mod->get_mpz_t());
}

std::optional<Int> combine_moduli(const PowerSeries& f, const PowerSeries& g) {
    if (!f.modulus()) return g.modulus();
    if (!g.modulus()) return f.modulus();
    if (*f.modulus() != *g.modulus())
        throw ModulusMismatch("cannot mix series reduced modulo different integers");
    return f.modulus();
}

std::size_t ceil_log2(std::size_t n) {
    std::size_t b = 0;
    while ((std::size_t{1} << b) < n) ++b;
    return b;
}

std::size_t max_coeff_bits(const std::vector<Int>& v, std::size_t n) {
    std::size_t b = 1;
    for (std::size_t i = 0; i < n; ++i)
        if (mpz_sgn(v[i].get_mpz_t()) != 0)
            b = std::max(b, mpz_sizeinbase(v[i].get_mpz_t(), 2));
    return b;
}

// Kronecker substitution: evaluate at q = 2^(64*limbs) by packing the
// (nonnegative) coefficients into fixed-width limb slots.
Int pack(const std::vector<Int>& v, std::size_t n, std::size_t limbs) {
    std::vector<mp_limb_t> buf(n * limbs, 0);
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (mpz_sgn(v[i].get_mpz_t()) == 0) continue;
        any = true;
        std::size_t count = 0;
        mpz_export(buf.data() + i * limbs, &count, -1, sizeof(mp_limb_t), 0, 0,
                   v[i].get_mpz_t());
    }
    Int out = 0;
    if (any)
        mpz_import(out.get_mpz_t(), buf.size(), -1, sizeof(mp_limb_t), 0, 0, buf.data());
    return out;
}

std::vector<Int> unpack(const Int& big, std::size_t n, std::size_t limbs) {
    std::vector<Int> out(n);
    if (mpz_sgn(big.get_mpz_t()) == 0) return out;
    std::size_t have = mpz_size(big.get_mpz_t());
    std::vector<mp_limb_t> buf(std::max(have, n * limbs), 0);
    std::size_t count = 0;
    mpz_export(buf.data(), &count, -1, sizeof(mp_limb_t), 0, 0, big.get_mpz_t());
    for (std::size_t i = 0; i < n; ++i)
        mpz_import(out[i].get_mpz_t(), limbs, -1, sizeof(mp_limb_t), 0, 0,
                   buf.data() + i * limbs);
    return out;
}

constexpr std::size_t kKroneckerCutoff = 64;

} // namespace

PowerSeries::PowerSeries(std::vector<Int> coeffs, std::optional<Int> modulus)
    : coeffs_(std::move(coeffs)), modulus_(std::move(modulus)) {
    if (coeffs_.empty()) throw InvalidPrecision();
    if (modulus_ && *modulus_ < 2) throw BadParameter("modulus must be >= 2");
    canonicalize(coeffs_, modulus_);
}

const Int& PowerSeries::operator[](std::size_t n) const {
    if (n >= coeffs_.size())
        throw PrecisionExceeded("coefficient " + std::to_string(n) +
                                " beyond precision " + std::to_string(coeffs_.size()));
    return coeffs_[n];
}

bool PowerSeries::is_zero() const {
    for (const Int& c : coeffs_)
        if (c != 0) return false;
    return true;
}

PowerSeries make_series(std::vector<Int> coeffs, std::size_t precision,
                        std::optional<Int> modulus) {
    if (precision == 0) throw InvalidPrecision();
    coeffs.resize(precision);
    return PowerSeries(std::move(coeffs), std::move(modulus));
}

PowerSeries zero_series(std::size_t precision, std::optional<Int> modulus) {
    return make_series({}, precision, std::move(modulus));
}

PowerSeries one_series(std::size_t precision, std::optional<Int> modulus) {
    return make_series({Int(1)}, precision, std::move(modulus));
}

PowerSeries q_series(std::size_t precision, std::optional<Int> modulus) {
    if (precision < 2) throw InvalidPrecision("q needs precision >= 2");
    return make_series({Int(0), Int(1)}, precision, std::move(modulus));
}

PowerSeries linear_combine(const Int& a, const PowerSeries& f,
                           const Int& b, const PowerSeries& g) {
    auto mod = combine_moduli(f, g);
    std::size_t n = std::min(f.precision(), g.precision());
    std::vector<Int> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = a * f.coefficients()[i] + b * g.coefficients()[i];
    return PowerSeries(std::move(out), std::move(mod));
}

PowerSeries mul_schoolbook(const PowerSeries& f, const PowerSeries& g) {
    auto mod = combine_moduli(f, g);
    std::size_t n = std::min(f.precision(), g.precision());
    std::vector<Int> out(n);
    const auto& a = f.coefficients();
    const auto& b = g.coefficients();
    for (std::size_t i = 0; i < n; ++i) {
        if (mpz_sgn(a[i].get_mpz_t()) == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (mpz_sgn(b[j].get_mpz_t()) == 0) continue;
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return PowerSeries(std::move(out), std::move(mod));
}

PowerSeries mul_kronecker(const PowerSeries& f, const PowerSeries& g) {
    auto mod = combine_moduli(f, g);
    std::size_t n = std::min(f.precision(), g.precision());
    const auto& a = f.coefficients();
    const auto& b = g.coefficients();

    // Split into positive and negative parts so every packed value is
    // nonnegative: fg = (ap-an)(bp-bn) = (ap*bp + an*bn) - (ap*bn + an*bp).
    std::vector<Int> ap(n), an(n), bp(n), bn(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (mpz_sgn(a[i].get_mpz_t()) >= 0) ap[i] = a[i]; else an[i] = -a[i];
        if (mpz_sgn(b[i].get_mpz_t()) >= 0) bp[i] = b[i]; else bn[i] = -b[i];
    }
    std::size_t bits =
        max_coeff_bits(a, n) + max_coeff_bits(b, n) + ceil_log2(n) + 2;
    std::size_t limbs = (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;

    Int pos = pack(ap, n, limbs) * pack(bp, n, limbs) +
              pack(an, n, limbs) * pack(bn, n, limbs);
    Int neg = pack(ap, n, limbs) * pack(bn, n, limbs) +
              pack(an, n, limbs) * pack(bp, n, limbs);
    std::vector<Int> hi = unpack(pos, n, limbs);
    std::vector<Int> lo = unpack(neg, n, limbs);
    std::vector<Int> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = hi[i] - lo[i];
    return PowerSeries(std::move(out), std::move(mod));
}

PowerSeries mul(const PowerSeries& f, const PowerSeries& g) {
    std::size_t n = std::min(f.precision(), g.precision());
    if (n < kKroneckerCutoff) return mul_schoolbook(f, g);
    return mul_kronecker(f, g);
}

PowerSeries pow_int(const PowerSeries& f, long k) {
    if (k < 0) return pow_int(inverse(f), -k);
    PowerSeries acc = one_series(f.precision(), f.modulus());
    PowerSeries base = f;
    unsigned long e = static_cast<unsigned long>(k);
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        if (e >>= 1) base = mul(base, base);
    }
    return acc;
}

PowerSeries inverse(const PowerSeries& f) {
    std::size_t n = f.precision();
    const Int& c0 = f.coefficients()[0];
    Int g0;
    if (f.modulus()) {
        if (mpz_invert(g0.get_mpz_t(), c0.get_mpz_t(), f.modulus()->get_mpz_t()) == 0)
            throw NotInvertible("constant term not invertible modulo " +
                                f.modulus()->get_str());
    } else {
        if (c0 != 1 && c0 != -1)
            throw NotInvertible("constant term must be +-1, got " + c0.get_str());
        g0 = c0;
    }
    PowerSeries g = make_series({g0}, 1, f.modulus());
    std::size_t k = 1;
    while (k < n) {
        std::size_t k2 = std::min(2 * k, n);
        PowerSeries gp = make_series(g.coefficients(), k2, f.modulus());
        PowerSeries e = one_series(k2, f.modulus()) - mul(truncate(f, k2), gp);
        g = gp + mul(gp, e);
        k = k2;
    }
    if (!agrees_to(mul(f, g), one_series(n, f.modulus()), n))
        throw Error("inverse: Newton verification failed");
    return g;
}

PowerSeries sqrt_unit(const PowerSeries& f) {
    if (f.modulus()) throw BadParameter("sqrt_unit requires an exact series");
    if (f.coefficients()[0] != 1) throw BadLeadingTerm();
    std::size_t n = f.precision();
    PowerSeries s = one_series(1);
    PowerSeries si = one_series(1);
    std::size_t k = 1;
    while (k < n) {
        std::size_t k2 = std::min(2 * k, n);
        PowerSeries sp = make_series(s.coefficients(), k2);
        PowerSeries sip = make_series(si.coefficients(), k2);
        PowerSeries e = truncate(f, k2) - mul(sp, sp);
        std::vector<Int> u = mul(e, sip).coefficients();
        for (Int& c : u) {
            if (mpz_odd_p(c.get_mpz_t())) throw NotIntegralSqrt();
            mpz_fdiv_q_2exp(c.get_mpz_t(), c.get_mpz_t(), 1);
        }
        s = sp + PowerSeries(std::move(u));
        PowerSeries e2 = one_series(k2) - mul(s, sip);
        si = sip + mul(sip, e2);
        k = k2;
    }
    if (!agrees_to(mul(s, s), f, n)) throw NotIntegralSqrt();
    return s;
}

PowerSeries d_operator(const PowerSeries& f) {
    std::vector<Int> out(f.precision());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = Int(i) * f.coefficients()[i];
    return PowerSeries(std::move(out), f.modulus());
}

PowerSeries derivative(const PowerSeries& f) {
    if (f.precision() < 2) throw InvalidPrecision("derivative needs precision >= 2");
    std::vector<Int> out(f.precision() - 1);
    for (std::size_t i = 0; i + 1 < f.precision(); ++i)
        out[i] = Int(i + 1) * f.coefficients()[i + 1];
    return PowerSeries(std::move(out), f.modulus());
}

PowerSeries compose(const PowerSeries& f, const PowerSeries& t) {
    if (t.coefficients()[0] != 0)
        throw CompositionDiverges();
    auto mod = combine_moduli(f, t);
    std::size_t n = std::min(f.precision(), t.precision());
    PowerSeries inner = make_series(
        std::vector<Int>(t.coefficients().begin(), t.coefficients().begin() + n), n, mod);
    std::vector<Int> acc_coeffs(n);
    acc_coeffs[0] = f.coefficients()[n - 1];
    PowerSeries acc(std::move(acc_coeffs), mod);
    for (std::size_t k = n - 1; k-- > 0;) {
        acc = mul(acc, inner);
        std::vector<Int> c = acc.coefficients();
        c[0] += f.coefficients()[k];
        acc = PowerSeries(std::move(c), mod);
    }
    return acc;
}

PowerSeries revert(const PowerSeries& t) {
    std::size_t n = t.precision();
    if (n < 2) throw InvalidPrecision("revert needs precision >= 2");
    if (valuation(t) != 1) throw NotRevertible("valuation must be exactly 1");
    const Int& t1 = t.coefficients()[1];
    Int r1;
    if (t.modulus()) {
        if (mpz_invert(r1.get_mpz_t(), t1.get_mpz_t(), t.modulus()->get_mpz_t()) == 0)
            throw NotRevertible("linear coefficient not invertible");
    } else {
        if (t1 != 1 && t1 != -1)
            throw NotRevertible("linear coefficient must be +-1, got " + t1.get_str());
        r1 = t1; // +-1 is its own inverse
    }
    PowerSeries r = make_series({Int(0), r1}, 2, t.modulus());
    if (n == 2) return r;
    PowerSeries tp = derivative(t);
    std::size_t k = 2;
    while (k < n) {
        std::size_t k2 = std::min(2 * k, n);
        PowerSeries rp = make_series(r.coefficients(), k2, t.modulus());
        PowerSeries e = compose(truncate(t, k2), rp) - q_series(k2, t.modulus());
        // e has valuation >= k >= 2; shifting by 2 buys back the precision
        // lost to the derivative so the correction reaches order k2-1.
        PowerSeries d = compose(truncate(tp, std::min(k2, n - 1)), rp);
        PowerSeries delta = shift_up(mul(shift_down(e, 2), inverse(d)), 2);
        r = rp - delta;
        k = k2;
    }
    if (!agrees_to(compose(t, r), q_series(n, t.modulus()), n))
        throw NotRevertible("roundtrip verification failed");
    return r;
}

PowerSeries reduce_mod(const PowerSeries& f, const Int& modulus) {
    if (modulus < 2) throw BadParameter("modulus must be >= 2");
    if (f.modulus() && *f.modulus() % modulus != 0)
        throw ModulusMismatch("can only refine a modulus to one of its divisors");
    return PowerSeries(f.coefficients(), modulus);
}

const Int& coeff(const PowerSeries& f, std::size_t n) { return f[n]; }

PowerSeries shift_up(const PowerSeries& f, std::size_t k) {
    std::vector<Int> out(f.precision() + k);
    std::copy(f.coefficients().begin(), f.coefficients().end(), out.begin() + k);
    return PowerSeries(std::move(out), f.modulus());
}

PowerSeries shift_down(const PowerSeries& f, std::size_t k) {
    if (f.precision() <= k) throw InvalidPrecision("shift_down would empty the series");
    for (std::size_t i = 0; i < k; ++i)
        if (f.coefficients()[i] != 0)
            throw BadParameter("shift_down requires the low coefficients to vanish");
    return PowerSeries(
        std::vector<Int>(f.coefficients().begin() + k, f.coefficients().end()),
        f.modulus());
}

PowerSeries alternate_signs(const PowerSeries& f) {
    std::vector<Int> out = f.coefficients();
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    return PowerSeries(std::move(out), f.modulus());
}

PowerSeries truncate(const PowerSeries& f, std::size_t n) {
    if (n == 0) throw InvalidPrecision();
    if (n > f.precision()) throw PrecisionExceeded("truncate cannot extend a series");
    return PowerSeries(std::vector<Int>(f.coefficients().begin(),
                                        f.coefficients().begin() + n),
                       f.modulus());
}

std::size_t valuation(const PowerSeries& f) {
    for (std::size_t i = 0; i < f.precision(); ++i)
        if (f.coefficients()[i] != 0) return i;
    return f.precision();
}

bool agrees_to(const PowerSeries& f, const PowerSeries& g, std::size_t n) {
    if (f.precision() < n || g.precision() < n)
        throw PrecisionExceeded("agreement window exceeds precision");
    if (f.modulus().has_value() != g.modulus().has_value() ||
        (f.modulus() && *f.modulus() != *g.modulus()))
        throw ModulusMismatch("agreement check needs identical moduli");
    for (std::size_t i = 0; i < n; ++i)
        if (f.coefficients()[i] != g.coefficients()[i]) return false;
    return true;
}

} // namespace modcong
