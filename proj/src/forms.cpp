#include "modcong/forms.hpp"

#include <cmath>

#include "modcong/sequences.hpp"

namespace modcong {

PowerSeries eta_product(unsigned scale, std::size_t terms) {
    if (scale == 0) throw BadParameter("eta_product needs scale >= 1");
    if (terms == 0) throw InvalidPrecision();
    // prod (1 - x^n) = sum_{k in Z} (-1)^k x^(k(3k-1)/2) at x = q^scale
    std::vector<Int> c(terms);
    c[0] = 1;
    for (long k = 1;; ++k) {
        unsigned long g1 = static_cast<unsigned long>(k) * (3 * k - 1) / 2;
        unsigned long g2 = static_cast<unsigned long>(k) * (3 * k + 1) / 2;
        int sign = (k % 2 == 0) ? 1 : -1;
        bool any = false;
        if (g1 * scale < terms) { c[g1 * scale] += sign; any = true; }
        if (g2 * scale < terms) { c[g2 * scale] += sign; any = true; }
        if (!any) break;
    }
    return PowerSeries(std::move(c));
}

PowerSeries expand_eta_quotient(const EtaQuotient& eq, std::size_t terms) {
    if (terms == 0) throw InvalidPrecision();
    long lead = 0;
    for (const auto& [s, e] : eq.factors) {
        if (s != 1 && s != 2 && s != 4)
            throw BadParameter("eta factor scale must be 1, 2 or 4");
        lead += static_cast<long>(s) * e;
    }
    if (lead < 0 || lead % 24 != 0)
        throw NotExpandable("leading exponent " + std::to_string(lead) +
                            "/24 is not a nonnegative integer");
    std::size_t shift = static_cast<std::size_t>(lead / 24);
    if (shift >= terms)
        return zero_series(terms);
    std::size_t inner = terms - shift;
    PowerSeries acc = one_series(inner);
    for (const auto& [s, e] : eq.factors) {
        if (e == 0) continue;
        acc = mul(acc, pow_int(eta_product(s, inner), e));
    }
    return shift_up(acc, shift);
}

PowerSeries theta_by_squares(std::size_t terms) {
    if (terms == 0) throw InvalidPrecision();
    std::vector<Int> c(terms);
    long m = static_cast<long>(std::sqrt(static_cast<double>(terms))) + 1;
    for (long a = -m; a <= m; ++a)
        for (long b = -m; b <= m; ++b) {
            unsigned long n = static_cast<unsigned long>(a * a + b * b);
            if (n < terms) c[n] += 1;
        }
    return PowerSeries(std::move(c));
}

FormSpec parse_form_spec(const std::string& text) {
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        std::string head = text.substr(0, colon);
        std::string tail = text.substr(colon + 1);
        unsigned n = 0;
        try {
            std::size_t used = 0;
            long v = std::stol(tail, &used);
            if (used != tail.size() || v < 1) throw std::invalid_argument("");
            n = static_cast<unsigned>(v);
        } catch (const std::exception&) {
            throw UnknownForm("bad index in form name '" + text + "'");
        }
        if (head == "h") return {FormName::h, n};
        if (head == "f") {
            if (n < 2) throw UnknownForm("f:<n> needs n >= 2");
            return {FormName::f, n};
        }
        throw UnknownForm("unknown form family '" + head + "'");
    }
    if (text == "theta") return {FormName::theta, std::nullopt};
    if (text == "lambda") return {FormName::lambda, std::nullopt};
    if (text == "one16l") return {FormName::one_minus_16l, std::nullopt};
    if (text == "f1") return {FormName::f1, std::nullopt};
    if (text == "g1") return {FormName::g1, std::nullopt};
    if (text == "psi") return {FormName::psi, std::nullopt};
    if (text == "nu") return {FormName::nu, std::nullopt};
    if (text == "eis1") return {FormName::eisenstein1, std::nullopt};
    if (text == "apery-eta") return {FormName::apery_eta, std::nullopt};
    throw UnknownForm("unknown form '" + text + "'");
}

std::string form_spec_text(const FormSpec& spec) {
    switch (spec.name) {
        case FormName::theta: return "theta";
        case FormName::lambda: return "lambda";
        case FormName::one_minus_16l: return "one16l";
        case FormName::f1: return "f1";
        case FormName::g1: return "g1";
        case FormName::psi: return "psi";
        case FormName::nu: return "nu";
        case FormName::h: return "h:" + std::to_string(spec.n.value_or(0));
        case FormName::f: return "f:" + std::to_string(spec.n.value_or(0));
        case FormName::eisenstein1: return "eis1";
        case FormName::apery_eta: return "apery-eta";
    }
    throw UnknownForm();
}

namespace {

PowerSeries lambda_series(std::size_t n) {
    return expand_eta_quotient({{{4, 16}, {1, 8}, {2, -24}}}, n);
}

PowerSeries one16l_series(std::size_t n) {
    return expand_eta_quotient({{{1, 16}, {4, 8}, {2, -24}}}, n);
}

} // namespace

PowerSeries build_form(const FormSpec& spec, std::size_t terms) {
    if (terms == 0) throw InvalidPrecision();
    bool needs_n = spec.name == FormName::h || spec.name == FormName::f;
    if (needs_n != spec.n.has_value())
        throw UnknownForm("index n required exactly for the h and f families");
    switch (spec.name) {
        case FormName::theta:
            return theta_by_squares(terms);
        case FormName::lambda:
            return lambda_series(terms);
        case FormName::one_minus_16l:
            return one16l_series(terms);
        case FormName::f1: {
            PowerSeries l = lambda_series(terms);
            return mul(mul(l, one16l_series(terms)), pow_int(theta_by_squares(terms), 5));
        }
        case FormName::g1: {
            PowerSeries l = lambda_series(terms);
            PowerSeries u = one16l_series(terms);
            return mul(mul(mul(l, l), mul(u, u)), pow_int(theta_by_squares(terms), 5));
        }
        case FormName::psi: {
            // sqrt route; the eta-quotient route eta(2tau)^12 is kept as the
            // psi_eta identity so both stay exercised
            PowerSeries l = lambda_series(terms);
            PowerSeries s = sqrt_unit(one16l_series(terms));
            return mul(mul(s, mul(l, l)), pow_int(theta_by_squares(terms), 6));
        }
        case FormName::nu: {
            PowerSeries l = lambda_series(terms);
            return mul(mul(pow_int(theta_by_squares(terms), 12), one16l_series(terms)),
                       pow_int(l, 4));
        }
        case FormName::h: {
            unsigned n = *spec.n;
            if (n < 1) throw UnknownForm("h:<n> needs n >= 1");
            PowerSeries l = lambda_series(terms);
            return mul(mul(pow_int(theta_by_squares(terms), 6L * n + 1),
                           pow_int(one16l_series(terms), (n + 1) / 2)),
                       pow_int(l, 2L * n));
        }
        case FormName::f: {
            unsigned n = *spec.n;
            if (n < 2) throw UnknownForm("f:<n> needs n >= 2");
            PowerSeries l = lambda_series(terms);
            PowerSeries f1 = build_form({FormName::f1, std::nullopt}, terms);
            return mul(mul(mul(pow_int(theta_by_squares(terms), 6L * n - 6),
                               pow_int(one16l_series(terms), (n - 1) / 2)),
                           pow_int(l, 2L * n - 2)),
                       f1);
        }
        case FormName::eisenstein1: {
            PowerSeries l = lambda_series(terms);
            return mul(mul(l, one16l_series(terms)), pow_int(theta_by_squares(terms), 4));
        }
        case FormName::apery_eta:
            // eta(4tau)^6 in the half-period variable: q^2 prod (1-q^(8n))^6
            if (terms <= 2) return zero_series(terms);
            return shift_up(pow_int(eta_product(8, terms - 2), 6), 2);
    }
    throw UnknownForm();
}

IdentityName parse_identity_name(const std::string& text) {
    if (text == "eq1") return IdentityName::eq1;
    if (text == "lemma2") return IdentityName::lemma2;
    if (text == "lemma3") return IdentityName::lemma3;
    if (text == "lemma4") return IdentityName::lemma4;
    if (text == "lemma5") return IdentityName::lemma5;
    if (text == "eisenstein") return IdentityName::eisenstein;
    if (text == "psi-eta") return IdentityName::psi_eta;
    if (text == "nu-eta") return IdentityName::nu_eta;
    if (text == "picard-fuchs") return IdentityName::picard_fuchs;
    throw BadParameter("unknown identity '" + text + "'");
}

std::vector<std::string> identity_names() {
    return {"eq1",        "lemma2",  "lemma3", "lemma4",       "lemma5",
            "eisenstein", "psi-eta", "nu-eta", "picard-fuchs"};
}

namespace {

CheckInstance compare_series(std::string desc, const PowerSeries& lhs,
                             const PowerSeries& rhs, std::size_t n) {
    CheckInstance inst;
    for (std::size_t i = 0; i < n; ++i) {
        if (lhs[i] != rhs[i]) {
            inst.desc = std::move(desc) + "; first mismatch at exponent " + std::to_string(i);
            inst.pass = false;
            inst.witness = {Int(i), lhs[i], rhs[i]};
            return inst;
        }
    }
    inst.desc = std::move(desc);
    inst.pass = true;
    return inst;
}

} // namespace

VerificationReport verify_identity(IdentityName id, std::size_t terms) {
    if (terms < 8) throw BadParameter("identity checks need at least 8 terms");
    VerificationReport rep;
    rep.params["terms"] = std::to_string(terms);
    const std::size_t N = terms;
    switch (id) {
        case IdentityName::eq1: {
            rep.family = "identity.eq1";
            PowerSeries lhs = compose(hypergeom_series(N), lambda_series(N));
            rep.instances.push_back(compare_series(
                "substitute l into the central-binomial series = theta", lhs,
                theta_by_squares(N), N));
            break;
        }
        case IdentityName::lemma2: {
            rep.family = "identity.lemma2";
            PowerSeries p1 = eta_product(1, N);
            PowerSeries lhs = mul(mul(alternate_signs(p1), p1), eta_product(4, N));
            PowerSeries rhs = pow_int(eta_product(2, N), 3);
            rep.instances.push_back(compare_series(
                "eta-product form P1(-q) P1(q) P4(q) = P2(q)^3 (unit factor cleared)",
                lhs, rhs, N));
            break;
        }
        case IdentityName::lemma3: {
            rep.family = "identity.lemma3";
            PowerSeries th = theta_by_squares(N);
            PowerSeries rhs = mul(th, sqrt_unit(one16l_series(N)));
            rep.instances.push_back(compare_series(
                "theta(-q) = theta(q) sqrt(1-16l)", alternate_signs(th), rhs, N));
            break;
        }
        case IdentityName::lemma4: {
            rep.family = "identity.lemma4";
            PowerSeries inv3 = inverse(pow_int(theta_by_squares(N), 3));
            PowerSeries lhs = d_operator(d_operator(d_operator(d_operator(inv3))));
            PowerSeries f1 = build_form({FormName::f1, std::nullopt}, N);
            PowerSeries g1 = build_form({FormName::g1, std::nullopt}, N);
            PowerSeries rhs = linear_combine(-12, f1, 12 * 108, g1);
            rep.instances.push_back(compare_series(
                "D^4(1/theta^3) = -12 (f1 - 108 g1), cleared of the 1/12", lhs, rhs, N));
            break;
        }
        case IdentityName::lemma5: {
            rep.family = "identity.lemma5";
            PowerSeries l = lambda_series(N);
            PowerSeries rhs = mul(mul(l, one16l_series(N)),
                                  pow_int(theta_by_squares(N), 2));
            rep.instances.push_back(
                compare_series("D(l) = l (1-16l) theta^2", d_operator(l), rhs, N));
            break;
        }
        case IdentityName::eisenstein: {
            rep.family = "identity.eisenstein";
            PowerSeries eis = build_form({FormName::eisenstein1, std::nullopt}, N);
            std::vector<Int> c(N);
            for (std::size_t k = 1; k < N; ++k) {
                c[k] = sigma3_half(k) - sigma3(k);
                if (k % 2 == 1) c[k] = -c[k];
            }
            rep.instances.push_back(compare_series(
                "l (1-16l) theta^4 = sum (-1)^k (sigma3(k/2) - sigma3(k)) q^k", eis,
                PowerSeries(std::move(c)), N));
            break;
        }
        case IdentityName::psi_eta: {
            rep.family = "identity.psi-eta";
            PowerSeries lhs = build_form({FormName::psi, std::nullopt}, N);
            PowerSeries rhs = expand_eta_quotient({{{4, 12}}}, N);
            rep.instances.push_back(compare_series(
                "sqrt(1-16l) l^2 theta^6 = eta(2tau)^12 (derived)", lhs, rhs, N));
            break;
        }
        case IdentityName::nu_eta: {
            rep.family = "identity.nu-eta";
            PowerSeries lhs = build_form({FormName::nu, std::nullopt}, N);
            PowerSeries rhs = expand_eta_quotient({{{4, 24}}}, N);
            rep.instances.push_back(compare_series(
                "theta^12 (1-16l) l^4 = eta(2tau)^24 (derived)", lhs, rhs, N));
            break;
        }
        case IdentityName::picard_fuchs: {
            rep.family = "identity.picard-fuchs";
            PowerSeries F = hypergeom_series(N);
            CheckInstance inst;
            inst.desc = "(n+1)^2 a(n+1) = 4 (2n+1)^2 a(n) for a(n) = C(2n,n)^2";
            inst.pass = true;
            for (std::size_t n = 0; n + 1 < N; ++n) {
                Int lhs = Int(n + 1) * Int(n + 1) * F[n + 1];
                Int rhs = 4 * Int(2 * n + 1) * Int(2 * n + 1) * F[n];
                if (lhs != rhs) {
                    inst.pass = false;
                    inst.desc += "; first failure at n = " + std::to_string(n);
                    inst.witness = {Int(n), lhs, rhs};
                    break;
                }
            }
            rep.instances.push_back(std::move(inst));
            break;
        }
    }
    return rep;
}

mpq_class dim_cusp_forms(long genus, long regular_cusps, long irregular_cusps,
                         const std::vector<long>& elliptic_orders, long weight) {
    if (weight % 2 == 0) throw UnsupportedWeight();
    if (weight < 3) throw BadParameter("weight must be >= 3");
    // mpq_class(a, b) does not canonicalize on its own
    auto frac = [](long num, long den) {
        mpq_class r(num, den);
        r.canonicalize();
        return r;
    };
    mpq_class v((weight - 1) * (genus - 1));
    v += frac((weight - 2) * regular_cusps, 2);
    v += frac((weight - 1) * irregular_cusps, 2);
    for (long e : elliptic_orders) {
        if (e < 2) throw BadParameter("elliptic order must be >= 2");
        v += frac(e - 1, 2 * e);
    }
    return v;
}

} // namespace modcong
