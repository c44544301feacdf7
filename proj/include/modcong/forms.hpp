#ifndef MODCONG_FORMS_HPP
#define MODCONG_FORMS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modcong/powerseries.hpp"
#include "modcong/report.hpp"

namespace modcong {

// Formal product of eta factors.  The key s in {1,2,4} encodes the argument
// scaling relative to the half-period variable: s=1 is eta(tau/2), s=2 is
// eta(tau), s=4 is eta(2tau); the factor expands as
// q^(s/24) * prod_{n>=1} (1 - q^(s n)) raised to the mapped exponent.
struct EtaQuotient {
    std::map<unsigned, int> factors;
};

// prod_{n>=1} (1 - q^(scale*n)) via the pentagonal-number expansion.
PowerSeries eta_product(unsigned scale, std::size_t terms);

// Leading exponent sum(s*e_s)/24 must be a nonnegative integer.
PowerSeries expand_eta_quotient(const EtaQuotient& eq, std::size_t terms);

// Sum of r2(n) q^n, r2(n) = #{(a,b) in Z^2 : a^2+b^2 = n}, by direct
// lattice enumeration (kept independent of the eta machinery on purpose).
PowerSeries theta_by_squares(std::size_t terms);

enum class FormName {
    theta,
    lambda,
    one_minus_16l,
    f1,
    g1,
    psi,
    nu,
    h,
    f,
    eisenstein1,
    apery_eta,
};

struct FormSpec {
    FormName name;
    std::optional<unsigned> n; // required for the h and f families
};

// Parses the CLI identifiers: theta, lambda, one16l, f1, g1, psi, nu,
// h:<n>, f:<n>, eis1, apery-eta.
FormSpec parse_form_spec(const std::string& text);
std::string form_spec_text(const FormSpec& spec);

PowerSeries build_form(const FormSpec& spec, std::size_t terms);

enum class IdentityName {
    eq1,          // theta = sum C(2n,n)^2 l^n
    lemma2,       // eta-product identity in its sign-flipped (root-of-unity free) form
    lemma3,       // theta(-q) = theta * sqrt(1-16l)
    lemma4,       // D^4(1/theta^3) = -12 (f1 - 108 g1)
    lemma5,       // D(l) = l (1-16l) theta^2
    eisenstein,   // l (1-16l) theta^4 = sum (-1)^k (sigma3(k/2)-sigma3(k)) q^k
    psi_eta,      // psi = eta(2tau)^12
    nu_eta,       // nu = eta(2tau)^24
    picard_fuchs, // (n+1)^2 a_{n+1} = 4 (2n+1)^2 a_n for a_n = C(2n,n)^2
};

IdentityName parse_identity_name(const std::string& text);
std::vector<std::string> identity_names();

// Compares both sides to `terms` coefficients (terms >= 8) and reports the
// first mismatching exponent on failure.
VerificationReport verify_identity(IdentityName id, std::size_t terms);

// (k-1)(g-1) + (k-2)/2 r1 + (k-1)/2 r2 + sum (e-1)/(2e) for odd weight k.
mpq_class dim_cusp_forms(long genus, long regular_cusps, long irregular_cusps,
                         const std::vector<long>& elliptic_orders, long weight);

} // namespace modcong

#endif
