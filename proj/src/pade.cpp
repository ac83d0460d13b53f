// SPDX-License-Identifier: Apache-2.0
#include "isojac/pade.hpp"

namespace isojac {

rat_frac rat_frac::make(const poly& n, const poly& d) {
    const ring_ptr& R = n.coeff_ring();
    if (d.is_zero()) throw malformed_input("rat_frac: zero denominator");
    if (n.is_zero()) return {R->zero(), poly(R), d.monic()};
    poly g = poly::gcd(n, d);
    poly nn = n.quo_exact(g), dd = d.quo_exact(g);
    elt sc = nn.lc() / dd.lc();
    return {sc, nn.monic(), dd.monic()};
}

rat_frac rat_frac::operator+(const rat_frac& o) const {
    return make(numerator_scaled() * o.den + o.numerator_scaled() * den, den * o.den);
}
rat_frac rat_frac::operator-(const rat_frac& o) const {
    return make(numerator_scaled() * o.den - o.numerator_scaled() * den, den * o.den);
}
rat_frac rat_frac::operator*(const rat_frac& o) const {
    return make(numerator_scaled() * o.numerator_scaled(), den * o.den);
}
bool rat_frac::operator==(const rat_frac& o) const {
    return scalar == o.scalar && num == o.num && den == o.den;
}

rat_frac rat_frac::shifted(const elt& c) const {
    rat_frac r;
    r.scalar = scalar;
    r.num = num.shifted(c);
    r.den = den.shifted(c);
    return r;
}

series rat_frac::expand(int acc) const {
    const ring_ptr& R = den.coeff_ring();
    series d = series::from_poly(den, acc);
    if (is_zero()) return series(R, acc);
    series n = series::from_poly(num.scaled(scalar), acc);
    return n * d.inverse();
}

rat_frac pade_reconstruct(const series& s, int m, int n) {
    const ring_ptr& R = s.coeff_ring();
    if (!R->is_field()) throw not_a_field("pade: field coefficients required");
    if (s.accuracy() < m + n + 2)
        throw accuracy_too_low("pade: accuracy below max_num_deg + max_den_deg + 2");
    // extended Euclid on (t^(m+n+1), s mod t^(m+n+1)); stop at first remainder
    // of degree <= m; the cofactor of s is the denominator.
    int k = m + n + 1;
    std::vector<elt> tc(size_t(k + 1), R->zero());
    tc.back() = R->one();
    poly r0(R, std::move(tc));
    poly r1 = series::from_poly(poly(R, std::vector<elt>(s.coeffs().begin(), s.coeffs().begin() + k)), k).to_poly();
    poly u0(R), u1(R, {1});
    while (!r1.is_zero() && r1.degree() > m) {
        auto [q, r] = r0.divrem(r1);
        r0 = std::move(r1); r1 = std::move(r);
        poly nu = u0 - q * u1;
        u0 = std::move(u1); u1 = std::move(nu);
    }
    if (u1.is_zero() || u1.degree() > n || !R->is_unit(u1.at(0)))
        throw no_pade_solution("pade: no admissible remainder/cofactor pair");
    rat_frac f = rat_frac::make(r1, u1);
    // verification against the full available accuracy
    series back = f.expand(s.accuracy());
    if (!(back == s)) throw no_pade_solution("pade: re-expansion mismatch");
    return f;
}

} // namespace isojac
