// SPDX-License-Identifier: Apache-2.0
#include "isojac/divisors.hpp"

namespace isojac {

jac_point divisor_class(const genus2_curve& C, const eff_divisor& D, const ring_ptr& R) {
    jac_point acc = jac_identity(R);
    for (auto& c : D.comps) {
        if (c.kind != divisor_component::kind_t::mumford) continue;
        jac_point part = jac_reduce(C, c.r.map_into(R), c.s.map_into(R));
        for (int k = 0; k < c.mult; ++k) acc = jac_add(C, acc, part);
    }
    return acc;
}

eff_divisor function_zero_divisor(const genus2_curve& C, const poly& A, const poly& B) {
    eff_divisor D;
    const ring_ptr& R = B.is_zero() ? A.coeff_ring() : B.coeff_ring();
    if (B.is_zero()) {
        if (A.degree() > 0) D.comps.push_back(divisor_component::upoly(A.monic()));
        return D;
    }
    poly d = poly::gcd(A, B);
    poly Ar = A, Br = B;
    if (d.degree() > 0) {
        Ar = A.quo_exact(d);
        Br = B.quo_exact(d);
        D.comps.push_back(divisor_component::upoly(d));
    }
    poly h = C.h_over(R);
    poly N = Ar * Ar - h * Br * Br;
    if (N.is_zero()) throw malformed_input("function_zero_divisor: zero function");
    N = N.monic();
    if (N.degree() > 0) {
        // b = -Ar/Br mod N; Br invertible mod N since gcd(Br, N) = gcd(Br, Ar^2) = 1
        poly g, s, t;
        poly::xgcd(Br, N, g, s, t);
        if (g.degree() != 0) throw non_reducible("function_zero_divisor: gcd(B, N) nontrivial");
        poly b = ((-Ar) * s) % N;
        D.comps.push_back(divisor_component::mumford(N, b));
    }
    return D;
}

bool divisor_avoids(const eff_divisor& D, const poly& q) {
    for (auto& c : D.comps) {
        try {
            elt res = poly::resultant(c.r, q.map_into(c.r.coeff_ring()));
            if (!res.is_unit()) return false;
        } catch (const non_reducible&) {
            return false;  // could not certify disjointness over this ring
        } catch (const non_unit&) {
            return false;
        }
    }
    return true;
}

} // namespace isojac
