// SPDX-License-Identifier: Apache-2.0
#include "isojac/curve.hpp"

namespace isojac {

genus2_curve::genus2_curve(ring_ptr field, poly h, bool domain_model)
    : F_(std::move(field)), h_(std::move(h)) {
    if (F_->kind() != ring::kind_t::prime)
        throw malformed_input("genus2_curve: base must be a prime field");
    int d = h_.degree();
    if (domain_model ? (d != 5) : (d != 5 && d != 6))
        throw malformed_input("genus2_curve: h must have degree 5 (or 6 for a codomain)");
    if (!h_.is_monic()) throw malformed_input("genus2_curve: h must be monic");
    if (!h_.is_squarefree()) throw malformed_input("genus2_curve: h must be squarefree");
}

bool on_curve(const genus2_curve& C, const curve_point& P) {
    if (P.infinite) return true;
    const ring_ptr& R = P.u.parent();
    return P.v * P.v == C.h().eval(R->embed(P.u));
}

curve_point formal_point(const genus2_curve& C, const curve_point& P0, int acc) {
    if (P0.infinite) throw weierstrass_point("formal_point: infinite base point");
    const ring_ptr& F = P0.u.parent();
    if (P0.v.is_zero()) throw weierstrass_point("formal_point: v = 0 at base point");
    ring_ptr S = ring::series_ring(F, acc);
    elt u = S->embed(P0.u) + (acc > 1 ? S->gen() : S->zero());
    elt hu = C.h().eval(u);
    // series sqrt inside the ring S
    series hs(F, acc);
    for (int i = 0; i < acc; ++i) hs.at(i) = S->coeff(hu, i);
    series vs = series::sqrt(hs, P0.v);
    elt v = S->make(vs.coeffs());
    curve_point P;
    P.u = u;
    P.v = v;
    return P;
}

} // namespace isojac
