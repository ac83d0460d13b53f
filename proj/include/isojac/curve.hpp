// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "isojac/series.hpp"

namespace isojac {

// Genus-2 hyperelliptic curve v^2 = h(u) over a prime field, h monic
// squarefree of degree 5 (domain curves) or 5/6 (codomain curves).  The place
// at infinity of the degree-5 model is the marked Weierstrass point O; its
// class o is a theta characteristic, so the translate constants of the
// general theory vanish here (theta = o, vartheta = 0, kappa = 0).
class genus2_curve {
  public:
    genus2_curve(ring_ptr field, poly h, bool domain_model = true);

    const ring_ptr& field() const { return F_; }
    const poly& h() const { return h_; }
    int h_degree() const { return h_.degree(); }

    // h lifted to an extension / series ring over the base field
    poly h_over(const ring_ptr& R) const { return h_.map_into(R); }

  private:
    ring_ptr F_;
    poly h_;
};

// Affine curve point with coordinates in any algebra over the base field.
struct curve_point {
    elt u, v;
    bool infinite = false;

    static curve_point at_infinity(const ring_ptr& R) {
        curve_point P;
        P.u = R->zero();
        P.v = R->zero();
        P.infinite = true;
        return P;
    }
};

bool on_curve(const genus2_curve& C, const curve_point& P);

// formal point (u_P + t, sqrt(h(u_P + t))) over base[t]/t^acc, starting from
// the given v_P (must be nonzero: Weierstrass points have no such expansion
// in the parameter u - u_P)
curve_point formal_point(const genus2_curve& C, const curve_point& P0, int acc);

} // namespace isojac
