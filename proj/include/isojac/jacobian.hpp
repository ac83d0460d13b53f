// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "isojac/curve.hpp"

namespace isojac {

// Reduced Mumford representative (a, b): a monic of degree <= 2, deg b < deg a,
// b^2 = h mod a.  Represents the class of (divisor cut by (a, v-b)) - deg(a).O.
// Coordinates may live in any algebra over the curve's base field.
struct jac_point {
    poly a, b;

    const ring_ptr& coord_ring() const { return a.coeff_ring(); }
    int a_degree() const { return a.degree(); }
};

jac_point jac_identity(const ring_ptr& R);
bool jac_is_identity(const jac_point& x);
bool jac_valid(const genus2_curve& C, const jac_point& x);
bool jac_eq(const jac_point& x, const jac_point& y);
int jac_cmp(const jac_point& x, const jac_point& y);  // canonical total order

jac_point jac_lift(const jac_point& x, const ring_ptr& S);

// Cantor composition + reduction.  Over a non-field algebra this requires the
// leading coefficients met along the way to be units; otherwise non_reducible.
jac_point jac_add(const genus2_curve& C, const jac_point& x, const jac_point& y);
jac_point jac_neg(const jac_point& x);
jac_point jac_sub(const genus2_curve& C, const jac_point& x, const jac_point& y);
jac_point jac_smul(const genus2_curve& C, Int n, const jac_point& x);

// reduce a semi-reduced pair of any degree to the unique reduced representative
jac_point jac_reduce(const genus2_curve& C, poly a, poly b);

// class of P - O for an affine curve point
jac_point jac_of_point(const genus2_curve& C, const curve_point& P);
// class of P1 + P2 - 2O
jac_point jac_of_points(const genus2_curve& C, const curve_point& P1, const curve_point& P2);

// membership test for z in W_{-o+w}: the reduced representative of z - w has
// a-degree <= 1 (genus-2 specialization).  Conservative over series algebras:
// a failed reduction counts as membership.
bool on_w_translate(const genus2_curve& C, const jac_point& z, const jac_point& w);

// Monte-Carlo point sampler over a finite field algebra
jac_point random_jacobian_point(const genus2_curve& C, const ring_ptr& F, rng_t& rng);

// coefficient-wise q-power Frobenius (points over extension fields)
jac_point jac_frobenius(const jac_point& x);

// divisor of x is non-simple (repeated point): disc(a) not a unit, or deg < 2
bool jac_divisor_non_simple(const jac_point& x);

} // namespace isojac
