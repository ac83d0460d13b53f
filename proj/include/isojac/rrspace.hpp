// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "isojac/divisors.hpp"

namespace isojac {

// Function (A(u) + B(u) v) / den(u) on the curve.
struct curve_fn {
    poly A, B, den;
};

// Basis of L(D) for the formal divisor
//     D = (positive components of `pos`) + pos.n_inf * O - (negative parts),
// computed inside L(N.O) after clearing denominators: candidates are
// (A + B v)/c with c the product of the positive finite components, and the
// numerator constrained to vanish on the conjugates of the cleared parts and
// on every negative part.  Works over fields and, with unit pivots, over
// local coordinate rings.
std::vector<curve_fn> rr_basis(const genus2_curve& C, const eff_divisor& pos,
                               const std::vector<divisor_component>& negative = {});

// dimension helper used by tests
inline size_t rr_dim(const genus2_curve& C, const eff_divisor& pos,
                     const std::vector<divisor_component>& negative = {}) {
    return rr_basis(C, pos, negative).size();
}

// value of f at the generic point of the algebra Q = R[u]/(a), with v := b(u);
// den must be invertible mod a
elt curve_fn_value(const curve_fn& f, const ring_ptr& Q, const poly& b);

} // namespace isojac
