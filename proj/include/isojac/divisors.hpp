// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "isojac/jacobian.hpp"

namespace isojac {

// Component of an effective divisor on the curve, over a coordinate ring R:
//  - mumford: the subscheme cut by (r(u), v - s(u)), r monic, deg s < deg r,
//    s^2 = h mod r.  Degree = deg r.
//  - upoly: the subscheme cut by r(u) alone (conjugate point pairs, including
//    doubled Weierstrass points).  Degree = 2 deg r.
struct divisor_component {
    enum class kind_t { mumford, upoly };
    kind_t kind;
    poly r;
    poly s;  // mumford only
    int mult = 1;

    static divisor_component mumford(poly r, poly s, int m = 1) {
        return {kind_t::mumford, std::move(r), std::move(s), m};
    }
    static divisor_component upoly(poly r, int m = 1) {
        return {kind_t::upoly, std::move(r), poly(), m};
    }
    int degree() const {
        return mult * (kind == kind_t::upoly ? 2 * r.degree() : r.degree());
    }
};

struct eff_divisor {
    std::vector<divisor_component> comps;
    int n_inf = 0;

    int degree() const {
        int d = n_inf;
        for (auto& c : comps) d += c.degree();
        return d;
    }
};

// class of D - deg(D).O in the Jacobian (upoly components are principal)
jac_point divisor_class(const genus2_curve& C, const eff_divisor& D, const ring_ptr& R);

// affine zero divisor of the function A(u) + B(u) v; exact, including the
// content gcd(A, B) as a upoly part
eff_divisor function_zero_divisor(const genus2_curve& C, const poly& A, const poly& B);

// true when none of the u-supports of D meets the zero set of q(u)
bool divisor_avoids(const eff_divisor& D, const poly& q);

} // namespace isojac
