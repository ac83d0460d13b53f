// SPDX-License-Identifier: Apache-2.0
#include "isojac/jacobian.hpp"

namespace isojac {

jac_point jac_identity(const ring_ptr& R) {
    return {poly(R, {1}), poly(R)};
}

bool jac_is_identity(const jac_point& x) { return x.a.degree() == 0; }

bool jac_valid(const genus2_curve& C, const jac_point& x) {
    const ring_ptr& R = x.coord_ring();
    if (x.a.is_zero() || !x.a.is_monic() || x.a.degree() > 2) return false;
    if (!x.b.is_zero() && x.b.degree() >= x.a.degree()) return false;
    poly h = C.h_over(R);
    return ((x.b * x.b - h) % x.a).is_zero();
}

bool jac_eq(const jac_point& x, const jac_point& y) { return x.a == y.a && x.b == y.b; }

int jac_cmp(const jac_point& x, const jac_point& y) {
    if (x.a.degree() != y.a.degree()) return x.a.degree() < y.a.degree() ? -1 : 1;
    for (int i = x.a.degree(); i >= 0; --i) {
        int c = ring::cmp(x.a.at(i), y.a.at(i));
        if (c) return c;
    }
    int db = std::max(x.b.degree(), y.b.degree());
    for (int i = db; i >= 0; --i) {
        elt xa = x.b.at(i), ya = y.b.at(i);
        int c = ring::cmp(xa, ya);
        if (c) return c;
    }
    return 0;
}

jac_point jac_lift(const jac_point& x, const ring_ptr& S) {
    return {x.a.map_into(S), x.b.map_into(S)};
}

jac_point jac_reduce(const genus2_curve& C, poly a, poly b) {
    const ring_ptr& R = a.coeff_ring();
    poly h = C.h_over(R);
    a = a.monic();
    b = b % a;
    while (a.degree() > 2) {
        poly a2 = (h - b * b).quo_exact(a);
        a2 = a2.monic();
        poly b2 = a2.degree() > 0 ? (-b) % a2 : poly(R);
        a = std::move(a2);
        b = std::move(b2);
    }
    return {a, a.degree() > 0 ? b % a : poly(R)};
}

jac_point jac_add(const genus2_curve& C, const jac_point& x, const jac_point& y) {
    const ring_ptr& R = x.coord_ring();
    if (!R->same(y.coord_ring())) throw mixed_algebra("jac_add: coordinate rings differ");
    poly h = C.h_over(R);
    const poly &a1 = x.a, &b1 = x.b, &a2 = y.a, &b2 = y.b;
    poly d0, e1, e2;
    poly::xgcd(a1, a2, d0, e1, e2);
    poly d, c1, c2;
    poly::xgcd(d0, b1 + b2, d, c1, c2);
    poly s1 = c1 * e1, s2 = c1 * e2;
    const poly& s3 = c2;
    poly a = (a1 * a2).quo_exact(d * d);
    poly num = s1 * a1 * b2 + s2 * a2 * b1 + s3 * (b1 * b2 + h);
    poly b = num.quo_exact(d) % a;
    return jac_reduce(C, std::move(a), std::move(b));
}

jac_point jac_neg(const jac_point& x) {
    const ring_ptr& R = x.coord_ring();
    return {x.a, x.a.degree() > 0 ? (-x.b) % x.a : poly(R)};
}

jac_point jac_sub(const genus2_curve& C, const jac_point& x, const jac_point& y) {
    return jac_add(C, x, jac_neg(y));
}

jac_point jac_smul(const genus2_curve& C, Int n, const jac_point& x) {
    if (n < 0) return jac_neg(jac_smul(C, -n, x));
    jac_point r = jac_identity(x.coord_ring());
    jac_point q = x;
    while (n > 0) {
        if (bit_test(n, 0)) r = jac_add(C, r, q);
        q = jac_add(C, q, q);
        n >>= 1;
    }
    return r;
}

jac_point jac_of_point(const genus2_curve& C, const curve_point& P) {
    const ring_ptr& R = P.u.parent();
    if (P.infinite) return jac_identity(R);
    (void)C;
    return {poly(R, std::vector<elt>{-P.u, R->one()}), poly::constant(P.v)};
}

jac_point jac_of_points(const genus2_curve& C, const curve_point& P1, const curve_point& P2) {
    return jac_add(C, jac_of_point(C, P1), jac_of_point(C, P2));
}

bool on_w_translate(const genus2_curve& C, const jac_point& z, const jac_point& w) {
    try {
        jac_point d = jac_sub(C, z, w);
        return d.a.degree() <= 1;
    } catch (const non_reducible&) {
        return true;  // degenerate over a non-field algebra: treat as on-divisor
    } catch (const non_unit&) {
        return true;
    }
}

bool jac_divisor_non_simple(const jac_point& x) {
    if (x.a.degree() < 2) return true;
    elt disc = x.a.at(1) * x.a.at(1) - x.a.at(0).parent()->from_int(4) * x.a.at(0);
    return !disc.is_unit();
}

jac_point jac_frobenius(const jac_point& x) {
    const ring_ptr& R = x.coord_ring();
    auto fr = [&](const poly& p) {
        std::vector<elt> c(size_t(p.degree() + 1));
        for (int i = 0; i <= p.degree(); ++i) c[size_t(i)] = R->frobenius(p.at(i));
        return poly(R, std::move(c));
    };
    return {fr(x.a), fr(x.b)};
}

jac_point random_jacobian_point(const genus2_curve& C, const ring_ptr& F, rng_t& rng) {
    if (!F->is_field()) throw not_a_field("random_jacobian_point: field required");
    poly h = C.h_over(F);
    Int q = F->cardinality();
    for (int tries = 0; tries < 20000; ++tries) {
        if (rng.below(q) == 0) {
            // low-degree classes carry ~2/q of the mass
            if (rng.below(2 * q) == 0) return jac_identity(F);
            elt u = F->random(rng);
            elt hu = h.eval(u);
            if (!F->is_square(hu)) continue;
            elt v = F->sqrt(hu);
            if (rng.below(2) == 1) v = -v;
            curve_point P{u, v, false};
            return jac_of_point(C, P);
        }
        elt a1 = F->random(rng), a0 = F->random(rng);
        poly a(F, std::vector<elt>{a0, a1, F->one()});
        elt disc = a1 * a1 - F->from_int(4) * a0;
        if (disc.is_zero()) {
            // double root r: b = b0 + b1 (u - r), b0 = sqrt(h(r)) != 0
            elt r = -(a1 / F->from_int(2));
            elt hr = h.eval(r);
            if (hr.is_zero() || !F->is_square(hr)) continue;
            elt b0 = F->sqrt(hr);
            if (rng.below(2) == 1) b0 = -b0;
            elt b1 = h.derivative().eval(r) / (F->from_int(2) * b0);
            // b(u) = b0 + b1 (u - r)
            poly b(F, std::vector<elt>{b0 - b1 * r, b1});
            return {a, b};
        }
        if (F->is_square(disc)) {
            elt sd = F->sqrt(disc);
            elt inv2 = F->from_int(2).inv();
            elt r1 = (-a1 + sd) * inv2, r2 = (-a1 - sd) * inv2;
            elt h1 = h.eval(r1), h2 = h.eval(r2);
            if (h1.is_zero() || h2.is_zero()) continue;  // Weierstrass: resample
            if (!F->is_square(h1) || !F->is_square(h2)) continue;
            elt v1 = F->sqrt(h1), v2 = F->sqrt(h2);
            if (rng.below(2) == 1) v1 = -v1;
            if (rng.below(2) == 1) v2 = -v2;
            elt b1 = (v1 - v2) / (r1 - r2);
            elt b0 = v1 - b1 * r1;
            return {a, poly(F, std::vector<elt>{b0, b1})};
        }
        // irreducible a: solve b^2 = h in F[u]/a, a quadratic extension field
        ring_ptr E = ring::extension(F, a.coeffs(), /*check=*/false);
        elt hm = h.eval(E->gen());
        if (!E->is_square(hm)) continue;
        elt bm = E->sqrt(hm);
        if (rng.below(2) == 1) bm = -bm;
        if (bm.is_zero()) continue;
        poly b(F, std::vector<elt>{E->coeff(bm, 0), E->coeff(bm, 1)});
        return {a, b};
    }
    throw exhausted("random_jacobian_point: sampler failed");
}

} // namespace isojac
