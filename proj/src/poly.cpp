// SPDX-License-Identifier: Apache-2.0
#include "isojac/poly.hpp"

namespace isojac {

poly poly::operator+(const poly& o) const {
    std::vector<elt> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        elt a = i < c_.size() ? c_[i] : R_->zero();
        elt b = i < o.c_.size() ? o.c_[i] : R_->zero();
        r[i] = a + b;
    }
    return poly(R_, std::move(r));
}

poly poly::operator-() const {
    std::vector<elt> r = c_;
    for (auto& x : r) x = -x;
    return poly(R_, std::move(r));
}

poly poly::operator-(const poly& o) const { return *this + (-o); }

poly poly::operator*(const poly& o) const {
    if (is_zero() || o.is_zero()) return poly(R_);
    std::vector<elt> r(c_.size() + o.c_.size() - 1, R_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (R_->is_zero(c_[i])) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return poly(R_, std::move(r));
}

poly poly::scaled(const elt& c) const {
    std::vector<elt> r = c_;
    for (auto& x : r) x = x * c;
    return poly(R_, std::move(r));
}

bool poly::operator==(const poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::pair<poly, poly> poly::divrem(const poly& d) const {
    if (d.is_zero()) throw malformed_input("divrem: division by zero polynomial");
    if (!R_->is_unit(d.lc())) throw non_reducible("divrem: non-unit leading coefficient");
    elt lcinv = d.lc().inv();
    std::vector<elt> rem = c_;
    int dd = d.degree();
    int dr = int(rem.size()) - 1;
    while (dr >= 0 && R_->is_zero(rem[size_t(dr)])) --dr;
    std::vector<elt> q(size_t(std::max(0, dr - dd + 1)), R_->zero());
    while (dr >= dd) {
        elt c = rem[size_t(dr)] * lcinv;
        q[size_t(dr - dd)] = c;
        for (int i = 0; i <= dd; ++i)
            rem[size_t(dr - dd + i)] = rem[size_t(dr - dd + i)] - c * d.c_[size_t(i)];
        --dr;
        while (dr >= 0 && R_->is_zero(rem[size_t(dr)])) --dr;
    }
    return {poly(R_, std::move(q)), poly(R_, std::move(rem))};
}

poly poly::quo_exact(const poly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) throw malformed_input("quo_exact: inexact division");
    return q;
}

poly poly::monic() const {
    if (is_zero()) throw malformed_input("monic: zero polynomial");
    if (!R_->is_unit(lc())) throw non_reducible("monic: non-unit leading coefficient");
    return scaled(lc().inv());
}

poly poly::derivative() const {
    if (degree() < 1) return poly(R_);
    std::vector<elt> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * R_->from_int(long(i));
    return poly(R_, std::move(r));
}

poly poly::shifted(const elt& c) const {
    // Horner in (u + c)
    poly res(R_);
    poly lin(R_, std::vector<elt>{c, R_->one()});
    for (int i = degree(); i >= 0; --i) {
        res = res * lin + poly::constant(c_[size_t(i)]);
    }
    return res;
}

elt poly::eval(const elt& x) const {
    const ring_ptr& S = x.parent();
    elt r = S->zero();
    for (int i = degree(); i >= 0; --i)
        r = r * x + S->embed(c_[size_t(i)]);
    return r;
}

poly poly::map_into(const ring_ptr& S) const {
    std::vector<elt> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = S->embed(c_[i]);
    return poly(S, std::move(r));
}

poly poly::gcd(poly a, poly b) {
    while (!b.is_zero()) {
        poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

void poly::xgcd(const poly& a, const poly& b, poly& g, poly& s, poly& t) {
    const ring_ptr& R = a.R_;
    poly r0 = a, r1 = b;
    poly s0(R, {1}), s1(R), t0(R), t1(R, {1});
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        r0 = std::move(r1); r1 = std::move(r);
        poly ns = s0 - q * s1, nt = t0 - q * t1;
        s0 = std::move(s1); s1 = std::move(ns);
        t0 = std::move(t1); t1 = std::move(nt);
    }
    if (r0.is_zero()) { g = r0; s = s0; t = t0; return; }
    if (!R->is_unit(r0.lc())) throw non_reducible("xgcd: non-unit gcd leading coefficient");
    elt c = r0.lc().inv();
    g = r0.scaled(c);
    s = s0.scaled(c);
    t = t0.scaled(c);
}

elt poly::resultant(const poly& a, const poly& b) {
    // Euclidean resultant over a field-ish ring (unit pivots); falls back on
    // the degree bookkeeping identities
    const ring_ptr& R = a.R_;
    if (a.is_zero() || b.is_zero()) return R->zero();
    poly f = a, g = b;
    elt res = R->one();
    while (g.degree() > 0) {
        if (!R->is_unit(g.lc())) throw non_reducible("resultant: non-unit leading coefficient");
        poly r = f % g;
        if (r.is_zero()) return R->zero();
        int df = f.degree(), dg = g.degree(), dr = r.degree();
        // res *= lc(g)^(df - dr) * (-1)^(df*dg)
        elt l = R->pow(g.lc(), df - dr);
        if ((df % 2) && (dg % 2)) l = -l;
        res = res * l;
        f = std::move(g);
        g = std::move(r);
    }
    // g constant
    if (g.is_zero()) return f.degree() > 0 ? R->zero() : res;
    return res * R->pow(g.lc(), f.degree());
}

bool poly::is_squarefree() const {
    if (degree() < 1) return true;
    return gcd(*this, derivative()).degree() == 0;
}

std::vector<elt> poly::roots(rng_t& rng) const {
    const ring_ptr& R = R_;
    if (!R->is_field()) throw not_a_field("roots: coefficient ring is not a field");
    std::vector<elt> out;
    if (degree() < 1) return out;
    if (degree() == 1) {
        out.push_back(-(at(0) / at(1)));
        return out;
    }
    // linear-factor part: gcd(x^q - x, f)
    Int q = R->cardinality();
    poly f = monic();
    // compute x^q mod f by repeated squaring in R[x]/f
    auto mulmod = [&](const poly& u, const poly& v) { return (u * v) % f; };
    poly xq(R, {0, 1});
    {
        poly acc(R, {1});
        poly b = xq;
        Int e = q;
        while (e > 0) {
            if (bit_test(e, 0)) acc = mulmod(acc, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        xq = acc;
    }
    poly lin = gcd(f, xq - poly::x(R));
    if (lin.degree() < 1) return out;
    // split lin recursively
    std::vector<poly> stack{lin};
    while (!stack.empty()) {
        poly g = stack.back();
        stack.pop_back();
        if (g.degree() == 1) {
            out.push_back(-(g.at(0) / g.at(1)));
            continue;
        }
        if (g.degree() == 0) continue;
        // random delta split: gcd(g, (x+delta)^((q-1)/2) - 1)
        for (int tries = 0; tries < 200; ++tries) {
            elt delta = R->random(rng);
            poly base(R, std::vector<elt>{delta, R->one()});
            poly acc(R, {1});
            poly b = base % g;
            Int e = (q - 1) / 2;
            while (e > 0) {
                if (bit_test(e, 0)) acc = (acc * b) % g;
                b = (b * b) % g;
                e >>= 1;
            }
            poly cand = gcd(g, acc - poly(R, {1}));
            if (cand.degree() > 0 && cand.degree() < g.degree()) {
                stack.push_back(cand);
                stack.push_back(g.quo_exact(cand));
                break;
            }
            if (tries == 199) throw exhausted("roots: splitting failed");
        }
    }
    return out;
}

} // namespace isojac
