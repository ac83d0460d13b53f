// SPDX-License-Identifier: Apache-2.0
#include "isojac/series.hpp"

#include <algorithm>

namespace isojac {

series series::operator+(const series& o) const {
    int acc = std::min(acc_, o.acc_);
    series r(R_, acc);
    for (int i = 0; i < acc; ++i) r.c_[size_t(i)] = c_[size_t(i)] + o.c_[size_t(i)];
    return r;
}

series series::operator-() const {
    series r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

series series::operator-(const series& o) const { return *this + (-o); }

series series::operator*(const series& o) const {
    int acc = std::min(acc_, o.acc_);
    series r(R_, acc);
    for (int i = 0; i < acc; ++i) {
        if (R_->is_zero(c_[size_t(i)])) continue;
        for (int j = 0; j + i < acc; ++j)
            r.c_[size_t(i + j)] = r.c_[size_t(i + j)] + c_[size_t(i)] * o.c_[size_t(j)];
    }
    return r;
}

series series::inverse() const {
    if (!R_->is_unit(c_[0])) throw non_unit("series inverse: non-unit constant term");
    series r(R_, acc_);
    r.c_[0] = c_[0].inv();
    for (int k = 1; k < acc_; ++k) {
        elt acc = R_->zero();
        for (int j = 1; j <= k; ++j) acc = acc + c_[size_t(j)] * r.c_[size_t(k - j)];
        r.c_[size_t(k)] = -(acc * r.c_[0]);
    }
    return r;
}

series series::derivative() const {
    if (acc_ <= 1) throw accuracy_too_low("derivative: accuracy too low");
    series r(R_, acc_ - 1);
    for (int k = 1; k < acc_; ++k) r.c_[size_t(k - 1)] = c_[size_t(k)] * R_->from_int(k);
    return r;
}

bool series::operator==(const series& o) const {
    int acc = std::min(acc_, o.acc_);
    for (int i = 0; i < acc; ++i)
        if (c_[size_t(i)] != o.c_[size_t(i)]) return false;
    return true;
}

series series::compose_poly(const poly& p, const series& s) {
    series r(s.coeff_ring(), s.accuracy());
    for (int i = p.degree(); i >= 0; --i) {
        r = r * s;
        r.at(0) = r.at(0) + s.coeff_ring()->embed(p.at(i));
    }
    return r;
}

series series::sqrt(const series& s, const elt& v0) {
    const ring_ptr& R = s.coeff_ring();
    if (!R->is_unit(v0)) throw singular_lift("series sqrt: ramified initial value");
    if (v0 * v0 != s.at(0)) throw malformed_input("series sqrt: wrong initial value");
    int acc = s.accuracy();
    series r(R, acc);
    r.at(0) = v0;
    elt inv2v = (R->from_int(2) * v0).inv();
    for (int k = 1; k < acc; ++k) {
        elt convolution = R->zero();
        for (int j = 1; j < k; ++j) convolution = convolution + r.at(j) * r.at(k - j);
        r.at(k) = (s.at(k) - convolution) * inv2v;
    }
    return r;
}

series newton_root(const std::vector<series>& f, const elt& x0, int acc) {
    // coefficients f[i] are series; evaluate f and f' at a series point
    const ring_ptr& R = f.front().coeff_ring();
    auto eval_at = [&](const series& x) {
        series v(R, acc);
        for (size_t i = f.size(); i-- > 0;) v = v * x + f[i].truncated(acc);
        return v;
    };
    auto eval_deriv = [&](const series& x) {
        series v(R, acc);
        for (size_t i = f.size(); i-- > 1;) {
            series c = f[i].truncated(acc);
            for (auto& cc : const_cast<std::vector<elt>&>(c.coeffs())) cc = cc * R->from_int(long(i));
            v = v * x + c;
        }
        return v;
    };
    series x(R, acc);
    x.at(0) = x0;
    {
        series fx = eval_at(x);
        if (!R->is_zero(fx.at(0))) throw singular_lift("newton_root: x0 is not a residue root");
        series dfx = eval_deriv(x);
        if (!R->is_unit(dfx.at(0))) throw singular_lift("newton_root: multiple residue root");
    }
    int prec = 1;
    while (prec < acc) {
        prec = std::min(2 * prec, acc);
        series fx = eval_at(x).truncated(prec);
        series dfx = eval_deriv(x).truncated(prec);
        series corr = fx * dfx.inverse();
        series nx(R, acc);
        for (int i = 0; i < acc; ++i)
            nx.at(i) = x.at(i) - (i < prec ? corr.at(i) : R->zero());
        x = nx;
    }
    return x;
}

poly hensel_sqrt_mod(const poly& h, const poly& r, const poly& b0, int m) {
    const ring_ptr& R = h.coeff_ring();
    poly rm(R, {1});
    for (int i = 0; i < m; ++i) rm = rm * r;
    poly b = b0 % rm;
    // Newton in R[u]/r^m: b <- b - (b^2 - h)/(2b)
    for (int it = 0; it < m + 2; ++it) {
        poly res = (b * b - h) % rm;
        if (res.is_zero()) return b;
        // invert 2b mod rm
        poly g, s, t;
        poly::xgcd((b.scaled(R->from_int(2))) % rm, rm, g, s, t);
        if (g.degree() != 0) throw singular_lift("hensel_sqrt_mod: 2b not invertible");
        b = (b - res * s) % rm;
    }
    if (!((b * b - h) % rm).is_zero()) throw singular_lift("hensel_sqrt_mod: did not converge");
    return b;
}

std::pair<poly, poly> hensel_factor(const poly& f, const poly& g0, const poly& h0) {
    // f over a series ring S = series(base); g0, h0 over S with residues
    // coprime and g0*h0 = f mod t.  Linear-convergence lift, order by order.
    const ring_ptr& S = f.coeff_ring();
    if (S->kind() != ring::kind_t::quotient || S->quot_kind() != ring::quot_t::series)
        throw malformed_input("hensel_factor: coefficients must live in a series ring");
    int acc = S->degree();
    const ring_ptr& B = S->base();
    auto res_poly = [&](const poly& q) {
        std::vector<elt> c(size_t(q.degree() + 1));
        for (int i = 0; i <= q.degree(); ++i) c[size_t(i)] = S->residue(q.at(i));
        return poly(B, std::move(c));
    };
    poly gr = res_poly(g0), hr = res_poly(h0);
    poly g_, s_, t_;
    poly::xgcd(gr, hr, g_, s_, t_);
    if (g_.degree() != 0) throw non_reducible("hensel_factor: residues not coprime");
    poly g = g0, hh = h0;
    for (int k = 1; k < acc; ++k) {
        poly err = f - g * hh;
        // err has valuation >= k; pick its t^k layer over base
        std::vector<elt> layer(size_t(err.degree() + 1));
        for (int i = 0; i <= err.degree(); ++i) layer[size_t(i)] = S->coeff(err.at(i), k);
        poly e(B, std::move(layer));
        if (e.is_zero()) continue;
        // solve dg*hr + dh*gr = e with deg dg < deg gr
        poly dg = (t_ * e) % gr;              // s_*gr + t_*hr = 1 -> split e = dg*hr + dh*gr
        poly dh = (e - dg * hr).quo_exact(gr);
        // add t^k * dg to g, t^k * dh to h
        auto bump = [&](poly& target, const poly& delta) {
            std::vector<elt> c(size_t(std::max(target.degree(), delta.degree()) + 1), S->zero());
            for (int i = 0; i <= target.degree(); ++i) c[size_t(i)] = target.at(i);
            for (int i = 0; i <= delta.degree(); ++i) {
                std::vector<elt> pay(size_t(acc), B->zero());
                pay[size_t(k)] = delta.at(i);
                c[size_t(i)] = c[size_t(i)] + S->make(std::move(pay));
            }
            target = poly(S, std::move(c));
        };
        bump(g, dg);
        bump(hh, dh);
    }
    if (!(f - g * hh).is_zero()) throw non_reducible("hensel_factor: lift failed");
    return {g, hh};
}

} // namespace isojac
