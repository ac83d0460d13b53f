// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "isojac/poly.hpp"

namespace isojac {

// Truncated power series with per-value accuracy: represents a value known
// modulo t^acc.  Arithmetic never claims accuracy beyond its operands'.
class series {
  public:
    series() = default;
    series(ring_ptr R, int acc) : R_(std::move(R)), acc_(acc), c_(size_t(acc), R_->zero()) {}
    series(ring_ptr R, std::vector<elt> c, int acc)
        : R_(std::move(R)), acc_(acc), c_(std::move(c)) {
        c_.resize(size_t(acc_), R_->zero());
    }

    const ring_ptr& coeff_ring() const { return R_; }
    int accuracy() const { return acc_; }
    const elt& at(int i) const { return c_[size_t(i)]; }
    elt& at(int i) { return c_[size_t(i)]; }
    const std::vector<elt>& coeffs() const { return c_; }

    series truncated(int acc) const {
        if (acc > acc_) throw accuracy_too_low("truncated: cannot gain accuracy");
        return series(R_, std::vector<elt>(c_.begin(), c_.begin() + acc), acc);
    }

    series operator+(const series& o) const;
    series operator-(const series& o) const;
    series operator*(const series& o) const;
    series operator-() const;
    series inverse() const;              // constant term must be a unit
    series derivative() const;           // accuracy drops by one
    bool operator==(const series& o) const;

    int valuation() const {              // accuracy if identically zero
        for (int i = 0; i < acc_; ++i)
            if (!R_->is_zero(c_[size_t(i)])) return i;
        return acc_;
    }

    static series variable(const ring_ptr& R, int acc) {
        series s(R, acc);
        if (acc > 1) s.at(1) = R->one();
        return s;
    }
    static series from_poly(const poly& p, int acc) {
        std::vector<elt> c(size_t(acc), p.coeff_ring()->zero());
        for (int i = 0; i < acc && i <= p.degree(); ++i) c[size_t(i)] = p.at(i);
        return series(p.coeff_ring(), std::move(c), acc);
    }
    poly to_poly() const { return poly(R_, c_); }

    // p(s) for a polynomial p over (a subring of) the coefficient ring
    static series compose_poly(const poly& p, const series& s);

    // square root with designated initial value v0 (v0^2 = constant term,
    // v0 a unit); Newton lifting in odd characteristic
    static series sqrt(const series& s, const elt& v0);

  private:
    ring_ptr R_;
    int acc_ = 0;
    std::vector<elt> c_;
};

// Hensel/Newton root of f over a series ring: x with f(x) = 0 mod t^acc,
// starting from a simple residue root x0 (f'(x0) a unit mod t).
// f has coefficients that are series of accuracy >= acc.
series newton_root(const std::vector<series>& f_coeffs, const elt& x0, int acc);

// Lift b with b^2 = h (mod r^m) from b0 with b0^2 = h (mod r): coprime Hensel
// step used for thickened Mumford ideals; 2*b0 must be invertible mod r.
poly hensel_sqrt_mod(const poly& h, const poly& r, const poly& b0, int m);

// Coprime factor lifting: given monic f over a series tower and a coprime
// factorization f = g0*h0 of its residue, lift to f = g*h to full accuracy.
std::pair<poly, poly> hensel_factor(const poly& f, const poly& g0, const poly& h0);

} // namespace isojac
