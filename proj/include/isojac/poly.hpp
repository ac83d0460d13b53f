// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <initializer_list>
#include <vector>

#include "isojac/ring.hpp"

namespace isojac {

// Dense univariate polynomial over a ring, ascending coefficients, no zero
// leading coefficient stored.  The zero polynomial has an empty vector.
class poly {
  public:
    poly() = default;
    explicit poly(ring_ptr R) : R_(std::move(R)) {}
    poly(ring_ptr R, std::vector<elt> c) : R_(std::move(R)), c_(std::move(c)) { trim(); }
    poly(ring_ptr R, std::initializer_list<long> ints) : R_(std::move(R)) {
        for (long v : ints) c_.push_back(R_->from_int(v));
        trim();
    }

    static poly x(const ring_ptr& R) { return poly(R, {0, 1}); }
    static poly constant(const elt& c) { return poly(c.parent(), std::vector<elt>{c}); }

    const ring_ptr& coeff_ring() const { return R_; }
    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const elt& lc() const { return c_.back(); }
    elt at(int i) const {
        return (i >= 0 && i < int(c_.size())) ? c_[size_t(i)] : R_->zero();
    }
    const std::vector<elt>& coeffs() const { return c_; }

    poly operator+(const poly& o) const;
    poly operator-(const poly& o) const;
    poly operator*(const poly& o) const;
    poly operator-() const;
    poly scaled(const elt& c) const;
    bool operator==(const poly& o) const;
    bool operator!=(const poly& o) const { return !(*this == o); }

    // division by a polynomial with unit leading coefficient
    std::pair<poly, poly> divrem(const poly& d) const;
    poly operator%(const poly& d) const { return divrem(d).second; }
    poly quo_exact(const poly& d) const;  // throws if remainder nonzero
    poly monic() const;
    bool is_monic() const { return !is_zero() && lc().is_one(); }

    poly derivative() const;
    poly shifted(const elt& c) const;   // p(u + c)
    elt eval(const elt& x) const;       // x may live in an extension of the coefficient ring
    poly map_into(const ring_ptr& S) const;  // embed coefficients

    static poly gcd(poly a, poly b);
    // g = s a + t b with g monic; unit-pivot Euclid (throws non_reducible when
    // a non-unit leading coefficient blocks progress over a non-field ring)
    static void xgcd(const poly& a, const poly& b, poly& g, poly& s, poly& t);
    static elt resultant(const poly& a, const poly& b);

    bool is_squarefree() const;
    // roots in the coefficient field (with multiplicity 1 each; multiplicities
    // are not reported), Cantor-Zassenhaus splitting
    std::vector<elt> roots(rng_t& rng) const;

  private:
    void trim() {
        while (!c_.empty() && R_->is_zero(c_.back())) c_.pop_back();
    }
    ring_ptr R_;
    std::vector<elt> c_;
};

} // namespace isojac
