// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <vector>

#include "isojac/intz.hpp"

namespace isojac {

class ring;
using ring_ptr = std::shared_ptr<const ring>;

// Element of a prime field, a quotient algebra over another ring, or a
// product algebra.  Immutable value; carries a pointer to its ring.
class elt {
  public:
    elt() = default;

    const ring_ptr& parent() const { return R_; }
    bool valid() const { return R_ != nullptr; }

    elt operator+(const elt& o) const;
    elt operator-(const elt& o) const;
    elt operator*(const elt& o) const;
    elt operator/(const elt& o) const;
    elt operator-() const;
    bool operator==(const elt& o) const;
    bool operator!=(const elt& o) const { return !(*this == o); }

    elt inv() const;
    elt pow(const Int& e) const;
    bool is_zero() const;
    bool is_one() const;
    bool is_unit() const;

    // payload access; meaning depends on the parent's kind
    const Int& scalar() const { return z_; }
    const std::vector<elt>& parts() const { return v_; }

  private:
    friend class ring;
    ring_ptr R_;
    Int z_;               // prime-field payload: canonical in [0, p)
    std::vector<elt> v_;  // quotient coefficients over base / product components
};

// Immutable ring descriptor.  Construct through the factories; elements are
// created by the ring and checked to belong to it on every operation.
class ring : public std::enable_shared_from_this<ring> {
  public:
    enum class kind_t { prime, quotient, product };
    enum class quot_t { extension, series, generic };

    static ring_ptr prime_field(const Int& p);
    // modulus given by its coefficient vector over `base` (ascending, monic)
    static ring_ptr extension(const ring_ptr& base, std::vector<elt> modulus,
                              bool check_irreducible = true);
    static ring_ptr series_ring(const ring_ptr& base, int accuracy);
    static ring_ptr generic_quotient(const ring_ptr& base, std::vector<elt> modulus);
    static ring_ptr product(std::vector<ring_ptr> factors);

    kind_t kind() const { return kind_; }
    quot_t quot_kind() const { return quot_; }
    const ring_ptr& base() const { return base_; }
    const std::vector<elt>& modulus() const { return mod_; }
    int degree() const { return deg_; }  // over base (product: #factors)
    const std::vector<ring_ptr>& factors() const { return factors_; }
    const Int& char_p() const { return p_; }
    Int cardinality() const;             // finite fields only
    int degree_over_prime() const;
    bool is_field() const;
    bool is_local() const;               // series tower over a field

    elt zero() const;
    elt one() const;
    elt from_int(Int n) const;
    elt gen() const;                          // class of the variable
    elt make(std::vector<elt> coeffs) const;  // quotient / product payload
    elt embed(const elt& x) const;            // from anywhere down the base tower
    elt random(rng_t& rng) const;

    elt add(const elt& a, const elt& b) const;
    elt sub(const elt& a, const elt& b) const;
    elt mul(const elt& a, const elt& b) const;
    elt neg(const elt& a) const;
    elt inv(const elt& a) const;
    elt pow(const elt& a, Int e) const;
    bool is_zero(const elt& a) const;
    bool is_unit(const elt& a) const;
    bool equal(const elt& a, const elt& b) const;

    // fields only: Tonelli-Shanks square root; returns the designated root
    // (lexicographically smaller coefficient vector of the two)
    elt sqrt(const elt& a) const;
    bool is_square(const elt& a) const;
    elt frobenius(const elt& a) const;   // x -> x^p

    elt coeff(const elt& a, int i) const;      // quotient coefficient / product part
    elt residue(const elt& a) const;           // series: constant term, in base
    elt norm_to_base(const elt& a) const;
    elt trace_to_base(const elt& a) const;
    elt norm_to_prime(const elt& a) const;
    elt trace_to_prime(const elt& a) const;

    // canonical total order (for designated roots and deterministic scans)
    static int cmp(const elt& a, const elt& b);

    bool same(const ring_ptr& o) const { return o.get() == this; }

  private:
    ring() = default;
    void require(const elt& a) const;
    std::vector<elt> red_mod(std::vector<elt> v) const;  // reduce poly payload by modulus

    kind_t kind_ = kind_t::prime;
    quot_t quot_ = quot_t::generic;
    ring_ptr base_;
    std::vector<elt> mod_;   // monic modulus over base (quotient only)
    int deg_ = 1;
    std::vector<ring_ptr> factors_;
    Int p_;
};

inline elt elt::operator+(const elt& o) const { return R_->add(*this, o); }
inline elt elt::operator-(const elt& o) const { return R_->sub(*this, o); }
inline elt elt::operator*(const elt& o) const { return R_->mul(*this, o); }
inline elt elt::operator/(const elt& o) const { return R_->mul(*this, R_->inv(o)); }
inline elt elt::operator-() const { return R_->neg(*this); }
inline bool elt::operator==(const elt& o) const { return R_->equal(*this, o); }
inline elt elt::inv() const { return R_->inv(*this); }
inline elt elt::pow(const Int& e) const { return R_->pow(*this, e); }
inline bool elt::is_zero() const { return R_->is_zero(*this); }
inline bool elt::is_one() const { return R_->equal(*this, R_->one()); }
inline bool elt::is_unit() const { return R_->is_unit(*this); }

} // namespace isojac
