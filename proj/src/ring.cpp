// SPDX-License-Identifier: Apache-2.0
#include "isojac/ring.hpp"

#include <algorithm>

namespace isojac {

// ---------------------------------------------------------------- factories

ring_ptr ring::prime_field(const Int& p) {
    if (p < 3 || (p & 1) == 0 || !is_probable_prime(p))
        throw malformed_input("prime_field: modulus must be an odd prime");
    auto r = std::shared_ptr<ring>(new ring);
    r->kind_ = kind_t::prime;
    r->p_ = p;
    r->deg_ = 1;
    return r;
}

static void check_modulus(const ring_ptr& base, const std::vector<elt>& m) {
    if (m.size() < 2) throw malformed_input("quotient: modulus degree must be >= 1");
    for (auto& c : m)
        if (!c.valid() || !base->same(c.parent()))
            throw mixed_algebra("quotient: modulus coefficients not in base");
    if (!m.back().is_one())
        throw malformed_input("quotient: modulus must be monic");
}

ring_ptr ring::extension(const ring_ptr& base, std::vector<elt> modulus, bool check_irr) {
    check_modulus(base, modulus);
    auto r = std::shared_ptr<ring>(new ring);
    r->kind_ = kind_t::quotient;
    r->quot_ = quot_t::extension;
    r->base_ = base;
    r->mod_ = std::move(modulus);
    r->deg_ = int(r->mod_.size()) - 1;
    r->p_ = base->char_p();
    if (check_irr && base->is_field()) {
        // x^(q^k) mod f has gcd 1 with f for k < deg iff f irreducible; test
        // gcd(x^(q^k) - x, f) = 1 for k | deg proper, and x^(q^deg) = x.
        auto self = ring_ptr(r);
        elt x = self->gen();
        Int q = base->cardinality();
        int d = r->deg_;
        elt xq = x;
        for (int k = 1; k <= d; ++k) {
            xq = self->pow(xq, q);
            if (k < d && d % k == 0) {
                // gcd(f, xq - x) must be 1: xq - x must be a unit or zero test
                elt diff = self->sub(xq, x);
                if (self->is_zero(diff) || !self->is_unit(diff))
                    throw malformed_input("extension: modulus is reducible");
            }
        }
        if (!self->equal(xq, x))
            throw malformed_input("extension: modulus is reducible");
        return self;
    }
    return r;
}

ring_ptr ring::series_ring(const ring_ptr& base, int accuracy) {
    if (accuracy < 1) throw malformed_input("series_ring: accuracy must be >= 1");
    auto r = std::shared_ptr<ring>(new ring);
    r->kind_ = kind_t::quotient;
    r->quot_ = quot_t::series;
    r->base_ = base;
    r->deg_ = accuracy;
    r->mod_.assign(accuracy + 1, base->zero());
    r->mod_.back() = base->one();
    r->p_ = base->char_p();
    return r;
}

ring_ptr ring::generic_quotient(const ring_ptr& base, std::vector<elt> modulus) {
    check_modulus(base, modulus);
    auto r = std::shared_ptr<ring>(new ring);
    r->kind_ = kind_t::quotient;
    r->quot_ = quot_t::generic;
    r->base_ = base;
    r->mod_ = std::move(modulus);
    r->deg_ = int(r->mod_.size()) - 1;
    r->p_ = base->char_p();
    return r;
}

ring_ptr ring::product(std::vector<ring_ptr> factors) {
    if (factors.empty()) throw malformed_input("product: needs at least one factor");
    auto r = std::shared_ptr<ring>(new ring);
    r->kind_ = kind_t::product;
    r->factors_ = std::move(factors);
    r->deg_ = int(r->factors_.size());
    r->p_ = r->factors_.front()->char_p();
    return r;
}

// ------------------------------------------------------------------- info

Int ring::cardinality() const {
    if (!is_field()) throw not_a_field("cardinality: not a finite field");
    Int q = p_;
    Int e = degree_over_prime();
    Int r = 1;
    for (Int i = 0; i < e; ++i) r *= q;
    return r;
}

int ring::degree_over_prime() const {
    switch (kind_) {
        case kind_t::prime: return 1;
        case kind_t::quotient: return deg_ * base_->degree_over_prime();
        case kind_t::product: {
            int s = 0;
            for (auto& f : factors_) s += f->degree_over_prime();
            return s;
        }
    }
    return 1;
}

bool ring::is_field() const {
    if (kind_ == kind_t::prime) return true;
    if (kind_ == kind_t::quotient && quot_ == quot_t::extension) return base_->is_field();
    return false;
}

bool ring::is_local() const {
    if (is_field()) return true;
    if (kind_ == kind_t::quotient && quot_ == quot_t::series) return base_->is_local();
    return false;
}

static bool structurally_equal(const ring* x, const ring* y) {
    if (x == y) return true;
    if (x->kind() != y->kind()) return false;
    switch (x->kind()) {
        case ring::kind_t::prime:
            return x->char_p() == y->char_p();
        case ring::kind_t::quotient: {
            if (x->quot_kind() != y->quot_kind() || x->degree() != y->degree()) return false;
            if (!structurally_equal(x->base().get(), y->base().get())) return false;
            const auto &mx = x->modulus(), &my = y->modulus();
            if (mx.size() != my.size()) return false;
            for (size_t i = 0; i < mx.size(); ++i)
                if (ring::cmp(mx[i], my[i]) != 0) return false;
            return true;
        }
        case ring::kind_t::product: {
            if (x->factors().size() != y->factors().size()) return false;
            for (size_t i = 0; i < x->factors().size(); ++i)
                if (!structurally_equal(x->factors()[i].get(), y->factors()[i].get()))
                    return false;
            return true;
        }
    }
    return false;
}

void ring::require(const elt& a) const {
    if (!a.valid()) throw mixed_algebra("element does not belong to this algebra");
    if (a.R_.get() == this) return;
    if (!structurally_equal(this, a.R_.get()))
        throw mixed_algebra("element does not belong to this algebra");
}

// ---------------------------------------------------------------- elements

elt ring::zero() const {
    elt e;
    e.R_ = shared_from_this();
    if (kind_ == kind_t::quotient) e.v_.assign(deg_, base_->zero());
    else if (kind_ == kind_t::product) {
        e.v_.reserve(factors_.size());
        for (auto& f : factors_) e.v_.push_back(f->zero());
    }
    return e;
}

elt ring::one() const { return from_int(1); }

elt ring::from_int(Int n) const {
    elt e = zero();
    switch (kind_) {
        case kind_t::prime:
            n %= p_;
            if (n < 0) n += p_;
            e.z_ = n;
            break;
        case kind_t::quotient:
            e.v_[0] = base_->from_int(std::move(n));
            break;
        case kind_t::product:
            for (size_t i = 0; i < factors_.size(); ++i)
                e.v_[i] = factors_[i]->from_int(n);
            break;
    }
    return e;
}

elt ring::gen() const {
    if (kind_ != kind_t::quotient) throw malformed_input("gen: not a quotient algebra");
    elt e = zero();
    if (deg_ == 1) {
        // x = -mod[0]
        e.v_[0] = base_->neg(mod_[0]);
    } else {
        e.v_[1] = base_->one();
    }
    return e;
}

elt ring::make(std::vector<elt> coeffs) const {
    if (kind_ == kind_t::prime) throw malformed_input("make: prime field");
    if (kind_ == kind_t::product) {
        if (coeffs.size() != factors_.size()) throw malformed_input("make: wrong arity");
        for (size_t i = 0; i < coeffs.size(); ++i)
            if (!factors_[i]->same(coeffs[i].parent())) throw mixed_algebra("make");
        elt e;
        e.R_ = shared_from_this();
        e.v_ = std::move(coeffs);
        return e;
    }
    for (auto& c : coeffs)
        if (!base_->same(c.parent())) throw mixed_algebra("make: coefficient ring");
    elt e;
    e.R_ = shared_from_this();
    e.v_ = red_mod(std::move(coeffs));
    e.v_.resize(deg_, base_->zero());
    return e;
}

std::vector<elt> ring::red_mod(std::vector<elt> v) const {
    // reduce by the monic modulus; series case just truncates
    if (quot_ == quot_t::series) {
        if (int(v.size()) > deg_) v.resize(deg_);
        return v;
    }
    while (int(v.size()) > deg_) {
        elt lead = v.back();
        v.pop_back();
        if (base_->is_zero(lead)) continue;
        size_t off = v.size() - deg_;
        for (int i = 0; i < deg_; ++i)
            v[off + i] = base_->sub(v[off + i], base_->mul(lead, mod_[i]));
    }
    return v;
}

elt ring::embed(const elt& x) const {
    if (!x.valid()) throw mixed_algebra("embed: invalid element");
    if (x.R_.get() == this || structurally_equal(this, x.R_.get())) return x;
    switch (kind_) {
        case kind_t::prime:
            throw mixed_algebra("embed: cannot embed into prime field");
        case kind_t::quotient: {
            elt e = zero();
            e.v_[0] = base_->embed(x);
            return e;
        }
        case kind_t::product: {
            elt e;
            e.R_ = shared_from_this();
            for (auto& f : factors_) e.v_.push_back(f->embed(x));
            return e;
        }
    }
    throw mixed_algebra("embed");
}

elt ring::random(rng_t& rng) const {
    switch (kind_) {
        case kind_t::prime: {
            elt e = zero();
            e.z_ = rng.below(p_);
            return e;
        }
        case kind_t::quotient: {
            elt e = zero();
            for (auto& c : e.v_) c = base_->random(rng);
            return e;
        }
        case kind_t::product: {
            elt e = zero();
            for (size_t i = 0; i < factors_.size(); ++i) e.v_[i] = factors_[i]->random(rng);
            return e;
        }
    }
    return zero();
}

// --------------------------------------------------------------- arithmetic

elt ring::add(const elt& a, const elt& b) const {
    require(a); require(b);
    elt e = a;
    if (kind_ == kind_t::prime) {
        e.z_ += b.z_;
        if (e.z_ >= p_) e.z_ -= p_;
        return e;
    }
    const ring* sub_ring = nullptr;
    for (size_t i = 0; i < e.v_.size(); ++i) {
        sub_ring = (kind_ == kind_t::product) ? factors_[i].get() : base_.get();
        e.v_[i] = sub_ring->add(e.v_[i], b.v_[i]);
    }
    return e;
}

elt ring::sub(const elt& a, const elt& b) const { return add(a, neg(b)); }

elt ring::neg(const elt& a) const {
    require(a);
    elt e = a;
    if (kind_ == kind_t::prime) {
        if (e.z_ != 0) e.z_ = p_ - e.z_;
        return e;
    }
    for (size_t i = 0; i < e.v_.size(); ++i)
        e.v_[i] = (kind_ == kind_t::product) ? factors_[i]->neg(e.v_[i]) : base_->neg(e.v_[i]);
    return e;
}

elt ring::mul(const elt& a, const elt& b) const {
    require(a); require(b);
    if (kind_ == kind_t::prime) {
        elt e = a;
        e.z_ = a.z_ * b.z_ % p_;
        return e;
    }
    if (kind_ == kind_t::product) {
        elt e = a;
        for (size_t i = 0; i < e.v_.size(); ++i) e.v_[i] = factors_[i]->mul(e.v_[i], b.v_[i]);
        return e;
    }
    // schoolbook product then reduce (series: truncated directly)
    int n = quot_ == quot_t::series ? deg_ : 2 * deg_ - 1;
    std::vector<elt> prod(n, base_->zero());
    for (int i = 0; i < deg_; ++i) {
        if (base_->is_zero(a.v_[i])) continue;
        int jmax = quot_ == quot_t::series ? std::min(deg_ - i, deg_) : deg_;
        for (int j = 0; j < jmax; ++j) {
            if (base_->is_zero(b.v_[j])) continue;
            prod[i + j] = base_->add(prod[i + j], base_->mul(a.v_[i], b.v_[j]));
        }
    }
    elt e;
    e.R_ = shared_from_this();
    e.v_ = red_mod(std::move(prod));
    e.v_.resize(deg_, base_->zero());
    return e;
}

bool ring::is_zero(const elt& a) const {
    require(a);
    if (kind_ == kind_t::prime) return a.z_ == 0;
    if (kind_ == kind_t::product) {
        for (size_t i = 0; i < a.v_.size(); ++i)
            if (!factors_[i]->is_zero(a.v_[i])) return false;
        return true;
    }
    for (auto& c : a.v_)
        if (!base_->is_zero(c)) return false;
    return true;
}

bool ring::equal(const elt& a, const elt& b) const {
    require(a); require(b);
    if (kind_ == kind_t::prime) return a.z_ == b.z_;
    for (size_t i = 0; i < a.v_.size(); ++i) {
        const ring* s = (kind_ == kind_t::product) ? factors_[i].get() : base_.get();
        if (!s->equal(a.v_[i], b.v_[i])) return false;
    }
    return true;
}

bool ring::is_unit(const elt& a) const {
    require(a);
    switch (kind_) {
        case kind_t::prime: return a.z_ != 0;
        case kind_t::product:
            for (size_t i = 0; i < a.v_.size(); ++i)
                if (!factors_[i]->is_unit(a.v_[i])) return false;
            return true;
        case kind_t::quotient:
            if (quot_ == quot_t::series) return base_->is_unit(a.v_[0]);
            if (is_field()) return !is_zero(a);
            // generic quotient over a field: unit iff gcd(payload, modulus) = 1;
            // test through inversion
            try { (void)inv(a); return true; } catch (const non_unit&) { return false; }
    }
    return false;
}

elt ring::inv(const elt& a) const {
    require(a);
    switch (kind_) {
        case kind_t::prime: {
            if (a.z_ == 0) throw non_unit("inv: zero");
            elt e = a;
            e.z_ = inv_mod(a.z_, p_);
            return e;
        }
        case kind_t::product: {
            elt e = a;
            for (size_t i = 0; i < e.v_.size(); ++i) e.v_[i] = factors_[i]->inv(e.v_[i]);
            return e;
        }
        case kind_t::quotient: break;
    }
    if (quot_ == quot_t::series) {
        // Newton: i <- i(2 - a i), starting from inverse of the constant term
        elt c0 = a.v_[0];
        if (!base_->is_unit(c0)) throw non_unit("inv: series with non-unit constant term");
        elt x = zero();
        x.v_[0] = base_->inv(c0);
        elt two = from_int(2);
        int prec = 1;
        while (prec < deg_) {
            x = mul(x, sub(two, mul(a, x)));
            prec *= 2;
        }
        return x;
    }
    // extension / generic over a base where xgcd works: polynomial xgcd with
    // the modulus.  Requires unit leading coefficients along the way.
    std::vector<elt> r0 = mod_, r1 = a.v_;
    auto deg_of = [&](const std::vector<elt>& v) {
        int d = int(v.size()) - 1;
        while (d >= 0 && base_->is_zero(v[d])) --d;
        return d;
    };
    std::vector<elt> s0(1, base_->zero()), s1(1, base_->one());
    while (true) {
        int d1 = deg_of(r1);
        if (d1 < 0) throw non_unit("inv: not invertible in quotient");
        if (d1 == 0) break;
        // r0 = q r1 + r; requires lc(r1) unit
        if (!base_->is_unit(r1[d1])) throw non_unit("inv: non-unit leading coefficient");
        elt lcinv = base_->inv(r1[d1]);
        std::vector<elt> rem = r0;
        std::vector<elt> q(std::max<size_t>(1, rem.size()), base_->zero());
        int d0 = deg_of(rem);
        while (d0 >= d1) {
            elt c = base_->mul(rem[d0], lcinv);
            q[d0 - d1] = base_->add(q[d0 - d1], c);
            for (int i = 0; i <= d1; ++i)
                rem[d0 - d1 + i] = base_->sub(rem[d0 - d1 + i], base_->mul(c, r1[i]));
            while (d0 >= 0 && base_->is_zero(rem[d0])) --d0;
        }
        // (s0, s1) <- (s1, s0 - q s1)
        std::vector<elt> qs1(q.size() + s1.size(), base_->zero());
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j)
                qs1[i + j] = base_->add(qs1[i + j], base_->mul(q[i], s1[j]));
        std::vector<elt> ns(std::max(s0.size(), qs1.size()), base_->zero());
        for (size_t i = 0; i < ns.size(); ++i) {
            elt x = i < s0.size() ? s0[i] : base_->zero();
            elt y = i < qs1.size() ? qs1[i] : base_->zero();
            ns[i] = base_->sub(x, y);
        }
        r0 = std::move(r1); r1 = std::move(rem);
        s0 = std::move(s1); s1 = std::move(ns);
    }
    elt g = r1[0];
    if (!base_->is_unit(g)) throw non_unit("inv: gcd not a unit");
    elt ginv = base_->inv(g);
    for (auto& c : s1) c = base_->mul(c, ginv);
    return make(std::move(s1));
}

elt ring::pow(const elt& a, Int e) const {
    require(a);
    if (e < 0) return pow(inv(a), -e);
    elt r = one(), b = a;
    while (e > 0) {
        if (bit_test(e, 0)) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

// --------------------------------------------------------------- structure

elt ring::coeff(const elt& a, int i) const {
    require(a);
    if (kind_ == kind_t::prime) throw malformed_input("coeff: prime field");
    return a.v_.at(size_t(i));
}

elt ring::residue(const elt& a) const {
    require(a);
    if (kind_ != kind_t::quotient || quot_ != quot_t::series)
        throw malformed_input("residue: not a series ring");
    return a.v_[0];
}

int ring::cmp(const elt& a, const elt& b) {
    if (a.R_->kind_ == kind_t::prime) {
        if (a.z_ < b.z_) return -1;
        if (a.z_ > b.z_) return 1;
        return 0;
    }
    for (size_t i = a.v_.size(); i-- > 0;) {
        int c = cmp(a.v_[i], b.v_[i]);
        if (c) return c;
    }
    return 0;
}

elt ring::norm_to_base(const elt& a) const {
    require(a);
    if (kind_ == kind_t::product) throw malformed_input("norm_to_base: product has no single base");
    if (kind_ == kind_t::prime) return a;
    // determinant of the multiplication matrix, division-free (Berkowitz)
    int d = deg_;
    // columns: a * x^j mod modulus
    std::vector<std::vector<elt>> M(d, std::vector<elt>(d, base_->zero()));
    std::vector<elt> col = a.v_;
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) M[i][j] = col[i];
        // col <- col * x mod modulus
        col.insert(col.begin(), base_->zero());
        col = red_mod(std::move(col));
        col.resize(d, base_->zero());
    }
    if (d == 1) return M[0][0];
    if (d == 2)
        return base_->sub(base_->mul(M[0][0], M[1][1]), base_->mul(M[0][1], M[1][0]));
    // Berkowitz: characteristic polynomial via vector products; det = +-c0
    std::vector<elt> cp(1, base_->one());  // char poly coeffs, descending, starts [1]
    for (int k = 0; k < d; ++k) {
        // principal submatrix of size k+1; build Toeplitz column from M
        int n = k + 1;
        std::vector<elt> tvec(n + 1);
        tvec[0] = base_->one();
        tvec[1] = base_->neg(M[k][k]);
        if (n >= 2) {
            std::vector<elt> row(k), colv(k);
            for (int i = 0; i < k; ++i) { row[i] = M[k][i]; colv[i] = M[i][k]; }
            std::vector<elt> acc = colv;
            for (int m = 2; m <= n; ++m) {
                elt dot = base_->zero();
                for (int i = 0; i < k; ++i) dot = base_->add(dot, base_->mul(row[i], acc[i]));
                tvec[m] = base_->neg(dot);
                if (m < n) {
                    std::vector<elt> nxt(k, base_->zero());
                    for (int i = 0; i < k; ++i) {
                        elt s = base_->zero();
                        for (int j = 0; j < k; ++j) s = base_->add(s, base_->mul(M[i][j], acc[j]));
                        nxt[i] = s;
                    }
                    acc = std::move(nxt);
                }
            }
        }
        std::vector<elt> ncp(cp.size() + 1, base_->zero());
        for (size_t i = 0; i < cp.size(); ++i)
            for (size_t j = 0; j < tvec.size() && i + j < ncp.size(); ++j)
                ncp[i + j] = base_->add(ncp[i + j], base_->mul(cp[i], tvec[j]));
        cp = std::move(ncp);
        cp.resize(k + 2, base_->zero());
    }
    elt det = cp.back();
    if (d % 2) det = base_->neg(det);
    return det;
}

elt ring::trace_to_base(const elt& a) const {
    require(a);
    if (kind_ == kind_t::product) throw malformed_input("trace_to_base: product has no single base");
    if (kind_ == kind_t::prime) return a;
    int d = deg_;
    std::vector<elt> col = a.v_;
    elt tr = base_->zero();
    for (int j = 0; j < d; ++j) {
        tr = base_->add(tr, col[j]);
        col.insert(col.begin(), base_->zero());
        col = red_mod(std::move(col));
        col.resize(d, base_->zero());
    }
    return tr;
}

elt ring::norm_to_prime(const elt& a) const {
    require(a);
    if (kind_ == kind_t::prime) return a;
    if (kind_ == kind_t::product) {
        elt r;
        bool first = true;
        for (size_t i = 0; i < factors_.size(); ++i) {
            elt n = factors_[i]->norm_to_prime(a.v_[i]);
            r = first ? n : r * n;
            first = false;
        }
        return r;
    }
    return base_->norm_to_prime(norm_to_base(a));
}

elt ring::trace_to_prime(const elt& a) const {
    require(a);
    if (kind_ == kind_t::prime) return a;
    if (kind_ == kind_t::product) {
        elt r;
        bool first = true;
        for (size_t i = 0; i < factors_.size(); ++i) {
            elt t = factors_[i]->trace_to_prime(a.v_[i]);
            r = first ? t : r + t;
            first = false;
        }
        return r;
    }
    return base_->trace_to_prime(trace_to_base(a));
}

// ------------------------------------------------------------ square roots

bool ring::is_square(const elt& a) const {
    if (!is_field()) throw not_a_field("is_square: not a field");
    if (is_zero(a)) return true;
    Int q = cardinality();
    return equal(pow(a, (q - 1) / 2), one());
}

elt ring::sqrt(const elt& a) const {
    if (!is_field()) throw not_a_field("sqrt: not a field");
    if (is_zero(a)) return a;
    Int q = cardinality();
    if (!equal(pow(a, (q - 1) / 2), one())) throw no_square_root("sqrt: non-residue");
    Int m = q - 1;
    int s = 0;
    while ((m & 1) == 0) { m >>= 1; ++s; }
    elt r, c;
    if (s == 1) {
        r = pow(a, (q + 1) / 4);
    } else {
        // find a non-residue deterministically: scan small scalars then gen shifts
        elt z;
        bool found = false;
        for (Int k = 2; k < 1000 && !found; ++k) {
            z = from_int(k);
            if (!is_zero(z) && !equal(pow(z, (q - 1) / 2), one())) found = true;
        }
        if (!found && kind_ == kind_t::quotient) {
            elt g = gen();
            elt t = g;
            for (int k = 0; k < 4096 && !found; ++k) {
                if (!is_zero(t) && !equal(pow(t, (q - 1) / 2), one())) { z = t; found = true; }
                t = add(t, one());
            }
        }
        if (!found) throw no_square_root("sqrt: no non-residue found");
        c = pow(z, m);
        elt t = pow(a, m);
        r = pow(a, (m + 1) / 2);
        int mm = s;
        while (!equal(t, one())) {
            elt tt = t;
            int i = 0;
            while (!equal(tt, one())) { tt = mul(tt, tt); ++i; }
            elt b = c;
            for (int k = 0; k < mm - i - 1; ++k) b = mul(b, b);
            mm = i;
            c = mul(b, b);
            t = mul(t, c);
            r = mul(r, b);
        }
    }
    elt nr = neg(r);
    return cmp(r, nr) <= 0 ? r : nr;
}

elt ring::frobenius(const elt& a) const {
    return pow(a, p_);
}

} // namespace isojac
