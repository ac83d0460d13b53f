// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "isojac/linalg.hpp"
#include "isojac/pade.hpp"
#include "isojac/poly.hpp"
#include "isojac/ring.hpp"
#include "isojac/series.hpp"

using namespace isojac;

static ring_ptr F1009() { return ring::prime_field(1009); }
static ring_ptr F131() { return ring::prime_field(131); }

TEST_CASE("prime field basics") {
    auto F = F1009();
    poly h = poly(F, {0, 1}) * poly(F, {-1, 1}) * poly(F, {-2, 1}) * poly(F, {-3, 1}) *
             poly(F, {-85, 1});
    CHECK(F->from_int(361).pow(2) == h.eval(F->from_int(832)));
    CHECK(F->one().inv() == F->one());
    CHECK(F->from_int(2).inv() == F->from_int(505));
    CHECK_THROWS_AS((void)F->zero().inv(), non_unit);
}

TEST_CASE("sqrt against brute-force square table over F_131") {
    auto F = F131();
    bool squares[131] = {};
    for (int s = 0; s < 131; ++s) squares[s * s % 131] = true;
    rng_t rng(7);
    for (int t = 0; t < 100; ++t) {
        elt s = F->random(rng);
        elt sq = s * s;
        CHECK(squares[int(sq.scalar())]);
        elt r = F->sqrt(sq);
        CHECK((r == s || r == -s));
        CHECK(r.scalar() <= (-r).scalar());  // designated root
    }
    int nonresidues = 0;
    for (int a = 1; a < 131; ++a) {
        auto x = F->from_int(a);
        if (!squares[a]) {
            CHECK_THROWS_AS((void)F->sqrt(x), no_square_root);
            ++nonresidues;
        } else {
            CHECK(F->sqrt(x) * F->sqrt(x) == x);
        }
    }
    CHECK(nonresidues == 65);
}

static ring_ptr quartic_ext_131() {
    auto F = F131();
    for (int c = 1; c < 131; ++c) {
        try {
            return ring::extension(F, {F->from_int(c), F->one(), F->zero(), F->zero(), F->one()});
        } catch (const malformed_input&) {}
    }
    throw exhausted("no irreducible quartic found");
}

TEST_CASE("norm and trace") {
    auto F = F1009();
    auto E = ring::extension(F, {F->from_int(67), F->from_int(247), F->one()}, false);
    CHECK(E->norm_to_base(E->gen()) == F->from_int(67));
    poly m(F, {67, 247, 1});
    CHECK(poly::resultant(m, poly::x(F)) == F->from_int(67));

    auto F2 = F131();
    ring_ptr E4 = quartic_ext_131();
    rng_t rng(11);
    elt c = F2->random(rng);
    CHECK(E4->norm_to_base(E4->embed(c)) == c.pow(4));
    CHECK(E4->trace_to_base(E4->embed(c)) == c * F2->from_int(4));

    SUBCASE("norm multiplicative, trace additive on random pairs") {
        for (int t = 0; t < 10000; ++t) {
            elt a = E4->random(rng), b = E4->random(rng);
            CHECK(E4->norm_to_base(a * b) == E4->norm_to_base(a) * E4->norm_to_base(b));
            CHECK(E4->trace_to_base(a + b) == E4->trace_to_base(a) + E4->trace_to_base(b));
        }
    }

    SUBCASE("product algebra: trace adds, norm multiplies over factors") {
        auto P = ring::product({E4, F2});
        elt a = P->random(rng);
        CHECK(P->trace_to_prime(a) ==
              E4->trace_to_prime(P->coeff(a, 0)) + F2->trace_to_prime(P->coeff(a, 1)));
        CHECK(P->norm_to_prime(a) ==
              E4->norm_to_prime(P->coeff(a, 0)) * F2->norm_to_prime(P->coeff(a, 1)));
    }
}

TEST_CASE("field axioms, randomized") {
    auto F = F131();
    ring_ptr E;
    for (int c = 1; c < 131 && !E; ++c) {
        try { E = ring::extension(F, {F->from_int(c), F->from_int(1), F->one()}); }
        catch (const malformed_input&) {}
    }
    REQUIRE(E);
    rng_t rng(3);
    for (int t = 0; t < 10000; ++t) {
        elt a = E->random(rng), b = E->random(rng), c = E->random(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inv() == E->one());
    }
}

TEST_CASE("series ring and truncated series") {
    auto F = F1009();
    auto S = ring::series_ring(F, 5);
    elt t = S->gen();
    elt x = S->one() + t;
    CHECK(x * x.inv() == S->one());
    CHECK_THROWS_AS((void)(S->one() + F->one()), mixed_algebra);

    series s(F, 6);
    for (int i = 0; i < 6; ++i) s.at(i) = F->one();  // 1/(1-t)
    series inv = s.inverse();
    CHECK(inv.at(0) == F->one());
    CHECK(inv.at(1) == -F->one());
    CHECK(inv.at(2) == F->zero());
    CHECK((s * s.truncated(3)).accuracy() == 3);
}

TEST_CASE("series sqrt reproduces the curve expansion") {
    auto F = F1009();
    poly h = poly(F, {0, 1}) * poly(F, {-1, 1}) * poly(F, {-2, 1}) * poly(F, {-3, 1}) *
             poly(F, {-85, 1});
    series hser = series::from_poly(h.shifted(F->from_int(832)), 3);
    series v = series::sqrt(hser, F->from_int(361));
    CHECK(v.at(0) == F->from_int(361));
    CHECK(v.at(1) == F->from_int(10));
    CHECK(v.at(2) == F->from_int(14));

    series cs(F, 4);
    cs.at(0) = F->from_int(49);
    series c = series::sqrt(cs, F->from_int(7));
    CHECK(c.at(0) == F->from_int(7));
    CHECK(c.at(1) == F->zero());

    rng_t rng(5);
    for (int tcase = 0; tcase < 20; ++tcase) {
        elt r0 = F->random(rng);
        elt hv = h.eval(r0);
        if (hv.is_zero() || !F->is_square(hv)) continue;
        series hseries = series::from_poly(h.shifted(r0), 8);
        series root = series::sqrt(hseries, F->sqrt(hv));
        CHECK(root * root == hseries);
    }
}

TEST_CASE("newton_root lifts simple roots") {
    auto F = F1009();
    auto one_series = [&](int acc) {
        series one(F, acc);
        one.at(0) = F->one();
        return one;
    };
    series s(F, 6);
    s.at(0) = F->from_int(9);
    s.at(1) = F->from_int(6);
    s.at(2) = F->one();  // (3+t)^2
    std::vector<series> coeffs{-s, series(F, 6), one_series(6)};
    series r = newton_root(coeffs, F->from_int(3), 6);
    CHECK(r.at(0) == F->from_int(3));
    CHECK(r.at(1) == F->one());
    CHECK(r.at(2) == F->zero());

    std::vector<series> ramified{series(F, 4), series(F, 4), one_series(4)};
    CHECK_THROWS_AS((void)newton_root(ramified, F->zero(), 4), singular_lift);
}

TEST_CASE("hensel coprime factor split") {
    auto F = F131();
    auto S = ring::series_ring(F, 5);
    poly g(S, std::vector<elt>{-(S->one() + S->gen()), S->one()});
    poly hh(S, std::vector<elt>{-(S->from_int(2) - S->from_int(3) * S->gen()), S->one()});
    poly f = g * hh;
    poly g0(S, std::vector<elt>{-S->one(), S->one()});
    poly h0(S, std::vector<elt>{-S->from_int(2), S->one()});
    auto [gl, hl] = hensel_factor(f, g0, h0);
    CHECK(gl * hl == f);
    CHECK(gl == g);
    CHECK(hl == hh);
}

TEST_CASE("echelon and kernel") {
    auto F = F131();
    SUBCASE("identity has full rank") {
        mat m(F, 6, 6);
        for (int i = 0; i < 6; ++i) m.at(i, i) = F->one();
        CHECK(m.rank() == 6);
    }
    SUBCASE("random singular matrix kernel verified by multiplication") {
        rng_t rng(17);
        for (int t = 0; t < 25; ++t) {
            mat A(F, 6, 5), B(F, 5, 6), M(F, 6, 6);
            for (size_t i = 0; i < 6; ++i)
                for (size_t j = 0; j < 5; ++j) A.at(i, j) = F->random(rng);
            for (size_t i = 0; i < 5; ++i)
                for (size_t j = 0; j < 6; ++j) B.at(i, j) = F->random(rng);
            for (size_t i = 0; i < 6; ++i)
                for (size_t j = 0; j < 6; ++j) {
                    elt s = F->zero();
                    for (size_t k = 0; k < 5; ++k) s = s + A.at(i, k) * B.at(k, j);
                    M.at(i, j) = s;
                }
            auto ker = M.kernel();
            CHECK(!ker.empty());
            for (auto& v : ker)
                for (size_t i = 0; i < 6; ++i) {
                    elt s = F->zero();
                    for (size_t j = 0; j < 6; ++j) s = s + M.at(i, j) * v[j];
                    CHECK(s.is_zero());
                }
        }
    }
    SUBCASE("inconsistent solve reports") {
        mat m(F, 2, 1);
        m.at(0, 0) = F->one();
        m.at(1, 0) = F->one();
        CHECK_THROWS_AS((void)m.solve({F->one(), F->from_int(2)}), inconsistent_system);
    }
}

TEST_CASE("pade reconstruction") {
    auto F = F1009();
    SUBCASE("geometric series gives 1/(1-t)") {
        series s(F, 8);
        for (int i = 0; i < 8; ++i) s.at(i) = F->one();
        rat_frac f = pade_reconstruct(s, 0, 1);
        // normalized with monic denominator: 1/(1-t) = -1/(t-1)
        CHECK(f.scalar == -F->one());
        CHECK(f.num == poly(F, {1}));
        CHECK(f.den == poly(F, {-1, 1}));
    }
    SUBCASE("round-trip on random fractions over F_131") {
        auto F2 = F131();
        rng_t rng(23);
        for (int t = 0; t < 40; ++t) {
            poly n(F2), d(F2);
            do {
                std::vector<elt> nc, dc;
                for (int i = 0; i <= 4; ++i) nc.push_back(F2->random(rng));
                for (int i = 0; i < 4; ++i) dc.push_back(F2->random(rng));
                dc.push_back(F2->one());
                n = poly(F2, nc);
                d = poly(F2, dc);
            } while (n.is_zero() || d.at(0).is_zero() || poly::gcd(n, d).degree() > 0);
            rat_frac f = rat_frac::make(n, d);
            rat_frac g = pade_reconstruct(f.expand(12), 4, 4);
            CHECK(f == g);
        }
    }
    SUBCASE("accuracy precondition enforced") {
        series s(F, 4);
        CHECK_THROWS_AS((void)pade_reconstruct(s, 2, 2), accuracy_too_low);
    }
    SUBCASE("S(u) of the worked example, recentered at 832") {
        poly num(F, {361, 73, 597, 931, 647, 1});
        poly den(F, {0, 420, 215, 811, 832, 1});
        rat_frac S{F->from_int(354), num, den};
        rat_frac St = S.shifted(F->from_int(832));
        rat_frac back = pade_reconstruct(St.expand(12), 5, 5);
        rat_frac recentered = back.shifted(-F->from_int(832));
        CHECK(recentered.scalar == S.scalar);
        CHECK(recentered.num == S.num);
        CHECK(recentered.den == S.den);
    }
}

TEST_CASE("polynomial roots via splitting") {
    auto F = F131();
    rng_t rng(31);
    for (int t = 0; t < 20; ++t) {
        std::vector<elt> rts;
        poly f(F, {1});
        for (int i = 0; i < 4; ++i) {
            elt r = F->random(rng);
            bool dup = false;
            for (auto& x : rts) dup = dup || x == r;
            if (dup) continue;
            rts.push_back(r);
            f = f * poly(F, std::vector<elt>{-r, F->one()});
        }
        auto got = f.roots(rng);
        CHECK(got.size() == rts.size());
        for (auto& r : rts) {
            bool found = false;
            for (auto& g : got) found = found || g == r;
            CHECK(found);
        }
    }
}

TEST_CASE("characteristic guards") {
    CHECK_THROWS_AS((void)ring::prime_field(2), malformed_input);
    CHECK_THROWS_AS((void)ring::prime_field(9), malformed_input);
}
