// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>
#include <string>

#include "isojac/err.hpp"

namespace isojac {

using Int = boost::multiprecision::cpp_int;

inline Int pow_mod(Int b, Int e, const Int& m) {
    Int r = 1;
    b %= m;
    if (b < 0) b += m;
    while (e > 0) {
        if (bit_test(e, 0)) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

inline Int inv_mod(const Int& a, const Int& m) {
    Int r0 = m, r1 = a % m, s0 = 0, s1 = 1;
    if (r1 < 0) r1 += m;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int t = r0 - q * r1; r0 = r1; r1 = t;
        t = s0 - q * s1; s0 = s1; s1 = t;
    }
    if (r0 != 1) throw non_unit("inv_mod: not invertible");
    s0 %= m;
    if (s0 < 0) s0 += m;
    return s0;
}

// Deterministic RNG, seeded once; every random choice in the library goes
// through one of these so that runs replay exactly.
class rng_t {
  public:
    explicit rng_t(std::uint64_t seed = 0) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    // uniform in [0, n)
    Int below(const Int& n) {
        unsigned bits = 0;
        Int t = n - 1;
        while (t > 0) { ++bits; t >>= 1; }
        if (bits == 0) return 0;
        for (;;) {
            Int r = 0;
            for (unsigned got = 0; got < bits; got += 32)
                r = (r << 32) | eng_() % (std::uint64_t(1) << 32);
            r &= (Int(1) << bits) - 1;
            if (r < n) return r;
        }
    }

    std::uint64_t seed_used() const { return seed_; }
    void reseed(std::uint64_t s) { seed_ = s; eng_.seed(s); }

  private:
    std::uint64_t seed_ = 0;
    std::mt19937_64 eng_;
};

inline bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    for (int q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    Int d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

} // namespace isojac
