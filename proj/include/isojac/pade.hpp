// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "isojac/series.hpp"

namespace isojac {

// Rational fraction scalar * num / den with num, den monic and coprime.
struct rat_frac {
    elt scalar;
    poly num;   // monic (or zero polynomial when scalar is zero)
    poly den;   // monic

    static rat_frac make(const poly& n, const poly& d);
    rat_frac operator+(const rat_frac& o) const;
    rat_frac operator-(const rat_frac& o) const;
    rat_frac operator*(const rat_frac& o) const;
    bool operator==(const rat_frac& o) const;
    bool is_zero() const { return scalar.is_zero(); }
    int total_degree() const { return std::max(num.degree(), den.degree()); }
    poly numerator_scaled() const { return num.scaled(scalar); }
    rat_frac shifted(const elt& c) const;  // substitute u -> u + c
    series expand(int acc) const;          // Taylor expansion at 0 (den(0) unit)
};

// [max_num_deg / max_den_deg] Pade approximant of s via extended Euclid;
// result re-expanded and checked against every available coefficient of s.
rat_frac pade_reconstruct(const series& s, int max_num_deg, int max_den_deg);

} // namespace isojac
