// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace isojac {

// Error taxonomy. Each class carries a stable exit code for the CLI.
struct error : std::runtime_error {
    explicit error(const std::string& m) : std::runtime_error(m) {}
    virtual int exit_code() const { return 1; }
};

#define ISOJAC_ERR(Name, Code)                                        \
    struct Name : error {                                             \
        explicit Name(const std::string& m = #Name) : error(m) {}     \
        int exit_code() const override { return Code; }               \
    }

ISOJAC_ERR(malformed_input, 3);

// algebra
ISOJAC_ERR(non_unit, 10);
ISOJAC_ERR(no_square_root, 10);
ISOJAC_ERR(mixed_algebra, 10);
ISOJAC_ERR(not_a_field, 10);
ISOJAC_ERR(characteristic_too_small, 11);
ISOJAC_ERR(accuracy_too_low, 12);
ISOJAC_ERR(no_pade_solution, 12);
ISOJAC_ERR(inconsistent_system, 12);
ISOJAC_ERR(singular_lift, 12);

// curve / jacobian
ISOJAC_ERR(non_reducible, 13);
ISOJAC_ERR(weierstrass_point, 13);
ISOJAC_ERR(not_principal, 13);
ISOJAC_ERR(exhausted, 13);

// eta / theta
ISOJAC_ERR(on_divisor, 2);
ISOJAC_ERR(divisor_meets_support, 2);

// quotient
ISOJAC_ERR(not_torsion, 4);
ISOJAC_ERR(not_isotropic, 4);
ISOJAC_ERR(not_maximal, 4);
ISOJAC_ERR(retry_limit, 5);
ISOJAC_ERR(rank_deficient, 5);

// isogeny pipeline
ISOJAC_ERR(not_a_square, 6);
ISOJAC_ERR(infinity_not_branch, 6);
ISOJAC_ERR(wrong_count, 6);
ISOJAC_ERR(fit_failed, 7);
ISOJAC_ERR(seed_not_found, 7);
ISOJAC_ERR(not_two_points, 8);
ISOJAC_ERR(nonseparable_roots, 8);
ISOJAC_ERR(singular_system, 8);
ISOJAC_ERR(degree_bound_violated, 9);

#undef ISOJAC_ERR

} // namespace isojac
