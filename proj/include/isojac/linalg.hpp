// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "isojac/ring.hpp"

namespace isojac {

// Dense matrix over a ring.  Echelon reduction pivots on units only, so it is
// usable over fields and (generically) over local rings; a missing unit pivot
// in a needed column raises non_unit.
class mat {
  public:
    mat(ring_ptr R, size_t rows, size_t cols)
        : R_(std::move(R)), r_(rows), c_(cols), a_(rows * cols, R_->zero()) {}

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    elt& at(size_t i, size_t j) { return a_[i * c_ + j]; }
    const elt& at(size_t i, size_t j) const { return a_[i * c_ + j]; }
    const ring_ptr& coeff_ring() const { return R_; }

    // in-place reduced row echelon; returns pivot columns
    std::vector<size_t> rref();
    size_t rank() const;
    std::vector<std::vector<elt>> kernel() const;
    // one solution of A x = b; throws inconsistent_system if none
    std::vector<elt> solve(const std::vector<elt>& b) const;
    mat inverse() const;
    elt det() const;

  private:
    ring_ptr R_;
    size_t r_, c_;
    std::vector<elt> a_;
};

} // namespace isojac
