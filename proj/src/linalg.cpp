// SPDX-License-Identifier: Apache-2.0
#include "isojac/linalg.hpp"

namespace isojac {

std::vector<size_t> mat::rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < c_ && row < r_; ++col) {
        // prefer a unit pivot
        size_t sel = r_;
        for (size_t i = row; i < r_; ++i) {
            if (R_->is_unit(at(i, col))) { sel = i; break; }
        }
        if (sel == r_) {
            // column must be eliminable: all entries below zero, otherwise stuck
            bool all_zero = true;
            for (size_t i = row; i < r_; ++i)
                if (!R_->is_zero(at(i, col))) { all_zero = false; break; }
            if (all_zero) continue;
            throw non_unit("rref: no unit pivot available");
        }
        if (sel != row)
            for (size_t j = 0; j < c_; ++j) std::swap(at(row, j), at(sel, j));
        elt inv = at(row, col).inv();
        for (size_t j = col; j < c_; ++j) at(row, j) = at(row, j) * inv;
        for (size_t i = 0; i < r_; ++i) {
            if (i == row || R_->is_zero(at(i, col))) continue;
            elt f = at(i, col);
            for (size_t j = col; j < c_; ++j) at(i, j) = at(i, j) - f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t mat::rank() const {
    mat m = *this;
    return m.rref().size();
}

std::vector<std::vector<elt>> mat::kernel() const {
    mat m = *this;
    auto piv = m.rref();
    std::vector<bool> is_piv(c_, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<elt>> basis;
    for (size_t free_col = 0; free_col < c_; ++free_col) {
        if (is_piv[free_col]) continue;
        std::vector<elt> v(c_, R_->zero());
        v[free_col] = R_->one();
        for (size_t k = 0; k < piv.size(); ++k)
            v[piv[k]] = -m.at(k, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<elt> mat::solve(const std::vector<elt>& b) const {
    if (b.size() != r_) throw malformed_input("solve: size mismatch");
    mat aug(R_, r_, c_ + 1);
    for (size_t i = 0; i < r_; ++i) {
        for (size_t j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, c_) = b[i];
    }
    auto piv = aug.rref();
    std::vector<elt> x(c_, R_->zero());
    for (size_t k = 0; k < piv.size(); ++k) {
        if (piv[k] == c_) throw inconsistent_system("solve: no solution");
        x[piv[k]] = aug.at(k, c_);
    }
    return x;
}

mat mat::inverse() const {
    if (r_ != c_) throw malformed_input("inverse: not square");
    mat aug(R_, r_, 2 * c_);
    for (size_t i = 0; i < r_; ++i) {
        for (size_t j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, c_ + i) = R_->one();
    }
    auto piv = aug.rref();
    if (piv.size() != r_) throw inconsistent_system("inverse: singular");
    for (size_t k = 0; k < piv.size(); ++k)
        if (piv[k] != k) throw inconsistent_system("inverse: singular");
    mat out(R_, r_, c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) out.at(i, j) = aug.at(i, c_ + j);
    return out;
}

elt mat::det() const {
    if (r_ != c_) throw malformed_input("det: not square");
    mat m = *this;
    elt d = R_->one();
    for (size_t col = 0; col < c_; ++col) {
        size_t sel = r_;
        for (size_t i = col; i < r_; ++i)
            if (R_->is_unit(m.at(i, col))) { sel = i; break; }
        if (sel == r_) {
            bool all_zero = true;
            for (size_t i = col; i < r_; ++i)
                if (!R_->is_zero(m.at(i, col))) { all_zero = false; break; }
            if (all_zero) return R_->zero();
            throw non_unit("det: no unit pivot");
        }
        if (sel != col) {
            for (size_t j = 0; j < c_; ++j) std::swap(m.at(col, j), m.at(sel, j));
            d = -d;
        }
        d = d * m.at(col, col);
        elt inv = m.at(col, col).inv();
        for (size_t i = col + 1; i < r_; ++i) {
            if (R_->is_zero(m.at(i, col))) continue;
            elt f = m.at(i, col) * inv;
            for (size_t j = col; j < c_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(col, j);
        }
    }
    return d;
}

} // namespace isojac
