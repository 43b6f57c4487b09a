#ifndef ASQF_FFMAT_HPP
#define ASQF_FFMAT_HPP

#include <vector>

#include "asqf/gf.hpp"

namespace asqf {

/// Dense matrix over the big field F_{q^n}. Only the handful of exact
/// operations the Dickson-matrix route needs: rank, determinant, prefix row
/// rank. Elimination pivots on the first nonzero entry in column order.
struct FFMat {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<FFElem> a;

    FFMat() = default;
    FFMat(const FieldCtx* ctx, size_t r, size_t c)
        : rows(r), cols(c), a(r * c, ctx->zero()) {}

    FFElem& at(size_t i, size_t j) { return a[i * cols + j]; }
    const FFElem& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

inline size_t ff_rank(const FieldCtx& K, FFMat m) {
    size_t rank = 0;
    for (size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        size_t piv = rank;
        while (piv < m.rows && m.at(piv, col).is_zero()) ++piv;
        if (piv == m.rows) continue;
        if (piv != rank)
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        FFElem d = K.inv(m.at(rank, col));
        for (size_t i = rank + 1; i < m.rows; ++i) {
            if (m.at(i, col).is_zero()) continue;
            FFElem c = K.mul(m.at(i, col), d);
            for (size_t j = col; j < m.cols; ++j)
                m.at(i, j) = K.sub(m.at(i, j), K.mul(c, m.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

inline size_t ff_prefix_rank(const FieldCtx& K, const FFMat& m, size_t r) {
    FFMat sub(&K, r, m.cols);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < m.cols; ++j) sub.at(i, j) = m.at(i, j);
    return ff_rank(K, std::move(sub));
}

inline FFElem ff_det(const FieldCtx& K, FFMat m) {
    if (m.rows != m.cols)
        throw Error(ErrorKind::DegreeMismatch, "determinant of non-square matrix");
    FFElem det = K.one();
    for (size_t col = 0; col < m.cols; ++col) {
        size_t piv = col;
        while (piv < m.rows && m.at(piv, col).is_zero()) ++piv;
        if (piv == m.rows) return K.zero();
        if (piv != col) {
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(col, j));
            det = K.neg(det);
        }
        const FFElem& pv = m.at(col, col);
        det = K.mul(det, pv);
        FFElem d = K.inv(pv);
        for (size_t i = col + 1; i < m.rows; ++i) {
            if (m.at(i, col).is_zero()) continue;
            FFElem c = K.mul(m.at(i, col), d);
            for (size_t j = col; j < m.cols; ++j)
                m.at(i, j) = K.sub(m.at(i, j), K.mul(c, m.at(col, j)));
        }
    }
    return det;
}

} // namespace asqf

#endif
