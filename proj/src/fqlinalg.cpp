#include "asqf/fqlinalg.hpp"

namespace asqf {

FqMat fq_mul(const SmallField& F, const FqMat& x, const FqMat& y) {
    if (x.cols != y.rows)
        throw Error(ErrorKind::DegreeMismatch, "matrix product shape mismatch");
    FqMat r(x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t k = 0; k < x.cols; ++k) {
            uint16_t v = x.at(i, k);
            if (v == 0) continue;
            for (size_t j = 0; j < y.cols; ++j)
                r.at(i, j) = F.add(r.at(i, j), F.mul(v, y.at(k, j)));
        }
    return r;
}

FqMat fq_transpose(const FqMat& x) {
    FqMat r(x.cols, x.rows);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

std::vector<size_t> fq_rref(const SmallField& F, FqMat& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
        size_t piv = row;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != row)
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
        uint16_t d = F.inv(m.at(row, col));
        for (size_t j = 0; j < m.cols; ++j) m.at(row, j) = F.mul(m.at(row, j), d);
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == row) continue;
            uint16_t c = m.at(i, col);
            if (c == 0) continue;
            for (size_t j = 0; j < m.cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(c, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t fq_rank(const SmallField& F, FqMat m) { return fq_rref(F, m).size(); }

size_t fq_prefix_rank(const SmallField& F, const FqMat& m, size_t r) {
    FqMat sub(r, m.cols);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < m.cols; ++j) sub.at(i, j) = m.at(i, j);
    return fq_rank(F, sub);
}

uint16_t fq_det(const SmallField& F, FqMat m) {
    if (m.rows != m.cols) throw Error(ErrorKind::DegreeMismatch, "determinant of non-square matrix");
    uint16_t det = 1;
    for (size_t col = 0; col < m.cols; ++col) {
        size_t piv = col;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) return 0;
        if (piv != col) {
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(col, j));
            det = F.neg(det);
        }
        uint16_t pv = m.at(col, col);
        det = F.mul(det, pv);
        uint16_t d = F.inv(pv);
        for (size_t i = col + 1; i < m.rows; ++i) {
            uint16_t c = F.mul(m.at(i, col), d);
            if (c == 0) continue;
            for (size_t j = col; j < m.cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(c, m.at(col, j)));
        }
    }
    return det;
}

std::optional<FqMat> fq_inverse(const SmallField& F, const FqMat& m) {
    if (m.rows != m.cols) throw Error(ErrorKind::DegreeMismatch, "inverse of non-square matrix");
    size_t n = m.rows;
    FqMat aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto pivots = fq_rref(F, aug);
    if (pivots.size() != n || pivots[n - 1] != n - 1) return std::nullopt;
    FqMat inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

FqMat fq_kernel(const SmallField& F, const FqMat& m) {
    FqMat r = m;
    auto pivots = fq_rref(F, r);
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    FqMat basis(free_cols.size(), m.cols);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t fc = free_cols[k];
        basis.at(k, fc) = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            basis.at(k, pivots[pi]) = F.neg(r.at(pi, fc));
    }
    fq_rref(F, basis);
    return basis;
}

FqMat fq_row_space(const SmallField& F, FqMat m) {
    auto pivots = fq_rref(F, m);
    FqMat basis(pivots.size(), m.cols);
    for (size_t i = 0; i < pivots.size(); ++i)
        for (size_t j = 0; j < m.cols; ++j) basis.at(i, j) = m.at(i, j);
    return basis;
}

std::optional<std::vector<uint16_t>> fq_solve(const SmallField& F, const FqMat& m,
                                              const std::vector<uint16_t>& b) {
    if (b.size() != m.rows) throw Error(ErrorKind::DegreeMismatch, "solve: rhs length mismatch");
    FqMat aug(m.rows, m.cols + 1);
    for (size_t i = 0; i < m.rows; ++i) {
        for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    auto pivots = fq_rref(F, aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
    std::vector<uint16_t> x(m.cols, 0);
    for (size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug.at(pi, m.cols);
    return x;
}

} // namespace asqf
