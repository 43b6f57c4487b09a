#ifndef ASQF_FQLINALG_HPP
#define ASQF_FQLINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "asqf/smallfield.hpp"

namespace asqf {

/// Dense matrix over a SmallField, row major. All algorithms are plain
/// exact Gaussian elimination with first-nonzero pivoting, so results are
/// deterministic functions of the input.
struct FqMat {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<uint16_t> a;

    FqMat() = default;
    FqMat(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}

    uint16_t& at(size_t i, size_t j) { return a[i * cols + j]; }
    uint16_t at(size_t i, size_t j) const { return a[i * cols + j]; }

    bool operator==(const FqMat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }

    static FqMat identity(size_t n) {
        FqMat m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
};

FqMat fq_mul(const SmallField& F, const FqMat& x, const FqMat& y);
FqMat fq_transpose(const FqMat& x);

/// Reduced row-echelon form; returns the list of pivot columns.
std::vector<size_t> fq_rref(const SmallField& F, FqMat& m);

size_t fq_rank(const SmallField& F, FqMat m);

/// Rank of the first `r` rows only.
size_t fq_prefix_rank(const SmallField& F, const FqMat& m, size_t r);

uint16_t fq_det(const SmallField& F, FqMat m);

/// Inverse of a square matrix; nullopt when singular.
std::optional<FqMat> fq_inverse(const SmallField& F, const FqMat& m);

/// Canonical basis of the right kernel {x : m x = 0}, one row per basis
/// vector, in reduced row-echelon form.
FqMat fq_kernel(const SmallField& F, const FqMat& m);

/// Canonical basis of the row space: the nonzero rows of the RREF.
FqMat fq_row_space(const SmallField& F, FqMat m);

/// Solve m x = b for one column vector b; nullopt when inconsistent. When
/// the system is underdetermined the solution with zero free variables is
/// returned.
std::optional<std::vector<uint16_t>> fq_solve(const SmallField& F, const FqMat& m,
                                              const std::vector<uint16_t>& b);

} // namespace asqf

#endif
