#ifndef ASQF_QUADFORM_HPP
#define ASQF_QUADFORM_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "asqf/linpoly.hpp"

namespace asqf {

/// Classification of the quadratic form Q(x) = Tr(x l(x)) on F_{q^n} over
/// F_q: its rank r and its discriminant class epsilon = eta(d_1 ... d_r) in
/// any diagonalization. The zero form is reported as r = 0, epsilon = +1,
/// degenerate = true.
struct QuadClass {
    int r = 0;
    int epsilon = 1;
    bool degenerate = false;
    std::string method;

    bool same_class(const QuadClass& o) const {
        return r == o.r && epsilon == o.epsilon && degenerate == o.degenerate;
    }
};

/// Gram-style matrix of Q in the given basis: entry (i, j) is
/// (Tr(b_i l(b_j)) + Tr(b_j l(b_i))) / 2, an F_q scalar. The basis must be
/// an F_q-basis of F_{q^n} (NotABasis otherwise). The result depends only
/// on symmetrize(l), not on l itself.
FqMat associated_matrix(const LinPoly& ell, const std::vector<FFElem>& basis);

/// Congruence diagonalization of a symmetric matrix over F_q (q odd):
/// returns P and the diagonal d with P^T diag(d) P == C, nonzero diagonal
/// entries first. Deterministic: pivots are scanned smallest index first,
/// and a zero diagonal is repaired with the smallest off-diagonal entry.
struct DiagResult {
    FqMat P;
    std::vector<uint16_t> d;
    size_t r = 0;
};
DiagResult diagonalize(const SmallField& F, const FqMat& C);

/// The three independent classification routes. Each returns the same
/// (r, epsilon) on valid input; disagreement raises InternalCheckFailed.
QuadClass classify_via_diag(const LinPoly& ell);
QuadClass classify_via_dickson(const LinPoly& ell);
/// Also returns the observed root-count distribution (index = F_q index of
/// lambda). Requires q^n within the enumeration budget.
std::pair<QuadClass, std::vector<uint64_t>> classify_via_bruteforce(const LinPoly& ell);

/// Number of solutions of Q(x) = lambda predicted by (r, epsilon):
///   r even:  N_0 = q^(n-1) + s e (q-1) q^(n-1-r/2),
///            N_lambda = q^(n-1) - s e q^(n-1-r/2)        (lambda != 0)
///   r odd:   N_0 = q^(n-1),
///            N_lambda = q^(n-1) + s' eta(lambda) e q^(n-1-(r-1)/2)
/// with s = (-1)^((q-1)r/4) and s' = (-1)^((q-1)(r+1)/4).
uint64_t root_count(const FieldCtx& K, int r, int epsilon, uint16_t lambda);
std::vector<uint64_t> root_count_distribution(const FieldCtx& K, int r, int epsilon);

/// Q(x) = Tr(x l(x)) as an F_q scalar.
uint16_t form_value(const LinPoly& ell, const FFElem& x);

uint64_t root_count_bruteforce(const LinPoly& ell, uint16_t lambda);

/// Closed-form classification for n = 4 and l = 2a x^(q^2) + 2b x^q + c x,
/// decided entirely by small minors of the Dickson matrix. Requires n == 4
/// and a nonzero symmetrized polynomial (DegenerateForm otherwise).
QuadClass classify_n4(const FFElem& a, const FFElem& b, const FFElem& c);

/// One diagonal term of a trace decomposition.
struct TrTerm {
    uint16_t d;
    FFElem alpha;
};

/// Constructive diagonal decomposition of a nonzero self-adjoint L:
///   L(x) = sum_i d_i alpha_i Tr(alpha_i x)
/// with d_i in F_q^* and the alpha_i an F_q-basis of im L. The rebuilt
/// polynomial is compared coefficientwise before returning.
std::vector<TrTerm> tr_decompose(const LinPoly& L);

} // namespace asqf

#endif
